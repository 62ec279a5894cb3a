//! Consensus game acceptors as language recognisers.
//!
//! Two players observe private projections of one finite play and must
//! independently announce the same admissible decision. The library turns
//! this game model into an automata-theoretic toolbox:
//!
//! * [`game`] — game graphs, plays, observations, indistinguishability,
//!   connectedness, safe decisions and strategy verification;
//! * [`seed`] — the translations between games and their seeds, a seed
//!   being a synchronous relation plus an accepting and a rejecting
//!   regular language;
//! * [`closure`] — the reflection relation `τ = RR⁻¹` and exact per-length
//!   iterated closures, giving solvability probes, covered languages and
//!   optimal strategy tables;
//! * [`domino`] — bordered corridor tilings and the compilation of domino
//!   systems into covering games;
//! * [`cfl`] — Dyck seeds, coding cycles, flower seeds, and an independent
//!   context-free membership oracle;
//! * [`alphabet`], [`automaton`], [`transducer`] — the word-level
//!   machinery everything else consumes.
//!
//! All values are immutable after construction and every operation is a
//! pure function of its inputs, so everything here can be shared freely
//! across threads.
//!
//! The usual pipeline — compile something into a game, read off its seed,
//! query the closure:
//!
//! ```
//! use cga_core::closure::{closure_membership, covered_language_upto, Target};
//! use cga_core::domino::compile_domino_game;
//! use cga_core::seed::extract_seed;
//! use cga_core::{corpus, Alphabet};
//!
//! let game = compile_domino_game(&corpus::anbn_domino_system())?;
//! let seed = extract_seed(&game)?;
//!
//! // Words forced to decision 1 over {a, b}, per length.
//! let sigma = Alphabet::new(["a", "b"])?;
//! let covered = covered_language_upto(&seed, &sigma, 4, 100_000)?;
//! assert_eq!(covered[&4].len(), 1);
//!
//! // Membership comes with a replayable reflection chain.
//! let word = seed.alphabet().parse_word("aabb")?;
//! let result = closure_membership(&seed, Target::Acc, &word, 100_000)?;
//! assert!(result.member);
//! let chain = result.chain.unwrap();
//! assert_eq!(seed.alphabet().format_word(chain.last().unwrap()), "□□□□");
//! # Ok::<(), cga_core::Error>(())
//! ```

pub mod alphabet;
pub mod automaton;
pub mod cfl;
pub mod closure;
pub mod corpus;
pub mod domino;
pub mod error;
pub mod game;
pub mod seed;
pub mod transducer;

pub use alphabet::{Alphabet, AlphabetRef, SymbolId, Word, WordSet, BOX, EPSILON, HASH};
pub use automaton::{StateId, WordAutomaton};
pub use closure::DEFAULT_CAP;
pub use error::{Error, Result};
pub use game::{Decision, DecisionSet, GameGraph, GameState, Play, StrategyTable};
pub use seed::Seed;
pub use transducer::{SynchronousTransducer, Tape};
