//! Iterated reflection closures.
//!
//! The reflection of a seed relation `R` is `τ = R R⁻¹`: two player-1
//! observation words are related when they share a player-2 observation
//! word. Decisions of a winning strategy must be constant along `τ`-chains,
//! which makes the per-length closure `τ* L` the forcing region of the seed
//! language `L`.
//!
//! Closures are computed as explicit per-length breadth-first searches:
//! words of one length form a finite space, neighbours are generated by
//! running the reflection transducer with one tape fixed, and the search is
//! exact. Caps make the exponential explicit; exceeding one is an error,
//! never a silent truncation.

use crate::alphabet::{Alphabet, SymbolId, Word, WordSet};
use crate::automaton::WordAutomaton;
use crate::error::{Error, Result};
use crate::game::{Decision, StrategyTable};
use crate::seed::Seed;
use crate::transducer::{SynchronousTransducer, Tape};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Default bound on enumerated words, shared with the command line.
pub const DEFAULT_CAP: usize = 2_000_000;

/// Which seed language a closure query is aimed at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Acc,
    Rej,
}

impl Target {
    fn automaton<'a>(&self, seed: &'a Seed) -> &'a WordAutomaton {
        match self {
            Target::Acc => seed.acc(),
            Target::Rej => seed.rej(),
        }
    }
}

/// Membership of one word in a closure, with a replayable chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    pub length: usize,
    pub member: bool,
    /// Chain `w = w₀, …, w_k` with consecutive pairs in `τ` and `w_k` in
    /// the target language; present exactly when `member` holds.
    pub chain: Option<Vec<Word>>,
}

/// Certificate that both closures meet at one word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conflict {
    pub word: Word,
    pub chain_to_acc: Vec<Word>,
    pub chain_to_rej: Vec<Word>,
}

/// Outcome of the bounded solvability probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvabilityVerdict {
    pub checked_up_to: usize,
    pub solvable_up_to: bool,
    pub conflict: Option<Conflict>,
}

/// The reflection relation `τ(R) = R R⁻¹`.
pub fn reflection(r: &SynchronousTransducer) -> Result<SynchronousTransducer> {
    r.compose(&r.invert())
}

/// Breadth-first exploration from `roots`, following the transducer with
/// `fixed` naming the tape the already-known word is placed on. Returns the
/// BFS tree as a parent map (roots map to `None`).
fn bfs(
    tau: &SynchronousTransducer,
    roots: impl IntoIterator<Item = Word>,
    fixed: Tape,
    cap: usize,
) -> Result<BTreeMap<Word, Option<Word>>> {
    let mut parents: BTreeMap<Word, Option<Word>> = BTreeMap::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    for root in roots {
        if parents.insert(root.clone(), None).is_none() {
            queue.push_back(root);
        }
    }
    while let Some(word) = queue.pop_front() {
        for next in tau.apply(&word, fixed, cap)? {
            if !parents.contains_key(&next) {
                parents.insert(next.clone(), Some(word.clone()));
                if parents.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(parents)
}

fn chain_to_root(parents: &BTreeMap<Word, Option<Word>>, from: &Word) -> Vec<Word> {
    let mut chain = vec![from.clone()];
    let mut cursor = from;
    while let Some(Some(parent)) = parents.get(cursor) {
        chain.push(parent.clone());
        cursor = chain.last().unwrap();
    }
    chain
}

/// The `τ`-component of a word within its length class. Any word is a
/// valid starting point: one that is not the observation of any play has
/// no reflection partners and its component is the singleton `{w}`.
pub fn reflection_component(seed: &Seed, w: &Word, cap: usize) -> Result<BTreeSet<Word>> {
    let tau = reflection(seed.relation())?;
    Ok(bfs(&tau, [w.clone()], Tape::Left, cap)?.into_keys().collect())
}

/// Does the `τ`-component of `w` meet the target language? The identity
/// `τ⁰` is included, so a word of the target language is a member with the
/// one-element chain.
pub fn closure_membership(
    seed: &Seed,
    target: Target,
    w: &Word,
    cap: usize,
) -> Result<ClosureResult> {
    let automaton = target.automaton(seed);
    let tau = reflection(seed.relation())?;
    let mut parents: BTreeMap<Word, Option<Word>> = BTreeMap::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    parents.insert(w.clone(), None);
    queue.push_back(w.clone());
    while let Some(word) = queue.pop_front() {
        if automaton.accepts(&word)? {
            let mut chain = chain_to_root(&parents, &word);
            chain.reverse();
            return Ok(ClosureResult { length: w.len(), member: true, chain: Some(chain) });
        }
        for next in tau.apply(&word, Tape::Left, cap)? {
            if !parents.contains_key(&next) {
                parents.insert(next.clone(), Some(word.clone()));
                if parents.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(ClosureResult { length: w.len(), member: false, chain: None })
}

/// BFS tree of the length-`n` closure of a target language: the least
/// fixpoint of `S ↦ S ∪ τS` seeded with the language's length-`n` slice.
fn closure_tree(
    seed: &Seed,
    target: Target,
    n: usize,
    cap: usize,
) -> Result<BTreeMap<Word, Option<Word>>> {
    let roots = target.automaton(seed).enumerate_words(n, cap)?;
    let tau = reflection(seed.relation())?;
    bfs(&tau, roots.into_words(), Tape::Right, cap)
}

/// All length-`n` words in the closure of the target language.
pub fn closure_set(seed: &Seed, target: Target, n: usize, cap: usize) -> Result<WordSet> {
    let tree = closure_tree(seed, target, n, cap)?;
    WordSet::new(n, tree.into_keys())
}

/// Tests `τ*L_acc ∩ τ*L_rej = ∅` for every length up to `n`. The first
/// conflict (shortest length, then smallest word by symbol names) is
/// certified by its two chains.
pub fn solvable_upto(seed: &Seed, n: usize, cap: usize) -> Result<SolvabilityVerdict> {
    let alphabet = seed.alphabet();
    for len in 0..=n {
        let acc_tree = closure_tree(seed, Target::Acc, len, cap)?;
        if acc_tree.is_empty() {
            continue;
        }
        let rej_tree = closure_tree(seed, Target::Rej, len, cap)?;
        let word = acc_tree
            .keys()
            .filter(|w| rej_tree.contains_key(*w))
            .min_by_key(|w| w.iter().map(|&s| alphabet.name(s)).collect::<Vec<_>>());
        if let Some(word) = word {
            let chain_to_acc = chain_to_root(&acc_tree, word);
            let chain_to_rej = chain_to_root(&rej_tree, word);
            debug_assert_eq!(chain_to_acc[0], *word);
            debug_assert_eq!(chain_to_rej[0], *word);
            let conflict =
                Conflict { word: word.clone(), chain_to_acc, chain_to_rej };
            return Ok(SolvabilityVerdict {
                checked_up_to: n,
                solvable_up_to: false,
                conflict: Some(conflict),
            });
        }
    }
    Ok(SolvabilityVerdict { checked_up_to: n, solvable_up_to: true, conflict: None })
}

fn sigma_filter(seed: &Seed, sigma: &Alphabet) -> Result<BTreeSet<SymbolId>> {
    Ok(sigma.embedding(seed.alphabet())?.into_iter().collect())
}

/// The language covered by the seed over the subalphabet `sigma`, per
/// length `1..=n`: the accepting closure intersected with `sigma`-words.
/// The empty word is excluded throughout.
pub fn covered_language_upto(
    seed: &Seed,
    sigma: &Alphabet,
    n: usize,
    cap: usize,
) -> Result<BTreeMap<usize, WordSet>> {
    let keep = sigma_filter(seed, sigma)?;
    let mut out = BTreeMap::new();
    for len in 1..=n {
        let closure = closure_set(seed, Target::Acc, len, cap)?;
        let filtered: Vec<Word> = closure
            .iter()
            .filter(|w| w.iter().all(|s| keep.contains(s)))
            .cloned()
            .collect();
        out.insert(len, WordSet::new(len, filtered)?);
    }
    Ok(out)
}

/// Does every non-empty `sigma`-word of length at most `n` fall into one of
/// the two closures? Requires the seed to be solvable up to `n`.
pub fn characterises_check_upto(
    seed: &Seed,
    sigma: &Alphabet,
    n: usize,
    cap: usize,
) -> Result<bool> {
    let verdict = solvable_upto(seed, n, cap)?;
    if let Some(conflict) = verdict.conflict {
        return Err(Error::UnsolvableSeed(seed.alphabet().format_word(&conflict.word)));
    }
    let embed = sigma.embedding(seed.alphabet())?;
    if sigma.is_empty() {
        // No non-empty words to check.
        return Ok(true);
    }
    for len in 1..=n {
        let acc = closure_set(seed, Target::Acc, len, cap)?;
        let rej = closure_set(seed, Target::Rej, len, cap)?;
        let mut word = vec![0usize; len];
        loop {
            let mapped: Word = word.iter().map(|&i| embed[i]).collect();
            if !acc.contains(&mapped) && !rej.contains(&mapped) {
                return Ok(false);
            }
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                word[pos] += 1;
                if word[pos] < sigma.len() {
                    break;
                }
                word[pos] = 0;
            }
            if word.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(true)
}

/// The optimal decision at an observation word: 1 on the accepting closure,
/// 0 on the rejecting closure, `default` elsewhere. A word in both closures
/// certifies unsolvability and is reported as an error carrying both chains.
pub fn optimal_decision(
    seed: &Seed,
    w: &Word,
    default: Decision,
    cap: usize,
) -> Result<Decision> {
    let tau = reflection(seed.relation())?;
    let mut parents: BTreeMap<Word, Option<Word>> = BTreeMap::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    parents.insert(w.clone(), None);
    queue.push_back(w.clone());
    let mut acc_hit: Option<Word> = None;
    let mut rej_hit: Option<Word> = None;
    while let Some(word) = queue.pop_front() {
        if acc_hit.is_none() && seed.acc().accepts(&word)? {
            acc_hit = Some(word.clone());
        }
        if rej_hit.is_none() && seed.rej().accepts(&word)? {
            rej_hit = Some(word.clone());
        }
        if acc_hit.is_some() && rej_hit.is_some() {
            break;
        }
        for next in tau.apply(&word, Tape::Left, cap)? {
            if !parents.contains_key(&next) {
                parents.insert(next.clone(), Some(word.clone()));
                if parents.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push_back(next);
            }
        }
    }
    let alphabet = seed.alphabet();
    let render_chain = |hit: &Word| -> Vec<String> {
        let mut chain = chain_to_root(&parents, hit);
        chain.reverse();
        chain.iter().map(|x| alphabet.format_word(x)).collect()
    };
    match (acc_hit, rej_hit) {
        (Some(a), Some(r)) => Err(Error::DecisionConflict {
            word: alphabet.format_word(w),
            chain_to_acc: render_chain(&a),
            chain_to_rej: render_chain(&r),
        }),
        (Some(_), None) => Ok(Decision::One),
        (None, Some(_)) => Ok(Decision::Zero),
        (None, None) => Ok(default),
    }
}

/// Tabulates the optimal strategy on every realizable observation word (for
/// either player) of length at most `n`. Fails when the seed is unsolvable
/// within the bound; the produced table therefore verifies against the
/// synthesized game of the seed.
pub fn strategy_table(
    seed: &Seed,
    n: usize,
    default: Decision,
    cap: usize,
) -> Result<StrategyTable> {
    let verdict = solvable_upto(seed, n, cap)?;
    if let Some(conflict) = verdict.conflict {
        return Err(Error::UnsolvableSeed(seed.alphabet().format_word(&conflict.word)));
    }
    let left = seed.relation().project(Tape::Left);
    let right = seed.relation().project(Tape::Right);
    let mut entries: BTreeMap<Word, Decision> = BTreeMap::new();
    for len in 0..=n {
        let acc = closure_set(seed, Target::Acc, len, cap)?;
        let rej = closure_set(seed, Target::Rej, len, cap)?;
        let mut words = left.enumerate_words(len, cap)?;
        for w in right.enumerate_words(len, cap)?.iter() {
            words.insert(w.clone())?;
        }
        for w in words.iter() {
            let d = if acc.contains(w) {
                Decision::One
            } else if rej.contains(w) {
                Decision::Zero
            } else {
                default
            };
            entries.insert(w.clone(), d);
        }
    }
    Ok(StrategyTable::new(n, entries))
}
