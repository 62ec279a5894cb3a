//! Built-in reference objects used by tests, the command line examples and
//! the browser demo: the hand-drawn game covering `aⁿbⁿ`, the matching
//! domino system, two flower specifications and a minimal unsolvable seed.

use crate::alphabet::Alphabet;
use crate::automaton::WordAutomaton;
use crate::cfl::{neutralised, DyckSpec, FlowerSpec, Homomorphism};
use crate::domino::DominoSystem;
use crate::game::{DecisionSet, GameGraph, GameState};
use crate::seed::Seed;
use crate::transducer::SynchronousTransducer;
use std::sync::Arc;

/// The two-player game covering `{aⁿbⁿ | n ≥ 1}` over `{a, b}`.
///
/// One component realises every word over `{a, b}` identically for both
/// players (`ca`, `cb`), one descends through progressively misaligned
/// observations (`aa` … `rbox`), and the `box` loop reaches the only final
/// state that forces decision 1.
pub fn anbn_cover_game() -> GameGraph {
    let alphabet =
        Arc::new(Alphabet::new(["a", "b", "◁", "▷", "□", "#"]).unwrap());
    let sym = |s: &str| alphabet.id(s).unwrap();
    let mk = |name: &str, o1: &str, o2: &str| GameState {
        name: name.into(),
        obs1: sym(o1),
        obs2: sym(o2),
    };
    let states = vec![
        mk("v0", "#", "#"),
        mk("ca", "a", "a"),
        mk("cb", "b", "b"),
        mk("a", "a", "a"),
        mk("l", "◁", "◁"),
        mk("r", "▷", "▷"),
        mk("b", "b", "b"),
        mk("aa", "a", "a"),
        mk("al", "a", "◁"),
        mk("lr", "◁", "▷"),
        mk("lbox", "◁", "□"),
        mk("bb", "b", "b"),
        mk("br", "b", "▷"),
        mk("rl", "▷", "◁"),
        mk("rbox", "▷", "□"),
        mk("box", "□", "□"),
        mk("z", "#", "#"),
        mk("zhat", "#", "#"),
    ];
    let id = |name: &str| states.iter().position(|s| s.name == name).unwrap();
    let edge_names: &[(&str, &str)] = &[
        ("v0", "ca"),
        ("v0", "cb"),
        ("v0", "a"),
        ("v0", "l"),
        ("v0", "aa"),
        ("v0", "al"),
        ("v0", "lbox"),
        ("v0", "box"),
        ("ca", "ca"),
        ("ca", "cb"),
        ("ca", "z"),
        ("cb", "cb"),
        ("cb", "ca"),
        ("cb", "z"),
        ("a", "a"),
        ("a", "l"),
        ("a", "b"),
        ("l", "r"),
        ("r", "l"),
        ("r", "b"),
        ("r", "z"),
        ("b", "b"),
        ("b", "z"),
        ("aa", "aa"),
        ("aa", "al"),
        ("aa", "bb"),
        ("al", "lr"),
        ("al", "br"),
        ("lr", "rl"),
        ("rl", "lr"),
        ("rl", "br"),
        ("br", "bb"),
        ("br", "z"),
        ("bb", "bb"),
        ("bb", "z"),
        ("lbox", "rbox"),
        ("rbox", "lbox"),
        ("rbox", "z"),
        ("box", "box"),
        ("box", "zhat"),
    ];
    let edges: Vec<(usize, usize)> =
        edge_names.iter().map(|&(u, v)| (id(u), id(v))).collect();
    GameGraph::new(
        alphabet,
        states.clone(),
        id("v0"),
        edges,
        [(id("z"), DecisionSet::BOTH), (id("zhat"), DecisionSet::ONE)],
    )
    .unwrap()
}

/// The domino system whose frontier language is `{aⁿbⁿ | n ≥ 1}`.
pub fn anbn_domino_system() -> DominoSystem {
    let dominoes =
        Arc::new(Alphabet::new(["#", "□", "a", "b", "◁", "▷"]).unwrap());
    DominoSystem::from_names(
        dominoes,
        &[
            ("#", "a"),
            ("a", "a"),
            ("a", "◁"),
            ("a", "b"),
            ("▷", "b"),
            ("b", "b"),
            ("b", "#"),
            ("#", "◁"),
            ("◁", "▷"),
            ("▷", "◁"),
            ("▷", "#"),
            ("#", "□"),
            ("□", "□"),
            ("□", "#"),
        ],
        &[
            ("#", "#"),
            ("a", "a"),
            ("a", "◁"),
            ("b", "b"),
            ("b", "▷"),
            ("◁", "□"),
            ("▷", "□"),
            ("▷", "◁"),
            ("◁", "▷"),
        ],
    )
    .unwrap()
}

/// A one-kind flower covering `{aⁿbⁿ | n ≥ 1}`: the opening bracket codes
/// `a`, the closing bracket codes `b`, and the constraint language is
/// "all openings before all closings".
pub fn anbn_flower() -> FlowerSpec {
    let dyck = DyckSpec::with_pairs(1, &[]).unwrap();
    let lambda = Arc::new(dyck.lambda_alphabet().unwrap());
    let sigma = Arc::new(Alphabet::new(["a", "b"]).unwrap());
    let hom = Homomorphism::new(lambda, sigma, &[("[", "a"), ("]", "b")]).unwrap();
    let marked =
        Arc::new(Alphabet::new([neutralised("["), neutralised("]")]).unwrap());
    let opens = marked.id(&neutralised("[")).unwrap();
    let closes = marked.id(&neutralised("]")).unwrap();
    // (n:[)* (n:])*
    let reg = WordAutomaton::new(
        marked,
        vec!["m0", "m1"],
        0,
        [0, 1],
        [(0, opens, 0), (0, closes, 1), (1, closes, 1)],
        true,
    )
    .unwrap();
    FlowerSpec::new(dyck, hom, reg).unwrap()
}

/// A two-kind flower without constraint: covers the homomorphic image of
/// all properly nested two-bracket words, with both closing brackets coding
/// the same terminal letter.
pub fn two_bracket_flower() -> FlowerSpec {
    let dyck = DyckSpec::with_pairs(2, &[]).unwrap();
    let lambda = Arc::new(dyck.lambda_alphabet().unwrap());
    let sigma = Arc::new(Alphabet::new(["a", "b", "c"]).unwrap());
    let hom = Homomorphism::new(
        lambda.clone(),
        sigma,
        &[("[", "a"), ("]", "c"), ("(", "b"), (")", "c")],
    )
    .unwrap();
    let marked = Arc::new(Alphabet::new(lambda.names().map(neutralised)).unwrap());
    let all: Vec<usize> = marked.ids().collect();
    let reg = WordAutomaton::star(marked, &all);
    FlowerSpec::new(dyck, hom, reg).unwrap()
}

/// A one-state relation pairing every two equal-length words over `{a, b}`,
/// with `a` accepted and `b` rejected: unsolvable at length one.
pub fn flip_conflict_seed() -> Seed {
    let alphabet = Arc::new(Alphabet::new(["a", "b"]).unwrap());
    let a = alphabet.id("a").unwrap();
    let b = alphabet.id("b").unwrap();
    let relation = SynchronousTransducer::new(
        alphabet.clone(),
        vec!["q0"],
        0,
        [0],
        [(0, a, a, 0), (0, a, b, 0), (0, b, a, 0), (0, b, b, 0)],
    )
    .unwrap();
    let acc =
        WordAutomaton::new(alphabet.clone(), vec!["m0", "m1"], 0, [1], [(0, a, 1)], true).unwrap();
    let rej =
        WordAutomaton::new(alphabet.clone(), vec!["m0", "m1"], 0, [1], [(0, b, 1)], true).unwrap();
    Seed::new(relation, acc, rej).unwrap()
}
