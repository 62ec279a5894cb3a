//! Property tests for the relation algebra and the automaton toolkit,
//! driven by randomly generated small machines.

use cga_core::alphabet::Alphabet;
use cga_core::automaton::WordAutomaton;
use cga_core::closure::reflection;
use cga_core::transducer::{SynchronousTransducer, Tape};
use cga_core::Word;
use proptest::prelude::*;
use std::collections::BTreeSet;
use std::sync::Arc;

const CAP: usize = 200_000;

#[derive(Debug, Clone)]
struct RawMachine {
    symbols: usize,
    states: usize,
    transitions: Vec<(usize, usize, usize, usize)>,
    finals: Vec<usize>,
}

fn arb_machine() -> impl Strategy<Value = RawMachine> {
    (1usize..=3, 1usize..=4)
        .prop_flat_map(|(symbols, states)| {
            let transition =
                (0..states, 0..symbols, 0..symbols, 0..states).prop_map(|t| t);
            (
                Just(symbols),
                Just(states),
                prop::collection::vec(transition, 0..=10),
                prop::collection::vec(0..states, 1..=states),
            )
        })
        .prop_map(|(symbols, states, transitions, finals)| RawMachine {
            symbols,
            states,
            transitions,
            finals,
        })
}

fn transducer_of(raw: &RawMachine) -> SynchronousTransducer {
    let names = ["a", "b", "c"];
    let alphabet = Arc::new(Alphabet::new(names[..raw.symbols].to_vec()).unwrap());
    SynchronousTransducer::new(
        alphabet,
        (0..raw.states).map(|q| format!("q{q}")).collect(),
        0,
        raw.finals.clone(),
        raw.transitions.clone(),
    )
    .unwrap()
}

fn automaton_of(raw: &RawMachine) -> WordAutomaton {
    let names = ["a", "b", "c"];
    let alphabet = Arc::new(Alphabet::new(names[..raw.symbols].to_vec()).unwrap());
    WordAutomaton::new(
        alphabet,
        (0..raw.states).map(|q| format!("q{q}")).collect(),
        0,
        raw.finals.clone(),
        raw.transitions.iter().map(|&(p, a, _, q)| (p, a, q)),
        false,
    )
    .unwrap()
}

fn all_words(symbols: usize, n: usize) -> Vec<Word> {
    let mut words = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &words {
            for s in 0..symbols {
                let mut w2 = w.clone();
                w2.push(s);
                next.push(w2);
            }
        }
        words = next;
    }
    words
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inversion_swaps_accepted_pairs(raw in arb_machine()) {
        let r = transducer_of(&raw);
        let inv = r.invert();
        for n in 0..=3 {
            let pairs = r.enumerate_pairs(n, CAP).unwrap();
            let swapped: BTreeSet<_> = inv
                .enumerate_pairs(n, CAP)
                .unwrap()
                .into_iter()
                .map(|(x, y)| (y, x))
                .collect();
            prop_assert_eq!(&pairs, &swapped);
        }
    }

    #[test]
    fn composition_is_the_relational_join(a in arb_machine(), b in arb_machine()) {
        // Put both machines over the same alphabet size.
        let symbols = a.symbols.min(b.symbols);
        let mut a = a;
        let mut b = b;
        a.symbols = symbols;
        b.symbols = symbols;
        a.transitions.retain(|&(_, x, y, _)| x < symbols && y < symbols);
        b.transitions.retain(|&(_, x, y, _)| x < symbols && y < symbols);
        let r = transducer_of(&a);
        let s = transducer_of(&b);
        let composed = r.compose(&s).unwrap();
        for n in 0..=3 {
            let rp = r.enumerate_pairs(n, CAP).unwrap();
            let sp = s.enumerate_pairs(n, CAP).unwrap();
            let mut expected = BTreeSet::new();
            for (x, z) in &rp {
                for (z2, y) in &sp {
                    if z == z2 {
                        expected.insert((x.clone(), y.clone()));
                    }
                }
            }
            prop_assert_eq!(composed.enumerate_pairs(n, CAP).unwrap(), expected);
        }
    }

    #[test]
    fn reflection_is_reflexive_and_symmetric_on_the_domain(raw in arb_machine()) {
        let r = transducer_of(&raw);
        let tau = reflection(&r).unwrap();
        for n in 0..=3 {
            let pairs = tau.enumerate_pairs(n, CAP).unwrap();
            for (x, y) in &pairs {
                prop_assert!(tau.accepts(y, x).unwrap(), "symmetry");
            }
            for (x, _) in r.enumerate_pairs(n, CAP).unwrap() {
                prop_assert!(tau.accepts(&x, &x).unwrap(), "reflexivity on the domain");
            }
        }
    }

    #[test]
    fn apply_agrees_with_acceptance(raw in arb_machine()) {
        let r = transducer_of(&raw);
        for n in 0..=3 {
            for w in all_words(raw.symbols, n) {
                let images = r.apply(&w, Tape::Left, CAP).unwrap();
                for other in all_words(raw.symbols, n) {
                    prop_assert_eq!(
                        images.contains(&other),
                        r.accepts(&w, &other).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn determinization_and_boolean_ops_preserve_membership(
        a in arb_machine(),
        b in arb_machine(),
    ) {
        let symbols = a.symbols.min(b.symbols);
        let mut a = a;
        let mut b = b;
        a.symbols = symbols;
        b.symbols = symbols;
        a.transitions.retain(|&(_, x, y, _)| x < symbols && y < symbols);
        b.transitions.retain(|&(_, x, y, _)| x < symbols && y < symbols);
        let m = automaton_of(&a);
        let o = automaton_of(&b);
        let dfa = m.determinize();
        prop_assert!(dfa.is_deterministic());
        let both = m.intersect(&o).unwrap();
        let either = m.union(&o).unwrap();
        let comp = m.complement();
        for n in 0..=4 {
            for w in all_words(symbols, n) {
                let in_m = m.accepts(&w).unwrap();
                let in_o = o.accepts(&w).unwrap();
                prop_assert_eq!(dfa.accepts(&w).unwrap(), in_m);
                prop_assert_eq!(both.accepts(&w).unwrap(), in_m && in_o);
                prop_assert_eq!(either.accepts(&w).unwrap(), in_m || in_o);
                prop_assert_eq!(comp.accepts(&w).unwrap(), !in_m);
            }
        }
        // Emptiness agrees with exhaustive membership up to length 6.
        let observed_empty = (0..=6).all(|n| {
            m.enumerate_words(n, CAP).unwrap().is_empty()
        });
        prop_assert_eq!(m.is_empty() , observed_empty);
    }
}
