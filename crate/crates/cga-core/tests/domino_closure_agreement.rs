//! The corridor-tiling oracle and the compiled game's closure must agree:
//! a word is tileable exactly when its observation is forced to decision 1,
//! and the even elements of the forcing chain are the tiling's rows.

use cga_core::closure::{closure_membership, Target};
use cga_core::corpus;
use cga_core::domino::{compile_domino_game, corridor_tiling, frontier_membership};
use cga_core::seed::extract_seed;
use cga_core::Word;

const CAP: usize = 2_000_000;

#[test]
fn frontier_oracle_equals_closure_membership_up_to_6() {
    let system = corpus::anbn_domino_system();
    let game = compile_domino_game(&system).unwrap();
    let seed = extract_seed(&game).unwrap();
    let dominoes = system.dominoes().clone();
    let a = dominoes.id("a").unwrap();
    let b = dominoes.id("b").unwrap();
    let embed = |w: &Word| -> Word {
        w.iter().map(|&s| seed.alphabet().id(dominoes.name(s)).unwrap()).collect()
    };
    let mut words: Vec<Word> = vec![Vec::new()];
    for _len in 1..=6usize {
        let mut next = Vec::new();
        for w in &words {
            for s in [a, b] {
                let mut w2 = w.clone();
                w2.push(s);
                next.push(w2);
            }
        }
        words = next;
        for w in &words {
            let tiled = frontier_membership(&system, w, w.len() + 2).unwrap();
            let forced = closure_membership(&seed, Target::Acc, &embed(w), CAP)
                .unwrap()
                .member;
            assert_eq!(tiled, forced, "at {}", dominoes.format_word(w));
        }
    }
}

#[test]
fn tiling_rows_appear_in_the_forcing_chain() {
    let system = corpus::anbn_domino_system();
    let game = compile_domino_game(&system).unwrap();
    let seed = extract_seed(&game).unwrap();
    let dominoes = system.dominoes().clone();
    for text in ["ab", "aabb"] {
        let w = dominoes.parse_word(text).unwrap();
        let tiling = corridor_tiling(&system, &w, w.len() + 2).unwrap().unwrap();
        tiling.revalidate(&system, &w).unwrap();
        let in_seed: Word =
            w.iter().map(|&s| seed.alphabet().id(dominoes.name(s)).unwrap()).collect();
        let result = closure_membership(&seed, Target::Acc, &in_seed, CAP).unwrap();
        assert!(result.member);
        let chain = result.chain.unwrap();
        let chain_words: Vec<String> =
            chain.iter().map(|e| seed.alphabet().format_word(e)).collect();
        // Interior cells of each tiling row occur along the chain, from the
        // frontier word down to the all-blank row.
        for row in &tiling.rows {
            let interior: Vec<usize> = row[1..=w.len()].to_vec();
            let rendered = dominoes.format_word(&interior);
            assert!(
                chain_words.contains(&rendered),
                "row {rendered} missing from chain {chain_words:?}"
            );
        }
        assert_eq!(chain_words.last().unwrap(), &"□".repeat(w.len()));
    }
}

#[test]
fn unreachable_heights_are_reported_absent() {
    let system = corpus::anbn_domino_system();
    let dominoes = system.dominoes().clone();
    let w = dominoes.parse_word("aaabbb").unwrap();
    // The minimal corridor for a³b³ has height 4 (five rows).
    assert!(corridor_tiling(&system, &w, 3).unwrap().is_none());
    assert!(corridor_tiling(&system, &w, 4).unwrap().is_some());
}
