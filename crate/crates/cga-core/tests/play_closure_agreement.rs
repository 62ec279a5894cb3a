//! Cross-checks between the play-level view of a game and the
//! automata-level view of its seed: connectedness classes against
//! reflection components, safe decisions against forcing closures, and the
//! game compositions against closure probes.

use cga_core::alphabet::Alphabet;
use cga_core::automaton::WordAutomaton;
use cga_core::cfl::identity_seed;
use cga_core::closure::{
    characterises_check_upto, closure_membership, covered_language_upto, reflection_component,
    solvable_upto, strategy_table, Target,
};
use cga_core::corpus;
use cga_core::domino::compile_domino_game;
use cga_core::game::{empty_language_game, Decision, GameGraph, StrategyTable};
use cga_core::seed::{extract_seed, synthesize_game};
use cga_core::transducer::SynchronousTransducer;
use cga_core::Word;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

const CAP: usize = 2_000_000;

fn corpus_games() -> Vec<GameGraph> {
    vec![
        corpus::anbn_cover_game(),
        compile_domino_game(&corpus::anbn_domino_system()).unwrap(),
        empty_language_game(&Alphabet::new(["a", "b"]).unwrap()).unwrap(),
    ]
}

/// Connected classes of plays and reflection components of their player-1
/// observations carve out the same partition, length by length.
#[test]
fn connectedness_equals_iterated_reflection() {
    for game in corpus_games() {
        let seed = extract_seed(&game).unwrap();
        for n in 0..=4 {
            let classes = game.connected_classes(n, CAP).unwrap();
            for class in classes {
                let words: BTreeSet<Word> =
                    class.iter().map(|p| game.observation(p, 1).unwrap()).collect();
                let sample = words.iter().next().unwrap();
                let component = reflection_component(&seed, sample, CAP).unwrap();
                assert_eq!(
                    words, component,
                    "class words and τ-component must coincide (length {n})"
                );
            }
        }
    }
}

/// A decision is unsafe at a play exactly when the reflection closure of
/// its observation meets the language forcing the opposite decision.
#[test]
fn safe_decisions_agree_with_closures() {
    for game in corpus_games() {
        let seed = extract_seed(&game).unwrap();
        for n in 0..=4 {
            for play in game.enumerate_plays(n, CAP).unwrap() {
                let report = game.safe_decisions(&play, CAP).unwrap();
                let w = game.observation(&play, 1).unwrap();
                let one_forced =
                    closure_membership(&seed, Target::Acc, &w, CAP).unwrap().member;
                let zero_forced =
                    closure_membership(&seed, Target::Rej, &w, CAP).unwrap().member;
                assert_eq!(
                    report.safe.contains(Decision::Zero),
                    !one_forced,
                    "0 is safe iff no connected play forces 1"
                );
                assert_eq!(report.safe.contains(Decision::One), !zero_forced);
            }
        }
    }
}

/// The hand-encoded reference game covers exactly the balanced words over
/// {a, b}; this pins the encoding behaviourally.
#[test]
fn reference_game_covers_anbn() {
    let game = corpus::anbn_cover_game();
    let seed = extract_seed(&game).unwrap();
    let sigma = Alphabet::new(["a", "b"]).unwrap();
    let covered = covered_language_upto(&seed, &sigma, 6, CAP).unwrap();
    let words: Vec<String> = covered
        .values()
        .flat_map(|set| set.iter().map(|w| seed.alphabet().format_word(w)))
        .collect();
    assert_eq!(words, vec!["ab".to_string(), "aabb".into(), "aaabbb".into()]);
    assert!(solvable_upto(&seed, 6, CAP).unwrap().solvable_up_to);
}

/// Restricting a winning strategy of a union game to one component's
/// alphabet wins that component.
#[test]
fn union_strategy_restricts_to_components() {
    let left = corpus::anbn_cover_game();
    let sigma = Alphabet::new(["x", "y"]).unwrap();
    let right = empty_language_game(&sigma).unwrap();
    let union = left.union(&right).unwrap();
    let union_seed = extract_seed(&union).unwrap();
    let n = 4;
    let table = strategy_table(&union_seed, n, Decision::Zero, CAP).unwrap();
    // Rebuild per-component tables by word translation.
    let restrict = |game: &GameGraph| -> StrategyTable {
        let mut entries = BTreeMap::new();
        for len in 0..=n {
            for play in game.enumerate_plays(len, CAP).unwrap() {
                for player in [1, 2] {
                    let w = game.observation(&play, player).unwrap();
                    let in_union: Word = w
                        .iter()
                        .map(|&s| union.alphabet().id(game.alphabet().name(s)).unwrap())
                        .collect();
                    entries.insert(w.clone(), table.get(&in_union).expect("total"));
                }
            }
        }
        StrategyTable::new(n, entries)
    };
    assert!(left.verify_strategy(&restrict(&left), n, CAP).unwrap().is_winning());
    assert!(right.verify_strategy(&restrict(&right), n, CAP).unwrap().is_winning());
    assert!(union.verify_strategy(&table, n, CAP).unwrap().is_winning());
}

/// A table wins exactly when it is constant on every connectedness class
/// and its value is admissible across the class. Checked against random
/// tables of the reference game.
#[test]
fn verification_matches_the_classwise_characterisation() {
    let game = corpus::anbn_cover_game();
    let n = 3;
    // All observation words of plays up to length n, plus the per-length
    // class structure.
    let mut class_info: Vec<(Vec<Word>, cga_core::DecisionSet)> = Vec::new();
    for len in 0..=n {
        for class in game.connected_classes(len, CAP).unwrap() {
            let mut words = BTreeSet::new();
            let mut safe = cga_core::DecisionSet::BOTH;
            for play in &class {
                words.insert(game.observation(play, 1).unwrap());
                words.insert(game.observation(play, 2).unwrap());
                safe = safe.intersect(
                    game.admissible(play.final_state()).unwrap_or(cga_core::DecisionSet::BOTH),
                );
            }
            class_info.push((words.into_iter().collect(), safe));
        }
    }
    // Walk a deterministic family of tables: assign decisions classwise or
    // break a class on purpose.
    for pattern in 0u32..64 {
        let mut entries = BTreeMap::new();
        let mut expected_win = true;
        for (i, (words, safe)) in class_info.iter().enumerate() {
            let bit = (pattern >> (i % 6)) & 1;
            let d = if bit == 1 { Decision::One } else { Decision::Zero };
            if !safe.contains(d) {
                expected_win = false;
            }
            for w in words {
                entries.insert(w.clone(), d);
            }
            // Every fourth pattern also splits one multi-word class.
            if pattern % 4 == 3 && words.len() > 1 && i == pattern as usize % class_info.len()
            {
                entries.insert(words[0].clone(), d.flip());
                expected_win = false;
            }
        }
        let table = StrategyTable::new(n, entries);
        let outcome = game.verify_strategy(&table, n, CAP).unwrap();
        assert_eq!(outcome.is_winning(), expected_win, "pattern {pattern}");
    }
}

fn word_automaton_for(alpha: &Arc<Alphabet>, words: &[&str]) -> WordAutomaton {
    // Chain automaton accepting exactly the listed words.
    let mut states = vec!["s0".to_string()];
    let mut transitions = Vec::new();
    let mut finals = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let parsed = alpha.parse_word(w).unwrap();
        let mut here = 0usize;
        for (j, &sym) in parsed.iter().enumerate() {
            let next = states.len();
            states.push(format!("w{i}p{j}"));
            transitions.push((here, sym, next));
            here = next;
        }
        finals.push(here);
    }
    WordAutomaton::new(alpha.clone(), states, 0, finals, transitions, false).unwrap()
}

/// Building the characterizer from a cover of `{ab}` and a cover of its
/// complement pins every word's decision up to the bound.
#[test]
fn characterizer_of_a_single_word_language() {
    let sigma = Arc::new(Alphabet::new(["a", "b"]).unwrap());
    let ab = word_automaton_for(&sigma, &["ab"]);
    let complement = ab.complement().intersect(
        &WordAutomaton::star(sigma.clone(), &[0, 1]),
    );
    // Exclude the empty word from the complement cover.
    let nonempty = WordAutomaton::new(
        sigma.clone(),
        vec!["e", "ne"],
        0,
        [1],
        [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)],
        false,
    )
    .unwrap();
    let complement = complement.unwrap().intersect(&nonempty).unwrap();
    let cover_l = synthesize_game(
        &cga_core::Seed::covering(SynchronousTransducer::identity(sigma.clone()), ab).unwrap(),
    )
    .unwrap();
    let cover_comp = synthesize_game(
        &cga_core::Seed::covering(SynchronousTransducer::identity(sigma.clone()), complement)
            .unwrap(),
    )
    .unwrap();
    let characterizer = cover_l.characterizer(&cover_comp, &sigma).unwrap();
    let seed = extract_seed(&characterizer).unwrap();
    assert!(solvable_upto(&seed, 4, CAP).unwrap().solvable_up_to);
    assert!(characterises_check_upto(&seed, &sigma, 4, CAP).unwrap());
    let covered = covered_language_upto(&seed, &sigma, 4, CAP).unwrap();
    let all: Vec<String> = covered
        .values()
        .flat_map(|set| set.iter().map(|w| seed.alphabet().format_word(w)))
        .collect();
    assert_eq!(all, vec!["ab".to_string()]);
}

/// Characterizing a game against itself demands both decisions everywhere:
/// unsolvable as soon as any word is covered.
#[test]
fn characterizer_against_itself_conflicts() {
    let sigma = Arc::new(Alphabet::new(["a"]).unwrap());
    let all_words = WordAutomaton::star(sigma.clone(), &[0]);
    let cover = synthesize_game(
        &cga_core::Seed::covering(SynchronousTransducer::identity(sigma.clone()), all_words)
            .unwrap(),
    )
    .unwrap();
    let game = cover.characterizer(&cover.clone(), &sigma).unwrap();
    let seed = extract_seed(&game).unwrap();
    let verdict = solvable_upto(&seed, 3, CAP).unwrap();
    assert!(!verdict.solvable_up_to);
}

/// The empty-language gadget kills every covered word of its partner:
/// the union with the `aⁿbⁿ` cover conflicts exactly at `ab`.
#[test]
fn empty_language_gadget_conflicts_at_the_shortest_covered_word() {
    let game = compile_domino_game(&corpus::anbn_domino_system()).unwrap();
    let sigma = Alphabet::new(["a", "b"]).unwrap();
    let gadget = empty_language_game(&sigma).unwrap();
    let union = game.union(&gadget).unwrap();
    let seed = extract_seed(&union).unwrap();
    let verdict = solvable_upto(&seed, 4, CAP).unwrap();
    assert!(!verdict.solvable_up_to);
    let conflict = verdict.conflict.unwrap();
    let alpha = seed.alphabet();
    assert_eq!(alpha.format_word(&conflict.word), "ab");
    // Both chains replay under the reflection transducer.
    let tau = cga_core::closure::reflection(seed.relation()).unwrap();
    for chain in [&conflict.chain_to_acc, &conflict.chain_to_rej] {
        for pair in chain.windows(2) {
            assert!(tau.accepts(&pair[0], &pair[1]).unwrap());
        }
    }
    assert!(seed.acc().accepts(conflict.chain_to_acc.last().unwrap()).unwrap());
    assert!(seed.rej().accepts(conflict.chain_to_rej.last().unwrap()).unwrap());
}

/// The identity seed with a language and its complement characterises the
/// language; dropping the rejecting side only covers it.
#[test]
fn identity_seed_covers_versus_characterises() {
    let sigma = Arc::new(Alphabet::new(["a", "b"]).unwrap());
    let a = sigma.id("a").unwrap();
    let b = sigma.id("b").unwrap();
    // (ab)+ as a deterministic automaton.
    let acc = WordAutomaton::new(
        sigma.clone(),
        vec!["start", "half", "full"],
        0,
        [2],
        [(0, a, 1), (1, b, 2), (2, a, 1)],
        true,
    )
    .unwrap();
    let nonempty = WordAutomaton::new(
        sigma.clone(),
        vec!["e", "ne"],
        0,
        [1],
        [(0, a, 1), (0, b, 1), (1, a, 1), (1, b, 1)],
        false,
    )
    .unwrap();
    let complement = acc.complement().intersect(&nonempty).unwrap();
    let characterising = identity_seed(acc.clone(), complement).unwrap();
    assert!(characterises_check_upto(&characterising, &sigma, 6, CAP).unwrap());
    let covering = cga_core::Seed::covering(
        SynchronousTransducer::identity(sigma.clone()),
        acc.clone(),
    )
    .unwrap();
    assert!(!characterises_check_upto(&covering, &sigma, 6, CAP).unwrap());
    for seed in [&characterising, &covering] {
        let covered = covered_language_upto(seed, &sigma, 6, CAP).unwrap();
        for (len, set) in covered {
            let expected = acc.enumerate_words(len, CAP).unwrap();
            assert_eq!(set, expected, "covered slice at length {len}");
        }
    }
}
