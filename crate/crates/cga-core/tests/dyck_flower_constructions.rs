//! Behavioural checks of the Dyck and flower constructions: invariance of
//! bracket balance under the erasure relation, coding-cycle track
//! preservation, equivalence of the reduced transducer, and the
//! counterexample showing why flower seed languages must range over
//! neutralised symbols.

use cga_core::alphabet::Alphabet;
use cga_core::automaton::WordAutomaton;
use cga_core::cfl::{
    add_coding_cycle, build_flower, dyck_membership_relaxed, dyck_seed, dyck_transducer,
    is_flower, is_flower_transducer, neutralised, reduce_flower, DyckSpec, Homomorphism,
};
use cga_core::closure::{closure_membership, closure_set, Target};
use cga_core::corpus;
use cga_core::seed::Seed;
use cga_core::{SymbolId, Word};
use std::collections::BTreeSet;
use std::sync::Arc;

const CAP: usize = 2_000_000;

fn sigma_words(k: usize, n: usize) -> Vec<Word> {
    let mut words = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &words {
            for s in 0..k {
                let mut w2 = w.clone();
                w2.push(s);
                next.push(w2);
            }
        }
        words = next;
    }
    words
}

/// Bracket balance (per kind) is invariant under the erasure relation and
/// its inverse, over the extended alphabet that treats `□` as neutral.
#[test]
fn erasure_preserves_bracket_balance() {
    for spec in [
        DyckSpec::with_pairs(1, &[]).unwrap(),
        DyckSpec::with_pairs(2, &["c"]).unwrap(),
    ] {
        let r = dyck_transducer(&spec);
        let gamma = r.alphabet().clone();
        let bound = if spec.kinds() == 1 { 6 } else { 4 };
        for n in 0..=bound {
            for (u, w) in r.enumerate_pairs(n, CAP).unwrap() {
                assert_eq!(
                    dyck_membership_relaxed(&spec, &gamma, &u),
                    dyck_membership_relaxed(&spec, &gamma, &w),
                    "balance must agree across {} | {}",
                    gamma.format_word(&u),
                    gamma.format_word(&w)
                );
            }
        }
    }
}

/// The one-kind Dyck seed covers exactly the balanced words, compared
/// against the direct checker on every word up to length 8.
#[test]
fn one_kind_dyck_coverage_up_to_8() {
    let spec = DyckSpec::with_pairs(1, &[]).unwrap();
    let seed = dyck_seed(&spec).unwrap();
    let lambda = spec.lambda_alphabet().unwrap();
    let embed = lambda.embedding(seed.alphabet()).unwrap();
    for n in 1..=8 {
        let closure = closure_set(&seed, Target::Acc, n, CAP).unwrap();
        for w in sigma_words(lambda.len(), n) {
            let in_gamma: Word = w.iter().map(|&s| embed[s]).collect();
            assert_eq!(
                closure.contains(&in_gamma),
                cga_core::cfl::dyck_membership(&spec, &lambda, &w).unwrap(),
            );
        }
    }
    // Spot-check the per-word route with its chain on a few words.
    for text in ["[]", "[[]]", "[][]", "[]]["] {
        let w = seed.alphabet().parse_word(text).unwrap();
        let result = closure_membership(&seed, Target::Acc, &w, CAP).unwrap();
        let lam_w = lambda.parse_word(text).unwrap();
        assert_eq!(
            result.member,
            cga_core::cfl::dyck_membership(&spec, &lambda, &lam_w).unwrap()
        );
        if let Some(chain) = result.chain {
            let tau = cga_core::closure::reflection(seed.relation()).unwrap();
            for pair in chain.windows(2) {
                assert!(tau.accepts(&pair[0], &pair[1]).unwrap());
            }
            assert!(seed.acc().accepts(chain.last().unwrap()).unwrap());
        }
    }
}

/// With neutral symbols, covered words keep their neutrals in place.
#[test]
fn dyck_with_neutral_matches_checker_up_to_4() {
    let spec = DyckSpec::with_pairs(1, &["c"]).unwrap();
    let seed = dyck_seed(&spec).unwrap();
    let lambda = spec.lambda_alphabet().unwrap();
    let embed = lambda.embedding(seed.alphabet()).unwrap();
    for n in 1..=4 {
        let closure = closure_set(&seed, Target::Acc, n, CAP).unwrap();
        for w in sigma_words(lambda.len(), n) {
            let in_gamma: Word = w.iter().map(|&s| embed[s]).collect();
            assert_eq!(
                closure.contains(&in_gamma),
                cga_core::cfl::dyck_membership(&spec, &lambda, &w).unwrap(),
                "at {}",
                lambda.format_word(&w)
            );
        }
    }
}

/// Along a closure chain from a terminal word, every later element keeps
/// the chosen pre-image on its second track.
#[test]
fn coding_cycle_preserves_the_preimage_track() {
    let fs = corpus::anbn_flower();
    let base = dyck_transducer(fs.dyck());
    let coded = add_coding_cycle(&base, fs.hom()).unwrap();
    let alpha = coded.alphabet().clone();
    // Accepting language of the unreduced seed: blank-tracked constraint
    // words (□, m₁)…(□, m_k).
    let lambda = fs.hom().source().clone();
    let blank_pair = |x: &str| alpha.id(&format!("□/{x}")).unwrap();
    let m = fs.reg();
    let acc = m
        .relabel(alpha.clone(), &{
            let map: Vec<SymbolId> = m
                .alphabet()
                .names()
                .map(|marked| {
                    let bare = marked.strip_prefix("n:").unwrap();
                    blank_pair(bare)
                })
                .collect();
            move |s| map[s]
        })
        .unwrap();
    let seed = Seed::covering(coded, acc).unwrap();
    for text in ["ab", "aabb"] {
        let w = alpha.parse_word(text).unwrap();
        let result = closure_membership(&seed, Target::Acc, &w, CAP).unwrap();
        assert!(result.member, "{text} must be covered before reduction");
        let chain = result.chain.unwrap();
        assert_eq!(chain[0], w);
        // Each element reproduces the start word once its second track is
        // pushed through h; letters still waiting in Σ stay literal. The
        // final element (inside L_acc) is fully track-shaped.
        for element in &chain[1..] {
            let image: Word = element
                .iter()
                .map(|&s| {
                    let name = alpha.name(s);
                    let in_sigma = match name.split_once('/') {
                        Some((_, x)) => {
                            fs.hom().apply(lambda.id(x).expect("pre-image letter"))
                        }
                        None => fs.hom().target().id(name).expect("terminal letter"),
                    };
                    alpha.id(fs.hom().target().name(in_sigma)).unwrap()
                })
                .collect();
            assert_eq!(image, w, "the pre-image track must keep spelling the start word");
        }
        let last = chain.last().unwrap();
        assert!(
            last.iter().all(|&s| alpha.name(s).starts_with("□/")),
            "the accepted element carries blanks on the first track"
        );
    }
}

/// The reduced transducer covers the same terminal words as the unreduced
/// one, checked on every word over Σ up to length 6.
#[test]
fn reduction_is_language_preserving_on_terminals() {
    let fs = corpus::anbn_flower();
    let base = dyck_transducer(fs.dyck());
    let coded = add_coding_cycle(&base, fs.hom()).unwrap();
    let reduced = reduce_flower(&coded, fs.hom()).unwrap();

    let coded_alpha = coded.alphabet().clone();
    let acc_coded = fs
        .reg()
        .relabel(coded_alpha.clone(), &{
            let map: Vec<SymbolId> = fs
                .reg()
                .alphabet()
                .names()
                .map(|marked| {
                    let bare = marked.strip_prefix("n:").unwrap();
                    coded_alpha.id(&format!("□/{bare}")).unwrap()
                })
                .collect();
            move |s| map[s]
        })
        .unwrap();
    let seed_coded = Seed::covering(coded, acc_coded).unwrap();
    let seed_reduced = build_flower(&fs).unwrap();
    assert!(reduced.transition_count() < seed_coded.relation().transition_count());

    let sigma = fs.hom().target().clone();
    for n in 1..=6 {
        for w in sigma_words(sigma.len(), n) {
            let w_coded: Word = w
                .iter()
                .map(|&s| coded_alpha.id(sigma.name(s)).unwrap())
                .collect();
            let w_reduced: Word = w
                .iter()
                .map(|&s| seed_reduced.alphabet().id(sigma.name(s)).unwrap())
                .collect();
            assert_eq!(
                closure_membership(&seed_coded, Target::Acc, &w_coded, CAP).unwrap().member,
                closure_membership(&seed_reduced, Target::Acc, &w_reduced, CAP)
                    .unwrap()
                    .member,
                "at {}",
                sigma.format_word(&w)
            );
        }
    }
}

/// A flower-shaped transducer with an accepting language that strays off
/// the neutralised alphabet is not a flower seed, and its covered language
/// shows the cross-serial pattern that no context-free language allows.
#[test]
fn off_template_seed_language_is_not_context_free() {
    let spec = DyckSpec::with_pairs(1, &["c"]).unwrap();
    let lambda = Arc::new(spec.lambda_alphabet().unwrap());
    let sigma = Arc::new(Alphabet::new(["x", "y", "w"]).unwrap());
    let h =
        Homomorphism::new(lambda, sigma, &[("[", "x"), ("]", "y"), ("c", "w")]).unwrap();
    let coded = add_coding_cycle(&dyck_transducer(&spec), &h).unwrap();
    let reduced = reduce_flower(&coded, &h).unwrap();
    assert!(is_flower_transducer(&reduced));
    let alpha = reduced.alphabet().clone();
    // L_acc = [+ c n:[+ ]+ mixes plain and neutralised symbols.
    let ob = alpha.id("[").unwrap();
    let cb = alpha.id("]").unwrap();
    let c = alpha.id("c").unwrap();
    let marked_open = alpha.id(&neutralised("[")).unwrap();
    let acc = WordAutomaton::new(
        alpha.clone(),
        vec!["s0", "s1", "s2", "s3", "s4"],
        0,
        [4],
        [
            (0, ob, 1),
            (1, ob, 1),
            (1, c, 2),
            (2, marked_open, 3),
            (3, marked_open, 3),
            (3, cb, 4),
            (4, cb, 4),
        ],
        true,
    )
    .unwrap();
    let seed = Seed::covering(reduced, acc).unwrap();
    assert!(is_flower(&seed).is_none(), "the seed language disqualifies it");

    // Membership of n:[^i c [^j ]^k requires matching open counts, with
    // slack only in the closing run: cross-serial, hence not context-free.
    let mut observed = BTreeSet::new();
    for i in 1..=3usize {
        for j in 1..=3usize {
            for k in 1..=3usize {
                let mut word = vec![marked_open; i];
                word.push(c);
                word.extend(std::iter::repeat_n(ob, j));
                word.extend(std::iter::repeat_n(cb, k));
                let member =
                    closure_membership(&seed, Target::Acc, &word, CAP).unwrap().member;
                assert_eq!(member, i == j && k >= j, "i={i} j={j} k={k}");
                if member {
                    observed.insert((i, j, k));
                }
            }
        }
    }
    for n in 1..=3 {
        assert!(observed.contains(&(n, n, n)));
    }
}

/// The two-bracket flower round-trips through recognition.
#[test]
fn two_bracket_flower_is_recognised() {
    let fs = corpus::two_bracket_flower();
    let seed = build_flower(&fs).unwrap();
    let recovered = is_flower(&seed).expect("structurally a flower");
    assert_eq!(recovered.dyck().kinds(), 2);
    assert_eq!(
        recovered.hom().target().names().collect::<Vec<_>>(),
        vec!["a", "b", "c"]
    );
}
