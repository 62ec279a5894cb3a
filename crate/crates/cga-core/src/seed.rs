//! The seed of a game and the two translations between games and automata.
//!
//! The seed of a game is the triple `(R, L_acc, L_rej)`: the synchronous
//! relation of observation pairs on plays, and the regular languages of
//! player-1 observations at finals forcing decision 1 resp. 0. Extraction
//! moves observations from states onto incoming transitions; synthesis runs
//! a transducer and two deterministic automata in product.

use crate::alphabet::{AlphabetRef, HASH};
use crate::automaton::{StateId, WordAutomaton};
use crate::error::{Error, Result};
use crate::game::{DecisionSet, GameGraph, GameState};
use crate::transducer::SynchronousTransducer;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Arc;

/// A synchronous relation together with two disjoint regular languages: the
/// automata-theoretic view of a consensus game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    relation: SynchronousTransducer,
    acc: WordAutomaton,
    rej: WordAutomaton,
}

impl Seed {
    pub fn new(
        relation: SynchronousTransducer,
        acc: WordAutomaton,
        rej: WordAutomaton,
    ) -> Result<Self> {
        if relation.alphabet() != acc.alphabet() || relation.alphabet() != rej.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Seed { relation, acc, rej })
    }

    /// A seed whose rejecting language is empty.
    pub fn covering(relation: SynchronousTransducer, acc: WordAutomaton) -> Result<Self> {
        let rej = WordAutomaton::empty_language(relation.alphabet().clone());
        Seed::new(relation, acc, rej)
    }

    pub fn alphabet(&self) -> &AlphabetRef {
        self.relation.alphabet()
    }

    pub fn relation(&self) -> &SynchronousTransducer {
        &self.relation
    }

    pub fn acc(&self) -> &WordAutomaton {
        &self.acc
    }

    pub fn rej(&self) -> &WordAutomaton {
        &self.rej
    }

    /// Exact disjointness check of the two seed languages; returns the
    /// shortest witness word if they intersect.
    pub fn check_disjoint(&self) -> Result<()> {
        let product = self.acc.intersect(&self.rej)?;
        if product.is_empty() {
            return Ok(());
        }
        for n in 0..=product.state_count() {
            let words = product.enumerate_words(n, 1_000_000)?;
            let witness = words.iter().next().cloned();
            if let Some(w) = witness {
                return Err(Error::NondisjointSeedLanguages(
                    self.alphabet().format_word(&w),
                ));
            }
        }
        unreachable!("a non-empty automaton accepts a word no longer than its state count")
    }
}

/// Reads the seed off a game: transducer states are the non-final game
/// states, and a transition `u --a|b--> v` exists for each edge `(u, v)`
/// with `β¹(v) = a`, `β²(v) = b`. Finals are the states with an edge into a
/// game final; the acc (rej) automaton keeps those whose final forces 1 (0).
pub fn extract_seed(game: &GameGraph) -> Result<Seed> {
    game.require_valid()?;
    let alphabet = game.alphabet().clone();
    let non_finals: Vec<StateId> =
        (0..game.state_count()).filter(|&q| !game.is_final(q)).collect();
    let remap: HashMap<StateId, StateId> =
        non_finals.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    let names: Vec<String> =
        non_finals.iter().map(|&q| game.state(q).name.clone()).collect();
    let mut transitions = BTreeSet::new();
    let mut finals = BTreeSet::new();
    let mut acc_finals = BTreeSet::new();
    let mut rej_finals = BTreeSet::new();
    for (u, v) in game.edges() {
        if game.is_final(v) {
            let source = remap[&u];
            finals.insert(source);
            match game.admissible(v) {
                Some(DecisionSet::ONE) => {
                    acc_finals.insert(source);
                }
                Some(DecisionSet::ZERO) => {
                    rej_finals.insert(source);
                }
                _ => {}
            }
        } else {
            let s = game.state(v);
            transitions.insert((remap[&u], s.obs1, s.obs2, remap[&v]));
        }
    }
    if finals.is_empty() {
        // Game without plays: keep an unreachable final so the transducer
        // invariant holds. The seed languages stay empty.
        finals.insert(remap[&game.initial()]);
    }
    let initial = remap[&game.initial()];
    let word_transitions: BTreeSet<(StateId, usize, StateId)> =
        transitions.iter().map(|&(p, a, _, q)| (p, a, q)).collect();
    let relation =
        SynchronousTransducer::new(alphabet.clone(), names.clone(), initial, finals, transitions)?;
    let acc = WordAutomaton::new(
        alphabet.clone(),
        names.clone(),
        initial,
        acc_finals,
        word_transitions.clone(),
        false,
    )?;
    let rej =
        WordAutomaton::new(alphabet, names, initial, rej_finals, word_transitions, false)?;
    Seed::new(relation, acc, rej)
}

/// Builds a game with the given seed. The seed languages are determinized
/// and completed internally; they must be disjoint.
///
/// Game states are triples of a transducer transition and one state of each
/// language automaton; the automata advance on the player-1 observation of
/// the state being left. Exits to the three final states consume the last
/// observation first, so the automaton runs cover the whole observation
/// word.
pub fn synthesize_game(seed: &Seed) -> Result<GameGraph> {
    seed.check_disjoint()?;
    let hash_alpha = crate::alphabet::Alphabet::new([HASH])?;
    let (alphabet, obs_map, _) = seed.alphabet().union(&hash_alpha);
    let alphabet = Arc::new(alphabet);
    let hash = alphabet.id(HASH).unwrap();

    let acc = seed.acc().determinize().complete();
    let rej = seed.rej().determinize().complete();
    let step = |dfa: &WordAutomaton, q: StateId, a: usize| -> StateId {
        dfa.transitions()
            .find(|&(p, x, _)| p == q && x == a)
            .map(|(_, _, t)| t)
            .expect("complete automaton")
    };
    let relation = seed.relation();
    let edges_of_relation: Vec<(StateId, usize, usize, StateId)> =
        relation.transitions().collect();
    // Transducer transitions leaving each state, by index into the list.
    let mut leaving: HashMap<StateId, Vec<usize>> = HashMap::new();
    for (i, &(p, _, _, _)) in edges_of_relation.iter().enumerate() {
        leaving.entry(p).or_default().push(i);
    }

    type Product = (usize, StateId, StateId);
    let mut index: HashMap<Product, StateId> = HashMap::new();
    let mut product_states: Vec<Product> = Vec::new();
    let mut queue: Vec<Product> = Vec::new();
    for &e in leaving.get(&relation.initial()).unwrap_or(&Vec::new()) {
        let key = (e, acc.initial(), rej.initial());
        if let std::collections::hash_map::Entry::Vacant(entry) = index.entry(key) {
            entry.insert(product_states.len());
            product_states.push(key);
            queue.push(key);
        }
    }
    // Edges among product states and to the three exits.
    let mut product_edges: Vec<(Product, Product)> = Vec::new();
    let mut exit_edges: Vec<(Product, DecisionSet)> = Vec::new();
    while let Some((e, qa, qb)) = queue.pop() {
        let (_, a, _, target) = edges_of_relation[e];
        let qa2 = step(&acc, qa, a);
        let qb2 = step(&rej, qb, a);
        if relation.is_final(target) {
            // Disjointness keeps the acc and rej exits apart on any one
            // word, but a product state may still reach both on different
            // runs; both edges are emitted in that case.
            let acc_hit = acc.is_final(qa2);
            let rej_hit = rej.is_final(qb2);
            if acc_hit {
                exit_edges.push(((e, qa, qb), DecisionSet::ONE));
            }
            if rej_hit {
                exit_edges.push(((e, qa, qb), DecisionSet::ZERO));
            }
            if !acc_hit && !rej_hit {
                exit_edges.push(((e, qa, qb), DecisionSet::BOTH));
            }
        }
        for &e2 in leaving.get(&target).unwrap_or(&Vec::new()) {
            let key = (e2, qa2, qb2);
            if let std::collections::hash_map::Entry::Vacant(entry) = index.entry(key) {
                entry.insert(product_states.len());
                product_states.push(key);
                queue.push(key);
            }
            product_edges.push(((e, qa, qb), key));
        }
    }

    // Keep only product states that lie on a path from the initial state to
    // an exit; everything is already reachable, so prune the dead ones.
    let mut alive: HashSet<Product> = exit_edges.iter().map(|&(p, _)| p).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(from, to) in &product_edges {
            if alive.contains(&to) && alive.insert(from) {
                changed = true;
            }
        }
    }

    let kept: Vec<Product> = product_states.iter().copied().filter(|p| alive.contains(p)).collect();
    let mut state_index: HashMap<Product, StateId> = HashMap::new();
    let mut states = vec![GameState { name: "v0".into(), obs1: hash, obs2: hash }];
    for (i, &p) in kept.iter().enumerate() {
        state_index.insert(p, states.len());
        let (e, _, _) = p;
        let (_, a, b, _) = edges_of_relation[e];
        states.push(GameState {
            name: format!("s{i}"),
            obs1: obs_map[a],
            obs2: obs_map[b],
        });
    }
    let mut edges: BTreeSet<(StateId, StateId)> = BTreeSet::new();
    for &e in leaving.get(&relation.initial()).unwrap_or(&Vec::new()) {
        let key = (e, acc.initial(), rej.initial());
        if let Some(&id) = state_index.get(&key) {
            edges.insert((0, id));
        }
    }
    for &(from, to) in &product_edges {
        if let (Some(&f), Some(&t)) = (state_index.get(&from), state_index.get(&to)) {
            edges.insert((f, t));
        }
    }
    // The three exit states, created on demand.
    let mut admissible: BTreeMap<StateId, DecisionSet> = BTreeMap::new();
    let mut exits: HashMap<&'static str, StateId> = HashMap::new();
    let mut exit = |name: &'static str,
                    omega: DecisionSet,
                    states: &mut Vec<GameState>,
                    admissible: &mut BTreeMap<StateId, DecisionSet>|
     -> StateId {
        *exits.entry(name).or_insert_with(|| {
            let id = states.len();
            states.push(GameState { name: name.into(), obs1: hash, obs2: hash });
            admissible.insert(id, omega);
            id
        })
    };
    let mut exit_list: Vec<(Product, DecisionSet)> = exit_edges;
    exit_list.sort_by_key(|&(p, _)| state_index.get(&p).copied());
    for (p, omega) in exit_list {
        if let Some(&source) = state_index.get(&p) {
            let name = match omega {
                DecisionSet::ONE => "acc",
                DecisionSet::ZERO => "rej",
                _ => "eq",
            };
            let target = exit(name, omega, &mut states, &mut admissible);
            edges.insert((source, target));
        }
    }
    // Length-zero plays: when the transducer accepts the empty pair, the
    // game needs a direct edge from the initial state so that the seed of
    // the result still accepts it.
    if relation.is_final(relation.initial()) {
        let acc_hit = acc.is_final(acc.initial());
        let rej_hit = rej.is_final(rej.initial());
        let mut omegas = Vec::new();
        if acc_hit {
            omegas.push(DecisionSet::ONE);
        }
        if rej_hit {
            omegas.push(DecisionSet::ZERO);
        }
        if omegas.is_empty() {
            omegas.push(DecisionSet::BOTH);
        }
        for omega in omegas {
            let name = match omega {
                DecisionSet::ONE => "acc",
                DecisionSet::ZERO => "rej",
                _ => "eq",
            };
            let target = exit(name, omega, &mut states, &mut admissible);
            edges.insert((0, target));
        }
    }
    GameGraph::new(alphabet, states, 0, edges, admissible)
}
