//! Synchronous letter-to-letter transducers and their relation algebra.
//!
//! A transducer recognises a length-preserving relation over pairs of words:
//! a pair is accepted when it labels some run from the initial state to a
//! final state. Unlike games, final states may have outgoing transitions.
//! The algebra consists of inversion (swap the tapes), composition (product
//! construction joining on the middle word), the identity relation, and the
//! application of a relation to word sets.

use crate::alphabet::{AlphabetRef, SymbolId, Word, WordSet};
use crate::automaton::{StateId, WordAutomaton};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

/// Which tape of a transducer a word is read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tape {
    /// The left tape (first component of accepted pairs).
    Left,
    /// The right tape (second component of accepted pairs).
    Right,
}

/// A two-tape letter-to-letter automaton. Transitions carry a pair of
/// symbols `a|b`; the set of final states is non-empty by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynchronousTransducer {
    alphabet: AlphabetRef,
    states: Vec<String>,
    transitions: BTreeSet<(StateId, SymbolId, SymbolId, StateId)>,
    initial: StateId,
    finals: BTreeSet<StateId>,
}

impl SynchronousTransducer {
    pub fn new<S: Into<String>>(
        alphabet: AlphabetRef,
        states: Vec<S>,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (StateId, SymbolId, SymbolId, StateId)>,
    ) -> Result<Self> {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        let n = states.len();
        let mut seen_names = HashSet::new();
        for name in &states {
            if !seen_names.insert(name) {
                return Err(Error::InvalidSpec(format!("duplicate state name `{name}`")));
            }
        }
        let check = |q: StateId| -> Result<()> {
            if q >= n {
                return Err(Error::InvalidSpec(format!("state index {q} out of range")));
            }
            Ok(())
        };
        check(initial)?;
        let finals: BTreeSet<StateId> = finals.into_iter().collect();
        if finals.is_empty() {
            return Err(Error::InvalidSpec("transducer needs a non-empty final set".into()));
        }
        for &f in &finals {
            check(f)?;
        }
        let transitions: BTreeSet<_> = transitions.into_iter().collect();
        for &(p, a, b, q) in &transitions {
            check(p)?;
            check(q)?;
            if a >= alphabet.len() || b >= alphabet.len() {
                return Err(Error::SymbolNotInAlphabet(format!("id {}", a.max(b))));
            }
        }
        Ok(SynchronousTransducer { alphabet, states, transitions, initial, finals })
    }

    /// Convenience constructor resolving state and symbol names.
    pub fn from_names(
        alphabet: AlphabetRef,
        states: &[&str],
        initial: &str,
        finals: &[&str],
        transitions: &[(&str, &str, &str, &str)],
    ) -> Result<Self> {
        let index: HashMap<&str, StateId> =
            states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let st = |s: &str| -> Result<StateId> {
            index.get(s).copied().ok_or_else(|| Error::InvalidSpec(format!("unknown state `{s}`")))
        };
        let trans: Result<Vec<_>> = transitions
            .iter()
            .map(|&(p, a, b, q)| Ok((st(p)?, alphabet.id_checked(a)?, alphabet.id_checked(b)?, st(q)?)))
            .collect();
        SynchronousTransducer::new(
            alphabet.clone(),
            states.to_vec(),
            st(initial)?,
            finals.iter().map(|f| st(f)).collect::<Result<Vec<_>>>()?,
            trans?,
        )
    }

    /// The identity relation `{(w, w) | w ∈ Σ*}` over the given alphabet.
    pub fn identity(alphabet: AlphabetRef) -> Self {
        let transitions: BTreeSet<_> = alphabet.ids().map(|a| (0, a, a, 0)).collect();
        SynchronousTransducer {
            alphabet,
            states: vec!["i".into()],
            transitions,
            initial: 0,
            finals: [0].into_iter().collect(),
        }
    }

    pub fn alphabet(&self) -> &AlphabetRef {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q]
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.iter().copied()
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(&q)
    }

    pub fn transitions(
        &self,
    ) -> impl Iterator<Item = (StateId, SymbolId, SymbolId, StateId)> + '_ {
        self.transitions.iter().copied()
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    /// True iff some final state is reachable from the initial state. A
    /// transducer without reachable finals recognises the empty relation.
    pub fn has_reachable_final(&self) -> bool {
        let mut seen: HashSet<StateId> = [self.initial].into_iter().collect();
        let mut queue = vec![self.initial];
        while let Some(p) = queue.pop() {
            if self.finals.contains(&p) {
                return true;
            }
            for &(p1, _, _, q) in &self.transitions {
                if p1 == p && seen.insert(q) {
                    queue.push(q);
                }
            }
        }
        false
    }

    /// True iff `(u, w)` labels some accepting run.
    pub fn accepts(&self, u: &[SymbolId], w: &[SymbolId]) -> Result<bool> {
        if u.len() != w.len() {
            return Err(Error::LengthMismatch { left: u.len(), right: w.len() });
        }
        for &a in u.iter().chain(w.iter()) {
            if a >= self.alphabet.len() {
                return Err(Error::SymbolNotInAlphabet(format!("id {a}")));
            }
        }
        let mut current: BTreeSet<StateId> = [self.initial].into_iter().collect();
        for (&a, &b) in u.iter().zip(w.iter()) {
            let mut next = BTreeSet::new();
            for &(p, x, y, q) in &self.transitions {
                if x == a && y == b && current.contains(&p) {
                    next.insert(q);
                }
            }
            if next.is_empty() {
                return Ok(false);
            }
            current = next;
        }
        Ok(current.iter().any(|q| self.finals.contains(q)))
    }

    /// The inverse relation: tape labels swapped on every transition.
    pub fn invert(&self) -> SynchronousTransducer {
        SynchronousTransducer {
            alphabet: self.alphabet.clone(),
            states: self.states.clone(),
            transitions: self.transitions.iter().map(|&(p, a, b, q)| (p, b, a, q)).collect(),
            initial: self.initial,
            finals: self.finals.clone(),
        }
    }

    /// Relation composition by product construction: the result accepts
    /// `(x, y)` iff some `z` satisfies `(x, z) ∈ self` and `(z, y) ∈ other`.
    /// Only the reachable part of the product is materialised; when no final
    /// product state is reachable, one unreachable final is kept so the
    /// transducer invariant (non-empty final set) still holds.
    pub fn compose(&self, other: &SynchronousTransducer) -> Result<SynchronousTransducer> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        // Index the right operand by (state, left symbol) for the join on z.
        let mut by_state_in: HashMap<(StateId, SymbolId), Vec<(SymbolId, StateId)>> =
            HashMap::new();
        for &(p, b, c, q) in &other.transitions {
            by_state_in.entry((p, b)).or_default().push((c, q));
        }
        let mut names = Vec::new();
        let mut taken: HashSet<String> = HashSet::new();
        let push_name = |names: &mut Vec<String>, taken: &mut HashSet<String>, p: StateId, q: StateId| {
            let mut name = format!("{}.{}", self.states[p], other.states[q]);
            while !taken.insert(name.clone()) {
                name.push('\'');
            }
            names.push(name);
        };
        let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let start = (self.initial, other.initial);
        index.insert(start, 0);
        push_name(&mut names, &mut taken, start.0, start.1);
        let mut queue = vec![start];
        let mut transitions = BTreeSet::new();
        let mut finals = BTreeSet::new();
        while let Some((p, q)) = queue.pop() {
            let id = index[&(p, q)];
            if self.finals.contains(&p) && other.finals.contains(&q) {
                finals.insert(id);
            }
            for &(p1, a, b, p2) in &self.transitions {
                if p1 != p {
                    continue;
                }
                if let Some(rs) = by_state_in.get(&(q, b)) {
                    for &(c, q2) in rs {
                        let target = match index.entry((p2, q2)) {
                            std::collections::hash_map::Entry::Occupied(e) => *e.get(),
                            std::collections::hash_map::Entry::Vacant(e) => {
                                let id = names.len();
                                e.insert(id);
                                push_name(&mut names, &mut taken, p2, q2);
                                queue.push((p2, q2));
                                id
                            }
                        };
                        transitions.insert((id, a, c, target));
                    }
                }
            }
        }
        if finals.is_empty() {
            // Empty relation: keep an unreachable final placeholder.
            let f = *self.finals.iter().next().expect("non-empty by invariant");
            let g = *other.finals.iter().next().expect("non-empty by invariant");
            push_name(&mut names, &mut taken, f, g);
            finals.insert(names.len() - 1);
        }
        SynchronousTransducer::new(self.alphabet.clone(), names, 0, finals, transitions)
    }

    /// All words paired with `w` when `w` is fixed on the given tape, i.e.
    /// the image of `w` under the relation (fixed right tape) or under its
    /// inverse (fixed left tape). Enumeration is capped by `cap`.
    pub fn apply(&self, w: &[SymbolId], fixed: Tape, cap: usize) -> Result<BTreeSet<Word>> {
        let n = w.len();
        let matches = |a: SymbolId, b: SymbolId, pos: usize| -> Option<SymbolId> {
            match fixed {
                // (x, w) ∈ R: transition output must spell w, collect inputs.
                Tape::Right => (b == w[pos]).then_some(a),
                // (w, y) ∈ R: transition input must spell w, collect outputs.
                Tape::Left => (a == w[pos]).then_some(b),
            }
        };
        // Backward pass: which states at layer i can still reach a final at
        // layer n while matching the fixed tape.
        let mut productive: Vec<HashSet<StateId>> = vec![HashSet::new(); n + 1];
        productive[n] = self.finals.iter().copied().collect();
        for layer in (0..n).rev() {
            let mut cur = HashSet::new();
            for &(p, a, b, q) in &self.transitions {
                if matches(a, b, layer).is_some() && productive[layer + 1].contains(&q) {
                    cur.insert(p);
                }
            }
            productive[layer] = cur;
        }
        let mut frontier: BTreeMap<Word, BTreeSet<StateId>> = BTreeMap::new();
        if productive[0].contains(&self.initial) || n == 0 {
            frontier.insert(Vec::new(), [self.initial].into_iter().collect());
        }
        for layer in 0..n {
            let mut next: BTreeMap<Word, BTreeSet<StateId>> = BTreeMap::new();
            for (prefix, states) in &frontier {
                for &(p, a, b, q) in &self.transitions {
                    if !states.contains(&p) || !productive[layer + 1].contains(&q) {
                        continue;
                    }
                    if let Some(out) = matches(a, b, layer) {
                        let mut word = prefix.clone();
                        word.push(out);
                        next.entry(word).or_default().insert(q);
                        if next.len() > cap {
                            return Err(Error::CapExceeded { cap });
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(frontier
            .into_iter()
            .filter(|(_, states)| states.iter().any(|q| self.finals.contains(q)))
            .map(|(word, _)| word)
            .collect())
    }

    /// The image `R L = {x | (x, y) ∈ R for some y ∈ L}` of a word set,
    /// following the left-tape convention of the seed calculus.
    pub fn relation_image(&self, set: &WordSet, cap: usize) -> Result<WordSet> {
        let mut out = WordSet::empty(set.length());
        let mut total = 0usize;
        for y in set.iter() {
            for x in self.apply(y, Tape::Right, cap)? {
                if out.insert(x)? {
                    total += 1;
                    if total > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exhaustive set of accepted pairs of length exactly `n`. The empty
    /// pair is accepted iff the initial state is final.
    pub fn enumerate_pairs(&self, n: usize, cap: usize) -> Result<BTreeSet<(Word, Word)>> {
        let mut productive: Vec<HashSet<StateId>> = vec![HashSet::new(); n + 1];
        productive[n] = self.finals.iter().copied().collect();
        for layer in (0..n).rev() {
            let mut cur = HashSet::new();
            for &(p, _, _, q) in &self.transitions {
                if productive[layer + 1].contains(&q) {
                    cur.insert(p);
                }
            }
            productive[layer] = cur;
        }
        let mut frontier: BTreeMap<(Word, Word), BTreeSet<StateId>> = BTreeMap::new();
        if productive[0].contains(&self.initial) || n == 0 {
            frontier.insert((Vec::new(), Vec::new()), [self.initial].into_iter().collect());
        }
        for layer in 0..n {
            let mut next: BTreeMap<(Word, Word), BTreeSet<StateId>> = BTreeMap::new();
            for ((u, w), states) in &frontier {
                for &(p, a, b, q) in &self.transitions {
                    if !states.contains(&p) || !productive[layer + 1].contains(&q) {
                        continue;
                    }
                    let mut u2 = u.clone();
                    let mut w2 = w.clone();
                    u2.push(a);
                    w2.push(b);
                    next.entry((u2, w2)).or_default().insert(q);
                    if next.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                }
            }
            frontier = next;
        }
        Ok(frontier
            .into_iter()
            .filter(|(_, states)| states.iter().any(|q| self.finals.contains(q)))
            .map(|(pair, _)| pair)
            .collect())
    }

    /// Projects one tape away, leaving the automaton of words appearing on
    /// the kept tape (the domain for `Tape::Left`, the range for
    /// `Tape::Right`).
    pub fn project(&self, keep: Tape) -> WordAutomaton {
        let transitions: BTreeSet<(StateId, SymbolId, StateId)> = self
            .transitions
            .iter()
            .map(|&(p, a, b, q)| match keep {
                Tape::Left => (p, a, q),
                Tape::Right => (p, b, q),
            })
            .collect();
        WordAutomaton::new(
            self.alphabet.clone(),
            self.states.clone(),
            self.initial,
            self.finals.clone(),
            transitions,
            false,
        )
        .expect("projection preserves validity")
    }

    /// Rebuilds the transducer over a larger alphabet, remapping symbol ids
    /// through `map` (indexed by the old ids).
    pub fn embed(&self, alphabet: AlphabetRef, map: &[SymbolId]) -> Result<SynchronousTransducer> {
        let transitions: BTreeSet<_> = self
            .transitions
            .iter()
            .map(|&(p, a, b, q)| (p, map[a], map[b], q))
            .collect();
        SynchronousTransducer::new(
            alphabet,
            self.states.clone(),
            self.initial,
            self.finals.clone(),
            transitions,
        )
    }
}
