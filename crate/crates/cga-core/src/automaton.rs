//! Nondeterministic word automata with the standard toolkit: membership,
//! product intersection, union, subset determinization, completion,
//! complement, emptiness, and capped per-length word enumeration.

use crate::alphabet::{AlphabetRef, SymbolId, Word, WordSet};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

/// Index of a state within an automaton or transducer.
pub type StateId = usize;

/// Appends primes until the name is new; keeps generated state names
/// unique even when user names collide with the construction's scheme.
pub(crate) fn unique_name(taken: &mut HashSet<String>, base: String) -> String {
    let mut name = base;
    while !taken.insert(name.clone()) {
        name.push('\'');
    }
    name
}

/// A finite automaton over words. Transitions may be nondeterministic;
/// the `deterministic` flag records that at most one transition exists per
/// state and symbol (checked at construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordAutomaton {
    alphabet: AlphabetRef,
    states: Vec<String>,
    transitions: BTreeSet<(StateId, SymbolId, StateId)>,
    initial: StateId,
    finals: BTreeSet<StateId>,
    deterministic: bool,
}

impl WordAutomaton {
    pub fn new<S: Into<String>>(
        alphabet: AlphabetRef,
        states: Vec<S>,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (StateId, SymbolId, StateId)>,
        deterministic: bool,
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
        for &f in &finals {
            check(f)?;
        }
        let transitions: BTreeSet<(StateId, SymbolId, StateId)> = transitions.into_iter().collect();
        let mut seen = HashSet::new();
        for &(p, a, q) in &transitions {
            check(p)?;
            check(q)?;
            if a >= alphabet.len() {
                return Err(Error::SymbolNotInAlphabet(format!("id {a}")));
            }
            if deterministic && !seen.insert((p, a)) {
                return Err(Error::InvalidSpec(format!(
                    "two transitions from `{}` on `{}` in an automaton marked deterministic",
                    states[p],
                    alphabet.name(a)
                )));
            }
        }
        Ok(WordAutomaton { alphabet, states, transitions, initial, finals, deterministic })
    }

    /// Convenience constructor resolving state and symbol names.
    pub fn from_names(
        alphabet: AlphabetRef,
        states: &[&str],
        initial: &str,
        finals: &[&str],
        transitions: &[(&str, &str, &str)],
        deterministic: bool,
    ) -> Result<Self> {
        let index: HashMap<&str, StateId> =
            states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let st = |s: &str| -> Result<StateId> {
            index.get(s).copied().ok_or_else(|| Error::InvalidSpec(format!("unknown state `{s}`")))
        };
        let trans: Result<Vec<_>> = transitions
            .iter()
            .map(|&(p, a, q)| Ok((st(p)?, alphabet.id_checked(a)?, st(q)?)))
            .collect();
        WordAutomaton::new(
            alphabet.clone(),
            states.to_vec(),
            st(initial)?,
            finals.iter().map(|f| st(f)).collect::<Result<Vec<_>>>()?,
            trans?,
            deterministic,
        )
    }

    /// An automaton with a single non-accepting state: the empty language.
    pub fn empty_language(alphabet: AlphabetRef) -> Self {
        WordAutomaton {
            alphabet,
            states: vec!["e".into()],
            transitions: BTreeSet::new(),
            initial: 0,
            finals: BTreeSet::new(),
            deterministic: true,
        }
    }

    /// A single accepting state with a loop on every given symbol: the
    /// language `symbols*`.
    pub fn star(alphabet: AlphabetRef, symbols: &[SymbolId]) -> Self {
        let transitions = symbols.iter().map(|&a| (0, a, 0)).collect();
        WordAutomaton {
            alphabet,
            states: vec!["s".into()],
            transitions,
            initial: 0,
            finals: [0].into_iter().collect(),
            deterministic: true,
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

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, SymbolId, StateId)> + '_ {
        self.transitions.iter().copied()
    }

    pub fn is_deterministic(&self) -> bool {
        self.deterministic
    }

    fn step(&self, from: &BTreeSet<StateId>, a: SymbolId) -> BTreeSet<StateId> {
        let mut next = BTreeSet::new();
        for &(p, b, q) in &self.transitions {
            if b == a && from.contains(&p) {
                next.insert(q);
            }
        }
        next
    }

    /// True iff some run on `w` ends in a final state.
    pub fn accepts(&self, w: &[SymbolId]) -> Result<bool> {
        for &a in w {
            if a >= self.alphabet.len() {
                return Err(Error::SymbolNotInAlphabet(format!("id {a}")));
            }
        }
        let mut current: BTreeSet<StateId> = [self.initial].into_iter().collect();
        for &a in w {
            current = self.step(&current, a);
            if current.is_empty() {
                return Ok(false);
            }
        }
        Ok(current.iter().any(|q| self.finals.contains(q)))
    }

    /// Product construction: the intersection language.
    pub fn intersect(&self, other: &WordAutomaton) -> Result<WordAutomaton> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut names = Vec::new();
        let mut taken = HashSet::new();
        let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut queue = vec![(self.initial, other.initial)];
        index.insert((self.initial, other.initial), 0);
        names.push(unique_name(
            &mut taken,
            format!("{}&{}", self.states[self.initial], other.states[other.initial]),
        ));
        let mut transitions = BTreeSet::new();
        let mut finals = BTreeSet::new();
        while let Some((p, q)) = queue.pop() {
            let id = index[&(p, q)];
            if self.finals.contains(&p) && other.finals.contains(&q) {
                finals.insert(id);
            }
            for &(p1, a, p2) in &self.transitions {
                if p1 != p {
                    continue;
                }
                for &(q1, b, q2) in &other.transitions {
                    if q1 != q || a != b {
                        continue;
                    }
                    let target = match index.entry((p2, q2)) {
                        std::collections::hash_map::Entry::Occupied(e) => *e.get(),
                        std::collections::hash_map::Entry::Vacant(e) => {
                            let id = names.len();
                            e.insert(id);
                            names.push(unique_name(
                                &mut taken,
                                format!("{}&{}", self.states[p2], other.states[q2]),
                            ));
                            queue.push((p2, q2));
                            id
                        }
                    };
                    transitions.insert((id, a, target));
                }
            }
        }
        WordAutomaton::new(self.alphabet.clone(), names, 0, finals, transitions, false)
    }

    /// Union of languages: disjoint copies behind a fresh initial state that
    /// replicates both initial states' transitions.
    pub fn union(&self, other: &WordAutomaton) -> Result<WordAutomaton> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let offset_a = 1;
        let offset_b = 1 + self.states.len();
        let mut names = vec!["u0".to_string()];
        names.extend(self.states.iter().map(|s| format!("l:{s}")));
        names.extend(other.states.iter().map(|s| format!("r:{s}")));
        let mut transitions = BTreeSet::new();
        for &(p, a, q) in &self.transitions {
            transitions.insert((p + offset_a, a, q + offset_a));
            if p == self.initial {
                transitions.insert((0, a, q + offset_a));
            }
        }
        for &(p, a, q) in &other.transitions {
            transitions.insert((p + offset_b, a, q + offset_b));
            if p == other.initial {
                transitions.insert((0, a, q + offset_b));
            }
        }
        let mut finals: BTreeSet<StateId> = self.finals.iter().map(|&f| f + offset_a).collect();
        finals.extend(other.finals.iter().map(|&f| f + offset_b));
        if self.finals.contains(&self.initial) || other.finals.contains(&other.initial) {
            finals.insert(0);
        }
        WordAutomaton::new(self.alphabet.clone(), names, 0, finals, transitions, false)
    }

    /// Subset construction. The result is deterministic but not necessarily
    /// complete; see [`WordAutomaton::complete`].
    pub fn determinize(&self) -> WordAutomaton {
        let start: BTreeSet<StateId> = [self.initial].into_iter().collect();
        let mut index: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
        let mut names = Vec::new();
        let mut taken = HashSet::new();
        let mut sets = Vec::new();
        let set_name = |set: &BTreeSet<StateId>| -> String {
            let mut parts: Vec<&str> = set.iter().map(|&q| self.states[q].as_str()).collect();
            parts.sort_unstable();
            format!("{{{}}}", parts.join("+"))
        };
        index.insert(start.clone(), 0);
        names.push(unique_name(&mut taken, set_name(&start)));
        sets.push(start);
        let mut transitions = BTreeSet::new();
        let mut finals = BTreeSet::new();
        let mut i = 0;
        while i < sets.len() {
            let current = sets[i].clone();
            if current.iter().any(|q| self.finals.contains(q)) {
                finals.insert(i);
            }
            for a in self.alphabet.ids() {
                let next = self.step(&current, a);
                if next.is_empty() {
                    continue;
                }
                let target = match index.entry(next.clone()) {
                    std::collections::hash_map::Entry::Occupied(e) => *e.get(),
                    std::collections::hash_map::Entry::Vacant(e) => {
                        let id = names.len();
                        e.insert(id);
                        names.push(unique_name(&mut taken, set_name(&next)));
                        sets.push(next);
                        id
                    }
                };
                transitions.insert((i, a, target));
            }
            i += 1;
        }
        WordAutomaton::new(self.alphabet.clone(), names, 0, finals, transitions, true)
            .expect("subset construction yields a valid automaton")
    }

    /// Adds a non-accepting sink so every state has a transition on every
    /// symbol. Preserves the deterministic flag.
    pub fn complete(&self) -> WordAutomaton {
        let mut missing = Vec::new();
        for p in 0..self.states.len() {
            for a in self.alphabet.ids() {
                if !self.transitions.iter().any(|&(p1, a1, _)| p1 == p && a1 == a) {
                    missing.push((p, a));
                }
            }
        }
        if missing.is_empty() {
            return self.clone();
        }
        let sink = self.states.len();
        let mut names = self.states.clone();
        let mut taken: HashSet<String> = names.iter().cloned().collect();
        names.push(unique_name(&mut taken, "sink".into()));
        let mut transitions = self.transitions.clone();
        for (p, a) in missing {
            transitions.insert((p, a, sink));
        }
        for a in self.alphabet.ids() {
            transitions.insert((sink, a, sink));
        }
        WordAutomaton::new(
            self.alphabet.clone(),
            names,
            self.initial,
            self.finals.clone(),
            transitions,
            self.deterministic,
        )
        .expect("completion preserves validity")
    }

    /// Complement language, via determinization and completion.
    pub fn complement(&self) -> WordAutomaton {
        let dfa = self.determinize().complete();
        let finals: BTreeSet<StateId> =
            (0..dfa.states.len()).filter(|q| !dfa.finals.contains(q)).collect();
        WordAutomaton { finals, ..dfa }
    }

    /// True iff no final state is reachable.
    pub fn is_empty(&self) -> bool {
        let mut seen: HashSet<StateId> = [self.initial].into_iter().collect();
        let mut queue = vec![self.initial];
        while let Some(p) = queue.pop() {
            if self.finals.contains(&p) {
                return false;
            }
            for &(p1, _, q) in &self.transitions {
                if p1 == p && seen.insert(q) {
                    queue.push(q);
                }
            }
        }
        true
    }

    /// All accepted words of length exactly `n`, or `CapExceeded` if more
    /// than `cap` distinct prefixes arise during enumeration.
    pub fn enumerate_words(&self, n: usize, cap: usize) -> Result<WordSet> {
        // Backward productivity per layer keeps dead prefixes out of the map.
        let mut productive = vec![HashSet::<StateId>::new(); n + 1];
        productive[n] = self.finals.iter().copied().collect();
        for layer in (0..n).rev() {
            let next = &productive[layer + 1];
            let mut cur = HashSet::new();
            for &(p, _, q) in &self.transitions {
                if next.contains(&q) {
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
                for &(p, a, q) in &self.transitions {
                    if states.contains(&p) && productive[layer + 1].contains(&q) {
                        let mut w = prefix.clone();
                        w.push(a);
                        next.entry(w).or_default().insert(q);
                        if next.len() > cap {
                            return Err(Error::CapExceeded { cap });
                        }
                    }
                }
            }
            frontier = next;
        }
        let words = frontier
            .into_iter()
            .filter(|(_, states)| states.iter().any(|q| self.finals.contains(q)))
            .map(|(w, _)| w);
        WordSet::new(n, words)
    }

    /// Restricts to states that lie on some path from the initial state to a
    /// final state. The language is unchanged.
    pub fn trim(&self) -> WordAutomaton {
        let mut reach: HashSet<StateId> = [self.initial].into_iter().collect();
        let mut queue = vec![self.initial];
        while let Some(p) = queue.pop() {
            for &(p1, _, q) in &self.transitions {
                if p1 == p && reach.insert(q) {
                    queue.push(q);
                }
            }
        }
        let mut live: HashSet<StateId> = self.finals.iter().copied().collect();
        let mut queue: Vec<StateId> = live.iter().copied().collect();
        while let Some(q) = queue.pop() {
            for &(p, _, q1) in &self.transitions {
                if q1 == q && live.insert(p) {
                    queue.push(p);
                }
            }
        }
        let keep: Vec<StateId> = (0..self.states.len())
            .filter(|q| *q == self.initial || (reach.contains(q) && live.contains(q)))
            .collect();
        let remap: HashMap<StateId, StateId> =
            keep.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let useful = |q: &StateId| reach.contains(q) && live.contains(q);
        WordAutomaton {
            alphabet: self.alphabet.clone(),
            states: keep.iter().map(|&q| self.states[q].clone()).collect(),
            transitions: self
                .transitions
                .iter()
                .filter(|(p, _, q)| useful(p) && useful(q))
                .map(|&(p, a, q)| (remap[&p], a, remap[&q]))
                .collect(),
            initial: remap[&self.initial],
            finals: self.finals.iter().filter(|q| useful(q)).map(|q| remap[q]).collect(),
            deterministic: self.deterministic,
        }
    }

    /// The set of symbols appearing on transitions of the trimmed automaton,
    /// i.e. symbols that can actually occur in accepted words.
    pub fn used_symbols(&self) -> BTreeSet<SymbolId> {
        self.trim().transitions.iter().map(|&(_, a, _)| a).collect()
    }

    /// Rewrites every transition symbol through `map`, leaving the state
    /// structure unchanged. The new alphabet must cover the mapped ids.
    pub fn relabel(&self, alphabet: AlphabetRef, map: &dyn Fn(SymbolId) -> SymbolId) -> Result<WordAutomaton> {
        let transitions: BTreeSet<_> =
            self.transitions.iter().map(|&(p, a, q)| (p, map(a), q)).collect();
        WordAutomaton::new(
            alphabet,
            self.states.clone(),
            self.initial,
            self.finals.clone(),
            transitions,
            false,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use std::sync::Arc;

    fn ab() -> AlphabetRef {
        Arc::new(Alphabet::new(["a", "b"]).unwrap())
    }

    /// a*b*
    fn astar_bstar() -> WordAutomaton {
        let alpha = ab();
        WordAutomaton::from_names(
            alpha,
            &["p", "q"],
            "p",
            &["p", "q"],
            &[("p", "a", "p"), ("p", "b", "q"), ("q", "b", "q")],
            true,
        )
        .unwrap()
    }

    #[test]
    fn accepts_examples() {
        let m = astar_bstar();
        let alpha = m.alphabet().clone();
        assert!(m.accepts(&alpha.parse_word("aab").unwrap()).unwrap());
        assert!(!m.accepts(&alpha.parse_word("aba").unwrap()).unwrap());
        // empty run: initial state is final
        assert!(m.accepts(&[]).unwrap());
    }

    #[test]
    fn intersect_a_star_with_b_star_is_epsilon() {
        let alpha = ab();
        let astar = WordAutomaton::star(alpha.clone(), &[alpha.id("a").unwrap()]);
        let bstar = WordAutomaton::star(alpha.clone(), &[alpha.id("b").unwrap()]);
        let both = astar.intersect(&bstar).unwrap();
        assert!(both.accepts(&[]).unwrap());
        for n in 1..=4 {
            assert!(both.enumerate_words(n, 1000).unwrap().is_empty());
        }
    }

    #[test]
    fn determinize_and_union_agree_with_membership_up_to_6() {
        let alpha = ab();
        let a = alpha.id("a").unwrap();
        let b = alpha.id("b").unwrap();
        // Nondeterministic: words containing "ab".
        let contains_ab = WordAutomaton::new(
            alpha.clone(),
            vec!["0", "1", "2"],
            0,
            [2],
            [(0, a, 0), (0, b, 0), (0, a, 1), (1, b, 2), (2, a, 2), (2, b, 2)],
            false,
        )
        .unwrap();
        let dfa = contains_ab.determinize();
        assert!(dfa.is_deterministic());
        let union = contains_ab.union(&astar_bstar()).unwrap();
        for n in 0..=6 {
            let all = WordAutomaton::star(alpha.clone(), &[a, b]).enumerate_words(n, 10_000).unwrap();
            for w in all.iter() {
                assert_eq!(dfa.accepts(w).unwrap(), contains_ab.accepts(w).unwrap());
                assert_eq!(
                    union.accepts(w).unwrap(),
                    contains_ab.accepts(w).unwrap() || astar_bstar().accepts(w).unwrap()
                );
            }
        }
    }

    #[test]
    fn emptiness_and_complement() {
        let alpha = ab();
        let empty = WordAutomaton::empty_language(alpha.clone());
        assert!(empty.is_empty());
        let m = astar_bstar();
        assert!(!m.is_empty());
        let comp = m.complement();
        for n in 0..=6 {
            let all = WordAutomaton::star(alpha.clone(), &[0, 1]).enumerate_words(n, 10_000).unwrap();
            for w in all.iter() {
                assert_eq!(comp.accepts(w).unwrap(), !m.accepts(w).unwrap());
            }
        }
        assert!(m.intersect(&comp).unwrap().is_empty());
    }

    #[test]
    fn adversarial_state_names_stay_unique() {
        // The subset of {a, b} and the singleton of the state named "a+b"
        // would both be called "{a+b}".
        let alpha = ab();
        let x = alpha.id("a").unwrap();
        let y = alpha.id("b").unwrap();
        let m = WordAutomaton::new(
            alpha,
            vec!["q", "a", "b", "a+b"],
            0,
            [1, 3],
            [(0, x, 1), (0, x, 2), (0, y, 3)],
            false,
        )
        .unwrap();
        let dfa = m.determinize();
        let mut names: Vec<&str> = (0..dfa.state_count()).map(|q| dfa.state_name(q)).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), dfa.state_count());
        for n in 0..=2 {
            let words = WordAutomaton::star(m.alphabet().clone(), &[x, y])
                .enumerate_words(n, 100)
                .unwrap();
            for w in words.iter() {
                assert_eq!(dfa.accepts(w).unwrap(), m.accepts(w).unwrap());
            }
        }
    }

    #[test]
    fn enumerate_respects_cap() {
        let alpha = ab();
        let all = WordAutomaton::star(alpha, &[0, 1]);
        assert_eq!(all.enumerate_words(3, 100).unwrap().len(), 8);
        assert!(matches!(
            all.enumerate_words(10, 100),
            Err(Error::CapExceeded { cap: 100 })
        ));
    }
}
