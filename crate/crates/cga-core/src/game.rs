//! Consensus game acceptors.
//!
//! A game is played on a finite graph: Input picks a path from the initial
//! state to a final state, each player privately observes the labels of the
//! interior states under their own observation function, and both must then
//! announce the same decision, which has to be admissible at the final state.
//!
//! This module provides validation, play enumeration, the two
//! indistinguishability relations and their join (connectedness), safe
//! decisions, the game-level compositions (union, decision inversion,
//! characterizer, empty-language gadget) and strategy verification.

use crate::alphabet::{Alphabet, AlphabetRef, SymbolId, Word, HASH};
use crate::automaton::StateId;
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

/// A yes-or-no decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Decision {
    Zero,
    One,
}

impl Decision {
    pub fn value(self) -> u8 {
        match self {
            Decision::Zero => 0,
            Decision::One => 1,
        }
    }

    pub fn from_value(v: u8) -> Option<Decision> {
        match v {
            0 => Some(Decision::Zero),
            1 => Some(Decision::One),
            _ => None,
        }
    }

    pub fn flip(self) -> Decision {
        match self {
            Decision::Zero => Decision::One,
            Decision::One => Decision::Zero,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// A non-empty subset of `{0, 1}`: the decisions admissible at a final state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DecisionSet {
    zero: bool,
    one: bool,
}

impl DecisionSet {
    pub const ZERO: DecisionSet = DecisionSet { zero: true, one: false };
    pub const ONE: DecisionSet = DecisionSet { zero: false, one: true };
    pub const BOTH: DecisionSet = DecisionSet { zero: true, one: true };
    pub const NONE: DecisionSet = DecisionSet { zero: false, one: false };

    pub fn contains(self, d: Decision) -> bool {
        match d {
            Decision::Zero => self.zero,
            Decision::One => self.one,
        }
    }

    pub fn is_empty(self) -> bool {
        !self.zero && !self.one
    }

    pub fn intersect(self, other: DecisionSet) -> DecisionSet {
        DecisionSet { zero: self.zero && other.zero, one: self.one && other.one }
    }

    /// Swaps `{0}` and `{1}`; `{0,1}` is unchanged.
    pub fn invert(self) -> DecisionSet {
        DecisionSet { zero: self.one, one: self.zero }
    }

    /// This set extended by one decision.
    pub fn with(self, d: Decision) -> DecisionSet {
        match d {
            Decision::Zero => DecisionSet { zero: true, ..self },
            Decision::One => DecisionSet { one: true, ..self },
        }
    }

    pub fn iter(self) -> impl Iterator<Item = Decision> {
        [Decision::Zero, Decision::One].into_iter().filter(move |d| self.contains(*d))
    }
}

impl fmt::Display for DecisionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// A state of a game graph with its two observation labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    pub name: String,
    pub obs1: SymbolId,
    pub obs2: SymbolId,
}

/// A consensus game acceptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameGraph {
    alphabet: AlphabetRef,
    states: Vec<GameState>,
    edges: BTreeSet<(StateId, StateId)>,
    successors: Vec<Vec<StateId>>,
    initial: StateId,
    admissible: BTreeMap<StateId, DecisionSet>,
    hash: SymbolId,
}

/// A single structural defect found by [`GameGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    InitialHasIncoming { from: String },
    InitialObservationNotHash,
    FinalObservationNotHash { state: String },
    EmptyAdmissibleSet { state: String },
    AdmissibleOnNonFinal { state: String },
    MissingAdmissibleSet { state: String },
    StateOffAllPlays { state: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InitialHasIncoming { from } => {
                write!(f, "initial state has an incoming edge from `{from}`")
            }
            Violation::InitialObservationNotHash => {
                write!(f, "initial state must be observed as `#` by both players")
            }
            Violation::FinalObservationNotHash { state } => {
                write!(f, "final state `{state}` must be observed as `#` by both players")
            }
            Violation::EmptyAdmissibleSet { state } => {
                write!(f, "final state `{state}` admits no decision")
            }
            Violation::AdmissibleOnNonFinal { state } => {
                write!(f, "non-final state `{state}` carries admissible decisions")
            }
            Violation::MissingAdmissibleSet { state } => {
                write!(f, "final state `{state}` has no admissible decisions assigned")
            }
            Violation::StateOffAllPlays { state } => {
                write!(f, "state `{state}` lies on no path from the initial state to a final state")
            }
        }
    }
}

/// A play: the full state sequence from the initial state to a final state.
/// Keeping states (not just observations) makes witnesses replayable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Play(pub Vec<StateId>);

impl Play {
    /// Interior states: everything except the initial and the final state.
    pub fn interior(&self) -> &[StateId] {
        &self.0[1..self.0.len() - 1]
    }

    pub fn final_state(&self) -> StateId {
        *self.0.last().expect("plays are non-empty")
    }

    /// Number of observed symbols, i.e. interior states.
    pub fn observation_len(&self) -> usize {
        self.0.len() - 2
    }
}

/// Which player's observation function to use.
pub type Player = u8;

/// The outcome of checking a strategy table against a game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Winning,
    /// A play on which the table disagrees between players or picks an
    /// inadmissible decision.
    Refuted(Play),
}

impl VerifyOutcome {
    pub fn is_winning(&self) -> bool {
        matches!(self, VerifyOutcome::Winning)
    }
}

/// Safe decisions at a play, together with replayable witnesses for the
/// excluded ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SafetyReport {
    pub play: Play,
    pub safe: DecisionSet,
    /// For each excluded decision, a connected play where it is inadmissible.
    pub witnesses: Vec<(Decision, Play)>,
}

/// A finitely truncated observation-based strategy: one decision per
/// observation word of length at most `maxlen`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyTable {
    maxlen: usize,
    entries: BTreeMap<Word, Decision>,
}

impl StrategyTable {
    pub fn new(maxlen: usize, entries: BTreeMap<Word, Decision>) -> Self {
        StrategyTable { maxlen, entries }
    }

    pub fn maxlen(&self) -> usize {
        self.maxlen
    }

    pub fn get(&self, w: &[SymbolId]) -> Option<Decision> {
        self.entries.get(w).copied()
    }

    pub fn set(&mut self, w: Word, d: Decision) {
        self.entries.insert(w, d);
    }

    pub fn flip(&mut self, w: &[SymbolId]) -> bool {
        if let Some(d) = self.entries.get_mut(w) {
            *d = d.flip();
            true
        } else {
            false
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, Decision)> {
        self.entries.iter().map(|(w, d)| (w, *d))
    }
}

impl GameGraph {
    /// Builds a game graph. Structural integrity (indices in range, alphabet
    /// containing `#`) is enforced here; the definitional invariants are
    /// checked separately by [`GameGraph::validate`] so that all defects can
    /// be reported at once.
    pub fn new(
        alphabet: AlphabetRef,
        states: Vec<GameState>,
        initial: StateId,
        edges: impl IntoIterator<Item = (StateId, StateId)>,
        admissible: impl IntoIterator<Item = (StateId, DecisionSet)>,
    ) -> Result<Self> {
        let hash = alphabet
            .id(HASH)
            .ok_or_else(|| Error::InvalidSpec("game alphabet must contain `#`".into()))?;
        let n = states.len();
        let mut seen_names = HashSet::new();
        for s in &states {
            if !seen_names.insert(&s.name) {
                return Err(Error::InvalidSpec(format!("duplicate state name `{}`", s.name)));
            }
        }
        let check = |q: StateId| -> Result<()> {
            if q >= n {
                return Err(Error::InvalidSpec(format!("state index {q} out of range")));
            }
            Ok(())
        };
        check(initial)?;
        for s in &states {
            if s.obs1 >= alphabet.len() || s.obs2 >= alphabet.len() {
                return Err(Error::SymbolNotInAlphabet(format!(
                    "observation of state `{}`",
                    s.name
                )));
            }
        }
        let edges: BTreeSet<(StateId, StateId)> = edges.into_iter().collect();
        let mut successors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            check(u)?;
            check(v)?;
            successors[u].push(v);
        }
        let admissible: BTreeMap<StateId, DecisionSet> = admissible.into_iter().collect();
        for &q in admissible.keys() {
            check(q)?;
        }
        Ok(GameGraph { alphabet, states, edges, successors, initial, admissible, hash })
    }

    pub fn alphabet(&self) -> &AlphabetRef {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn state(&self, q: StateId) -> &GameState {
        &self.states[q]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s.name == name)
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn edges(&self) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn successors(&self, q: StateId) -> &[StateId] {
        &self.successors[q]
    }

    /// Final states: non-initial states with no outgoing edge.
    pub fn is_final(&self, q: StateId) -> bool {
        q != self.initial && self.successors[q].is_empty()
    }

    pub fn final_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.states.len()).filter(|&q| self.is_final(q))
    }

    pub fn admissible(&self, q: StateId) -> Option<DecisionSet> {
        self.admissible.get(&q).copied()
    }

    pub fn admissible_entries(&self) -> impl Iterator<Item = (StateId, DecisionSet)> + '_ {
        self.admissible.iter().map(|(&q, &d)| (q, d))
    }

    /// Checks the definitional invariants and reports every defect found.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for &(u, v) in &self.edges {
            if v == self.initial {
                out.push(Violation::InitialHasIncoming { from: self.states[u].name.clone() });
            }
        }
        let v0 = &self.states[self.initial];
        if v0.obs1 != self.hash || v0.obs2 != self.hash {
            out.push(Violation::InitialObservationNotHash);
        }
        for q in 0..self.states.len() {
            let name = || self.states[q].name.clone();
            if self.is_final(q) {
                if self.states[q].obs1 != self.hash || self.states[q].obs2 != self.hash {
                    out.push(Violation::FinalObservationNotHash { state: name() });
                }
                match self.admissible.get(&q) {
                    None => out.push(Violation::MissingAdmissibleSet { state: name() }),
                    Some(d) if d.is_empty() => {
                        out.push(Violation::EmptyAdmissibleSet { state: name() })
                    }
                    _ => {}
                }
            } else if self.admissible.contains_key(&q) {
                out.push(Violation::AdmissibleOnNonFinal { state: name() });
            }
        }
        // Interior states must lie on some play. Finals may be disconnected
        // (they then never occur in a play), the initial state may be bare.
        let mut reach: HashSet<StateId> = [self.initial].into_iter().collect();
        let mut queue = vec![self.initial];
        while let Some(p) = queue.pop() {
            for &q in &self.successors[p] {
                if reach.insert(q) {
                    queue.push(q);
                }
            }
        }
        let mut live: HashSet<StateId> = self.final_states().collect();
        let mut queue: Vec<StateId> = live.iter().copied().collect();
        while let Some(q) = queue.pop() {
            for &(p, q1) in &self.edges {
                if q1 == q && live.insert(p) {
                    queue.push(p);
                }
            }
        }
        for q in 0..self.states.len() {
            if q != self.initial
                && !self.is_final(q)
                && !(reach.contains(&q) && live.contains(&q))
            {
                out.push(Violation::StateOffAllPlays { state: self.states[q].name.clone() });
            }
        }
        out
    }

    /// Validates and turns violations into an error.
    pub fn require_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            let text: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            Err(Error::InvalidGame(text.join("; ")))
        }
    }

    /// Checks that a state sequence is a play of this game.
    pub fn check_play(&self, play: &Play) -> Result<()> {
        let seq = &play.0;
        if seq.len() < 2 {
            return Err(Error::InvalidPlay("a play has at least two states".into()));
        }
        if seq[0] != self.initial {
            return Err(Error::InvalidPlay("plays start at the initial state".into()));
        }
        for w in seq.windows(2) {
            if !self.edges.contains(&(w[0], w[1])) {
                return Err(Error::InvalidPlay(format!(
                    "missing edge {} -> {}",
                    self.states[w[0]].name, self.states[w[1]].name
                )));
            }
        }
        if !self.is_final(*seq.last().unwrap()) {
            return Err(Error::InvalidPlay("plays end at a final state".into()));
        }
        for &q in &seq[1..seq.len() - 1] {
            if self.is_final(q) {
                return Err(Error::InvalidPlay("interior states must be non-final".into()));
            }
        }
        Ok(())
    }

    /// All plays whose observation sequence has length exactly `n`.
    pub fn enumerate_plays(&self, n: usize, cap: usize) -> Result<Vec<Play>> {
        let mut out = Vec::new();
        let mut stack = vec![self.initial];
        self.plays_rec(n, cap, &mut stack, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn plays_rec(
        &self,
        remaining: usize,
        cap: usize,
        stack: &mut Vec<StateId>,
        out: &mut Vec<Play>,
    ) -> Result<()> {
        let here = *stack.last().unwrap();
        if remaining == 0 {
            for &q in &self.successors[here] {
                if self.is_final(q) {
                    let mut seq = stack.clone();
                    seq.push(q);
                    out.push(Play(seq));
                    if out.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                }
            }
            return Ok(());
        }
        for &q in &self.successors[here] {
            if !self.is_final(q) {
                stack.push(q);
                self.plays_rec(remaining - 1, cap, stack, out)?;
                stack.pop();
            }
        }
        Ok(())
    }

    /// The observation sequence of a play for one player: interior-state
    /// labels, excluding the initial and the final state.
    pub fn observation(&self, play: &Play, player: Player) -> Result<Word> {
        self.check_play(play)?;
        Ok(self.observation_unchecked(play, player))
    }

    fn observation_unchecked(&self, play: &Play, player: Player) -> Word {
        play.interior()
            .iter()
            .map(|&q| match player {
                1 => self.states[q].obs1,
                _ => self.states[q].obs2,
            })
            .collect()
    }

    /// True iff both plays look the same to the given player.
    pub fn indistinguishable(&self, a: &Play, b: &Play, player: Player) -> Result<bool> {
        Ok(self.observation(a, player)? == self.observation(b, player)?)
    }

    /// Partition of the plays of observation-length `n` into connectedness
    /// classes, i.e. the equivalence generated by the two per-player
    /// indistinguishability relations. Observations are letter-per-state, so
    /// connectivity never leaves a length class and the per-length partition
    /// is exact.
    pub fn connected_classes(&self, n: usize, cap: usize) -> Result<Vec<Vec<Play>>> {
        let plays = self.enumerate_plays(n, cap)?;
        let classes = self.partition(&plays);
        let mut grouped: BTreeMap<usize, Vec<Play>> = BTreeMap::new();
        for (i, play) in plays.iter().enumerate() {
            grouped.entry(classes[i]).or_default().push(play.clone());
        }
        Ok(grouped.into_values().collect())
    }

    /// Union-find over play indices, joining plays that share either
    /// observation word.
    fn partition(&self, plays: &[Play]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..plays.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for player in [1u8, 2u8] {
            let mut buckets: HashMap<Word, usize> = HashMap::new();
            for (i, play) in plays.iter().enumerate() {
                let w = self.observation_unchecked(play, player);
                match buckets.entry(w) {
                    std::collections::hash_map::Entry::Occupied(e) => {
                        let a = find(&mut parent, *e.get());
                        let b = find(&mut parent, i);
                        parent[a.max(b)] = a.min(b);
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(i);
                    }
                }
            }
        }
        (0..plays.len()).map(|i| find(&mut parent, i)).collect()
    }

    /// The decisions safe at `play`: those admissible at every play in its
    /// connectedness class. Witness plays are recorded for the excluded ones.
    pub fn safe_decisions(&self, play: &Play, cap: usize) -> Result<SafetyReport> {
        self.check_play(play)?;
        let n = play.observation_len();
        let plays = self.enumerate_plays(n, cap)?;
        let classes = self.partition(&plays);
        let me = plays
            .iter()
            .position(|p| p == play)
            .expect("a checked play occurs in the enumeration of its length");
        let mut safe = DecisionSet::BOTH;
        let mut witnesses = Vec::new();
        for (i, other) in plays.iter().enumerate() {
            if classes[i] != classes[me] {
                continue;
            }
            let omega = self.admissible(other.final_state()).unwrap_or(DecisionSet::NONE);
            for d in DecisionSet::BOTH.iter() {
                if safe.contains(d) && !omega.contains(d) {
                    witnesses.push((d, other.clone()));
                }
            }
            safe = safe.intersect(omega);
        }
        Ok(SafetyReport { play: play.clone(), safe, witnesses })
    }

    /// Inverts the admissible decisions: `{0}` and `{1}` swap, `{0,1}` stays.
    pub fn invert_decisions(&self) -> GameGraph {
        let admissible = self.admissible.iter().map(|(&q, d)| (q, d.invert())).collect();
        GameGraph { admissible, ..self.clone() }
    }

    /// Disjoint union with the initial states identified. Observation
    /// symbols are shared by name (never renamed); state names of `other`
    /// are renamed on collision.
    pub fn union(&self, other: &GameGraph) -> Result<GameGraph> {
        self.require_valid()?;
        other.require_valid()?;
        let (merged, map_a, map_b) = self.alphabet.union(&other.alphabet);
        let merged = Arc::new(merged);
        let mut names: HashSet<String> = self.states.iter().map(|s| s.name.clone()).collect();
        let mut states: Vec<GameState> = self
            .states
            .iter()
            .map(|s| GameState { name: s.name.clone(), obs1: map_a[s.obs1], obs2: map_a[s.obs2] })
            .collect();
        // Map other's states into the combined graph; its initial state is
        // identified with ours.
        let mut remap: HashMap<StateId, StateId> = HashMap::new();
        remap.insert(other.initial, self.initial);
        for (q, s) in other.states.iter().enumerate() {
            if q == other.initial {
                continue;
            }
            let mut name = s.name.clone();
            while !names.insert(name.clone()) {
                name.push('\'');
            }
            remap.insert(q, states.len());
            states.push(GameState { name, obs1: map_b[s.obs1], obs2: map_b[s.obs2] });
        }
        let mut edges = self.edges.clone();
        for &(u, v) in &other.edges {
            edges.insert((remap[&u], remap[&v]));
        }
        let mut admissible = self.admissible.clone();
        for (&q, &d) in &other.admissible {
            admissible.insert(remap[&q], d);
        }
        GameGraph::new(merged, states, self.initial, edges, admissible)
    }

    /// Builds the game that characterises a language from a game covering it
    /// and a game covering its complement: union with the complement game's
    /// decisions inverted. The observation alphabets may only share the
    /// terminal alphabet (and `#`).
    pub fn characterizer(&self, complement_cover: &GameGraph, sigma: &Alphabet) -> Result<GameGraph> {
        let shared: Vec<&str> = self
            .alphabet
            .names()
            .filter(|n| complement_cover.alphabet.contains(n))
            .filter(|n| *n != HASH && !sigma.contains(n))
            .collect();
        if !shared.is_empty() {
            return Err(Error::AlphabetOverlap(shared.join(", ")));
        }
        self.union(&complement_cover.invert_decisions())
    }

    /// Words of `sigma`-length 1..=`n` that are not the observation of any
    /// play for one of the players. Games used as acceptors are expected to
    /// omit none; violations are reported as data, not errors.
    pub fn omitted_observation_words(
        &self,
        sigma: &Alphabet,
        n: usize,
        cap: usize,
    ) -> Result<Vec<Word>> {
        let embed = sigma.embedding(&self.alphabet)?;
        let mut missing = Vec::new();
        for len in 1..=n {
            let mut seen1: HashSet<Word> = HashSet::new();
            let mut seen2: HashSet<Word> = HashSet::new();
            for play in self.enumerate_plays(len, cap)? {
                seen1.insert(self.observation_unchecked(&play, 1));
                seen2.insert(self.observation_unchecked(&play, 2));
            }
            let mut word = vec![0usize; len];
            loop {
                let mapped: Word = word.iter().map(|&i| embed[i]).collect();
                if !seen1.contains(&mapped) || !seen2.contains(&mapped) {
                    missing.push(mapped);
                    if missing.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                }
                // Next word over sigma, odometer style.
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
        Ok(missing)
    }

    /// Checks a strategy table: for every play of observation-length at most
    /// `n`, both players' entries must agree and be admissible. The table
    /// must be defined on every observation that occurs.
    pub fn verify_strategy(
        &self,
        table: &StrategyTable,
        n: usize,
        cap: usize,
    ) -> Result<VerifyOutcome> {
        for len in 0..=n {
            for play in self.enumerate_plays(len, cap)? {
                let w1 = self.observation_unchecked(&play, 1);
                let w2 = self.observation_unchecked(&play, 2);
                let d1 = table
                    .get(&w1)
                    .ok_or_else(|| Error::PartialStrategy(self.alphabet.format_word(&w1)))?;
                let d2 = table
                    .get(&w2)
                    .ok_or_else(|| Error::PartialStrategy(self.alphabet.format_word(&w2)))?;
                let omega = self.admissible(play.final_state()).unwrap_or(DecisionSet::NONE);
                if d1 != d2 || !omega.contains(d1) {
                    return Ok(VerifyOutcome::Refuted(play));
                }
            }
        }
        Ok(VerifyOutcome::Winning)
    }
}

/// The game that characterises the empty language over `sigma`: a clique of
/// states observed identically by both players, every play ending in a final
/// state that only admits decision 0.
pub fn empty_language_game(sigma: &Alphabet) -> Result<GameGraph> {
    if sigma.is_empty() {
        return Err(Error::InvalidSpec("empty-language gadget needs a non-empty alphabet".into()));
    }
    let hash_alpha = Alphabet::new([HASH])?;
    let (alphabet, map_sigma, _) = sigma.union(&hash_alpha);
    let alphabet = Arc::new(alphabet);
    let hash = alphabet.id(HASH).unwrap();
    let mut states = vec![GameState { name: "v0".into(), obs1: hash, obs2: hash }];
    let mut edges = BTreeSet::new();
    let letter_states: Vec<StateId> = sigma
        .ids()
        .map(|s| {
            let id = states.len();
            states.push(GameState {
                name: format!("u:{}", sigma.name(s)),
                obs1: map_sigma[s],
                obs2: map_sigma[s],
            });
            id
        })
        .collect();
    let final_state = states.len();
    states.push(GameState { name: "f".into(), obs1: hash, obs2: hash });
    for &u in &letter_states {
        edges.insert((0, u));
        edges.insert((u, final_state));
        for &v in &letter_states {
            edges.insert((u, v));
        }
    }
    GameGraph::new(alphabet, states, 0, edges, [(final_state, DecisionSet::ZERO)])
}
