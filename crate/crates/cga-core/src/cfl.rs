//! Dyck seeds, coding cycles, flower seeds, and a context-free membership
//! oracle built from an explicit Dyck grammar intersected with a regular
//! language and relabelled through a homomorphism.

use crate::alphabet::{Alphabet, AlphabetRef, SymbolId, Word, BOX};
use crate::automaton::{StateId, WordAutomaton};
use crate::error::{Error, Result};
use crate::seed::Seed;
use crate::transducer::SynchronousTransducer;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Arc;

/// Prefix marking the neutralised copy of a letter.
pub const NEUTRAL_PREFIX: &str = "n:";

/// Prefix used to keep coding-cycle target letters apart from the base
/// alphabet when they would otherwise collide.
pub const TRACK_PREFIX: &str = "t:";

pub fn neutralised(name: &str) -> String {
    format!("{NEUTRAL_PREFIX}{name}")
}

fn pair_symbol(a: &str, x: &str) -> String {
    format!("{a}/{x}")
}

/// Bracket kinds and neutral symbols of a Dyck language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckSpec {
    brackets: Vec<(String, String)>,
    neutrals: Vec<String>,
}

impl DyckSpec {
    pub fn new<S: Into<String> + Clone>(
        brackets: &[(S, S)],
        neutrals: &[S],
    ) -> Result<Self> {
        if brackets.is_empty() {
            return Err(Error::InvalidSpec("at least one bracket kind is required".into()));
        }
        let brackets: Vec<(String, String)> = brackets
            .iter()
            .map(|(o, c)| (o.clone().into(), c.clone().into()))
            .collect();
        let neutrals: Vec<String> = neutrals.iter().map(|c| c.clone().into()).collect();
        let mut seen = HashSet::new();
        for name in brackets
            .iter()
            .flat_map(|(o, c)| [o.as_str(), c.as_str()])
            .chain(neutrals.iter().map(|c| c.as_str()))
        {
            if name == BOX {
                return Err(Error::InvalidSpec("`□` is reserved for the blank symbol".into()));
            }
            if !seen.insert(name) {
                return Err(Error::InvalidSpec(format!("symbol `{name}` used twice")));
            }
        }
        Ok(DyckSpec { brackets, neutrals })
    }

    /// `n` bracket kinds with conventional names: `[ ]`, `( )`, then `[k ]k`.
    pub fn with_pairs(n: usize, neutrals: &[&str]) -> Result<Self> {
        let mut brackets = Vec::new();
        for k in 1..=n {
            brackets.push(match k {
                1 => ("[".to_string(), "]".to_string()),
                2 => ("(".to_string(), ")".to_string()),
                _ => (format!("[{k}"), format!("]{k}")),
            });
        }
        DyckSpec::new(&brackets, &neutrals.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    }

    pub fn kinds(&self) -> usize {
        self.brackets.len()
    }

    pub fn brackets(&self) -> &[(String, String)] {
        &self.brackets
    }

    pub fn neutrals(&self) -> &[String] {
        &self.neutrals
    }

    /// The terminal alphabet Λ: all brackets, then the neutral symbols.
    pub fn lambda_alphabet(&self) -> Result<Alphabet> {
        Alphabet::new(
            self.brackets
                .iter()
                .flat_map(|(o, c)| [o.clone(), c.clone()])
                .chain(self.neutrals.iter().cloned()),
        )
    }

    /// The observation alphabet Γ = Λ ∪ {□}.
    pub fn gamma_alphabet(&self) -> Result<Alphabet> {
        Alphabet::new(
            self.brackets
                .iter()
                .flat_map(|(o, c)| [o.clone(), c.clone()])
                .chain(self.neutrals.iter().cloned())
                .chain([BOX.to_string()]),
        )
    }

    fn kind_of(&self, name: &str) -> Option<(usize, bool)> {
        for (k, (o, c)) in self.brackets.iter().enumerate() {
            if name == o {
                return Some((k, true));
            }
            if name == c {
                return Some((k, false));
            }
        }
        None
    }
}

/// The transducer that copies every letter and erases neutral symbols or
/// one innermost bracket pair per pass, replacing them with `□`.
pub fn dyck_transducer(spec: &DyckSpec) -> SynchronousTransducer {
    let alphabet = Arc::new(spec.gamma_alphabet().expect("spec symbols are valid"));
    let blank = alphabet.id(BOX).unwrap();
    let n = spec.kinds();
    let states: Vec<String> = (0..=n).map(|k| format!("q{k}")).collect();
    let mut transitions = BTreeSet::new();
    for a in alphabet.ids() {
        transitions.insert((0, a, a, 0));
    }
    for (k, (open, close)) in spec.brackets().iter().enumerate() {
        let q = k + 1;
        transitions.insert((q, blank, blank, q));
        transitions.insert((0, alphabet.id(open).unwrap(), blank, q));
        transitions.insert((q, alphabet.id(close).unwrap(), blank, 0));
    }
    for c in spec.neutrals() {
        transitions.insert((0, alphabet.id(c).unwrap(), blank, 0));
    }
    SynchronousTransducer::new(alphabet, states, 0, [0], transitions)
        .expect("the erasure transducer is structurally valid")
}

/// Per-kind excess membership: for each bracket kind, opening and closing
/// counts balance out and no prefix dips below zero. Symbols outside Λ are
/// rejected. Note that this literal counting definition does not constrain
/// how different kinds interleave; see [`nested_dyck_membership`].
pub fn dyck_membership(spec: &DyckSpec, alphabet: &Alphabet, w: &[SymbolId]) -> Result<bool> {
    let lambda: HashSet<&str> = spec
        .brackets
        .iter()
        .flat_map(|(o, c)| [o.as_str(), c.as_str()])
        .chain(spec.neutrals.iter().map(|s| s.as_str()))
        .collect();
    for &s in w {
        if !lambda.contains(alphabet.name(s)) {
            return Err(Error::SymbolNotInAlphabet(alphabet.name(s).into()));
        }
    }
    Ok(excess_balanced(spec, alphabet, w))
}

/// Per-kind excess membership over any alphabet; symbols that are not
/// brackets of the spec count as neutral.
pub fn dyck_membership_relaxed(spec: &DyckSpec, alphabet: &Alphabet, w: &[SymbolId]) -> bool {
    excess_balanced(spec, alphabet, w)
}

fn excess_balanced(spec: &DyckSpec, alphabet: &Alphabet, w: &[SymbolId]) -> bool {
    let mut excess = vec![0i64; spec.kinds()];
    for &s in w {
        if let Some((k, opening)) = spec.kind_of(alphabet.name(s)) {
            excess[k] += if opening { 1 } else { -1 };
            if excess[k] < 0 {
                return false;
            }
        }
    }
    excess.iter().all(|&e| e == 0)
}

/// Stack-based membership enforcing proper nesting across bracket kinds;
/// symbols that are not brackets of the spec count as neutral. This is the
/// language actually recognised by iterating the erasure transducer, which
/// removes one innermost pair at a time.
pub fn nested_dyck_membership(spec: &DyckSpec, alphabet: &Alphabet, w: &[SymbolId]) -> bool {
    let mut stack: Vec<usize> = Vec::new();
    for &s in w {
        match spec.kind_of(alphabet.name(s)) {
            Some((k, true)) => stack.push(k),
            Some((k, false)) => match stack.pop() {
                Some(top) if top == k => {}
                _ => return false,
            },
            None => {}
        }
    }
    stack.is_empty()
}

/// The Dyck seed `(R, □*)`: erasure transducer with the blank-star
/// accepting language and nothing rejected.
pub fn dyck_seed(spec: &DyckSpec) -> Result<Seed> {
    let relation = dyck_transducer(spec);
    let alphabet = relation.alphabet().clone();
    let blank = alphabet.id(BOX).unwrap();
    let acc = WordAutomaton::star(alphabet, &[blank]);
    Seed::covering(relation, acc)
}

/// A total letter-to-letter homomorphism between alphabets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: AlphabetRef,
    target: AlphabetRef,
    map: Vec<SymbolId>,
}

impl Homomorphism {
    pub fn new(source: AlphabetRef, target: AlphabetRef, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut map = vec![usize::MAX; source.len()];
        for &(from, to) in pairs {
            map[source.id_checked(from)?] = target.id_checked(to)?;
        }
        if let Some(missing) = map.iter().position(|&m| m == usize::MAX) {
            return Err(Error::InvalidSpec(format!(
                "homomorphism is not total: `{}` has no image",
                source.name(missing)
            )));
        }
        Ok(Homomorphism { source, target, map })
    }

    pub fn source(&self) -> &AlphabetRef {
        &self.source
    }

    pub fn target(&self) -> &AlphabetRef {
        &self.target
    }

    pub fn apply(&self, s: SymbolId) -> SymbolId {
        self.map[s]
    }

    pub fn apply_word(&self, w: &[SymbolId]) -> Word {
        w.iter().map(|&s| self.map[s]).collect()
    }
}

/// Extends a transducer with a coding cycle for `h`: a fresh final state
/// reads homomorphic images and writes diagonal track pairs, while every
/// original transition is duplicated across a second track that loops the
/// pre-image through unchanged. Target letters colliding with the base
/// alphabet are kept apart with a `t:` prefix.
pub fn add_coding_cycle(
    r: &SynchronousTransducer,
    h: &Homomorphism,
) -> Result<SynchronousTransducer> {
    let gamma = r.alphabet();
    let lambda = h.source();
    if !gamma.contains_all(lambda) {
        return Err(Error::InvalidSpec(
            "the homomorphism source must be part of the transducer alphabet".into(),
        ));
    }
    let sigma_names: Vec<String> = h
        .target()
        .names()
        .map(|name| {
            if gamma.contains(name) {
                format!("{TRACK_PREFIX}{name}")
            } else {
                name.to_string()
            }
        })
        .collect();
    let mut names: Vec<String> = sigma_names.clone();
    for a in gamma.ids() {
        for x in lambda.ids() {
            names.push(pair_symbol(gamma.name(a), lambda.name(x)));
        }
    }
    let alphabet = Arc::new(Alphabet::new(names)?);
    let pair_id = |a: SymbolId, x: SymbolId| -> SymbolId {
        alphabet.id(&pair_symbol(gamma.name(a), lambda.name(x))).unwrap()
    };
    let mut states: Vec<String> = (0..r.state_count()).map(|q| r.state_name(q).to_string()).collect();
    let mut coding_state_name = "qh".to_string();
    while states.contains(&coding_state_name) {
        coding_state_name.push('\'');
    }
    let qh = states.len();
    states.push(coding_state_name);
    let mut transitions = BTreeSet::new();
    for (p, a, b, q) in r.transitions() {
        for x in lambda.ids() {
            transitions.insert((p, pair_id(a, x), pair_id(b, x), q));
        }
    }
    for x in lambda.ids() {
        let image = alphabet.id(&sigma_names[h.apply(x)]).unwrap();
        let gamma_x = gamma.id(lambda.name(x)).unwrap();
        let diagonal = pair_id(gamma_x, x);
        transitions.insert((r.initial(), image, diagonal, qh));
        transitions.insert((qh, image, diagonal, qh));
    }
    let finals: Vec<StateId> = r.finals().chain([qh]).collect();
    SynchronousTransducer::new(alphabet, states, r.initial(), finals, transitions)
}

/// Restricts a coded Dyck transducer to terminal letters, diagonal pairs
/// `x/x` (renamed to `x`) and blank pairs `□/x` (renamed to `n:x`). The
/// result is the flower transducer of the construction; anything else is
/// rejected.
pub fn reduce_flower(
    rh: &SynchronousTransducer,
    h: &Homomorphism,
) -> Result<SynchronousTransducer> {
    let lambda = h.source();
    let coded = rh.alphabet();
    // Terminal letters may have been track-prefixed when they collided.
    let sigma_names: Vec<String> = h
        .target()
        .names()
        .map(|name| {
            if coded.contains(name) {
                name.to_string()
            } else {
                format!("{TRACK_PREFIX}{name}")
            }
        })
        .collect();
    for name in &sigma_names {
        if !coded.contains(name) {
            return Err(Error::NotACodedDyckTransducer);
        }
    }
    let mut names: Vec<String> = sigma_names.clone();
    names.extend(lambda.names().map(|x| x.to_string()));
    names.extend(lambda.names().map(neutralised));
    let alphabet = Arc::new(Alphabet::new(names)?);
    // Renaming of kept coded symbols into the reduced alphabet.
    let mut rename: HashMap<SymbolId, SymbolId> = HashMap::new();
    for name in &sigma_names {
        rename.insert(coded.id(name).unwrap(), alphabet.id(name).unwrap());
    }
    for x in lambda.names() {
        if let Some(diag) = coded.id(&pair_symbol(x, x)) {
            rename.insert(diag, alphabet.id(x).unwrap());
        }
        if let Some(blank) = coded.id(&pair_symbol(BOX, x)) {
            rename.insert(blank, alphabet.id(&neutralised(x)).unwrap());
        }
    }
    let transitions: BTreeSet<_> = rh
        .transitions()
        .filter_map(|(p, a, b, q)| Some((p, *rename.get(&a)?, *rename.get(&b)?, q)))
        .collect();
    let states: Vec<String> = (0..rh.state_count()).map(|q| rh.state_name(q).to_string()).collect();
    let reduced = SynchronousTransducer::new(
        alphabet,
        states,
        rh.initial(),
        rh.finals().collect::<Vec<_>>(),
        transitions,
    )?;
    if flower_shape(&reduced).is_none() {
        return Err(Error::NotACodedDyckTransducer);
    }
    Ok(reduced)
}

/// A structured flower seed: Dyck kinds, the coding homomorphism, and a
/// regular constraint over the neutralised copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowerSpec {
    dyck: DyckSpec,
    hom: Homomorphism,
    reg: WordAutomaton,
}

impl FlowerSpec {
    /// `hom` must map Λ (exactly the spec's bracket and neutral symbols) to
    /// the terminal alphabet; `reg` must range over the neutralised copies.
    pub fn new(dyck: DyckSpec, hom: Homomorphism, reg: WordAutomaton) -> Result<Self> {
        let lambda = dyck.lambda_alphabet()?;
        if *hom.source().as_ref() != lambda {
            return Err(Error::InvalidSpec(
                "homomorphism source must be the Dyck terminal alphabet".into(),
            ));
        }
        let marked: HashSet<String> = lambda.names().map(neutralised).collect();
        for name in reg.alphabet().names() {
            if !marked.contains(name) {
                return Err(Error::InvalidSpec(format!(
                    "constraint language symbol `{name}` is not a neutralised copy"
                )));
            }
        }
        Ok(FlowerSpec { dyck, hom, reg })
    }

    pub fn dyck(&self) -> &DyckSpec {
        &self.dyck
    }

    pub fn hom(&self) -> &Homomorphism {
        &self.hom
    }

    pub fn reg(&self) -> &WordAutomaton {
        &self.reg
    }
}

/// Builds the flower seed: reduced coded Dyck transducer plus the
/// constraint language embedded over the full flower alphabet.
pub fn build_flower(fs: &FlowerSpec) -> Result<Seed> {
    let base = dyck_transducer(&fs.dyck);
    let coded = add_coding_cycle(&base, &fs.hom)?;
    let reduced = reduce_flower(&coded, &fs.hom)?;
    let alphabet = reduced.alphabet().clone();
    let embed = fs.reg.alphabet().embedding(&alphabet)?;
    let acc = fs.reg.relabel(alphabet.clone(), &|s| embed[s])?;
    Seed::covering(reduced, acc)
}

struct FlowerShape {
    dyck: DyckSpec,
    hom: Homomorphism,
    marked_names: Vec<String>,
}

/// Structural match of a transducer against the flower template. Returns
/// the recovered Dyck spec and homomorphism on success.
fn flower_shape(r: &SynchronousTransducer) -> Option<FlowerShape> {
    let alphabet = r.alphabet();
    let q0 = r.initial();
    let finals: BTreeSet<StateId> = r.finals().collect();
    if finals.len() != 2 || !finals.contains(&q0) {
        return None;
    }
    let qh = *finals.iter().find(|&&q| q != q0)?;
    // Coding transitions determine Λ and h.
    let mut hom_pairs: BTreeMap<SymbolId, SymbolId> = BTreeMap::new();
    let mut sigma_ids: BTreeSet<SymbolId> = BTreeSet::new();
    for (p, a, b, q) in r.transitions() {
        if q == qh {
            if p != q0 && p != qh {
                return None;
            }
            match hom_pairs.entry(b) {
                std::collections::btree_map::Entry::Occupied(e) if *e.get() != a => return None,
                std::collections::btree_map::Entry::Occupied(_) => {}
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(a);
                }
            }
            sigma_ids.insert(a);
        } else if p == qh {
            return None;
        }
    }
    if hom_pairs.is_empty() {
        return None;
    }
    let lambda_ids: Vec<SymbolId> = hom_pairs.keys().copied().collect();
    // Erasing transitions at q0 determine the marking and the petals.
    let mut marked_of: BTreeMap<SymbolId, SymbolId> = BTreeMap::new();
    let mut neutrals: Vec<SymbolId> = Vec::new();
    let mut opener_of_petal: BTreeMap<StateId, (SymbolId, SymbolId)> = BTreeMap::new();
    let mut closer_of_petal: BTreeMap<StateId, (SymbolId, SymbolId)> = BTreeMap::new();
    for (p, a, b, q) in r.transitions() {
        if a == b || q == qh || p == qh {
            continue;
        }
        // An erasing transition: input a, output its marked copy b.
        if p == q0 && q == q0 {
            if marked_of.insert(a, b).is_some() {
                return None;
            }
            neutrals.push(a);
        } else if p == q0 {
            if marked_of.insert(a, b).is_some() || opener_of_petal.insert(q, (a, b)).is_some() {
                return None;
            }
        } else if q == q0 {
            if marked_of.insert(a, b).is_some() || closer_of_petal.insert(p, (a, b)).is_some() {
                return None;
            }
        } else {
            return None;
        }
    }
    // Every Λ letter is erased exactly once, and the petals pair up.
    if marked_of.keys().copied().collect::<Vec<_>>() != lambda_ids {
        return None;
    }
    let petals: BTreeSet<StateId> = (0..r.state_count())
        .filter(|&q| q != q0 && q != qh)
        .collect();
    if opener_of_petal.keys().copied().collect::<BTreeSet<_>>() != petals
        || closer_of_petal.keys().copied().collect::<BTreeSet<_>>() != petals
    {
        return None;
    }
    // Rebuild the expected transition set and demand an exact match.
    let marked_ids: BTreeSet<SymbolId> = marked_of.values().copied().collect();
    if marked_ids.iter().any(|m| marked_of.contains_key(m)) {
        return None;
    }
    let mut expected: BTreeSet<(StateId, SymbolId, SymbolId, StateId)> = BTreeSet::new();
    for &x in lambda_ids.iter().chain(marked_ids.iter()) {
        expected.insert((q0, x, x, q0));
    }
    for &petal in &petals {
        for &m in &marked_ids {
            expected.insert((petal, m, m, petal));
        }
        let (open, open_marked) = opener_of_petal[&petal];
        let (close, close_marked) = closer_of_petal[&petal];
        expected.insert((q0, open, open_marked, petal));
        expected.insert((petal, close, close_marked, q0));
    }
    for &c in &neutrals {
        expected.insert((q0, c, marked_of[&c], q0));
    }
    for (&x, &image) in &hom_pairs {
        expected.insert((q0, image, x, qh));
        expected.insert((qh, image, x, qh));
    }
    let actual: BTreeSet<_> = r.transitions().collect();
    if actual != expected {
        return None;
    }
    // The alphabet must partition into Σ, Λ and the marked copies, and the
    // markings must follow the `n:` naming.
    if sigma_ids.iter().any(|s| marked_of.contains_key(s) || marked_ids.contains(s)) {
        return None;
    }
    let mut all: BTreeSet<SymbolId> = sigma_ids.clone();
    all.extend(lambda_ids.iter().copied());
    all.extend(marked_ids.iter().copied());
    if all.len() != alphabet.len() {
        return None;
    }
    for (&x, &m) in &marked_of {
        if alphabet.name(m) != neutralised(alphabet.name(x)) {
            return None;
        }
    }
    // Petals ordered by state id give the bracket kinds.
    let brackets: Vec<(String, String)> = petals
        .iter()
        .map(|petal| {
            (
                alphabet.name(opener_of_petal[petal].0).to_string(),
                alphabet.name(closer_of_petal[petal].0).to_string(),
            )
        })
        .collect();
    neutrals.sort_unstable();
    let neutral_names: Vec<String> =
        neutrals.iter().map(|&c| alphabet.name(c).to_string()).collect();
    let dyck = DyckSpec::new(
        &brackets.iter().map(|(o, c)| (o.as_str(), c.as_str())).collect::<Vec<_>>(),
        &neutral_names.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
    )
    .ok()?;
    let lambda = Arc::new(dyck.lambda_alphabet().ok()?);
    let sigma = Arc::new(
        Alphabet::new(sigma_ids.iter().map(|&s| alphabet.name(s).to_string())).ok()?,
    );
    let pairs: Vec<(String, String)> = hom_pairs
        .iter()
        .map(|(&x, &s)| (alphabet.name(x).to_string(), alphabet.name(s).to_string()))
        .collect();
    let pair_refs: Vec<(&str, &str)> =
        pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let hom = Homomorphism::new(lambda.clone(), sigma, &pair_refs).ok()?;
    let marked_names = lambda.names().map(neutralised).collect();
    Some(FlowerShape { dyck, hom, marked_names })
}

/// Does the transducer alone have the flower structure?
pub fn is_flower_transducer(r: &SynchronousTransducer) -> bool {
    flower_shape(r).is_some()
}

/// Structural recognition of flower seeds. Besides the transducer shape,
/// the accepting language must range over the neutralised copies only (its
/// useful transitions, after trimming) and the rejecting language must be
/// empty; otherwise the seed is not a flower.
pub fn is_flower(seed: &Seed) -> Option<FlowerSpec> {
    let shape = flower_shape(seed.relation())?;
    if !seed.rej().is_empty() {
        return None;
    }
    let alphabet = seed.alphabet();
    let marked: HashSet<SymbolId> =
        shape.marked_names.iter().filter_map(|name| alphabet.id(name)).collect();
    let trimmed = seed.acc().trim();
    if !trimmed.used_symbols().iter().all(|s| marked.contains(s)) {
        return None;
    }
    let marked_alphabet = Arc::new(Alphabet::new(shape.marked_names.clone()).ok()?);
    let narrow: HashMap<SymbolId, SymbolId> = shape
        .marked_names
        .iter()
        .filter_map(|name| Some((alphabet.id(name)?, marked_alphabet.id(name)?)))
        .collect();
    let reg = trimmed.relabel(marked_alphabet, &|s| narrow[&s]).ok()?;
    FlowerSpec::new(shape.dyck, shape.hom, reg).ok()
}

/// A context-free grammar; the CNF flag asserts binary-or-terminal bodies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammar {
    nonterminals: Vec<String>,
    terminals: AlphabetRef,
    productions: BTreeSet<(usize, GrammarBody)>,
    start: usize,
    cnf: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GrammarBody {
    Binary(usize, usize),
    Terminal(SymbolId),
}

impl Grammar {
    pub fn new(
        nonterminals: Vec<String>,
        terminals: AlphabetRef,
        productions: impl IntoIterator<Item = (usize, GrammarBody)>,
        start: usize,
    ) -> Result<Self> {
        let productions: BTreeSet<_> = productions.into_iter().collect();
        let n = nonterminals.len();
        for &(lhs, body) in &productions {
            let ok = match body {
                GrammarBody::Binary(x, y) => lhs < n && x < n && y < n,
                GrammarBody::Terminal(t) => lhs < n && t < terminals.len(),
            };
            if !ok {
                return Err(Error::InvalidSpec("production references unknown symbol".into()));
            }
        }
        if start >= n {
            return Err(Error::InvalidSpec("unknown start symbol".into()));
        }
        Ok(Grammar { nonterminals, terminals, productions, start, cnf: true })
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    pub fn terminals(&self) -> &AlphabetRef {
        &self.terminals
    }

    pub fn productions(&self) -> impl Iterator<Item = (usize, GrammarBody)> + '_ {
        self.productions.iter().copied()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_cnf(&self) -> bool {
        self.cnf
    }

    pub fn production_count(&self) -> usize {
        self.productions.len()
    }

    /// Drops unproductive and unreachable nonterminals (keeping the start
    /// symbol). The language is unchanged.
    pub fn trim(&self) -> Grammar {
        let mut productive: HashSet<usize> = HashSet::new();
        let mut changed = true;
        while changed {
            changed = false;
            for &(lhs, body) in &self.productions {
                if productive.contains(&lhs) {
                    continue;
                }
                let ok = match body {
                    GrammarBody::Terminal(_) => true,
                    GrammarBody::Binary(x, y) => productive.contains(&x) && productive.contains(&y),
                };
                if ok {
                    productive.insert(lhs);
                    changed = true;
                }
            }
        }
        let mut reachable: HashSet<usize> = [self.start].into();
        let mut queue = vec![self.start];
        while let Some(nt) = queue.pop() {
            for &(lhs, body) in &self.productions {
                if lhs != nt {
                    continue;
                }
                if let GrammarBody::Binary(x, y) = body {
                    for z in [x, y] {
                        if productive.contains(&z) && reachable.insert(z) {
                            queue.push(z);
                        }
                    }
                }
            }
        }
        let keep: Vec<usize> = (0..self.nonterminals.len())
            .filter(|nt| *nt == self.start || (productive.contains(nt) && reachable.contains(nt)))
            .collect();
        let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &nt)| (nt, i)).collect();
        let useful =
            |nt: &usize| productive.contains(nt) && reachable.contains(nt);
        let productions: BTreeSet<_> = self
            .productions
            .iter()
            .filter(|(lhs, body)| {
                useful(lhs)
                    && match body {
                        GrammarBody::Terminal(_) => true,
                        GrammarBody::Binary(x, y) => useful(x) && useful(y),
                    }
            })
            .map(|&(lhs, body)| {
                let body = match body {
                    GrammarBody::Terminal(t) => GrammarBody::Terminal(t),
                    GrammarBody::Binary(x, y) => GrammarBody::Binary(remap[&x], remap[&y]),
                };
                (remap[&lhs], body)
            })
            .collect();
        Grammar {
            nonterminals: keep.iter().map(|&nt| self.nonterminals[nt].clone()).collect(),
            terminals: self.terminals.clone(),
            productions,
            start: remap[&self.start],
            cnf: self.cnf,
        }
    }
}

/// CYK membership for CNF grammars. The empty word is always rejected,
/// matching the convention that acceptor languages exclude it.
pub fn cyk_membership(grammar: &Grammar, w: &[SymbolId]) -> Result<bool> {
    if !grammar.is_cnf() {
        return Err(Error::NotCnf);
    }
    let n = w.len();
    if n == 0 {
        return Ok(false);
    }
    for &s in w {
        if s >= grammar.terminals.len() {
            return Err(Error::SymbolNotInAlphabet(format!("id {s}")));
        }
    }
    // table[len-1][i]: nonterminals deriving w[i .. i+len]
    let mut table: Vec<Vec<HashSet<usize>>> = vec![vec![HashSet::new(); n]; n];
    for i in 0..n {
        for &(lhs, body) in &grammar.productions {
            if body == GrammarBody::Terminal(w[i]) {
                table[0][i].insert(lhs);
            }
        }
    }
    for len in 2..=n {
        for i in 0..=n - len {
            for split in 1..len {
                for &(lhs, body) in &grammar.productions {
                    if let GrammarBody::Binary(x, y) = body {
                        if table[split - 1][i].contains(&x)
                            && table[len - split - 1][i + split].contains(&y)
                        {
                            table[len - 1][i].insert(lhs);
                        }
                    }
                }
            }
        }
    }
    Ok(table[n - 1][0].contains(&grammar.start))
}

/// The context-free oracle for a flower seed: an explicit CNF grammar for
/// the proper-nesting Dyck language over Λ, intersected with the (unmarked)
/// constraint language by the product construction on grammar and
/// automaton, then relabelled through the coding homomorphism.
pub fn flower_cfg(fs: &FlowerSpec) -> Result<Grammar> {
    let lambda = fs.hom.source().clone();
    let sigma = fs.hom.target().clone();
    let spec = &fs.dyck;

    // CNF grammar of the non-empty Dyck language over Λ.
    // S is a non-empty block sequence, a block being a neutral letter or a
    // bracket pair with an optional nested sequence.
    let mut nts: Vec<String> = vec!["S".into(), "B".into()];
    let s = 0usize;
    let b = 1usize;
    let mut productions: Vec<(usize, GrammarBody)> = vec![(s, GrammarBody::Binary(b, s))];
    let fresh = |nts: &mut Vec<String>, name: String| -> usize {
        nts.push(name);
        nts.len() - 1
    };
    for (k, (open, close)) in spec.brackets().iter().enumerate() {
        let o = fresh(&mut nts, format!("O{k}"));
        let c = fresh(&mut nts, format!("C{k}"));
        let d = fresh(&mut nts, format!("D{k}"));
        let open_id = lambda.id_checked(open)?;
        let close_id = lambda.id_checked(close)?;
        productions.push((o, GrammarBody::Terminal(open_id)));
        productions.push((c, GrammarBody::Terminal(close_id)));
        productions.push((d, GrammarBody::Binary(s, c)));
        for lhs in [s, b] {
            productions.push((lhs, GrammarBody::Binary(o, c)));
            productions.push((lhs, GrammarBody::Binary(o, d)));
        }
    }
    for neutral in spec.neutrals() {
        let id = lambda.id_checked(neutral)?;
        productions.push((s, GrammarBody::Terminal(id)));
        productions.push((b, GrammarBody::Terminal(id)));
    }

    // Unmark the constraint language so it speaks about Λ.
    let unmark: HashMap<SymbolId, SymbolId> = fs
        .reg
        .alphabet()
        .names()
        .enumerate()
        .map(|(i, name)| {
            let bare = name.strip_prefix(NEUTRAL_PREFIX).expect("validated at construction");
            Ok((i, lambda.id_checked(bare)?))
        })
        .collect::<Result<_>>()?;
    let constraint = fs.reg.relabel(lambda.clone(), &|m| unmark[&m])?;

    // Product of grammar and automaton on state-indexed triples.
    let states = constraint.state_count();
    let triple = |p: usize, nt: usize, q: usize| -> usize { (p * nts.len() + nt) * states + q };
    let mut product_nts: Vec<String> = Vec::with_capacity(states * nts.len() * states);
    for p in 0..states {
        for nt in &nts {
            for q in 0..states {
                product_nts.push(format!(
                    "({},{nt},{})",
                    constraint.state_name(p),
                    constraint.state_name(q)
                ));
            }
        }
    }
    // A fresh start symbol collects the accepting triples.
    let start = product_nts.len();
    product_nts.push("S0".into());
    let mut product_prods: Vec<(usize, GrammarBody)> = Vec::new();
    for &(lhs, body) in &productions {
        match body {
            GrammarBody::Terminal(t) => {
                for (p, a, q) in constraint.transitions() {
                    if a == t {
                        // Relabel through h while building the product.
                        product_prods
                            .push((triple(p, lhs, q), GrammarBody::Terminal(fs.hom.apply(t))));
                    }
                }
            }
            GrammarBody::Binary(x, y) => {
                for p in 0..states {
                    for r in 0..states {
                        for q in 0..states {
                            product_prods.push((
                                triple(p, lhs, q),
                                GrammarBody::Binary(triple(p, x, r), triple(r, y, q)),
                            ));
                        }
                    }
                }
            }
        }
    }
    // Start productions: copies of each accepting triple's bodies.
    let initial = constraint.initial();
    let final_states: Vec<usize> = constraint.finals().collect();
    for &(lhs, body) in &product_prods.clone() {
        for &f in &final_states {
            if lhs == triple(initial, s, f) {
                product_prods.push((start, body));
            }
        }
    }
    let grammar = Grammar::new(product_nts, sigma, product_prods, start)?;
    Ok(grammar.trim())
}

/// The identity seed `((∩Σ*), L_acc, L_rej)` for two disjoint regular
/// languages over a shared alphabet.
pub fn identity_seed(acc: WordAutomaton, rej: WordAutomaton) -> Result<Seed> {
    if acc.alphabet() != rej.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let relation = SynchronousTransducer::identity(acc.alphabet().clone());
    let seed = Seed::new(relation, acc, rej)?;
    seed.check_disjoint()?;
    Ok(seed)
}
