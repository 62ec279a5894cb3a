//! The line-oriented document format: `key: value` headers followed by
//! bracketed sections holding one whitespace-separated record per line.
//!
//! Rendering always produces the canonical form — fixed header order,
//! sections in a fixed order, records sorted, single spaces — so
//! `render(parse(text))` normalises, and round-trips canonical files byte
//! for byte. Symbol names must not contain whitespace or commas, which the
//! core alphabet type already guarantees.

use cga_core::alphabet::{Alphabet, AlphabetRef, EPSILON};
use cga_core::automaton::WordAutomaton;
use cga_core::cfl::{DyckSpec, FlowerSpec, Grammar, GrammarBody, Homomorphism};
use cga_core::domino::DominoSystem;
use cga_core::game::{Decision, DecisionSet, GameGraph, GameState, StrategyTable};
use cga_core::seed::Seed;
use cga_core::transducer::SynchronousTransducer;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A parsed document of any supported kind.
#[derive(Debug, Clone)]
pub enum Document {
    Game(GameGraph),
    Transducer(SynchronousTransducer),
    Automaton(WordAutomaton),
    Domino(DominoSystem),
    Flower(FlowerSpec),
    StrategyTable(AlphabetRef, StrategyTable),
    Grammar(Grammar),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Game(_) => "game",
            Document::Transducer(_) => "transducer",
            Document::Automaton(_) => "automaton",
            Document::Domino(_) => "domino",
            Document::Flower(_) => "flower",
            Document::StrategyTable(..) => "strategy-table",
            Document::Grammar(_) => "grammar",
        }
    }
}

/// A parse or validation error, pointing at the offending line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for DocError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, DocError> {
    Err(DocError { line, message: message.into() })
}

fn core_err(line: usize, e: cga_core::Error) -> DocError {
    DocError { line, message: e.to_string() }
}

/// The fixed section vocabulary. Record lines are only mistakable for
/// section headers when a symbol is named like one of these, which the
/// reserved-name rules of alphabets make pointless but not impossible; the
/// headers win.
const SECTION_NAMES: &[&str] = &[
    "states",
    "edges",
    "admissible",
    "transitions",
    "horizontal",
    "vertical",
    "homomorphism",
    "m-states",
    "m-transitions",
    "entries",
    "nonterminals",
    "productions",
];

/// A record: its line number and whitespace-separated fields.
type Record = (usize, Vec<String>);

struct RawDocument {
    headers: Vec<(usize, String, String)>,
    sections: Vec<(usize, String, Vec<Record>)>,
}

impl RawDocument {
    fn parse(text: &str) -> Result<RawDocument, DocError> {
        let mut headers = Vec::new();
        let mut sections: Vec<(usize, String, Vec<Record>)> = Vec::new();
        let section_name = |line: &str| -> Option<String> {
            let name = line.strip_prefix('[')?.strip_suffix(']')?.trim();
            SECTION_NAMES.contains(&name).then(|| name.to_string())
        };
        for (i, raw_line) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw_line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = section_name(line) {
                sections.push((lineno, name, Vec::new()));
            } else if let Some(section) = sections.last_mut() {
                let fields: Vec<String> =
                    line.split_whitespace().map(|f| f.to_string()).collect();
                section.2.push((lineno, fields));
            } else if line.starts_with('[') {
                return err(lineno, format!("unknown section `{line}`"));
            } else if let Some((key, value)) = line.split_once(':') {
                headers.push((lineno, key.trim().to_string(), value.trim().to_string()));
            } else {
                return err(lineno, format!("expected `key: value`, found `{line}`"));
            }
        }
        Ok(RawDocument { headers, sections })
    }

    fn header(&self, key: &str) -> Result<(usize, &str), DocError> {
        self.headers
            .iter()
            .find(|(_, k, _)| k == key)
            .map(|(line, _, v)| (*line, v.as_str()))
            .ok_or(DocError { line: 1, message: format!("missing `{key}:` header") })
    }

    fn header_opt(&self, key: &str) -> Option<(usize, &str)> {
        self.headers
            .iter()
            .find(|(_, k, _)| k == key)
            .map(|(line, _, v)| (*line, v.as_str()))
    }

    fn section(&self, name: &str) -> Result<&[Record], DocError> {
        self.sections
            .iter()
            .find(|(_, n, _)| n == name)
            .map(|(_, _, records)| records.as_slice())
            .ok_or(DocError { line: 1, message: format!("missing `[{name}]` section") })
    }
}

fn split_list(value: &str) -> Vec<String> {
    value.split_whitespace().map(|s| s.to_string()).collect()
}

fn parse_alphabet(line: usize, value: &str) -> Result<AlphabetRef, DocError> {
    Alphabet::new(split_list(value)).map(Arc::new).map_err(|e| core_err(line, e))
}

struct StateIndex {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl StateIndex {
    fn from_records(records: &[Record]) -> Result<StateIndex, DocError> {
        let mut names = Vec::new();
        let mut index = BTreeMap::new();
        for (line, fields) in records {
            if fields.len() != 1 {
                return err(*line, "expected one state name per line");
            }
            if index.insert(fields[0].clone(), names.len()).is_some() {
                return err(*line, format!("duplicate state `{}`", fields[0]));
            }
            names.push(fields[0].clone());
        }
        Ok(StateIndex { names, index })
    }

    fn get(&self, line: usize, name: &str) -> Result<usize, DocError> {
        self.index
            .get(name)
            .copied()
            .ok_or(DocError { line, message: format!("unknown state `{name}`") })
    }
}

/// Parses one document of any kind.
pub fn parse_document(text: &str) -> Result<Document, DocError> {
    let raw = RawDocument::parse(text)?;
    let (kind_line, kind) = raw.header("kind")?;
    let (version_line, version) = raw.header("version")?;
    if version != "1" {
        return err(version_line, format!("unsupported version `{version}`"));
    }
    match kind {
        "game" => parse_game(&raw),
        "transducer" => parse_transducer(&raw),
        "automaton" => parse_automaton(&raw),
        "domino" => parse_domino(&raw),
        "flower" => parse_flower(&raw),
        "strategy-table" => parse_strategy_table(&raw),
        "grammar" => parse_grammar(&raw),
        other => err(kind_line, format!("unknown kind `{other}`")),
    }
}

fn parse_game(raw: &RawDocument) -> Result<Document, DocError> {
    let (alpha_line, alpha) = raw.header("alphabet")?;
    let alphabet = parse_alphabet(alpha_line, alpha)?;
    let mut names = Vec::new();
    let mut index = BTreeMap::new();
    let mut states = Vec::new();
    for (line, fields) in raw.section("states")? {
        let [name, obs1, obs2] = fields.as_slice() else {
            return err(*line, "expected `name obs1 obs2`");
        };
        if index.insert(name.clone(), names.len()).is_some() {
            return err(*line, format!("duplicate state `{name}`"));
        }
        names.push(name.clone());
        states.push(GameState {
            name: name.clone(),
            obs1: alphabet.id_checked(obs1).map_err(|e| core_err(*line, e))?,
            obs2: alphabet.id_checked(obs2).map_err(|e| core_err(*line, e))?,
        });
    }
    let (init_line, init) = raw.header("initial")?;
    let initial = *index
        .get(init)
        .ok_or(DocError { line: init_line, message: format!("unknown state `{init}`") })?;
    let mut edges = Vec::new();
    for (line, fields) in raw.section("edges")? {
        let [from, to] = fields.as_slice() else {
            return err(*line, "expected `from to`");
        };
        let get = |n: &str| {
            index
                .get(n)
                .copied()
                .ok_or(DocError { line: *line, message: format!("unknown state `{n}`") })
        };
        edges.push((get(from)?, get(to)?));
    }
    let mut admissible = Vec::new();
    for (line, fields) in raw.section("admissible")? {
        let (name, decisions) = fields
            .split_first()
            .ok_or(DocError { line: *line, message: "expected `state decisions…`".into() })?;
        let state = *index
            .get(name)
            .ok_or(DocError { line: *line, message: format!("unknown state `{name}`") })?;
        let mut set = DecisionSet::NONE;
        for d in decisions {
            match d.as_str() {
                "0" => set = set.with(Decision::Zero),
                "1" => set = set.with(Decision::One),
                other => return err(*line, format!("expected 0 or 1, found `{other}`")),
            }
        }
        admissible.push((state, set));
    }
    let game = GameGraph::new(alphabet, states, initial, edges, admissible)
        .map_err(|e| core_err(1, e))?;
    Ok(Document::Game(game))
}

fn parse_transducer(raw: &RawDocument) -> Result<Document, DocError> {
    let (alpha_line, alpha) = raw.header("alphabet")?;
    let alphabet = parse_alphabet(alpha_line, alpha)?;
    let states = StateIndex::from_records(raw.section("states")?)?;
    let (init_line, init) = raw.header("initial")?;
    let initial = states.get(init_line, init)?;
    let (finals_line, finals) = raw.header("finals")?;
    let finals: Vec<usize> = split_list(finals)
        .iter()
        .map(|f| states.get(finals_line, f))
        .collect::<Result<_, _>>()?;
    let mut transitions = Vec::new();
    for (line, fields) in raw.section("transitions")? {
        let [p, a, b, q] = fields.as_slice() else {
            return err(*line, "expected `from in out to`");
        };
        transitions.push((
            states.get(*line, p)?,
            alphabet.id_checked(a).map_err(|e| core_err(*line, e))?,
            alphabet.id_checked(b).map_err(|e| core_err(*line, e))?,
            states.get(*line, q)?,
        ));
    }
    let t = SynchronousTransducer::new(alphabet, states.names, initial, finals, transitions)
        .map_err(|e| core_err(1, e))?;
    Ok(Document::Transducer(t))
}

fn parse_automaton(raw: &RawDocument) -> Result<Document, DocError> {
    let (alpha_line, alpha) = raw.header("alphabet")?;
    let alphabet = parse_alphabet(alpha_line, alpha)?;
    let states = StateIndex::from_records(raw.section("states")?)?;
    let (init_line, init) = raw.header("initial")?;
    let initial = states.get(init_line, init)?;
    let (finals_line, finals) = raw.header("finals")?;
    let finals: Vec<usize> = split_list(finals)
        .iter()
        .map(|f| states.get(finals_line, f))
        .collect::<Result<_, _>>()?;
    let (det_line, det) = raw.header("deterministic")?;
    let deterministic = match det {
        "true" => true,
        "false" => false,
        other => return err(det_line, format!("expected true or false, found `{other}`")),
    };
    let mut transitions = Vec::new();
    for (line, fields) in raw.section("transitions")? {
        let [p, a, q] = fields.as_slice() else {
            return err(*line, "expected `from symbol to`");
        };
        transitions.push((
            states.get(*line, p)?,
            alphabet.id_checked(a).map_err(|e| core_err(*line, e))?,
            states.get(*line, q)?,
        ));
    }
    let a =
        WordAutomaton::new(alphabet, states.names, initial, finals, transitions, deterministic)
            .map_err(|e| core_err(1, e))?;
    Ok(Document::Automaton(a))
}

fn parse_domino(raw: &RawDocument) -> Result<Document, DocError> {
    let (dom_line, doms) = raw.header("dominoes")?;
    let dominoes = parse_alphabet(dom_line, doms)?;
    let (side_line, side) = raw.header("side")?;
    let side = dominoes.id_checked(side).map_err(|e| core_err(side_line, e))?;
    let (bottom_line, bottom) = raw.header("bottom")?;
    let bottom = dominoes.id_checked(bottom).map_err(|e| core_err(bottom_line, e))?;
    let pair_section = |name: &str| -> Result<Vec<(usize, usize)>, DocError> {
        raw.section(name)?
            .iter()
            .map(|(line, fields)| {
                let [d, e] = fields.as_slice() else {
                    return err(*line, "expected `domino domino`");
                };
                Ok((
                    dominoes.id_checked(d).map_err(|er| core_err(*line, er))?,
                    dominoes.id_checked(e).map_err(|er| core_err(*line, er))?,
                ))
            })
            .collect()
    };
    let horizontal = pair_section("horizontal")?;
    let vertical = pair_section("vertical")?;
    let system = DominoSystem::new(dominoes, horizontal, vertical, side, bottom)
        .map_err(|e| core_err(1, e))?;
    Ok(Document::Domino(system))
}

fn parse_flower(raw: &RawDocument) -> Result<Document, DocError> {
    let (br_line, brackets) = raw.header("brackets")?;
    let bracket_names = split_list(brackets);
    if bracket_names.is_empty() || bracket_names.len() % 2 != 0 {
        return err(br_line, "expected an even, non-empty list: open close open close …");
    }
    let pairs: Vec<(String, String)> = bracket_names
        .chunks(2)
        .map(|chunk| (chunk[0].clone(), chunk[1].clone()))
        .collect();
    let neutrals =
        raw.header_opt("neutrals").map(|(_, v)| split_list(v)).unwrap_or_default();
    let dyck = DyckSpec::new(&pairs, &neutrals).map_err(|e| core_err(br_line, e))?;
    let lambda = Arc::new(dyck.lambda_alphabet().map_err(|e| core_err(br_line, e))?);
    let (sigma_line, sigma) = raw.header("sigma")?;
    let sigma = parse_alphabet(sigma_line, sigma)?;
    let mut hom_pairs = Vec::new();
    for (line, fields) in raw.section("homomorphism")? {
        let [from, to] = fields.as_slice() else {
            return err(*line, "expected `letter image`");
        };
        hom_pairs.push((from.clone(), to.clone()));
    }
    let pair_refs: Vec<(&str, &str)> =
        hom_pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let hom =
        Homomorphism::new(lambda.clone(), sigma, &pair_refs).map_err(|e| core_err(1, e))?;
    let marked = Arc::new(
        Alphabet::new(lambda.names().map(cga_core::cfl::neutralised))
            .map_err(|e| core_err(1, e))?,
    );
    let states = StateIndex::from_records(raw.section("m-states")?)?;
    let (init_line, init) = raw.header("m-initial")?;
    let initial = states.get(init_line, init)?;
    let (finals_line, finals) = raw.header("m-finals")?;
    let finals: Vec<usize> = split_list(finals)
        .iter()
        .map(|f| states.get(finals_line, f))
        .collect::<Result<_, _>>()?;
    let mut transitions = Vec::new();
    for (line, fields) in raw.section("m-transitions")? {
        let [p, a, q] = fields.as_slice() else {
            return err(*line, "expected `from symbol to`");
        };
        transitions.push((
            states.get(*line, p)?,
            marked.id_checked(a).map_err(|e| core_err(*line, e))?,
            states.get(*line, q)?,
        ));
    }
    let reg = WordAutomaton::new(marked, states.names, initial, finals, transitions, false)
        .map_err(|e| core_err(1, e))?;
    let flower = FlowerSpec::new(dyck, hom, reg).map_err(|e| core_err(1, e))?;
    Ok(Document::Flower(flower))
}

fn parse_strategy_table(raw: &RawDocument) -> Result<Document, DocError> {
    let (alpha_line, alpha) = raw.header("alphabet")?;
    let alphabet = parse_alphabet(alpha_line, alpha)?;
    let (maxlen_line, maxlen) = raw.header("maxlen")?;
    let maxlen: usize = maxlen
        .parse()
        .map_err(|_| DocError { line: maxlen_line, message: "maxlen must be a number".into() })?;
    let mut entries = BTreeMap::new();
    for (line, fields) in raw.section("entries")? {
        let [word, decision] = fields.as_slice() else {
            return err(*line, "expected `word decision`");
        };
        let word = alphabet.parse_word(word).map_err(|e| core_err(*line, e))?;
        let decision = match decision.as_str() {
            "0" => Decision::Zero,
            "1" => Decision::One,
            other => return err(*line, format!("expected 0 or 1, found `{other}`")),
        };
        entries.insert(word, decision);
    }
    Ok(Document::StrategyTable(alphabet, StrategyTable::new(maxlen, entries)))
}

fn parse_grammar(raw: &RawDocument) -> Result<Document, DocError> {
    let (term_line, terms) = raw.header("terminals")?;
    let terminals = parse_alphabet(term_line, terms)?;
    let nts = StateIndex::from_records(raw.section("nonterminals")?)?;
    let (start_line, start) = raw.header("start")?;
    let start = nts.get(start_line, start)?;
    let (cnf_line, cnf) = raw.header("cnf")?;
    if cnf != "true" {
        return err(cnf_line, "only CNF grammars are supported");
    }
    let mut productions = Vec::new();
    for (line, fields) in raw.section("productions")? {
        match fields.as_slice() {
            [lhs, t] => productions.push((
                nts.get(*line, lhs)?,
                GrammarBody::Terminal(terminals.id_checked(t).map_err(|e| core_err(*line, e))?),
            )),
            [lhs, x, y] => productions.push((
                nts.get(*line, lhs)?,
                GrammarBody::Binary(nts.get(*line, x)?, nts.get(*line, y)?),
            )),
            _ => return err(*line, "expected `lhs terminal` or `lhs left right`"),
        }
    }
    let grammar =
        Grammar::new(nts.names, terminals, productions, start).map_err(|e| core_err(1, e))?;
    Ok(Document::Grammar(grammar))
}

struct Renderer {
    out: String,
}

impl Renderer {
    fn new() -> Renderer {
        Renderer { out: String::new() }
    }

    fn header(&mut self, key: &str, value: impl fmt::Display) {
        self.out.push_str(&format!("{key}: {value}\n"));
    }

    fn header_bare(&mut self, key: &str, value: &str) {
        if value.is_empty() {
            self.out.push_str(&format!("{key}:\n"));
        } else {
            self.header(key, value);
        }
    }

    fn section(&mut self, name: &str, mut records: Vec<String>) {
        records.sort();
        self.out.push('\n');
        self.out.push_str(&format!("[{name}]\n"));
        for record in records {
            self.out.push_str(&record);
            self.out.push('\n');
        }
    }

    fn finish(self) -> String {
        self.out
    }
}

/// Renders a document in canonical form.
pub fn render_document(doc: &Document) -> String {
    let mut r = Renderer::new();
    r.header("kind", doc.kind());
    r.header("version", 1);
    match doc {
        Document::Game(game) => {
            let alphabet = game.alphabet();
            r.header("alphabet", alphabet);
            r.header("initial", &game.state(game.initial()).name);
            r.section(
                "states",
                (0..game.state_count())
                    .map(|q| {
                        let s = game.state(q);
                        format!("{} {} {}", s.name, alphabet.name(s.obs1), alphabet.name(s.obs2))
                    })
                    .collect(),
            );
            r.section(
                "edges",
                game.edges()
                    .map(|(u, v)| format!("{} {}", game.state(u).name, game.state(v).name))
                    .collect(),
            );
            r.section(
                "admissible",
                game.admissible_entries()
                    .map(|(q, d)| {
                        let ds: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                        format!("{} {}", game.state(q).name, ds.join(" "))
                    })
                    .collect(),
            );
        }
        Document::Transducer(t) => {
            let alphabet = t.alphabet();
            r.header("alphabet", alphabet);
            r.header("initial", t.state_name(t.initial()));
            let mut finals: Vec<&str> = t.finals().map(|f| t.state_name(f)).collect();
            finals.sort_unstable();
            r.header("finals", finals.join(" "));
            r.section(
                "states",
                (0..t.state_count()).map(|q| t.state_name(q).to_string()).collect(),
            );
            r.section(
                "transitions",
                t.transitions()
                    .map(|(p, a, b, q)| {
                        format!(
                            "{} {} {} {}",
                            t.state_name(p),
                            alphabet.name(a),
                            alphabet.name(b),
                            t.state_name(q)
                        )
                    })
                    .collect(),
            );
        }
        Document::Automaton(a) => {
            let alphabet = a.alphabet();
            r.header("alphabet", alphabet);
            r.header("initial", a.state_name(a.initial()));
            let mut finals: Vec<&str> = a.finals().map(|f| a.state_name(f)).collect();
            finals.sort_unstable();
            r.header("finals", finals.join(" "));
            r.header("deterministic", a.is_deterministic());
            r.section(
                "states",
                (0..a.state_count()).map(|q| a.state_name(q).to_string()).collect(),
            );
            r.section(
                "transitions",
                a.transitions()
                    .map(|(p, s, q)| {
                        format!("{} {} {}", a.state_name(p), alphabet.name(s), a.state_name(q))
                    })
                    .collect(),
            );
        }
        Document::Domino(d) => {
            let dominoes = d.dominoes();
            r.header("dominoes", dominoes);
            r.header("side", dominoes.name(d.side()));
            r.header("bottom", dominoes.name(d.bottom()));
            r.section(
                "horizontal",
                d.horizontal()
                    .map(|(x, y)| format!("{} {}", dominoes.name(x), dominoes.name(y)))
                    .collect(),
            );
            r.section(
                "vertical",
                d.vertical()
                    .map(|(x, y)| format!("{} {}", dominoes.name(x), dominoes.name(y)))
                    .collect(),
            );
        }
        Document::Flower(fs) => {
            let brackets: Vec<String> = fs
                .dyck()
                .brackets()
                .iter()
                .flat_map(|(o, c)| [o.clone(), c.clone()])
                .collect();
            r.header("brackets", brackets.join(" "));
            r.header_bare("neutrals", &fs.dyck().neutrals().join(" "));
            r.header("sigma", fs.hom().target());
            let m = fs.reg();
            r.header("m-initial", m.state_name(m.initial()));
            let mut finals: Vec<&str> = m.finals().map(|f| m.state_name(f)).collect();
            finals.sort_unstable();
            r.header("m-finals", finals.join(" "));
            let lambda = fs.hom().source();
            r.section(
                "homomorphism",
                lambda
                    .ids()
                    .map(|x| {
                        format!(
                            "{} {}",
                            lambda.name(x),
                            fs.hom().target().name(fs.hom().apply(x))
                        )
                    })
                    .collect(),
            );
            r.section(
                "m-states",
                (0..m.state_count()).map(|q| m.state_name(q).to_string()).collect(),
            );
            r.section(
                "m-transitions",
                m.transitions()
                    .map(|(p, s, q)| {
                        format!("{} {} {}", m.state_name(p), m.alphabet().name(s), m.state_name(q))
                    })
                    .collect(),
            );
        }
        Document::StrategyTable(alphabet, table) => {
            r.header("alphabet", alphabet);
            r.header("maxlen", table.maxlen());
            r.section(
                "entries",
                table
                    .iter()
                    .map(|(w, d)| {
                        let word = if w.is_empty() {
                            EPSILON.to_string()
                        } else {
                            alphabet.format_word_canonical(w)
                        };
                        format!("{word} {d}")
                    })
                    .collect(),
            );
        }
        Document::Grammar(g) => {
            r.header("terminals", g.terminals());
            r.header("start", &g.nonterminals()[g.start()]);
            r.header("cnf", g.is_cnf());
            r.section("nonterminals", g.nonterminals().to_vec());
            r.section(
                "productions",
                g.productions()
                    .map(|(lhs, body)| match body {
                        GrammarBody::Terminal(t) => {
                            format!("{} {}", g.nonterminals()[lhs], g.terminals().name(t))
                        }
                        GrammarBody::Binary(x, y) => format!(
                            "{} {} {}",
                            g.nonterminals()[lhs],
                            g.nonterminals()[x],
                            g.nonterminals()[y]
                        ),
                    })
                    .collect(),
            );
        }
    }
    r.finish()
}

/// Reassembles a seed from its three documents.
pub fn assemble_seed(relation: Document, acc: Document, rej: Document) -> Result<Seed, String> {
    let Document::Transducer(relation) = relation else {
        return Err(format!("expected a transducer, found {}", relation.kind()));
    };
    let Document::Automaton(acc) = acc else {
        return Err(format!("expected an automaton, found {}", acc.kind()));
    };
    let Document::Automaton(rej) = rej else {
        return Err(format!("expected an automaton, found {}", rej.kind()));
    };
    Seed::new(relation, acc, rej).map_err(|e| e.to_string())
}

/// The three documents of a seed, for writing under a shared prefix.
pub fn seed_documents(seed: &Seed) -> [(&'static str, Document); 3] {
    [
        ("rel", Document::Transducer(seed.relation().clone())),
        ("acc", Document::Automaton(seed.acc().clone())),
        ("rej", Document::Automaton(seed.rej().clone())),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use cga_core::corpus;
    use cga_core::domino::compile_domino_game;
    use cga_core::seed::extract_seed;

    fn round_trip(doc: &Document) {
        let text = render_document(doc);
        let parsed = parse_document(&text).expect("rendered documents parse");
        let again = render_document(&parsed);
        assert_eq!(text, again, "canonical form must be a fixpoint");
    }

    #[test]
    fn all_kinds_round_trip() {
        let game = corpus::anbn_cover_game();
        round_trip(&Document::Game(game.clone()));
        let seed = extract_seed(&game).unwrap();
        round_trip(&Document::Transducer(seed.relation().clone()));
        round_trip(&Document::Automaton(seed.acc().clone()));
        round_trip(&Document::Domino(corpus::anbn_domino_system()));
        round_trip(&Document::Flower(corpus::anbn_flower()));
        round_trip(&Document::Flower(corpus::two_bracket_flower()));
        let table = cga_core::closure::strategy_table(
            &extract_seed(&compile_domino_game(&corpus::anbn_domino_system()).unwrap()).unwrap(),
            4,
            Decision::Zero,
            1_000_000,
        )
        .unwrap();
        round_trip(&Document::StrategyTable(seed.alphabet().clone(), table));
        let grammar = cga_core::cfl::flower_cfg(&corpus::anbn_flower()).unwrap();
        round_trip(&Document::Grammar(grammar));
    }

    #[test]
    fn parse_reports_line_numbers() {
        let text = "kind: game\nversion: 1\nalphabet: a #\ninitial: v0\n\n[states]\nv0 # #\nf # #\n\n[edges]\nv0 nowhere\n\n[admissible]\nf 1\n";
        let e = parse_document(text).unwrap_err();
        assert_eq!(e.line, 11);
        assert!(e.message.contains("nowhere"));
    }

    #[test]
    fn duplicate_alphabet_symbols_are_rejected() {
        let text = "kind: automaton\nversion: 1\nalphabet: a a\ninitial: s\nfinals: s\ndeterministic: true\n\n[states]\ns\n\n[transitions]\n";
        let e = parse_document(text).unwrap_err();
        assert!(e.message.contains("duplicate symbol"));
    }

    #[test]
    fn missing_admissible_set_is_surfaced_by_validation() {
        let text = "kind: game\nversion: 1\nalphabet: a #\ninitial: v0\n\n[states]\nv0 # #\nm a a\nf # #\n\n[edges]\nv0 m\nm f\n\n[admissible]\n";
        let Document::Game(game) = parse_document(text).unwrap() else {
            panic!("expected a game");
        };
        let violations = game.validate();
        assert!(violations.iter().any(|v| v.to_string().contains("no admissible decisions")));
    }

    #[test]
    fn unknown_kinds_and_versions_are_rejected() {
        let e = parse_document("kind: widget\nversion: 1\n").unwrap_err();
        assert!(e.message.contains("unknown kind"));
        let e = parse_document("kind: game\nversion: 2\n").unwrap_err();
        assert!(e.message.contains("unsupported version"));
    }
}
