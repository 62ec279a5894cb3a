//! `cga` — consensus game acceptors on the command line.
//!
//! Documents (games, transducers, automata, domino systems, flowers,
//! strategy tables, grammars) are plain text files; seeds live in three
//! files sharing a prefix (`.rel`, `.acc`, `.rej`). Commands that take a
//! seed also accept a game file, whose seed is extracted on the fly, or
//! `-` to read a game from stdin.
//!
//! Exit codes: 0 success/true, 1 false/absent, 2 usage or parse error,
//! 3 enumeration cap exceeded, 4 conflict/unsolvable.

use cga_cli::doc::{assemble_seed, parse_document, render_document, seed_documents, Document};
use cga_core::alphabet::Alphabet;
use cga_core::closure::{
    closure_membership, covered_language_upto, optimal_decision, solvable_upto, strategy_table,
    Target, DEFAULT_CAP,
};
use cga_core::cfl::{build_flower, cyk_membership, dyck_seed, flower_cfg, DyckSpec};
use cga_core::domino::{compile_domino_game, corridor_tiling, default_max_height};
use cga_core::game::{Decision, StrategyTable, VerifyOutcome};
use cga_core::seed::{extract_seed, synthesize_game};
use cga_core::{Error as CoreError, Seed, Word};
use clap::{Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cga", version, about = "Consensus game acceptors: games, seeds, tilings, closures")]
struct Cli {
    /// Bound on enumerated words and plays.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Decision for observation words outside both closures.
    #[arg(long, global = true, default_value = "0", value_parser = parse_decision)]
    default_decision: Decision,
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    Acc,
    Rej,
}

fn parse_decision(s: &str) -> Result<Decision, String> {
    match s {
        "0" => Ok(Decision::Zero),
        "1" => Ok(Decision::One),
        _ => Err("expected 0 or 1".into()),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a document's structural invariants.
    Validate {
        file: PathBuf,
        /// Also lint for omitted observation words over this subalphabet.
        #[arg(long)]
        sigma: Option<String>,
        /// Length bound for the omission lint.
        #[arg(long, default_value_t = 3)]
        lint_len: usize,
    },
    /// Write the seed of a game as three documents under a prefix.
    ExtractSeed {
        game: String,
        #[arg(short, long)]
        output: String,
    },
    /// Build a game from a transducer and two disjoint language automata.
    Synthesize {
        transducer: PathBuf,
        acc: PathBuf,
        rej: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Compile a domino system into a game covering its frontier language.
    CompileDomino {
        domino: PathBuf,
        /// Output file; the document goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for a bordered corridor tiling with the word in the top row.
    Tile {
        domino: PathBuf,
        word: String,
        #[arg(long)]
        max_height: Option<usize>,
    },
    /// Closure membership of a word, with the forcing chain.
    Closure {
        seed: String,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = TargetArg::Acc)]
        target: TargetArg,
    },
    /// The language covered over a subalphabet, per length.
    Covered {
        seed: String,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Probe solvability up to a length bound.
    Solvable {
        seed: String,
        #[arg(long)]
        max_len: usize,
    },
    /// The optimal decision at one observation word.
    Decide {
        seed: String,
        #[arg(long)]
        word: String,
    },
    /// Tabulate the optimal strategy on realizable observations.
    Strategy {
        seed: String,
        #[arg(long)]
        max_len: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a strategy table against a game.
    Verify {
        game: PathBuf,
        table: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Write the Dyck seed for n bracket kinds under a prefix.
    BuildDyck {
        #[arg(long)]
        pairs: usize,
        #[arg(long)]
        neutrals: Option<String>,
        #[arg(short, long)]
        output: String,
    },
    /// Build the seed of a flower description under a prefix.
    BuildFlower {
        flower: PathBuf,
        #[arg(short, long)]
        output: String,
    },
    /// Emit the context-free grammar oracle of a flower description.
    FlowerCfg {
        flower: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Grammar membership of a word.
    CfgMember {
        grammar: PathBuf,
        #[arg(long)]
        word: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Failure {
        let code = match &e {
            CoreError::CapExceeded { .. } => 3,
            CoreError::DecisionConflict { .. }
            | CoreError::UnsolvableSeed(_)
            | CoreError::NondisjointSeedLanguages(_) => 4,
            _ => 2,
        };
        fail(code, e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

struct Ctx {
    cap: usize,
    default_decision: Decision,
    machine: bool,
}

impl Ctx {
    fn kv(&self, key: &str, value: impl std::fmt::Display) {
        if self.machine {
            println!("{key}={value}");
        }
    }

    fn text(&self, line: impl std::fmt::Display) {
        if !self.machine {
            println!("{line}");
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))
}

fn load_document(path: &Path) -> Result<Document, Failure> {
    let text = read_file(path)?;
    parse_document(&text).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| fail(2, format!("cannot write {}: {e}", path.display())))
}

/// Resolves a seed source: `-` reads a game document from stdin, an
/// existing file is parsed as a game, anything else is used as a
/// three-file prefix.
fn load_seed(ctx: &Ctx, source: &str) -> Result<Seed, Failure> {
    let from_game = |doc: Document, origin: &str| -> Result<Seed, Failure> {
        match doc {
            Document::Game(game) => {
                let seed = extract_seed(&game)?;
                if !seed.relation().has_reachable_final() {
                    ctx.kv("warning", "empty-relation");
                    ctx.text("warning: the game has no plays; the seed relation is empty");
                }
                Ok(seed)
            }
            other => Err(fail(2, format!("{origin}: expected a game, found {}", other.kind()))),
        }
    };
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| fail(2, format!("cannot read stdin: {e}")))?;
        let doc = parse_document(&text).map_err(|e| fail(2, format!("stdin: {e}")))?;
        return from_game(doc, "stdin");
    }
    let path = Path::new(source);
    if path.is_file() {
        return from_game(load_document(path)?, source);
    }
    let part = |ext: &str| -> Result<Document, Failure> {
        load_document(&PathBuf::from(format!("{source}.{ext}")))
    };
    assemble_seed(part("rel")?, part("acc")?, part("rej")?).map_err(|e| fail(2, e))
}

fn parse_word_arg(seed_alphabet: &Alphabet, word: &str) -> Result<Word, Failure> {
    seed_alphabet.parse_word(word).map_err(|e| fail(2, e.to_string()))
}

fn parse_sigma(list: &str) -> Result<Alphabet, Failure> {
    Alphabet::new(list.split(',').filter(|s| !s.is_empty()))
        .map_err(|e| fail(2, e.to_string()))
}

fn write_seed(ctx: &Ctx, seed: &Seed, prefix: &str) -> Result<(), Failure> {
    for (ext, doc) in seed_documents(seed) {
        let path = PathBuf::from(format!("{prefix}.{ext}"));
        write_file(&path, &render_document(&doc))?;
        ctx.kv("wrote", path.display());
        ctx.text(format!("wrote {}", path.display()));
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    let ctx = Ctx {
        cap: cli.cap,
        default_decision: cli.default_decision,
        machine: cli.format == Format::Machine,
    };
    match cli.command {
        Command::Validate { file, sigma, lint_len } => {
            let doc = load_document(&file)?;
            let violations: Vec<String> = match &doc {
                Document::Game(game) => game.validate().iter().map(|v| v.to_string()).collect(),
                Document::Domino(d) => d.validate().iter().map(|v| v.to_string()).collect(),
                _ => Vec::new(),
            };
            ctx.kv("ok", violations.is_empty());
            for v in &violations {
                ctx.kv("violation", v);
                ctx.text(format!("violation: {v}"));
            }
            if violations.is_empty() {
                ctx.text("ok");
            }
            if let (Some(sigma), Document::Game(game)) = (&sigma, &doc) {
                let sigma = parse_sigma(sigma)?;
                for w in game.omitted_observation_words(&sigma, lint_len, ctx.cap)? {
                    let rendered = game.alphabet().format_word(&w);
                    ctx.kv("warning-omitted", &rendered);
                    ctx.text(format!("warning: no play observes `{rendered}`"));
                }
            }
            Ok(if violations.is_empty() { 0 } else { 1 })
        }
        Command::ExtractSeed { game, output } => {
            let seed = load_seed(&ctx, &game)?;
            write_seed(&ctx, &seed, &output)?;
            Ok(0)
        }
        Command::Synthesize { transducer, acc, rej, output } => {
            let seed = assemble_seed(
                load_document(&transducer)?,
                load_document(&acc)?,
                load_document(&rej)?,
            )
            .map_err(|e| fail(2, e))?;
            let game = synthesize_game(&seed)?;
            write_file(&output, &render_document(&Document::Game(game)))?;
            ctx.kv("wrote", output.display());
            ctx.text(format!("wrote {}", output.display()));
            Ok(0)
        }
        Command::CompileDomino { domino, output } => {
            let Document::Domino(system) = load_document(&domino)? else {
                return Err(fail(2, "expected a domino document"));
            };
            let game = compile_domino_game(&system)?;
            let text = render_document(&Document::Game(game));
            match output {
                Some(path) => {
                    write_file(&path, &text)?;
                    ctx.kv("wrote", path.display());
                    ctx.text(format!("wrote {}", path.display()));
                }
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Tile { domino, word, max_height } => {
            let Document::Domino(system) = load_document(&domino)? else {
                return Err(fail(2, "expected a domino document"));
            };
            let dominoes = system.dominoes().clone();
            let w = parse_word_arg(&dominoes, &word)?;
            let bound = max_height.unwrap_or_else(|| default_max_height(&w));
            match corridor_tiling(&system, &w, bound)? {
                Some(tiling) => {
                    ctx.kv("found", true);
                    ctx.kv("width", tiling.width);
                    ctx.kv("rows", tiling.row_count());
                    if ctx.machine {
                        for (y, row) in tiling.rows.iter().enumerate() {
                            for (x, &d) in row.iter().enumerate() {
                                println!("cell={x},{y},{}", dominoes.name(d));
                            }
                        }
                    } else {
                        let width = tiling
                            .rows
                            .iter()
                            .flatten()
                            .map(|&d| dominoes.name(d).chars().count())
                            .max()
                            .unwrap_or(1);
                        for row in &tiling.rows {
                            let line: Vec<String> = row
                                .iter()
                                .map(|&d| format!("{:width$}", dominoes.name(d)))
                                .collect();
                            println!("{}", line.join(" ").trim_end());
                        }
                    }
                    Ok(0)
                }
                None => {
                    ctx.kv("found", false);
                    ctx.text("none");
                    Ok(1)
                }
            }
        }
        Command::Closure { seed, word, target } => {
            let seed = load_seed(&ctx, &seed)?;
            let alphabet = seed.alphabet().clone();
            let w = parse_word_arg(&alphabet, &word)?;
            let target = match target {
                TargetArg::Acc => Target::Acc,
                TargetArg::Rej => Target::Rej,
            };
            let result = closure_membership(&seed, target, &w, ctx.cap)?;
            ctx.kv("member", result.member);
            if let Some(chain) = &result.chain {
                ctx.text(format!("member: true (chain of {} steps)", chain.len() - 1));
                for link in chain {
                    let rendered = alphabet.format_word(link);
                    ctx.kv("chain", &rendered);
                    ctx.text(format!("  {rendered}"));
                }
                Ok(0)
            } else {
                ctx.text("member: false");
                Ok(1)
            }
        }
        Command::Covered { seed, sigma, max_len } => {
            let seed = load_seed(&ctx, &seed)?;
            let sigma = parse_sigma(&sigma)?;
            let covered = covered_language_upto(&seed, &sigma, max_len, ctx.cap)?;
            for (len, set) in covered {
                ctx.kv("length", len);
                ctx.kv("count", set.len());
                let words: Vec<String> =
                    set.iter().map(|w| seed.alphabet().format_word(w)).collect();
                for w in &words {
                    ctx.kv("word", w);
                }
                let listing = if words.is_empty() { "-".to_string() } else { words.join(" ") };
                ctx.text(format!("length {len}: {listing}"));
            }
            Ok(0)
        }
        Command::Solvable { seed, max_len } => {
            let seed = load_seed(&ctx, &seed)?;
            let alphabet = seed.alphabet().clone();
            let verdict = solvable_upto(&seed, max_len, ctx.cap)?;
            ctx.kv("solvable", verdict.solvable_up_to);
            ctx.kv("checked_up_to", verdict.checked_up_to);
            match verdict.conflict {
                None => {
                    ctx.text(format!("solvable up to length {}", verdict.checked_up_to));
                    Ok(0)
                }
                Some(conflict) => {
                    let word = alphabet.format_word(&conflict.word);
                    ctx.kv("conflict", &word);
                    ctx.text(format!(
                        "unsolvable at length {}, word {}",
                        conflict.word.len(),
                        word
                    ));
                    for link in &conflict.chain_to_acc {
                        let rendered = alphabet.format_word(link);
                        ctx.kv("acc-chain", &rendered);
                        ctx.text(format!("  forcing 1: {rendered}"));
                    }
                    for link in &conflict.chain_to_rej {
                        let rendered = alphabet.format_word(link);
                        ctx.kv("rej-chain", &rendered);
                        ctx.text(format!("  forcing 0: {rendered}"));
                    }
                    Ok(4)
                }
            }
        }
        Command::Decide { seed, word } => {
            let seed = load_seed(&ctx, &seed)?;
            let alphabet = seed.alphabet().clone();
            let w = parse_word_arg(&alphabet, &word)?;
            let decision = optimal_decision(&seed, &w, ctx.default_decision, ctx.cap)?;
            ctx.kv("decision", decision);
            ctx.text(decision);
            Ok(0)
        }
        Command::Strategy { seed, max_len, output } => {
            let seed = load_seed(&ctx, &seed)?;
            let table = strategy_table(&seed, max_len, ctx.default_decision, ctx.cap)?;
            ctx.kv("entries", table.len());
            let doc = Document::StrategyTable(seed.alphabet().clone(), table);
            write_file(&output, &render_document(&doc))?;
            ctx.kv("wrote", output.display());
            ctx.text(format!("wrote {}", output.display()));
            Ok(0)
        }
        Command::Verify { game, table, max_len } => {
            let Document::Game(game) = load_document(&game)? else {
                return Err(fail(2, "expected a game document"));
            };
            let Document::StrategyTable(table_alpha, table) = load_document(&table)? else {
                return Err(fail(2, "expected a strategy-table document"));
            };
            // Re-key the table into the game's alphabet by symbol name.
            let game_alpha = game.alphabet().clone();
            let mut entries = BTreeMap::new();
            for (w, d) in table.iter() {
                let mapped: Result<Word, _> = w
                    .iter()
                    .map(|&s| game_alpha.id_checked(table_alpha.name(s)))
                    .collect();
                if let Ok(mapped) = mapped {
                    entries.insert(mapped, d);
                }
            }
            let table = StrategyTable::new(table.maxlen(), entries);
            match game.verify_strategy(&table, max_len, ctx.cap)? {
                VerifyOutcome::Winning => {
                    ctx.kv("ok", true);
                    ctx.text("ok");
                    Ok(0)
                }
                VerifyOutcome::Refuted(play) => {
                    ctx.kv("ok", false);
                    let names: Vec<&str> =
                        play.0.iter().map(|&q| game.state(q).name.as_str()).collect();
                    ctx.kv("counterexample", names.join(","));
                    let obs1 = game.observation(&play, 1).map_err(Failure::from)?;
                    let obs2 = game.observation(&play, 2).map_err(Failure::from)?;
                    ctx.kv("obs1", game_alpha.format_word(&obs1));
                    ctx.kv("obs2", game_alpha.format_word(&obs2));
                    ctx.text(format!(
                        "counterexample play: {} (observations {} | {})",
                        names.join(" -> "),
                        game_alpha.format_word(&obs1),
                        game_alpha.format_word(&obs2)
                    ));
                    Ok(1)
                }
            }
        }
        Command::BuildDyck { pairs, neutrals, output } => {
            let neutral_list: Vec<String> = neutrals
                .map(|n| n.split(',').filter(|s| !s.is_empty()).map(String::from).collect())
                .unwrap_or_default();
            let neutral_refs: Vec<&str> = neutral_list.iter().map(|s| s.as_str()).collect();
            let spec = DyckSpec::with_pairs(pairs, &neutral_refs)?;
            let seed = dyck_seed(&spec)?;
            write_seed(&ctx, &seed, &output)?;
            Ok(0)
        }
        Command::BuildFlower { flower, output } => {
            let Document::Flower(fs) = load_document(&flower)? else {
                return Err(fail(2, "expected a flower document"));
            };
            let seed = build_flower(&fs)?;
            write_seed(&ctx, &seed, &output)?;
            Ok(0)
        }
        Command::FlowerCfg { flower, output } => {
            let Document::Flower(fs) = load_document(&flower)? else {
                return Err(fail(2, "expected a flower document"));
            };
            let grammar = flower_cfg(&fs)?;
            ctx.kv("productions", grammar.production_count());
            write_file(&output, &render_document(&Document::Grammar(grammar)))?;
            ctx.kv("wrote", output.display());
            ctx.text(format!("wrote {}", output.display()));
            Ok(0)
        }
        Command::CfgMember { grammar, word } => {
            let Document::Grammar(grammar) = load_document(&grammar)? else {
                return Err(fail(2, "expected a grammar document"));
            };
            let w = parse_word_arg(grammar.terminals(), &word)?;
            let member = cyk_membership(&grammar, &w)?;
            ctx.kv("member", member);
            ctx.text(member);
            Ok(if member { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let machine = cli.format == Format::Machine;
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            if machine {
                println!("error={message}");
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}

