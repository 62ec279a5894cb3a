//! End-to-end runs of the `cga` binary against the shipped corpus.

use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn cga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cga"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cga_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cga"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    use std::io::Write;
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn kv_values(out: &Output, key: &str) -> Vec<String> {
    stdout(out)
        .lines()
        .filter_map(|l| l.strip_prefix(&format!("{key}=")).map(str::to_string))
        .collect()
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cga-cli-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn validate_corpus_game() {
    let out = cga(&["validate", &corpus("fig1.game")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ok"));
    let out = cga(&["--format", "machine", "validate", &corpus("fig2a.domino")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(kv_values(&out, "ok"), ["true"]);
}

#[test]
fn validate_flags_broken_games() {
    let dir = tmp_dir("broken");
    let path = dir.join("broken.game");
    std::fs::write(
        &path,
        "kind: game\nversion: 1\nalphabet: a #\ninitial: v0\n\n[states]\nv0 # #\nm a a\nf # #\n\n[edges]\nm v0\nv0 m\nm f\n\n[admissible]\nf 0 1\n",
    )
    .unwrap();
    let out = cga(&["--format", "machine", "validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(kv_values(&out, "ok"), ["false"]);
    assert!(kv_values(&out, "violation")[0].contains("incoming"));
}

#[test]
fn validate_lints_omitted_observations() {
    // The reference game realizes every word over {a, b} for both players.
    let out = cga(&[
        "--format",
        "machine",
        "validate",
        &corpus("fig1.game"),
        "--sigma",
        "a,b",
        "--lint-len",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(kv_values(&out, "warning-omitted").is_empty());
    // A game over {a, b} whose plays only ever observe `a` draws warnings.
    let dir = tmp_dir("lint");
    let path = dir.join("gappy.game");
    std::fs::write(
        &path,
        "kind: game\nversion: 1\nalphabet: a b #\ninitial: v0\n\n[states]\nv0 # #\nm a a\nf # #\n\n[edges]\nv0 m\nm m\nm f\n\n[admissible]\nf 0 1\n",
    )
    .unwrap();
    let out = cga(&[
        "--format",
        "machine",
        "validate",
        path.to_str().unwrap(),
        "--sigma",
        "a,b",
        "--lint-len",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "warnings do not fail validation");
    let omitted = kv_values(&out, "warning-omitted");
    assert!(omitted.contains(&"b".to_string()));
    assert!(omitted.contains(&"ab".to_string()));
}

#[test]
fn tile_renders_the_reference_grid() {
    let out = cga(&["tile", &corpus("fig2a.domino"), "aaabbb"]);
    assert_eq!(out.status.code(), Some(0));
    let grid = stdout(&out);
    let rows: Vec<&str> = grid.lines().collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0].split_whitespace().collect::<Vec<_>>().join(""), "#aaabbb#");
    assert_eq!(rows[4].split_whitespace().collect::<Vec<_>>().join(""), "#□□□□□□#");
    // Machine format lists one cell per line.
    let out = cga(&["--format", "machine", "tile", &corpus("fig2a.domino"), "ab"]);
    assert_eq!(kv_values(&out, "rows"), ["3"]);
    assert!(kv_values(&out, "cell").contains(&"1,1,◁".to_string()));
}

#[test]
fn tile_reports_absence() {
    let out = cga(&["--format", "machine", "tile", &corpus("fig2a.domino"), "ba"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(kv_values(&out, "found"), ["false"]);
}

#[test]
fn compile_then_decide_through_a_pipe() {
    let compiled = cga(&["compile-domino", &corpus("fig2a.domino")]);
    assert_eq!(compiled.status.code(), Some(0));
    let game_doc = stdout(&compiled);
    let out = cga_stdin(&["decide", "-", "--word", "aabb"], &game_doc);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");
    let out = cga_stdin(&["decide", "-", "--word", "aaabb"], &game_doc);
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn closure_chain_is_reported() {
    let dir = tmp_dir("closure");
    let game = dir.join("anbn.game");
    let prefix = dir.join("anbn");
    let out = cga(&[
        "compile-domino",
        &corpus("fig2a.domino"),
        "-o",
        game.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = cga(&[
        "extract-seed",
        game.to_str().unwrap(),
        "-o",
        prefix.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    for ext in ["rel", "acc", "rej"] {
        assert!(dir.join(format!("anbn.{ext}")).exists());
    }
    let out = cga(&[
        "--format",
        "machine",
        "closure",
        prefix.to_str().unwrap(),
        "--word",
        "aabb",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(kv_values(&out, "member"), ["true"]);
    let chain = kv_values(&out, "chain");
    assert_eq!(chain.first().map(String::as_str), Some("aabb"));
    assert_eq!(chain.last().map(String::as_str), Some("□□□□"));
    // A word outside the closure exits with 1.
    let out = cga(&[
        "closure",
        prefix.to_str().unwrap(),
        "--word",
        "aaab",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn covered_solvable_strategy_verify_loop() {
    let dir = tmp_dir("loop");
    let game = dir.join("anbn.game");
    let prefix = dir.join("anbn");
    cga(&["compile-domino", &corpus("fig2a.domino"), "-o", game.to_str().unwrap()]);
    cga(&["extract-seed", game.to_str().unwrap(), "-o", prefix.to_str().unwrap()]);
    let out = cga(&[
        "--format",
        "machine",
        "covered",
        prefix.to_str().unwrap(),
        "--sigma",
        "a,b",
        "--max-len",
        "6",
    ]);
    assert_eq!(kv_values(&out, "word"), ["ab", "aabb", "aaabbb"]);
    let out = cga(&[
        "--format",
        "machine",
        "solvable",
        prefix.to_str().unwrap(),
        "--max-len",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(kv_values(&out, "solvable"), ["true"]);

    let table = dir.join("anbn.table");
    let out = cga(&[
        "strategy",
        prefix.to_str().unwrap(),
        "--max-len",
        "5",
        "-o",
        table.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    // The optimal table wins on the synthesized game; build it via the CLI.
    let synth = dir.join("synth.game");
    let out = cga(&[
        "synthesize",
        &format!("{}.rel", prefix.to_str().unwrap()),
        &format!("{}.acc", prefix.to_str().unwrap()),
        &format!("{}.rej", prefix.to_str().unwrap()),
        "-o",
        synth.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = cga(&[
        "verify",
        synth.to_str().unwrap(),
        table.to_str().unwrap(),
        "--max-len",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).trim(), "ok");
}

#[test]
fn default_decision_applies_to_unforced_words() {
    let compiled = cga(&["compile-domino", &corpus("fig2a.domino")]);
    let game_doc = stdout(&compiled);
    // `aab` sits in neither closure of the compiled seed.
    let out = cga_stdin(&["decide", "-", "--word", "aab"], &game_doc);
    assert_eq!(stdout(&out).trim(), "0");
    let out = cga_stdin(
        &["--default-decision", "1", "decide", "-", "--word", "aab"],
        &game_doc,
    );
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn solvable_reports_the_flip_conflict() {
    let prefix = corpus("flip");
    let out = cga(&[
        "--format",
        "machine",
        "solvable",
        &prefix,
        "--max-len",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(kv_values(&out, "solvable"), ["false"]);
    assert_eq!(kv_values(&out, "conflict"), ["a"]);
    assert_eq!(kv_values(&out, "acc-chain"), ["a"]);
    assert_eq!(kv_values(&out, "rej-chain"), ["a", "b"]);
    // Text output spells the verdict.
    let out = cga(&["solvable", &prefix, "--max-len", "2"]);
    assert!(stdout(&out).contains("unsolvable at length 1, word a"));
    // Deciding the conflicted word is an error with exit 4.
    let out = cga(&["decide", &prefix, "--word", "a"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn dyck_and_flower_builders() {
    let dir = tmp_dir("dyck");
    let prefix = dir.join("dyck1");
    let out = cga(&[
        "build-dyck",
        "--pairs",
        "1",
        "-o",
        prefix.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = cga(&[
        "--format",
        "machine",
        "covered",
        prefix.to_str().unwrap(),
        "--sigma",
        "[,]",
        "--max-len",
        "4",
    ]);
    assert_eq!(kv_values(&out, "word"), ["[]", "[[]]", "[][]"]);

    let fprefix = dir.join("anbnflower");
    let out = cga(&[
        "build-flower",
        &corpus("anbn.flower"),
        "-o",
        fprefix.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = cga(&[
        "--format",
        "machine",
        "covered",
        fprefix.to_str().unwrap(),
        "--sigma",
        "a,b",
        "--max-len",
        "8",
    ]);
    assert_eq!(kv_values(&out, "word"), ["ab", "aabb", "aaabbb", "aaaabbbb"]);

    let grammar = dir.join("anbn.grammar");
    let out = cga(&[
        "flower-cfg",
        &corpus("anbn.flower"),
        "-o",
        grammar.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let member = cga(&["cfg-member", grammar.to_str().unwrap(), "--word", "aabb"]);
    assert_eq!(member.status.code(), Some(0));
    assert_eq!(stdout(&member).trim(), "true");
    let member = cga(&["cfg-member", grammar.to_str().unwrap(), "--word", "aba"]);
    assert_eq!(member.status.code(), Some(1));
}

#[test]
fn usage_and_cap_exit_codes() {
    let out = cga(&["decide", "/nonexistent/prefix", "--word", "a"]);
    assert_eq!(out.status.code(), Some(2));
    // The component of `aa` under the flip relation has four words.
    let out = cga(&[
        "--format",
        "machine",
        "--cap",
        "2",
        "closure",
        &corpus("flip"),
        "--word",
        "aa",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(kv_values(&out, "error")[0].contains("cap"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tmp_dir("parse-error");
    let path = dir.join("bad.game");
    std::fs::write(&path, "kind: game\nversion: 1\nalphabet: a a\n").unwrap();
    let out = cga(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "stderr was: {err}");
}

#[test]
fn machine_output_is_stable_across_runs() {
    let args = [
        "--format",
        "machine",
        "tile",
        &corpus("fig2a.domino"),
        "aabb",
    ];
    let first = stdout(&cga(&args));
    let second = stdout(&cga(&args));
    assert_eq!(first, second);
    assert!(Path::new(&corpus("fig1.game")).exists());
}
