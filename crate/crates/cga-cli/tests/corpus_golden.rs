//! The shipped corpus files are the canonical renderings of the built-in
//! reference objects. `CORPUS_WRITE=1 cargo test -p cga-cli --test
//! corpus_golden` regenerates them; the default run asserts byte equality
//! and the parse→render fixpoint.

use cga_cli::doc::{parse_document, render_document, seed_documents, Document};
use cga_core::corpus;
use std::path::PathBuf;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn check_or_write(name: &str, doc: &Document) {
    let path = corpus_dir().join(name);
    let rendered = render_document(doc);
    if std::env::var("CORPUS_WRITE").is_ok() {
        std::fs::write(&path, &rendered).unwrap();
        return;
    }
    let on_disk = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing corpus file {}: {e}", path.display()));
    assert_eq!(on_disk, rendered, "{name} is out of date with the reference builder");
    // Round trip through the parser reproduces the canonical bytes.
    let reparsed = parse_document(&on_disk).unwrap();
    assert_eq!(render_document(&reparsed), on_disk, "{name} must be canonical");
}

#[test]
fn corpus_files_match_reference_builders() {
    check_or_write("fig1.game", &Document::Game(corpus::anbn_cover_game()));
    check_or_write("fig2a.domino", &Document::Domino(corpus::anbn_domino_system()));
    check_or_write("anbn.flower", &Document::Flower(corpus::anbn_flower()));
    check_or_write("fig3a.flower", &Document::Flower(corpus::two_bracket_flower()));
    let flip = corpus::flip_conflict_seed();
    for (ext, doc) in seed_documents(&flip) {
        check_or_write(&format!("flip.{ext}"), &doc);
    }
}
