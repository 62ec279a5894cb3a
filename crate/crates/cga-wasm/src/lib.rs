//! Browser demo: corridor tilings, forced decisions with their reflection
//! chains, and covered-language listings over the built-in seeds.
//!
//! Each export returns a self-contained HTML fragment so the page stays a
//! single static file with a few lines of glue.

use cga_core::alphabet::Alphabet;
use cga_core::cfl::{build_flower, dyck_seed, DyckSpec};
use cga_core::closure::{closure_membership, covered_language_upto, solvable_upto, Target};
use cga_core::corpus;
use cga_core::domino::{compile_domino_game, corridor_tiling};
use cga_core::seed::extract_seed;
use cga_core::Seed;
use wasm_bindgen::prelude::wasm_bindgen;

const CAP: usize = 500_000;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn seed_by_name(name: &str) -> Result<(Seed, Vec<String>), String> {
    match name {
        "domino" => {
            let game = compile_domino_game(&corpus::anbn_domino_system())
                .map_err(|e| e.to_string())?;
            let seed = extract_seed(&game).map_err(|e| e.to_string())?;
            Ok((seed, vec!["a".into(), "b".into()]))
        }
        "dyck" => {
            let spec = DyckSpec::with_pairs(1, &[]).map_err(|e| e.to_string())?;
            let seed = dyck_seed(&spec).map_err(|e| e.to_string())?;
            Ok((seed, vec!["[".into(), "]".into()]))
        }
        "flower" => {
            let fs = corpus::anbn_flower();
            let sigma = fs.hom().target().names().map(String::from).collect();
            let seed = build_flower(&fs).map_err(|e| e.to_string())?;
            Ok((seed, sigma))
        }
        "two-bracket-flower" => {
            let fs = corpus::two_bracket_flower();
            let sigma = fs.hom().target().names().map(String::from).collect();
            let seed = build_flower(&fs).map_err(|e| e.to_string())?;
            Ok((seed, sigma))
        }
        other => Err(format!("unknown seed `{other}`")),
    }
}

/// Names accepted by [`decide_word`] and [`covered_words`].
#[wasm_bindgen]
pub fn seed_names() -> String {
    "domino,dyck,flower,two-bracket-flower".into()
}

/// Searches a bordered corridor tiling with the word in the top row and
/// renders the grid.
#[wasm_bindgen]
pub fn tile_grid(word: &str, max_height: usize) -> String {
    let system = corpus::anbn_domino_system();
    let dominoes = system.dominoes().clone();
    let parsed = match dominoes.parse_word(word) {
        Ok(w) if !w.is_empty() => w,
        Ok(_) => return "<p class=\"err\">enter a non-empty word over a, b</p>".into(),
        Err(e) => return format!("<p class=\"err\">{}</p>", escape(&e.to_string())),
    };
    match corridor_tiling(&system, &parsed, max_height.max(1)) {
        Err(e) => format!("<p class=\"err\">{}</p>", escape(&e.to_string())),
        Ok(None) => format!(
            "<p>no corridor tiling with top row <code>{}</code> up to height {}</p>",
            escape(word),
            max_height.max(1)
        ),
        Ok(Some(tiling)) => {
            let mut html = String::from("<table class=\"grid\">");
            for row in &tiling.rows {
                html.push_str("<tr>");
                for &cell in row {
                    let name = dominoes.name(cell);
                    let class = match name {
                        "#" => "side",
                        "□" => "blank",
                        _ => "cell",
                    };
                    html.push_str(&format!("<td class=\"{class}\">{}</td>", escape(name)));
                }
                html.push_str("</tr>");
            }
            html.push_str("</table>");
            html.push_str(&format!("<p>{} rows</p>", tiling.row_count()));
            html
        }
    }
}

/// The optimal decision at a word, with the forcing chain when one exists.
#[wasm_bindgen]
pub fn decide_word(seed_name: &str, word: &str) -> String {
    let (seed, _) = match seed_by_name(seed_name) {
        Ok(pair) => pair,
        Err(e) => return format!("<p class=\"err\">{}</p>", escape(&e)),
    };
    let alphabet = seed.alphabet().clone();
    let parsed = match alphabet.parse_word(word) {
        Ok(w) => w,
        Err(e) => return format!("<p class=\"err\">{}</p>", escape(&e.to_string())),
    };
    let mut html = String::new();
    let mut decided = false;
    for (target, decision) in [(Target::Acc, 1), (Target::Rej, 0)] {
        match closure_membership(&seed, target, &parsed, CAP) {
            Err(e) => return format!("<p class=\"err\">{}</p>", escape(&e.to_string())),
            Ok(result) if result.member => {
                html.push_str(&format!("<p>decision <strong>{decision}</strong></p>"));
                let chain = result.chain.unwrap();
                html.push_str("<ol class=\"chain\">");
                for link in &chain {
                    html.push_str(&format!(
                        "<li><code>{}</code></li>",
                        escape(&alphabet.format_word(link))
                    ));
                }
                html.push_str("</ol>");
                decided = true;
                break;
            }
            Ok(_) => {}
        }
    }
    if !decided {
        html.push_str("<p>decision <strong>0</strong> (unforced; either decision is safe)</p>");
    }
    html
}

/// Lists the covered language over the seed's terminal letters, per length.
#[wasm_bindgen]
pub fn covered_words(seed_name: &str, max_len: usize) -> String {
    let (seed, sigma_names) = match seed_by_name(seed_name) {
        Ok(pair) => pair,
        Err(e) => return format!("<p class=\"err\">{}</p>", escape(&e)),
    };
    let sigma = match Alphabet::new(sigma_names) {
        Ok(s) => s,
        Err(e) => return format!("<p class=\"err\">{}</p>", escape(&e.to_string())),
    };
    let bound = max_len.clamp(1, 8);
    let solvable = match solvable_upto(&seed, bound, CAP) {
        Ok(v) => v.solvable_up_to,
        Err(e) => return format!("<p class=\"err\">{}</p>", escape(&e.to_string())),
    };
    let covered = match covered_language_upto(&seed, &sigma, bound, CAP) {
        Ok(c) => c,
        Err(e) => return format!("<p class=\"err\">{}</p>", escape(&e.to_string())),
    };
    let mut html = format!(
        "<p>solvable up to length {bound}: <strong>{solvable}</strong></p><ul class=\"covered\">"
    );
    for (len, set) in covered {
        let words: Vec<String> =
            set.iter().map(|w| escape(&seed.alphabet().format_word(w))).collect();
        let listing = if words.is_empty() { "—".to_string() } else { words.join(" ") };
        html.push_str(&format!("<li>length {len}: <code>{listing}</code></li>"));
    }
    html.push_str("</ul>");
    html
}
