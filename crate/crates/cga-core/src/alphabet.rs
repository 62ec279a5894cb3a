//! Alphabets of interned symbol names, and words over them.
//!
//! Symbols are short strings rather than single characters, so constructed
//! names like `n:[` (the neutralised copy of `[`) or `□/x` (a paired track
//! symbol) remain readable. Words are stored as vectors of symbol indices
//! into their alphabet.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Index of a symbol within its [`Alphabet`].
pub type SymbolId = usize;

/// A word over some alphabet, as a sequence of symbol indices.
pub type Word = Vec<SymbolId>;

/// The observation symbol reserved for initial and final game states.
pub const HASH: &str = "#";

/// The blank symbol used by Dyck transducers and domino bottom rows.
pub const BOX: &str = "□";

/// Spelling of the empty word in words parsed from or rendered to text.
pub const EPSILON: &str = "ε";

/// An ordered set of distinct symbol names.
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, SymbolId>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

fn check_symbol_name(name: &str) -> Result<()> {
    if name.is_empty() {
        return Err(Error::BadSymbolName(name.into(), "empty name"));
    }
    if name == EPSILON {
        return Err(Error::BadSymbolName(name.into(), "reserved for the empty word"));
    }
    if name.chars().any(|c| c.is_whitespace() || c == ',') {
        return Err(Error::BadSymbolName(
            name.into(),
            "whitespace and `,` are reserved separators",
        ));
    }
    Ok(())
}

impl Alphabet {
    /// Builds an alphabet from symbol names, rejecting duplicates and names
    /// that contain reserved separator characters.
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut list = Vec::new();
        let mut index = HashMap::new();
        for s in symbols {
            let s: String = s.into();
            check_symbol_name(&s)?;
            if index.insert(s.clone(), list.len()).is_some() {
                return Err(Error::DuplicateSymbol(s));
            }
            list.push(s);
        }
        Ok(Alphabet { symbols: list, index })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<SymbolId> {
        self.index.get(name).copied()
    }

    /// Like [`Alphabet::id`] but reports the missing symbol as an error.
    pub fn id_checked(&self, name: &str) -> Result<SymbolId> {
        self.id(name).ok_or_else(|| Error::SymbolNotInAlphabet(name.into()))
    }

    pub fn name(&self, id: SymbolId) -> &str {
        &self.symbols[id]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.symbols.iter().map(|s| s.as_str())
    }

    pub fn ids(&self) -> std::ops::Range<SymbolId> {
        0..self.symbols.len()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// True if every symbol of `other` is also a symbol of `self`.
    pub fn contains_all(&self, other: &Alphabet) -> bool {
        other.names().all(|n| self.contains(n))
    }

    /// Union by symbol name. Returns the merged alphabet together with the
    /// id remappings for both operands (symbols of `self` keep their order).
    pub fn union(&self, other: &Alphabet) -> (Alphabet, Vec<SymbolId>, Vec<SymbolId>) {
        let mut merged = self.clone();
        let map_self: Vec<SymbolId> = self.ids().collect();
        let mut map_other = Vec::with_capacity(other.len());
        for name in other.names() {
            let id = match merged.id(name) {
                Some(id) => id,
                None => {
                    let id = merged.symbols.len();
                    merged.symbols.push(name.to_string());
                    merged.index.insert(name.to_string(), id);
                    id
                }
            };
            map_other.push(id);
        }
        (merged, map_self, map_other)
    }

    /// Id remapping for embedding words of `self` into `target`.
    /// Fails if some symbol of `self` is missing from `target`.
    pub fn embedding(&self, target: &Alphabet) -> Result<Vec<SymbolId>> {
        self.names().map(|n| target.id_checked(n)).collect()
    }

    /// Parses a word. A text that is itself a symbol name is that one-letter
    /// word; a text containing `,` is split at commas; anything else is read
    /// as a sequence of single characters. The spelling `ε` denotes the
    /// empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if text.is_empty() || text == EPSILON {
            return Ok(Vec::new());
        }
        if let Some(id) = self.id(text) {
            return Ok(vec![id]);
        }
        if text.contains(',') {
            text.split(',').map(|tok| self.id_checked(tok)).collect()
        } else {
            text.chars()
                .map(|c| self.id_checked(&c.to_string()))
                .collect()
        }
    }

    /// Renders a word for humans: concatenated when every symbol is a single
    /// character, comma-joined otherwise.
    pub fn format_word(&self, word: &[SymbolId]) -> String {
        if word.is_empty() {
            return EPSILON.to_string();
        }
        if word.iter().all(|&s| self.symbols[s].chars().count() == 1) {
            word.iter().map(|&s| self.symbols[s].as_str()).collect()
        } else {
            self.format_word_canonical(word)
        }
    }

    /// Renders a word in the canonical comma-joined form used by documents
    /// and machine output.
    pub fn format_word_canonical(&self, word: &[SymbolId]) -> String {
        if word.is_empty() {
            return EPSILON.to_string();
        }
        word.iter()
            .map(|&s| self.symbols[s].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbols.join(" "))
    }
}

/// Shared handle to an alphabet.
pub type AlphabetRef = Arc<Alphabet>;

/// A finite set of words that all share one length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSet {
    length: usize,
    words: std::collections::BTreeSet<Word>,
}

impl WordSet {
    pub fn empty(length: usize) -> Self {
        WordSet { length, words: Default::default() }
    }

    pub fn new<I: IntoIterator<Item = Word>>(length: usize, words: I) -> Result<Self> {
        let mut set = std::collections::BTreeSet::new();
        for w in words {
            if w.len() != length {
                return Err(Error::LengthMismatch { left: length, right: w.len() });
            }
            set.insert(w);
        }
        Ok(WordSet { length, words: set })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &[SymbolId]) -> bool {
        self.words.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn insert(&mut self, w: Word) -> Result<bool> {
        if w.len() != self.length {
            return Err(Error::LengthMismatch { left: self.length, right: w.len() });
        }
        Ok(self.words.insert(w))
    }

    pub fn into_words(self) -> std::collections::BTreeSet<Word> {
        self.words
    }
}
