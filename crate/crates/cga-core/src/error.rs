use thiserror::Error;

/// Errors shared across the library.
///
/// Structural problems in games and domino systems are *not* errors: they are
/// reported as violation lists by the respective `validate` functions, so that
/// a caller can see all problems at once.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol `{0}` is not in the alphabet")]
    SymbolNotInAlphabet(String),
    #[error("invalid symbol name `{0}`: {1}")]
    BadSymbolName(String, &'static str),
    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),
    #[error("word lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("operands use different alphabets")]
    AlphabetMismatch,
    #[error("enumeration cap of {cap} words exceeded")]
    CapExceeded { cap: usize },
    #[error("not a play of this game: {0}")]
    InvalidPlay(String),
    #[error("invalid game: {0}")]
    InvalidGame(String),
    #[error("strategy table has no entry for observation `{0}`")]
    PartialStrategy(String),
    #[error("seed languages are not disjoint (witness `{0}`)")]
    NondisjointSeedLanguages(String),
    #[error("observation alphabets overlap beyond the terminal alphabet: {0}")]
    AlphabetOverlap(String),
    #[error("seed is unsolvable within the checked bound (conflict at `{0}`)")]
    UnsolvableSeed(String),
    #[error("decision conflict at `{word}`: forced to 1 and 0 at once")]
    DecisionConflict {
        word: String,
        /// Reflection chain from the word into the accepting language.
        chain_to_acc: Vec<String>,
        /// Reflection chain from the word into the rejecting language.
        chain_to_rej: Vec<String>,
    },
    #[error("invalid domino system: {0}")]
    InvalidDomino(String),
    #[error("frontier words must be non-empty")]
    EmptyFrontierWord,
    #[error("grammar is not in Chomsky normal form")]
    NotCnf,
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("transducer does not have the coded Dyck shape")]
    NotACodedDyckTransducer,
}

pub type Result<T> = std::result::Result<T, Error>;
