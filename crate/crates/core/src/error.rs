use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by automaton algebra, enumeration, the polynomial pipeline
/// and the text formats.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid letter token {0:?}")]
    InvalidLetter(String),
    #[error("duplicate letter {0:?} in alphabet")]
    DuplicateLetter(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
    #[error("automata are defined over different alphabets")]
    AlphabetMismatch,
    #[error("rename maps two letters onto {0:?}")]
    NonInjectiveRename(String),
    #[error("letter {0:?} is not part of the target alphabet")]
    LetterNotInTarget(String),
    #[error("alphabets of union parts overlap on letter {0:?}")]
    OverlappingAlphabets(String),
    #[error("state {state} out of range (state count {count})")]
    StateOutOfRange { state: usize, count: usize },
    #[error("word {0:?} is already in the language")]
    WordAlreadyPresent(String),
    #[error("word {0:?} is not in the language")]
    WordAbsent(String),
    #[error("word {0:?} is not in the language of the numeration system")]
    NotInLanguage(String),
    #[error("a numeration system needs an infinite language")]
    FiniteLanguage,
    #[error("construction exceeded the state budget of {0}")]
    ResourceLimit(usize),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("polynomial is not integer valued: P({0}) is not an integer")]
    NotIntegerValued(u64),
    #[error("polynomial takes a negative value at n = {0}")]
    NegativeValue(u64),
    #[error("polynomial has a negative leading coefficient")]
    NegativeLeadingCoefficient,
    #[error("borrow decomposition drives the leading coefficient below zero")]
    InfeasibleDecomposition,
    #[error("cannot add words below length 1 (alpha = {alpha}, missing {missing})")]
    CannotAdjust { alpha: usize, missing: BigInt },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("line {line}: duplicate transition")]
    DuplicateTransition { line: usize },
    #[error("line {line}: unknown state {state}")]
    UnknownState { line: usize, state: usize },
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
