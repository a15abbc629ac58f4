use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("atom {atom} is out of range for width {width}")]
    AtomOutOfRange { atom: u32, width: usize },

    #[error("width {width} exceeds the enumeration cap {cap}")]
    WidthTooLarge { width: usize, cap: usize },

    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("derived-term automaton exceeded {cap} states")]
    StateCapExceeded { cap: usize },

    #[error("position count exceeded the cap of {cap}")]
    PositionCapExceeded { cap: usize },

    #[error("symbol {0} is not in the automaton alphabet")]
    UnknownSymbol(String),

    #[error("automaton is not deterministic")]
    NotDeterministic,

    #[error("alphabet has {available} symbols but {needed} are required")]
    AlphabetTooSmall { needed: usize, available: usize },

    #[error("parameter {value} exceeds the cap {cap}")]
    ParameterTooLarge { value: usize, cap: usize },

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
