use thiserror::Error;

/// Errors raised by the omega-power toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is outside the supported range 2..=16")]
    AlphabetSize(usize),

    #[error("letter {letter} is outside the alphabet of size {size}")]
    LetterOutOfRange { letter: u8, size: usize },

    #[error("the empty word has no primitive root")]
    EmptyWord,

    #[error("the cycle of a lasso must be nonempty")]
    EmptyCycle,

    #[error("chunk index {index} is out of range for {cuts} cut lengths")]
    ChunkOutOfRange { index: usize, cuts: usize },

    #[error("cut length at chunk {0} must be positive")]
    ZeroCut(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("the dictionary contains the empty word")]
    EmptyWordInCode,

    #[error("the dictionary denotes an infinite language; a finite dictionary is required")]
    NotFinite,

    #[error("the lasso {0} is not in the omega-power")]
    NotMember(String),

    #[error("no valid chunk found within {0} letters")]
    NoChunk(usize),

    #[error("tree is not prefix-closed: {0} is missing")]
    NotPrefixClosed(String),

    #[error("arithmetic overflow while computing a sequence code")]
    Overflow,

    #[error("word of {0} letters is too long to materialize")]
    TooLong(u128),

    #[error("automaton construction exceeded {0} states")]
    StateLimit(usize),

    #[error("alphabets differ: {0} vs {1}")]
    AlphabetMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
