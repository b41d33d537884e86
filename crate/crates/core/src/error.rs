use crate::word::Alphabet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A word over one alphabet was handed to something defined on another.
    #[error("word over `{found}` used where a word over `{expected}` is required")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },

    #[error("symbol {symbol:?} is not in alphabet `{alphabet}`")]
    UnknownSymbol { symbol: char, alphabet: Alphabet },

    #[error("letter code {code} is outside alphabet `{alphabet}`")]
    LetterOutOfRange { code: u8, alphabet: Alphabet },

    #[error("invalid alphabet {0:?}: symbols must be distinct and there must be 1..=32 of them")]
    InvalidAlphabet(&'static str),

    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),

    #[error("relabeling is not a bijection: {0}")]
    NotABijection(String),

    /// The requested object would hold more letters than the configured cap.
    #[error("capacity exceeded: {requested} letters requested, cap is {cap}")]
    Capacity { requested: u128, cap: usize },

    #[error("{0} is not a factor of the fixed point")]
    NotAFactor(String),

    #[error("length {0} is outside the regime L >= 4 covered by the closed form")]
    OutOfRegime(u64),

    #[error("length must be positive")]
    ZeroLength,
}
