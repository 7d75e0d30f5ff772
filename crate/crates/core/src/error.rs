use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {symbol} at position {position} is outside the alphabet 1..={q}")]
    InvalidSymbol { symbol: u32, position: usize, q: u8 },

    #[error("alphabet size {0} is out of range (need 2..=255)")]
    InvalidAlphabet(u32),

    #[error("index {index} out of range for word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("word of length {len} exceeds the enumeration cap of {cap}")]
    CapExceeded { len: usize, cap: usize },

    #[error("expected {expected} slots, got {actual}")]
    SlotMismatch { expected: usize, actual: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("vertex {vertex} is not in the graph (size {size})")]
    VertexOutsideGraph { vertex: usize, size: usize },

    #[error("parameter `{name}` out of range: {reason}")]
    OutOfRange { name: &'static str, reason: String },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(name: &'static str, reason: impl Into<String>) -> Error {
    Error::OutOfRange {
        name,
        reason: reason.into(),
    }
}
