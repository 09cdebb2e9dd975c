use thiserror::Error;

/// Everything that can go wrong when setting up or evaluating an instance.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} must be positive")]
    PositiveRequired { what: &'static str },

    #[error("k must be at least 2 (got {k})")]
    InvalidK { k: u32 },

    #[error("exponent vector has {got} entries but the ring has {expected} generators")]
    GeneratorCount { expected: u32, got: usize },

    #[error("generator index {i} out of range 1..={g}")]
    GeneratorIndex { i: u32, g: u32 },

    #[error("slot index {r} out of range 2..={k}")]
    SlotIndex { r: u32, k: u32 },

    #[error("tensor monomial has {got} slots but the context has {expected}")]
    SlotCount { expected: u32, got: usize },

    #[error("digit index {i} exceeds the bit length of {m}")]
    DigitIndex { m: u64, i: u32 },

    #[error("exponent family shaped for (k={got_k}, g={got_g}) used in a (k={want_k}, g={want_g}) context")]
    ShapeMismatch {
        want_k: u32,
        want_g: u32,
        got_k: u32,
        got_g: u32,
    },

    #[error("malformed exponent family: {reason}")]
    InvalidTuple { reason: String },

    #[error("instance too large: {what}")]
    TooLarge { what: String },

    #[error("budget exhausted during {what} after {spent} expanded terms")]
    BudgetExhausted { what: String, spent: u64 },

    #[error("no generating polynomial for n={n}, g={g}: needs g >= 2 or n a power of two")]
    UnsupportedRegime { n: u64, g: u64 },

    #[error("arithmetic tail check needs g >= {need} when n = {n} (got g = {g})")]
    OutOfRegime { n: u64, g: u64, need: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
