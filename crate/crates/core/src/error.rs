use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the identity engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,

    #[error("series has zero constant term and cannot be inverted")]
    NonInvertible,

    #[error("substitution exponent must be >= 1, got {0}")]
    InvalidExponent(i64),

    #[error("infinite product contains the vanishing factor (1 - q^0)")]
    DivergentSpec,

    #[error("quintuple product specialization q^{base} with z = {z_sign}q^{z_pow} has a factor with non-positive leading exponent")]
    IllSpecialized { base: u32, z_sign: i8, z_pow: i64 },

    #[error("theta exponent is fractional at j = {j}")]
    NonIntegralExponent { j: i64 },

    #[error("theta exponent is negative at j = {j} on the summation support")]
    NegativeExponent { j: i64 },

    #[error("seed fails its defining relation at L = {l} after re-indexing")]
    ConventionMismatch { l: i64 },

    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),

    #[error("unknown seed id: {0}")]
    UnknownSeed(String),

    #[error("parameters out of range for {id}: {detail}")]
    ParamsOutOfRange { id: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
