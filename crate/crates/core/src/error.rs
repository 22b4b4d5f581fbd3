use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of every operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("dimension mismatch: expected {expected} exponents, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ring mismatch: ideals live in different polynomial rings")]
    RingMismatch,

    #[error("exponent overflow while multiplying monomials")]
    ExponentOverflow,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a proper ideal (got the unit ideal)")]
    UnitIdeal,

    #[error("ideal is not primary to the maximal ideal")]
    NotMPrimary,

    #[error("{what} has {size} elements, exceeding the cap of {cap}")]
    ResourceCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("interpolation system is singular")]
    SingularSystem,

    #[error("invalid fit window: {0}")]
    InvalidFitWindow(String),

    #[error("coefficient c[{index}] = {value} is not an integer")]
    NonIntegralCoefficient { index: usize, value: String },

    #[error("coefficient c[{index}] = {value} is negative")]
    NegativeCoefficient { index: usize, value: String },

    #[error("coefficient c[{index}] = {value} does not fit in 64 bits")]
    CoefficientOverflow { index: usize, value: String },

    #[error(
        "Hilbert polynomial did not stabilize within grid cap {cap} \
         (last grid {last_grid}x{last_grid}): {detail}"
    )]
    GridCapExceeded {
        cap: usize,
        last_grid: usize,
        detail: String,
    },

    #[error("degenerate simplex in facet triangulation")]
    DegenerateSimplex,

    #[error("finite differences did not stabilize within {0} terms")]
    Inconclusive(usize),
}
