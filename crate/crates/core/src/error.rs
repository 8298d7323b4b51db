use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subset members must be strictly increasing: {0:?}")]
    NotIncreasing(Vec<usize>),

    #[error("arity mismatch: expected {expected}-element subset, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("point {point} out of range for ground size {ground_size}")]
    PointOutOfRange { point: usize, ground_size: usize },

    #[error("color {color} out of range for {num_colors} colors")]
    ColorOutOfRange { color: u64, num_colors: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("malformed KRT document: {0}")]
    Krt(String),

    #[error("empty input")]
    EmptyInput,

    #[error("budget exceeded at N={ground_size}: {required} colorings required, budget is {budget}; p > {lower_bound}")]
    BudgetExceeded {
        ground_size: usize,
        required: BigUint,
        budget: u64,
        /// Largest ground size known to fail, i.e. `p > lower_bound`.
        lower_bound: usize,
    },

    #[error("the counting bound needs r >= 1 (got r = 0)")]
    BoundUndefined,

    #[error("computed p = {value} is not below the counting bound {bound}")]
    BoundViolated { value: usize, bound: BigUint },

    #[error("oracle query failed: {0}")]
    Oracle(String),
}
