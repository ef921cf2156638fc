use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be monic of degree {expected}, got {found} coefficients")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("modulus coefficient {0} is not a residue mod p")]
    BadModulusCoefficient(u64),
    #[error("modulus polynomial is reducible over the prime field")]
    ReduciblePolynomial,
    #[error("no built-in modulus for GF({p}^{m})")]
    NoTableEntry { p: u64, m: u32 },
    #[error("field GF({p}^{m}) exceeds the supported size 2^20")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("Frobenius exponent e={e} outside 0..{m}")]
    EOutOfRange { e: u32, m: u32 },
    #[error("cannot parse field element {0:?}")]
    Syntax(String),
    #[error("value {0:?} does not lie in the field")]
    ValueOutOfField(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("generator matrix is zero")]
    ZeroMatrix,
    #[error("codes have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("enumeration needs {needed} steps, cap is {cap}")]
    EnumerationCapExceeded { needed: u128, cap: u128 },

    #[error("evaluation points are not pairwise distinct")]
    DuplicatePoints,
    #[error("invalid code specification: {0}")]
    InvalidSpec(String),
    #[error("C({n},{k}) subsets exceed the cap {cap}")]
    CombinatorialCapExceeded { n: usize, k: usize, cap: u128 },

    #[error("dimension k={k} outside the range 3..=n-3 for n={n}")]
    DimensionOutOfRange { n: usize, k: usize },
    #[error("search needs {needed} candidate tests, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("class 2 deep holes need 1 + eta * sum(S) != 0")]
    Class2Unavailable,

    #[error("malformed JSON input: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
