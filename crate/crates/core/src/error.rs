use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error: the input
/// was well-formed but violates a precondition of the operation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero denominator in rational {0}/0")]
    ZeroDenominator(String),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("invalid slope ({p},{q}): {reason}")]
    InvalidSlope { p: i64, q: i64, reason: &'static str },

    #[error("degenerate slope constraints: f and c are the same slope {0}")]
    DegenerateSlopes(String),

    #[error("invalid Seifert symbol: {0}")]
    InvalidSymbol(String),

    #[error("fiber index {index} out of range (symbol has {len} fiber terms)")]
    FiberIndex { index: usize, len: usize },

    #[error("fiber {index} is not exceptional (alpha = {alpha})")]
    NotExceptional { index: usize, alpha: i64 },

    #[error("first homology is only implemented for Oo base classes")]
    UnsupportedClass,

    #[error("degenerate prism parameter n = {n}: |4n-1| = {index} < 3")]
    DegeneratePrism { n: i64, index: i64 },

    #[error("invalid orbifold: {0}")]
    InvalidOrbifold(String),

    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    #[error("inconsistent branching data: {0}")]
    InconsistentBranching(String),

    #[error("cover is not determined by the supplied data: {0}")]
    Undetermined(String),

    #[error("infinitely many solutions: chi(F) = 0 and chi_orb(B) = 0")]
    InfiniteSolutions,

    #[error("expected an orientable orbifold")]
    ExpectedOrientable,

    #[error("expected a non-orientable orbifold")]
    ExpectedNonOrientable,

    #[error("invalid Montesinos link: {0}")]
    InvalidLink(String),

    #[error("invalid braid word: {0}")]
    InvalidBraid(String),

    #[error("braid word is not positive (letter {0})")]
    NotPositive(i32),

    #[error("braid closure has {0} components; genus is only reported for knots")]
    NotAKnot(usize),

    #[error("invalid group presentation: {0}")]
    InvalidPresentation(String),

    #[error("enumeration too large: {candidates} candidate tuples exceeds the guard of {guard}")]
    TooLarge { candidates: f64, guard: f64 },

    #[error("invalid cover certificate: {0}")]
    InvalidCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
