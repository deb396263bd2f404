//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by constructions, classifications and numerical checks.
///
/// Verification failures (a nonzero residual, an off-diagonal Gram entry
/// above tolerance) are *not* errors: they are reported in the returned
/// report structures. Errors signal that a computation could not be carried
/// out for the given inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation that needs a nonzero polynomial received the zero polynomial.
    #[error("zero polynomial")]
    ZeroPolynomial,

    /// The leading coefficient of a Jacobi polynomial vanishes for these parameters.
    #[error("degree collapse: P_{n}^({alpha},{beta}) has vanishing leading coefficient")]
    DegreeCollapse {
        /// Requested degree.
        n: usize,
        /// First Jacobi index.
        alpha: String,
        /// Second Jacobi index.
        beta: String,
    },

    /// A construction produced a polynomial of lower degree than its bookkeeping predicts.
    #[error("degree mismatch: expected degree {expected}, found {found}")]
    DegreeMismatch {
        /// Degree required by the construction.
        expected: usize,
        /// Degree actually obtained.
        found: usize,
    },

    /// Division by an exact zero scalar.
    #[error("division by zero: {0}")]
    DivisionByZero(String),

    /// `(1 ± η)^2` divides a polynomial determinant.
    #[error("simple-root violation: (1{sign}η)^2 divides the polynomial determinant")]
    SimpleRootViolation {
        /// `'+'` for a double root at η = −1, `'-'` for η = +1.
        sign: char,
    },

    /// A polynomial that must be squarefree has a repeated root.
    #[error("repeated root: {0}")]
    RepeatedRoot(String),

    /// A precondition on indices or parameters is violated.
    #[error("range violation: {0}")]
    RangeViolation(String),

    /// No row of the seed classification table matches the sign triple.
    #[error("no seed type matches the sign triple {0}")]
    NoSuchType(String),

    /// The exponent-difference pair is invalid (zero component or wrong quadrant).
    #[error("invalid exponent differences: {0}")]
    InvalidLambda(String),

    /// The discrete spectrum is empty.
    #[error("empty spectrum: λ_- − λ_+ − 1 = {0} < 0, no bound states")]
    EmptySpectrum(String),

    /// An integral over [1, ∞) does not converge.
    #[error("divergent integral: {0}")]
    DivergentIntegral(String),

    /// A weight denominator vanishes inside the closed integration interval.
    #[error("weight has a pole in the integration interval")]
    WeightPoleInInterval,

    /// A seed is not admissible as a factorization function.
    #[error("seed not admissible: {0}")]
    AdmissibilityError(String),

    /// A deformed potential has a pole inside (1, ∞).
    #[error("potential has a pole inside the domain")]
    PoleInDomain,

    /// The finite-difference grid did not resolve the spectrum.
    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    /// Malformed textual input (rationals, signs, family names).
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
