//! The scalar ring: multivariate Laurent polynomials over arbitrary-precision
//! integers, and unreduced fractions of them.
//!
//! Variables are anonymous slots `0..nvars`; display names (`z1`, `z2`, ...,
//! or `t` after specialization) are chosen at print time. Every polynomial
//! carries its ambient variable count and all binary operations insist the
//! counts match.

mod fraction;
mod laurent;

pub use fraction::Fraction;
pub use laurent::{ExpVec, LaurentPoly};

use std::fmt;

/// Errors from exact ring arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingError {
    /// Two operands live in rings with different variable counts.
    VarMismatch { left: usize, right: usize },
    /// Division by the zero polynomial.
    DivisionByZero,
    /// `exact_div` found no exact quotient in the Laurent ring.
    NonDivisible,
    /// A specialization was applied to an element outside its domain
    /// (t-rewrite requires every exponent divisible by 4).
    NotInImage { exponent: i64 },
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::VarMismatch { left, right } => {
                write!(f, "variable count mismatch: {left} vs {right}")
            }
            RingError::DivisionByZero => write!(f, "division by zero polynomial"),
            RingError::NonDivisible => write!(f, "no exact quotient in the Laurent ring"),
            RingError::NotInImage { exponent } => {
                write!(f, "exponent {exponent} not divisible by 4; not in the image of t = z^-4")
            }
        }
    }
}

impl std::error::Error for RingError {}

/// Scalar interface shared by [`LaurentPoly`] and [`Fraction`] so matrices and
/// operators can be generic over the coefficient ring. Methods take references
/// because coefficients are heap-backed.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}
