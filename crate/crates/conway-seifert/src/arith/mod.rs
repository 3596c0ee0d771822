//! Exact arithmetic: big integers and rationals, Laurent polynomials,
//! rational functions, truncated Taylor series, and matrices over these rings.
//!
//! Every value is immutable once built and every operation is exact; there is
//! no floating point anywhere in this crate.

pub mod conway;
pub mod laurent;
pub mod matrix;
pub mod ratfunc;
pub mod series;

pub use conway::{to_conway_basis, ConwayPoly};
pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use ratfunc::RationalFunction;
pub use series::{series_of_ratfunc, TruncatedSeries};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rat = num_rational::BigRational;

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("denominator of a rational function is zero")]
    ZeroDenominator,
    #[error("division by a zero rational function")]
    DivisionByZero,
    #[error("series has zero constant term and is not invertible")]
    NonInvertibleSeries,
    #[error("rational function has a pole at t = 1")]
    PoleAtOne,
    #[error("Laurent polynomial is not a polynomial in z = s - 1/s (remainder {remainder})")]
    NotInConwayImage { remainder: String },
}

/// Minimal commutative-ring interface shared by all coefficient types.
///
/// Operations take owned values; everything here is `Clone` and the matrices
/// clone entries as needed.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Rings supporting the exact divisions required by fraction-free elimination.
///
/// `exact_div` panics when the division is not exact; Bareiss pivoting only
/// ever divides by previously computed minors, where exactness is guaranteed.
pub trait ExactDiv: Ring {
    fn exact_div(&self, divisor: &Self) -> Self;

    /// A unit dividing every element of `row`, pulled out of matrix rows
    /// before elimination (`s^k` for Laurent polynomials). Defaults to one.
    fn common_row_unit(_row: &[Self]) -> Self {
        Self::one()
    }
}

impl Ring for Int {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl ExactDiv for Int {
    fn exact_div(&self, divisor: &Self) -> Self {
        let r = self % divisor;
        assert!(r.is_zero(), "inexact integer division {self} / {divisor}");
        self / divisor
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl ExactDiv for Rat {
    fn exact_div(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero rational");
        self / divisor
    }
}
