//! Coefficient scalars for the series and polynomial layer.
//!
//! The series/polynomial machinery is generic over any commutative field-like
//! scalar exposing the `num-traits` surface. The shipped instantiation is
//! exact arbitrary-precision rationals (see the crate-root aliases); nothing
//! in this crate computes with floating point.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{Num, NumAssignOps};

/// Scalar usable as a series or polynomial coefficient.
pub trait Scalar:
    Clone + PartialEq + Num + NumAssignOps + Neg<Output = Self> + Debug + Display
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Num + NumAssignOps + Neg<Output = T> + Debug + Display
{
}

/// Shorthand for an exact rational from machine integers.
pub fn rat(n: i64, d: i64) -> crate::Rational {
    assert!(d != 0, "zero denominator");
    crate::Rational::new(n.into(), d.into())
}

/// Integer as an exact rational.
pub fn int(n: i64) -> crate::Rational {
    crate::Rational::from_integer(n.into())
}
