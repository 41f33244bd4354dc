//! Dense polynomials and polynomial quotients (rational functions).
//!
//! Rational functions are kept as numerator/denominator pairs without
//! normalization so closed forms stay recognizable; only expansion at 0
//! requires a unit constant term in the denominator.

use std::fmt;

use num_traits::Zero;

use crate::scalar::Scalar;
use crate::series::{SeriesError, TruncatedSeries};
use crate::{Int, Rational};

/// Dense univariate polynomial, low degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(T::zero());
        }
    }

    pub fn zero() -> Self {
        Poly {
            coeffs: vec![T::zero()],
        }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x^d`.
    pub fn x_pow(d: usize) -> Self {
        let mut coeffs = vec![T::zero(); d + 1];
        coeffs[d] = T::one();
        Poly { coeffs }
    }

    pub fn coeff(&self, d: usize) -> T {
        self.coeffs.get(d).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|d| self.coeff(d) - other.coeff(d)).collect())
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }

    /// View the polynomial as a truncated series.
    pub fn to_series(&self, truncation: usize) -> TruncatedSeries<T> {
        TruncatedSeries::new((0..=truncation).map(|d| self.coeff(d)).collect())
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in 0..=self.degree() {
            let c = self.coeff(d);
            if c.is_zero() {
                continue;
            }
            let piece = if d == 0 {
                format!("{c}")
            } else if c.is_one() {
                format!("x^{d}")
            } else if (-c.clone()).is_one() {
                format!("-x^{d}")
            } else {
                format!("{c}*x^{d}")
            };
            if first {
                write!(f, "{piece}")?;
            } else if let Some(stripped) = piece.strip_prefix('-') {
                write!(f, "-{stripped}")?;
            } else {
                write!(f, "+{piece}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Quotient of integer-coefficient polynomials with `den(0) != 0`.
///
/// Not reduced to lowest terms; the numerator and denominator are stored as
/// they were assembled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly<Int>,
    den: Poly<Int>,
}

impl RationalFunction {
    pub fn new(num: Poly<Int>, den: Poly<Int>) -> Result<Self, SeriesError> {
        if den.coeff(0).is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(num: Poly<Int>) -> Self {
        RationalFunction {
            num,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn numerator(&self) -> &Poly<Int> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<Int> {
        &self.den
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalFunction {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    /// Taylor expansion at 0 to `max_degree`, exact.
    pub fn expand(&self, max_degree: usize) -> Result<TruncatedSeries<Rational>, SeriesError> {
        let num = int_series(&self.num, max_degree);
        let den = int_series(&self.den, max_degree);
        Ok(num.mul(&den.inverse()?))
    }
}

/// Integer polynomial viewed as a rational-coefficient series.
pub fn int_series(p: &Poly<Int>, truncation: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::new(
        (0..=truncation)
            .map(|d| Rational::from_integer(p.coeff(d)))
            .collect(),
    )
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_zero() || self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Integer polynomial from machine integers, low degree first.
pub fn int_poly(coeffs: &[i64]) -> Poly<Int> {
    Poly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
}

/// The polynomial `1 - x^d`.
pub fn one_minus_x_pow(d: usize) -> Poly<Int> {
    Poly::<Int>::one().sub(&Poly::x_pow(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::Series;

    fn s(coeffs: &[i64]) -> Series {
        TruncatedSeries::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Polynomial long division oracle: repeatedly cancel the lowest term.
    /// Valid when the division is exact up to the requested degree.
    fn long_division(num: &Poly<Int>, den: &Poly<Int>, max_degree: usize) -> Vec<Rational> {
        let mut rem: Vec<Rational> = (0..=max_degree + den.degree())
            .map(|d| Rational::from_integer(num.coeff(d)))
            .collect();
        let d0 = Rational::from_integer(den.coeff(0));
        let mut out = Vec::new();
        for d in 0..=max_degree {
            let q = rem[d].clone() / d0.clone();
            out.push(q.clone());
            for j in 0..=den.degree() {
                let t = q.clone() * Rational::from_integer(den.coeff(j));
                rem[d + j] -= t;
            }
        }
        out
    }

    #[test]
    fn expand_finite_geometric_quotient() {
        // (1-x^6)/(1-x^2) = 1 + x^2 + x^4
        let rf = RationalFunction::new(one_minus_x_pow(6), one_minus_x_pow(2)).unwrap();
        assert_eq!(rf.expand(6).unwrap(), s(&[1, 0, 1, 0, 1, 0, 0]));
    }

    #[test]
    fn expand_geometric() {
        let rf = RationalFunction::new(Poly::one(), one_minus_x_pow(4)).unwrap();
        assert_eq!(rf.expand(8).unwrap(), s(&[1, 0, 0, 0, 1, 0, 0, 0, 1]));
    }

    #[test]
    fn expand_against_long_division_oracle() {
        // x^3 (1-x^8)(1+x^2+x^4) / (1-x^4), truncated at 11
        let num = Poly::x_pow(3)
            .mul(&one_minus_x_pow(8))
            .mul(&int_poly(&[1, 0, 1, 0, 1]));
        let den = one_minus_x_pow(4);
        let rf = RationalFunction::new(num.clone(), den.clone()).unwrap();
        let got = rf.expand(11).unwrap();
        let oracle = long_division(&num, &den, 11);
        for d in 0..=11 {
            assert_eq!(got.coeff(d), oracle[d], "degree {d}");
        }
        assert_eq!(got, s(&[0, 0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1]));
    }

    #[test]
    fn expand_rejects_zero_constant_denominator() {
        assert!(RationalFunction::new(Poly::one(), Poly::x_pow(1)).is_err());
    }

    #[test]
    fn add_over_common_denominator() {
        // 1/(1-x) + x = (1 + x - x^2)/(1-x)
        let a = RationalFunction::new(Poly::one(), one_minus_x_pow(1)).unwrap();
        let b = RationalFunction::from_poly(Poly::x_pow(1));
        let sum = a.add(&b);
        assert_eq!(sum.numerator(), &int_poly(&[1, 1, -1]));
        assert_eq!(sum.denominator(), &int_poly(&[1, -1]));
    }
}
