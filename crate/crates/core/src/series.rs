//! Truncated formal power series with exact coefficients.
//!
//! A `TruncatedSeries` stores coefficients for degrees `0..=truncation`;
//! binary operations truncate to the minimum of the two truncation degrees.

use std::fmt;

use crate::scalar::Scalar;

/// Errors from series operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Inversion or expansion requires a nonzero constant term.
    ZeroConstantTerm,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ZeroConstantTerm => write!(f, "constant term is zero"),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Power series truncated at a fixed degree, coefficients indexed `0..=truncation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Series from an explicit coefficient list; the truncation degree is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    pub fn zero(truncation: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![T::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0] = T::one();
        s
    }

    /// The monomial `c * x^d`, truncated at `truncation` (zero if `d > truncation`).
    pub fn monomial(c: T, d: usize, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if d <= truncation {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^d` (zero beyond the truncation degree).
    pub fn coeff(&self, d: usize) -> T {
        self.coeffs.get(d).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-truncate (extending with zeros or dropping high coefficients).
    pub fn truncate(&self, truncation: usize) -> Self {
        let mut coeffs: Vec<T> = self.coeffs.iter().take(truncation + 1).cloned().collect();
        while coeffs.len() < truncation + 1 {
            coeffs.push(T::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let coeffs = (0..=n).map(|d| self.coeff(d) + other.coeff(d)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let coeffs = (0..=n).map(|d| self.coeff(d) - other.coeff(d)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Cauchy product truncated at the minimum of the two truncation degrees.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let mut coeffs = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse up to the truncation degree.
    ///
    /// Uses the triangular recursion `b_0 = 1/a_0`,
    /// `b_n = -(a_1 b_{n-1} + ... + a_n b_0) / a_0`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.truncation();
        let a0 = self.coeffs[0].clone();
        let mut inv = vec![T::zero(); n + 1];
        inv[0] = T::one() / a0.clone();
        for d in 1..=n {
            let mut acc = T::zero();
            for i in 1..=d {
                if !self.coeffs[i].is_zero() && !inv[d - i].is_zero() {
                    acc += self.coeffs[i].clone() * inv[d - i].clone();
                }
            }
            inv[d] = -acc / a0.clone();
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Degrees with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..=self.truncation())
            .filter(|&d| !self.coeff(d).is_zero())
            .collect()
    }

    /// The `degree:coefficient` rendering used by the CLI, nonzero terms only.
    pub fn support_string(&self) -> String {
        let parts: Vec<String> = self
            .support()
            .iter()
            .map(|&d| format!("{}:{}", d, self.coeff(d)))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

impl<T: Scalar> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in 0..=self.truncation() {
            let c = self.coeff(d);
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            if d == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "x^{d}")?;
            } else {
                write!(f, "{c}*x^{d}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::Series;

    fn s(coeffs: &[i64]) -> Series {
        TruncatedSeries::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn mul_difference_of_squares() {
        // (1+x)(1-x) = 1 - x^2 at truncation 2
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])), s(&[1, 0, -1]));
    }

    #[test]
    fn mul_identity() {
        let a = s(&[3, 0, -2, 7, 1]);
        assert_eq!(Series::one(4).mul(&a), a);
    }

    #[test]
    fn mul_hand_convolution() {
        // (1+x^2)(1+x^2+x^4) at truncation 6; oracle: coefficients convolved by hand
        let lhs = s(&[1, 0, 1, 0, 0, 0, 0]).mul(&s(&[1, 0, 1, 0, 1, 0, 0]));
        assert_eq!(lhs, s(&[1, 0, 2, 0, 2, 0, 1]));
    }

    #[test]
    fn mul_truncates_to_min() {
        let a = s(&[1, 1]);
        let b = s(&[1, 1, 1, 1]);
        assert_eq!(a.mul(&b).truncation(), 1);
    }

    #[test]
    fn inverse_of_one() {
        assert_eq!(Series::one(5).inverse().unwrap(), Series::one(5));
    }

    #[test]
    fn inverse_geometric() {
        // (1+x)^-1 = 1 - x + x^2 - x^3
        assert_eq!(s(&[1, 1, 0, 0]).inverse().unwrap(), s(&[1, -1, 1, -1]));
    }

    #[test]
    fn inverse_multiplies_back_to_one() {
        // 1 + x + x^2 at truncation 4: check a * a^-1 = 1 rather than freezing digits
        let a = s(&[1, 1, 1, 0, 0]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Series::one(4));
        // and the explicit coefficients
        assert_eq!(inv, s(&[1, -1, 0, 1, -1]));
    }

    #[test]
    fn inverse_rejects_zero_constant() {
        assert_eq!(s(&[0, 1]).inverse(), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn support_string_format() {
        assert_eq!(s(&[0, 0, 0, 0, 0, 1, 0, 1]).support_string(), "5:1 7:1");
        assert_eq!(Series::zero(3).support_string(), "0");
    }

    #[test]
    fn generic_over_alternate_exact_scalars() {
        // the series layer accepts any num-traits scalar; machine-word
        // rationals behave the same as the arbitrary-precision default
        use num_rational::Rational64;
        let a = TruncatedSeries::new(vec![
            Rational64::new(1, 1),
            Rational64::new(1, 2),
            Rational64::new(-2, 3),
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), TruncatedSeries::<Rational64>::one(2));
    }
}
