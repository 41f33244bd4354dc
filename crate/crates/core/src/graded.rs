//! Finitely supported degree -> dimension maps (Betti numbers, homotopy ranks).

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::int;
use crate::{Rational, Series, TruncatedSeries};

/// Map from degree to a positive dimension; zero entries are absent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedDims {
    dims: BTreeMap<usize, usize>,
}

impl GradedDims {
    pub fn new() -> Self {
        GradedDims::default()
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        let mut g = GradedDims::new();
        for &(d, n) in pairs {
            g.set(d, n);
        }
        g
    }

    /// From a dense list starting at degree 0.
    pub fn from_list(dims: &[usize]) -> Self {
        let mut g = GradedDims::new();
        for (d, &n) in dims.iter().enumerate() {
            g.set(d, n);
        }
        g
    }

    pub fn set(&mut self, degree: usize, dim: usize) {
        if dim == 0 {
            self.dims.remove(&degree);
        } else {
            self.dims.insert(degree, dim);
        }
    }

    pub fn add(&mut self, degree: usize, dim: usize) {
        let n = self.get(degree) + dim;
        self.set(degree, n);
    }

    pub fn get(&self, degree: usize) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.dims.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dims.iter().map(|(&d, &n)| (d, n))
    }

    /// Total dimension across all degrees.
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    /// Degreewise convolution, truncated: `(a*b)_n = sum a_i b_{n-i}`.
    pub fn kunneth(&self, other: &Self, max_degree: usize) -> Self {
        let mut out = GradedDims::new();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                if i + j <= max_degree {
                    out.add(i + j, a * b);
                }
            }
        }
        out
    }

    /// Restrict to degrees `<= max_degree`.
    pub fn truncated(&self, max_degree: usize) -> Self {
        let mut out = GradedDims::new();
        for (d, n) in self.iter() {
            if d <= max_degree {
                out.set(d, n);
            }
        }
        out
    }

    /// Generating series `sum dim_d x^d`.
    pub fn to_series(&self, truncation: usize) -> Series {
        let mut coeffs = vec![Rational::from_integer(0.into()); truncation + 1];
        for (d, n) in self.iter() {
            if d <= truncation {
                coeffs[d] = int(n as i64);
            }
        }
        TruncatedSeries::new(coeffs)
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, n)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{n}")?;
        }
        write!(f, "}}")
    }
}
