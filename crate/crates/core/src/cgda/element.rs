//! Monomials and elements of a free graded-commutative algebra.
//!
//! A monomial is a sorted list of `(generator, exponent)` factors; odd
//! generators never carry an exponent above 1 (their squares vanish).
//! Elements are rational linear combinations of monomials in canonical form.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::Rational;

/// Index of a generator within its algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub u32);

/// Identifies the algebra an element belongs to; fresh per construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraId(pub u64);

/// Canonical monomial: factors sorted ascending by generator id, exponents >= 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<(GenId, u32)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    pub fn generator(id: GenId) -> Self {
        Monomial {
            factors: vec![(id, 1)],
        }
    }

    /// From factors that are already sorted and positive; debug-checked.
    pub fn from_sorted(factors: Vec<(GenId, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|&(_, e)| e >= 1));
        Monomial { factors }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(GenId, u32)] {
        &self.factors
    }

    pub fn contains(&self, id: GenId) -> bool {
        self.factors.iter().any(|&(g, _)| g == id)
    }
}

/// Exact-rational linear combination of monomials; no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub(crate) algebra: AlgebraId,
    pub(crate) terms: BTreeMap<Monomial, Rational>,
}

impl Element {
    pub(crate) fn zero_in(algebra: AlgebraId) -> Self {
        Element {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn insert(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn algebra_id(&self) -> AlgebraId {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Rational::from_integer(0.into()))
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(
            self.algebra, other.algebra,
            "elements of different algebras"
        );
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            algebra: self.algebra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero_in(self.algebra);
        }
        Element {
            algebra: self.algebra,
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q.clone() * c.clone()))
                .collect(),
        }
    }

    /// True when every stored coefficient is in lowest terms with positive
    /// denominator (`num-rational` maintains this; asserted in tests).
    pub fn coefficients_reduced(&self) -> bool {
        use num_integer::Integer;
        self.terms
            .values()
            .all(|q| q.denom() > &crate::Int::zero() && q.numer().gcd(q.denom()).is_one())
    }
}
