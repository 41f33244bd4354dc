//! Free graded-commutative differential algebras over the rationals.
//!
//! Generators have degree >= 1; the parity of the degree drives the Koszul
//! sign rule. The differential is stored on generators and extended to all
//! elements as a degree +1 derivation.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{One, Zero};

use crate::cgda::element::{AlgebraId, Element, GenId, Monomial};
use crate::graded::GradedDims;
use crate::scalar::int;
use crate::Rational;

static NEXT_ALGEBRA_ID: AtomicU64 = AtomicU64::new(0);

fn fresh_algebra_id() -> AlgebraId {
    AlgebraId(NEXT_ALGEBRA_ID.fetch_add(1, Ordering::Relaxed))
}

/// Hard cap on cohomology computations; monomial bases blow up combinatorially.
pub const COHOMOLOGY_DEGREE_CAP: usize = 30;

/// Default degree reach when the caller does not choose one.
pub const COHOMOLOGY_DEFAULT_DEGREE: usize = 20;

/// Errors from algebra construction and operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CgdaError {
    MixedAlgebras,
    DegreeCapExceeded { requested: usize, cap: usize },
    BadPartition(String),
    InvalidDegrees(String),
    DuplicateName(String),
    UnknownGenerator,
}

impl fmt::Display for CgdaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CgdaError::MixedAlgebras => write!(f, "elements belong to different algebras"),
            CgdaError::DegreeCapExceeded { requested, cap } => {
                write!(f, "degree {requested} exceeds the cap {cap}")
            }
            CgdaError::BadPartition(msg) => write!(f, "bad generator partition: {msg}"),
            CgdaError::InvalidDegrees(msg) => write!(f, "invalid degrees: {msg}"),
            CgdaError::DuplicateName(name) => write!(f, "duplicate generator name {name}"),
            CgdaError::UnknownGenerator => write!(f, "generator does not belong to this algebra"),
        }
    }
}

impl std::error::Error for CgdaError {}

/// A named generator of fixed positive degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub id: GenId,
    pub name: String,
    pub degree: usize,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// Incremental construction of a free CGDA; differentials start at zero.
#[derive(Debug, Default)]
pub struct CgdaBuilder {
    gens: Vec<(String, usize)>,
}

impl CgdaBuilder {
    pub fn new() -> Self {
        CgdaBuilder::default()
    }

    /// Adds a generator; panics on degree 0 (the ground field is implicit).
    pub fn add_gen(&mut self, name: &str, degree: usize) -> GenId {
        assert!(degree >= 1, "generator {name} must have positive degree");
        assert!(
            self.gens.iter().all(|(n, _)| n != name),
            "duplicate generator name {name}"
        );
        self.gens.push((name.to_string(), degree));
        GenId(self.gens.len() as u32 - 1)
    }

    pub fn build(self) -> FreeCGDA {
        let id = fresh_algebra_id();
        let gens: Vec<Generator> = self
            .gens
            .into_iter()
            .enumerate()
            .map(|(i, (name, degree))| Generator {
                id: GenId(i as u32),
                name,
                degree,
            })
            .collect();
        let diff = gens.iter().map(|_| Element::zero_in(id)).collect();
        FreeCGDA { id, gens, diff }
    }
}

/// Finitely generated free graded-commutative algebra with a differential.
#[derive(Debug, Clone)]
pub struct FreeCGDA {
    id: AlgebraId,
    gens: Vec<Generator>,
    diff: Vec<Element>,
}

/// Outcome of the generator-level `d о d = 0` check.
#[derive(Debug, Clone)]
pub struct DSquaredReport {
    pub failures: Vec<(GenId, Element)>,
}

impl DSquaredReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl FreeCGDA {
    pub fn algebra_id(&self) -> AlgebraId {
        self.id
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn gen(&self, id: GenId) -> &Generator {
        &self.gens[id.0 as usize]
    }

    pub fn gen_by_name(&self, name: &str) -> Option<GenId> {
        self.gens.iter().find(|g| g.name == name).map(|g| g.id)
    }

    pub fn all_gen_ids(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..self.gens.len() as u32).map(GenId)
    }

    pub fn zero(&self) -> Element {
        Element::zero_in(self.id)
    }

    pub fn constant(&self, c: Rational) -> Element {
        let mut e = self.zero();
        e.insert(Monomial::unit(), c);
        e
    }

    pub fn unit(&self) -> Element {
        self.constant(int(1))
    }

    pub fn gen_elem(&self, id: GenId) -> Element {
        assert!((id.0 as usize) < self.gens.len());
        let mut e = self.zero();
        e.insert(Monomial::generator(id), int(1));
        e
    }

    pub fn monomial_degree(&self, m: &Monomial) -> usize {
        m.factors()
            .iter()
            .map(|&(g, e)| self.gen(g).degree * e as usize)
            .sum()
    }

    /// Degree if homogeneous. The zero element is homogeneous of every degree.
    pub fn degree_of(&self, e: &Element) -> Option<usize> {
        let mut deg = None;
        for (m, _) in e.terms() {
            let d = self.monomial_degree(m);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg.or(Some(0))
    }

    fn parity(&self, g: GenId) -> bool {
        self.gen(g).degree % 2 == 1
    }

    /// Product of two monomials: canonical result and sign, or `None` when an
    /// odd generator would be squared.
    fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        // Count Koszul transpositions: each odd factor of b passing an odd
        // factor of a with strictly larger id flips the sign.
        let af = a.factors();
        let bf = b.factors();
        let n = af.len();
        // odd_suffix[i] = number of odd-parity factors of a at positions >= i
        let mut odd_suffix = vec![0usize; n + 1];
        for i in (0..n).rev() {
            odd_suffix[i] = odd_suffix[i + 1] + usize::from(self.parity(af[i].0));
        }
        let mut flips = 0usize;
        let mut i = 0usize;
        for &(bg, _) in bf {
            while i < n && af[i].0 <= bg {
                i += 1;
            }
            if self.parity(bg) {
                flips += odd_suffix[i];
            }
        }

        // Merge exponents.
        let mut merged: Vec<(GenId, u32)> = Vec::with_capacity(af.len() + bf.len());
        let (mut x, mut y) = (0usize, 0usize);
        while x < af.len() || y < bf.len() {
            let take_a = y >= bf.len() || (x < af.len() && af[x].0 < bf[y].0);
            let take_b = x >= af.len() || (y < bf.len() && bf[y].0 < af[x].0);
            if take_a {
                merged.push(af[x]);
                x += 1;
            } else if take_b {
                merged.push(bf[y]);
                y += 1;
            } else {
                let (g, ea) = af[x];
                let (_, eb) = bf[y];
                if self.parity(g) {
                    return None; // odd square vanishes
                }
                merged.push((g, ea + eb));
                x += 1;
                y += 1;
            }
        }
        Some((Monomial::from_sorted(merged), flips % 2 == 1))
    }

    /// Graded-commutative product; fails on elements of different algebras.
    pub fn elem_mul(&self, a: &Element, b: &Element) -> Result<Element, CgdaError> {
        if a.algebra_id() != self.id || b.algebra_id() != self.id {
            return Err(CgdaError::MixedAlgebras);
        }
        let mut out = self.zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                if let Some((m, negate)) = self.mul_monomials(ma, mb) {
                    let mut c = ca.clone() * cb.clone();
                    if negate {
                        c = -c;
                    }
                    out.insert(m, c);
                }
            }
        }
        Ok(out)
    }

    /// Product, panicking on algebra mismatch. Internal convenience.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.elem_mul(a, b).expect("algebra mismatch")
    }

    pub fn pow(&self, a: &Element, n: u32) -> Element {
        let mut out = self.unit();
        for _ in 0..n {
            out = self.mul(&out, a);
        }
        out
    }

    pub fn product(&self, factors: &[&Element]) -> Element {
        let mut out = self.unit();
        for f in factors {
            out = self.mul(&out, f);
        }
        out
    }

    pub fn d_of(&self, g: GenId) -> &Element {
        &self.diff[g.0 as usize]
    }

    /// Sets `d(g)`; the image must be homogeneous of degree `deg(g) + 1`.
    pub fn set_differential(&mut self, g: GenId, e: Element) -> Result<(), CgdaError> {
        if e.algebra_id() != self.id {
            return Err(CgdaError::MixedAlgebras);
        }
        if !e.is_zero() {
            let expected = self.gen(g).degree + 1;
            match self.degree_of(&e) {
                Some(d) if d == expected => {}
                got => {
                    return Err(CgdaError::InvalidDegrees(format!(
                        "d({}) must be homogeneous of degree {expected}, got {got:?}",
                        self.gen(g).name
                    )))
                }
            }
        }
        self.diff[g.0 as usize] = e;
        Ok(())
    }

    /// Extends d to an element by the graded Leibniz rule.
    pub fn differential(&self, e: &Element) -> Element {
        assert_eq!(e.algebra_id(), self.id, "algebra mismatch");
        let mut out = self.zero();
        for (m, c) in e.terms() {
            let factors = m.factors();
            let mut prefix_parity = false;
            for (i, &(g, exp)) in factors.iter().enumerate() {
                let dg = self.d_of(g);
                if !dg.is_zero() {
                    // left = prefix * g^(exp-1), right = suffix
                    let mut left = factors[..i].to_vec();
                    if exp > 1 {
                        left.push((g, exp - 1));
                    }
                    let left = self.monomial_as_elem(Monomial::from_sorted(left));
                    let right =
                        self.monomial_as_elem(Monomial::from_sorted(factors[i + 1..].to_vec()));
                    let mut term = self.mul(&self.mul(&left, dg), &right);
                    let mut scalar = c.clone() * int(exp as i64);
                    if prefix_parity {
                        scalar = -scalar;
                    }
                    term = term.scale(&scalar);
                    out = out.add(&term);
                }
                if self.gen(g).degree * exp as usize % 2 == 1 {
                    prefix_parity = !prefix_parity;
                }
            }
        }
        out
    }

    fn monomial_as_elem(&self, m: Monomial) -> Element {
        let mut e = self.zero();
        e.insert(m, int(1));
        e
    }

    /// Checks `d(d(g)) = 0` for every generator, which suffices by Leibniz.
    pub fn check_d_squared(&self) -> DSquaredReport {
        let mut failures = Vec::new();
        for g in self.all_gen_ids() {
            let dd = self.differential(self.d_of(g));
            if !dd.is_zero() {
                failures.push((g, dd));
            }
        }
        DSquaredReport { failures }
    }

    /// All monomials of the given total degree, in canonical order.
    pub fn monomial_basis(&self, degree: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current: Vec<(GenId, u32)> = Vec::new();
        self.basis_rec(0, degree, &mut current, &mut out);
        out.sort();
        out
    }

    fn basis_rec(
        &self,
        from: usize,
        remaining: usize,
        current: &mut Vec<(GenId, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if remaining == 0 {
            out.push(Monomial::from_sorted(current.clone()));
            return;
        }
        if from >= self.gens.len() {
            return;
        }
        let g = &self.gens[from];
        // exponent 0
        self.basis_rec(from + 1, remaining, current, out);
        let max_exp = if g.is_odd() {
            1
        } else {
            (remaining / g.degree) as u32
        };
        for e in 1..=max_exp {
            let used = g.degree * e as usize;
            if used > remaining {
                break;
            }
            current.push((g.id, e));
            self.basis_rec(from + 1, remaining - used, current, out);
            current.pop();
        }
    }

    /// Cohomology through the default degree reach.
    pub fn cohomology(&self) -> GradedDims {
        self.cohomology_dims(COHOMOLOGY_DEFAULT_DEGREE)
            .expect("default is under the cap")
    }

    /// Dimension of each cohomology group up to `max_degree`, by exact
    /// Gaussian elimination on the monomial bases.
    pub fn cohomology_dims(&self, max_degree: usize) -> Result<GradedDims, CgdaError> {
        if max_degree > COHOMOLOGY_DEGREE_CAP {
            return Err(CgdaError::DegreeCapExceeded {
                requested: max_degree,
                cap: COHOMOLOGY_DEGREE_CAP,
            });
        }
        let mut dims = GradedDims::new();
        let mut prev_rank = 0usize;
        let mut basis_n = self.monomial_basis(0);
        for n in 0..=max_degree {
            let basis_next = self.monomial_basis(n + 1);
            let rank = self.differential_rank(&basis_n, &basis_next);
            let h = basis_n.len() - rank - prev_rank;
            dims.set(n, h);
            prev_rank = rank;
            basis_n = basis_next;
        }
        Ok(dims)
    }

    fn differential_rank(&self, basis: &[Monomial], image_basis: &[Monomial]) -> usize {
        if basis.is_empty() || image_basis.is_empty() {
            return 0;
        }
        let index: std::collections::BTreeMap<&Monomial, usize> = image_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for m in basis {
            let dm = self.differential(&self.monomial_as_elem(m.clone()));
            if dm.is_zero() {
                continue;
            }
            let mut row = vec![int(0); image_basis.len()];
            for (mono, c) in dm.terms() {
                let col = *index.get(mono).expect("image outside expected degree");
                row[col] = c.clone();
            }
            rows.push(row);
        }
        rank(&mut rows)
    }

    /// Tensor product: disjoint union of generators (suffixing `_L`/`_R` on
    /// name collisions), differentials acting componentwise.
    pub fn tensor(&self, other: &FreeCGDA) -> (FreeCGDA, Vec<GenId>, Vec<GenId>) {
        let collide: BTreeSet<&str> = self
            .gens
            .iter()
            .map(|g| g.name.as_str())
            .filter(|n| other.gen_by_name(n).is_some())
            .collect();
        let mut b = CgdaBuilder::new();
        let mut left = Vec::new();
        for g in &self.gens {
            let name = if collide.contains(g.name.as_str()) {
                format!("{}_L", g.name)
            } else {
                g.name.clone()
            };
            left.push(b.add_gen(&name, g.degree));
        }
        let mut right = Vec::new();
        for g in &other.gens {
            let name = if collide.contains(g.name.as_str()) {
                format!("{}_R", g.name)
            } else {
                g.name.clone()
            };
            right.push(b.add_gen(&name, g.degree));
        }
        let mut t = b.build();
        for g in self.all_gen_ids() {
            let e = remap(&t, self.d_of(g), &left);
            t.set_differential(left[g.0 as usize], e)
                .expect("degrees preserved");
        }
        for g in other.all_gen_ids() {
            let e = remap(&t, other.d_of(g), &right);
            t.set_differential(right[g.0 as usize], e)
                .expect("degrees preserved");
        }
        (t, left, right)
    }

    /// True when the differential of every fiber generator stays inside the
    /// fiber subalgebra, so the algebra splits as base tensor fiber.
    pub fn is_split_trivial(
        &self,
        base: &BTreeSet<GenId>,
        fiber: &BTreeSet<GenId>,
    ) -> Result<bool, CgdaError> {
        let all: BTreeSet<GenId> = self.all_gen_ids().collect();
        if !base.is_disjoint(fiber) {
            return Err(CgdaError::BadPartition("base and fiber overlap".into()));
        }
        let union: BTreeSet<GenId> = base.union(fiber).copied().collect();
        if union != all {
            return Err(CgdaError::BadPartition(
                "base and fiber do not cover all generators".into(),
            ));
        }
        for &g in fiber {
            for (m, _) in self.d_of(g).terms() {
                if m.factors().iter().any(|(h, _)| base.contains(h)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Renders an element in the dump syntax (`+`, `-`, `*`, `^`, `p/q`).
    pub fn render(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in e.terms().enumerate() {
            let mono = self.render_monomial(m);
            let piece = render_term(c, &mono);
            if i == 0 {
                out.push_str(&piece);
            } else if let Some(stripped) = piece.strip_prefix('-') {
                out.push('-');
                out.push_str(stripped);
            } else {
                out.push('+');
                out.push_str(&piece);
            }
        }
        out
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        m.factors()
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    self.gen(g).name.clone()
                } else {
                    format!("{}^{}", self.gen(g).name, e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Plain-text dump: one generator per line with name, degree, and the
    /// differential expression.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for g in &self.gens {
            out.push_str(&format!(
                "{} {} {}\n",
                g.name,
                g.degree,
                self.render(self.d_of(g.id))
            ));
        }
        out
    }
}

fn render_term(c: &Rational, mono: &str) -> String {
    if mono.is_empty() {
        return format!("{c}");
    }
    if c.is_one() {
        mono.to_string()
    } else if (-c.clone()).is_one() {
        format!("-{mono}")
    } else {
        format!("{c}*{mono}")
    }
}

fn remap(target: &FreeCGDA, e: &Element, map: &[GenId]) -> Element {
    let mut out = target.zero();
    for (m, c) in e.terms() {
        let factors = m
            .factors()
            .iter()
            .map(|&(g, exp)| (map[g.0 as usize], exp))
            .collect();
        out.insert(Monomial::from_sorted(factors), c.clone());
    }
    out
}

/// Row rank by exact Gaussian elimination; consumes the rows.
pub fn rank(rows: &mut [Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut r = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = Rational::from_integer(1.into()) / rows[r][col].clone();
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone() * inv.clone();
            for c in col..ncols {
                let t = rows[r][c].clone() * factor.clone();
                rows[i][c] -= t;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
