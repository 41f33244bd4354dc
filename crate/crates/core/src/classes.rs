//! Pontryagin, dual Pontryagin, and Euler class algebra.
//!
//! Total classes live in a chosen coefficient CGDA; the dual class is the
//! multiplicative inverse of the total class, computed by the triangular
//! recursion. Betti-number-only manifolds carry just a vanishing profile,
//! since a cohomology ring is not determined by Betti numbers.

use std::fmt;

use crate::cgda::{CgdaBuilder, CgdaError, Element, FreeCGDA, GenId};

/// Vanishing assertions about the characteristic classes of a manifold.
///
/// `dual_p_zero_from = Some(d)` asserts the dual Pontryagin classes of the
/// tangent bundle vanish from index `d` on; `p_zero_all` asserts all
/// Pontryagin classes vanish (used for target manifolds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVanishingProfile {
    pub euler_zero: bool,
    pub dual_p_zero_from: Option<usize>,
    pub p_zero_all: bool,
}

impl ClassVanishingProfile {
    pub fn new(euler_zero: bool, dual_p_zero_from: Option<usize>, p_zero_all: bool) -> Self {
        if let Some(d) = dual_p_zero_from {
            assert!(d >= 1, "dual vanishing index starts at 1");
        }
        ClassVanishingProfile {
            euler_zero,
            dual_p_zero_from,
            p_zero_all,
        }
    }

    /// Dual Pontryagin classes vanish for all indices >= `idx`?
    pub fn dual_p_zero_at(&self, idx: usize) -> bool {
        self.dual_p_zero_from.map(|d| idx >= d).unwrap_or(false)
    }
}

/// Errors from characteristic-class operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassError {
    IndexOutOfRange { ell: usize, lo: usize, hi: usize },
    Cgda(CgdaError),
}

impl fmt::Display for ClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassError::IndexOutOfRange { ell, lo, hi } => {
                write!(f, "index {ell} outside the admissible range [{lo}, {hi}]")
            }
            ClassError::Cgda(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ClassError {}

impl From<CgdaError> for ClassError {
    fn from(e: CgdaError) -> Self {
        ClassError::Cgda(e)
    }
}

/// Total characteristic class `1 + c_1 + c_2 + ...` with `c_i` of degree `4i`;
/// the unit component is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalClass {
    components: Vec<Element>,
}

impl TotalClass {
    /// From components `c_1, ..., c_n`; each must be homogeneous of degree `4i`.
    pub fn new(alg: &FreeCGDA, components: Vec<Element>) -> Result<Self, CgdaError> {
        for (i, c) in components.iter().enumerate() {
            if !c.is_zero() && alg.degree_of(c) != Some(4 * (i + 1)) {
                return Err(CgdaError::InvalidDegrees(format!(
                    "total class component {} must have degree {}",
                    i + 1,
                    4 * (i + 1)
                )));
            }
        }
        Ok(TotalClass { components })
    }

    /// The trivial class `1` tracked up to index `up_to`.
    pub fn trivial(alg: &FreeCGDA, up_to: usize) -> Self {
        TotalClass {
            components: vec![alg.zero(); up_to],
        }
    }

    pub fn max_index(&self) -> usize {
        self.components.len()
    }

    /// Component `c_i` for `i >= 1`; zero beyond the stored range.
    pub fn component(&self, alg: &FreeCGDA, i: usize) -> Element {
        assert!(i >= 1);
        self.components
            .get(i - 1)
            .cloned()
            .unwrap_or_else(|| alg.zero())
    }

    pub fn is_trivial(&self) -> bool {
        self.components.iter().all(Element::is_zero)
    }
}

/// Inverse total class through index `up_to`:
/// `pd_i = -p_i - sum_{j=1}^{i-1} p_j pd_{i-j}`.
pub fn dual_total_class(alg: &FreeCGDA, p: &TotalClass, up_to: usize) -> TotalClass {
    let mut dual: Vec<Element> = Vec::with_capacity(up_to);
    for i in 1..=up_to {
        let mut acc = p.component(alg, i).neg();
        for j in 1..i {
            let cross = alg.mul(&p.component(alg, j), &dual[i - j - 1]);
            acc = acc.sub(&cross);
        }
        dual.push(acc);
    }
    TotalClass { components: dual }
}

/// Whitney sum: component `i` is `sum_{t+j=i} a_t b_j` with `a_0 = b_0 = 1`.
pub fn whitney_sum_total(
    alg: &FreeCGDA,
    a: &TotalClass,
    b: &TotalClass,
    up_to: usize,
) -> TotalClass {
    let mut components = Vec::with_capacity(up_to);
    for i in 1..=up_to {
        let mut acc = a.component(alg, i).add(&b.component(alg, i));
        for t in 1..i {
            acc = acc.add(&alg.mul(&a.component(alg, t), &b.component(alg, i - t)));
        }
        components.push(acc);
    }
    TotalClass { components }
}

/// Result of deriving normal-bundle classes from the dual tangent classes.
#[derive(Debug, Clone)]
pub enum NormalBundleResult {
    /// `p_i(nu) = pd_i(tau)` for `i <= floor((k-1)/2)`.
    Classes(TotalClass),
    /// Dual classes that fail the required vanishing, by index.
    Obstruction(Vec<usize>),
}

/// Classes of the normal bundle of a codimension-`k` immersion into a target
/// with vanishing Pontryagin classes. Nonzero dual classes above
/// `floor((k-1)/2)` contradict the hypotheses and are reported as an
/// obstruction rather than an answer.
pub fn normal_bundle_classes(
    alg: &FreeCGDA,
    k: usize,
    dual_p_of_m: &TotalClass,
) -> NormalBundleResult {
    assert!(k >= 1);
    let cutoff = (k - 1) / 2;
    let offending: Vec<usize> = (cutoff + 1..=dual_p_of_m.max_index())
        .filter(|&i| !dual_p_of_m.component(alg, i).is_zero())
        .collect();
    if !offending.is_empty() {
        return NormalBundleResult::Obstruction(offending);
    }
    let components = (1..=cutoff)
        .map(|i| dual_p_of_m.component(alg, i))
        .collect();
    NormalBundleResult::Classes(TotalClass { components })
}

/// Universal polynomial algebra on Pontryagin symbols `p_1..p_n` (degree 4i).
pub fn pontryagin_symbols(n: usize) -> (FreeCGDA, TotalClass) {
    let mut b = CgdaBuilder::new();
    let ids: Vec<GenId> = (1..=n)
        .map(|i| b.add_gen(&format!("p{i}"), 4 * i))
        .collect();
    let alg = b.build();
    let components = ids.iter().map(|&g| alg.gen_elem(g)).collect();
    (alg, TotalClass { components })
}

/// The polynomial algebra and distinguished symbols underlying the universal
/// Whitney-sum identities: classes `a_i` of the sum bundle, `p_t` and `b_j`
/// of the summands, and the Euler symbol `e_k` with `b_{k/2} = e_k^2`.
pub struct AhlContext {
    pub alg: FreeCGDA,
    pub m: usize,
    pub k: usize,
    a: Vec<GenId>,
    p: Vec<GenId>,
    b: Vec<GenId>,
    e_k: Option<GenId>,
}

impl AhlContext {
    pub fn new(m: usize, k: usize) -> Self {
        let big_l = (m + k).saturating_sub(1) / 2;
        let mut builder = CgdaBuilder::new();
        let a = (1..=big_l)
            .map(|i| builder.add_gen(&format!("a{i}"), 4 * i))
            .collect();
        let p = (1..=m.saturating_sub(1) / 2)
            .map(|t| builder.add_gen(&format!("p{t}"), 4 * t))
            .collect();
        let b = (1..=k.saturating_sub(1) / 2)
            .map(|j| builder.add_gen(&format!("b{j}"), 4 * j))
            .collect();
        let e_k = (k % 2 == 0 && k >= 2).then(|| builder.add_gen("ek", k));
        AhlContext {
            alg: builder.build(),
            m,
            k,
            a,
            p,
            b,
            e_k,
        }
    }

    /// Largest index carried by the sum-bundle classes.
    pub fn top_index(&self) -> usize {
        self.a.len()
    }

    pub fn a_elem(&self, i: usize) -> Element {
        self.alg.gen_elem(self.a[i - 1])
    }

    /// Total class of the first summand (symbols `p_t`, zero above the range).
    pub fn p_total(&self) -> TotalClass {
        let components = self.p.iter().map(|&g| self.alg.gen_elem(g)).collect();
        TotalClass { components }
    }

    /// Summand class `b_j`, with `b_{k/2} = e_k^2` when `k` is even.
    pub fn b_elem(&self, j: usize) -> Element {
        if j >= 1 && j <= self.b.len() {
            return self.alg.gen_elem(self.b[j - 1]);
        }
        if self.k % 2 == 0 && j == self.k / 2 {
            if let Some(ek) = self.e_k {
                return self.alg.pow(&self.alg.gen_elem(ek), 2);
            }
        }
        self.alg.zero()
    }

    pub fn e_k_squared(&self) -> Element {
        match self.e_k {
            Some(ek) => self.alg.pow(&self.alg.gen_elem(ek), 2),
            None => self.alg.zero(),
        }
    }

    /// `sum_{t+j=i} p_t b_j` with unit zeroth classes.
    pub fn whitney_component(&self, i: usize) -> Element {
        let p_total = self.p_total();
        let mut acc = p_total.component(&self.alg, i).add(&self.b_elem(i));
        for t in 1..i {
            acc = acc.add(
                &self
                    .alg
                    .mul(&p_total.component(&self.alg, t), &self.b_elem(i - t)),
            );
        }
        acc
    }

    /// `f_i = a_i - sum_{t+j=i} p_t b_j` for `i = 1..=top_index()`.
    pub fn f_defaults(&self) -> Vec<Element> {
        (1..=self.top_index())
            .map(|i| self.a_elem(i).sub(&self.whitney_component(i)))
            .collect()
    }

    /// Residual of the index-`ell` relation for a given family `f`,
    /// zero exactly when the relation holds:
    /// `pd_ell - [ell = k/2] e_k^2 + sum_{i=1}^{ell} pd_{ell-i} (a_i - f_i)`.
    pub fn residual(&self, ell: usize, f: &[Element]) -> Element {
        let dual = dual_total_class(&self.alg, &self.p_total(), ell);
        let mut acc = dual.component(&self.alg, ell);
        if self.k % 2 == 0 && ell == self.k / 2 {
            acc = acc.sub(&self.e_k_squared());
        }
        for i in 1..=ell {
            let ai_minus_fi = self.a_elem(i).sub(&f[i - 1]);
            let coeff = if ell == i {
                ai_minus_fi
            } else {
                self.alg
                    .mul(&dual.component(&self.alg, ell - i), &ai_minus_fi)
            };
            acc = acc.add(&coeff);
        }
        acc
    }
}

/// Outcome of one dual-class/Whitney relation check.
#[derive(Debug, Clone)]
pub struct AhlReport {
    pub m: usize,
    pub k: usize,
    pub ell: usize,
    pub residual: Element,
}

impl AhlReport {
    pub fn pass(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Admissible index range for the relations at `(m, k)`.
pub fn ahl_index_range(m: usize, k: usize) -> (usize, usize) {
    (k.div_ceil(2), (m + k).saturating_sub(1) / 2)
}

/// Checks the dual-class relation at index `ell` exactly, in the universal
/// polynomial algebra.
pub fn verify_ahl_identity(m: usize, k: usize, ell: usize) -> Result<AhlReport, ClassError> {
    let (lo, hi) = ahl_index_range(m, k);
    if ell < lo || ell > hi {
        return Err(ClassError::IndexOutOfRange { ell, lo, hi });
    }
    let ctx = AhlContext::new(m, k);
    let f = ctx.f_defaults();
    let residual = ctx.residual(ell, &f);
    Ok(AhlReport {
        m,
        k,
        ell,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn dual_of_trivial_class_is_trivial() {
        let (alg, _) = pontryagin_symbols(3);
        let one = TotalClass::trivial(&alg, 3);
        assert!(dual_total_class(&alg, &one, 3).is_trivial());
    }

    #[test]
    fn universal_dual_values() {
        // pd1 = -p1, pd2 = p1^2 - p2, pd3 = -p1^3 + 2 p1 p2 - p3
        let (alg, p) = pontryagin_symbols(3);
        let dual = dual_total_class(&alg, &p, 3);
        let p1 = p.component(&alg, 1);
        let p2 = p.component(&alg, 2);
        let p3 = p.component(&alg, 3);
        assert_eq!(dual.component(&alg, 1), p1.neg());
        assert_eq!(dual.component(&alg, 2), alg.mul(&p1, &p1).sub(&p2));
        let expect3 = alg
            .pow(&p1, 3)
            .neg()
            .add(&alg.mul(&p1, &p2).scale(&int(2)))
            .sub(&p3);
        assert_eq!(dual.component(&alg, 3), expect3);
    }

    #[test]
    fn dual_multiplies_back_to_one() {
        let (alg, p) = pontryagin_symbols(4);
        let dual = dual_total_class(&alg, &p, 4);
        assert!(whitney_sum_total(&alg, &p, &dual, 4).is_trivial());
    }

    #[test]
    fn dual_is_an_involution() {
        let (alg, p) = pontryagin_symbols(4);
        let twice = dual_total_class(&alg, &dual_total_class(&alg, &p, 4), 4);
        for i in 1..=4 {
            assert_eq!(twice.component(&alg, i), p.component(&alg, i), "index {i}");
        }
    }

    #[test]
    fn whitney_sum_with_trivial_summand() {
        let (alg, p) = pontryagin_symbols(3);
        let one = TotalClass::trivial(&alg, 3);
        let sum = whitney_sum_total(&alg, &one, &p, 3);
        for i in 1..=3 {
            assert_eq!(sum.component(&alg, i), p.component(&alg, i));
        }
    }

    #[test]
    fn whitney_index_one_is_additive() {
        // two independent symbol families in one algebra
        let mut b = CgdaBuilder::new();
        let p1 = b.add_gen("p1", 4);
        let q1 = b.add_gen("q1", 4);
        let alg = b.build();
        let pc = TotalClass::new(&alg, vec![alg.gen_elem(p1)]).unwrap();
        let qc = TotalClass::new(&alg, vec![alg.gen_elem(q1)]).unwrap();
        let sum = whitney_sum_total(&alg, &pc, &qc, 1);
        assert_eq!(
            sum.component(&alg, 1),
            alg.gen_elem(p1).add(&alg.gen_elem(q1))
        );
    }

    #[test]
    fn whitney_commutative_and_associative() {
        let mut b = CgdaBuilder::new();
        let gens: Vec<_> = ["p1", "q1", "r1", "p2", "q2", "r2"]
            .iter()
            .enumerate()
            .map(|(i, n)| b.add_gen(n, if i < 3 { 4 } else { 8 }))
            .collect();
        let alg = b.build();
        let mk = |lo: usize, hi: usize| {
            TotalClass::new(&alg, vec![alg.gen_elem(gens[lo]), alg.gen_elem(gens[hi])]).unwrap()
        };
        let (a, bb, c) = (mk(0, 3), mk(1, 4), mk(2, 5));
        let ab = whitney_sum_total(&alg, &a, &bb, 2);
        let ba = whitney_sum_total(&alg, &bb, &a, 2);
        assert_eq!(ab, ba);
        let left = whitney_sum_total(&alg, &ab, &c, 2);
        let right = whitney_sum_total(&alg, &a, &whitney_sum_total(&alg, &bb, &c, 2), 2);
        assert_eq!(left, right);
    }

    #[test]
    fn total_class_degree_validation() {
        let (alg, p) = pontryagin_symbols(2);
        let p1 = p.component(&alg, 1);
        // p1 has degree 4, not 8: invalid as component 2
        assert!(TotalClass::new(&alg, vec![alg.zero(), p1]).is_err());
    }

    #[test]
    fn normal_bundle_trivial_dual() {
        let (alg, _) = pontryagin_symbols(2);
        let one = TotalClass::trivial(&alg, 2);
        match normal_bundle_classes(&alg, 3, &one) {
            NormalBundleResult::Classes(c) => assert!(c.is_trivial()),
            NormalBundleResult::Obstruction(_) => panic!("no obstruction expected"),
        }
    }

    #[test]
    fn normal_bundle_low_index_allowed() {
        // m=4, k=3: pd1 = -p1 nonzero sits at index 1 <= floor((k-1)/2) = 1
        let (alg, p) = pontryagin_symbols(1);
        let dual = dual_total_class(&alg, &p, 1);
        match normal_bundle_classes(&alg, 3, &dual) {
            NormalBundleResult::Classes(c) => {
                assert_eq!(c.component(&alg, 1), p.component(&alg, 1).neg());
            }
            NormalBundleResult::Obstruction(_) => panic!("index 1 is admissible for k=3"),
        }
    }

    #[test]
    fn normal_bundle_obstruction_reported() {
        // m=8, k=3: nonzero pd2 exceeds floor((k-1)/2) = 1
        let (alg, p) = pontryagin_symbols(2);
        let dual = dual_total_class(&alg, &p, 2);
        match normal_bundle_classes(&alg, 3, &dual) {
            NormalBundleResult::Obstruction(idx) => assert_eq!(idx, vec![2]),
            NormalBundleResult::Classes(_) => panic!("expected an obstruction"),
        }
    }

    #[test]
    fn normal_bundle_whitney_inverse() {
        // with k large enough the duals fit under the cutoff and the Whitney
        // sum of tangent and normal classes is trivial through it
        let (alg, p) = pontryagin_symbols(4);
        let dual = dual_total_class(&alg, &p, 4);
        let cutoff = (9 - 1) / 2;
        match normal_bundle_classes(&alg, 9, &dual) {
            NormalBundleResult::Classes(nu) => {
                let sum = whitney_sum_total(&alg, &p, &nu, cutoff);
                for i in 1..=cutoff.min(4) {
                    assert!(sum.component(&alg, i).is_zero(), "index {i}");
                }
            }
            NormalBundleResult::Obstruction(_) => panic!("cutoff 4 admits every dual index"),
        }
    }

    #[test]
    fn ahl_odd_codimension_case() {
        let report = verify_ahl_identity(2, 3, 2).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn ahl_even_codimension_euler_square_case() {
        let report = verify_ahl_identity(2, 2, 1).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn ahl_rejects_out_of_range_index() {
        assert!(matches!(
            verify_ahl_identity(2, 3, 1),
            Err(ClassError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn ahl_detects_perturbed_relation() {
        // f1 := f1 + p1 must leave a nonzero residual (m large enough for p1)
        let ctx = AhlContext::new(4, 3);
        let mut f = ctx.f_defaults();
        let p1 = ctx.p_total().component(&ctx.alg, 1);
        f[0] = f[0].add(&p1);
        let residual = ctx.residual(2, &f);
        assert!(!residual.is_zero());
    }
}
