//! Rational homotopy of immersion-space components.
//!
//! For odd codimension every component is a product of Eilenberg-MacLane
//! spaces read off from the Betti numbers; for even codimension a sphere
//! mapping-space factor appears and extra vanishing hypotheses are needed.
//! Rank generating series come in two flavors: the authoritative direct
//! expansion of the Eilenberg-MacLane decomposition, and closed forms (the
//! printed ones, plus a corrected derivation that matches the expansion).

use std::fmt;

use num_traits::Signed;

use crate::classes::ClassVanishingProfile;
use crate::graded::GradedDims;
use crate::poly::{int_poly, one_minus_x_pow, Poly, RationalFunction};
use crate::stiefel::{stiefel_manifold_em_type, StiefelFactor};
use crate::{Int, IntPoly, Series};

/// A manifold described by its dimension, rational Betti numbers, and
/// characteristic-class vanishing assertions.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifoldData {
    pub name: String,
    pub dim: usize,
    pub betti: GradedDims,
    pub simply_connected: bool,
    pub closed: bool,
    pub profile: ClassVanishingProfile,
}

/// A structural defect in manifold data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationError(pub String);

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ValidationError {}

impl ManifoldData {
    pub fn new(
        name: &str,
        dim: usize,
        betti: GradedDims,
        simply_connected: bool,
        closed: bool,
        profile: ClassVanishingProfile,
    ) -> Result<Self, ValidationError> {
        let m = ManifoldData {
            name: name.to_string(),
            dim,
            betti,
            simply_connected,
            closed,
            profile,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        if self.betti.get(0) != 1 {
            return Err(ValidationError("b_0 must be 1 (connected)".into()));
        }
        if let Some(d) = self.betti.max_degree() {
            if d > self.dim {
                return Err(ValidationError(format!(
                    "betti numbers supported up to degree {d} exceed dim {}",
                    self.dim
                )));
            }
        }
        if self.simply_connected && self.betti.get(1) != 0 {
            return Err(ValidationError("simply connected requires b_1 = 0".into()));
        }
        if self.closed {
            for i in 0..=self.dim {
                if self.betti.get(i) != self.betti.get(self.dim - i) {
                    return Err(ValidationError(format!(
                        "Poincare duality fails: b_{i} = {} but b_{} = {}",
                        self.betti.get(i),
                        self.dim - i,
                        self.betti.get(self.dim - i)
                    )));
                }
            }
        }
        if let Some(d) = self.profile.dual_p_zero_from {
            if d == 0 {
                return Err(ValidationError(
                    "dual_pontryagin_zero_from must be >= 1".into(),
                ));
            }
        }
        Ok(())
    }

    /// `P_M(x) = sum b_i x^i`, a polynomial of degree at most `dim`.
    pub fn poincare_polynomial(&self) -> Series {
        self.betti.to_series(self.dim)
    }

    pub fn betti_poly(&self) -> IntPoly {
        let mut coeffs = vec![Int::from(0); self.dim + 1];
        for (d, n) in self.betti.iter() {
            coeffs[d] = Int::from(n as i64);
        }
        Poly::new(coeffs)
    }

    /// Euler-class vanishing, including the forced vanishing in odd dimension.
    pub fn euler_zero_effective(&self) -> bool {
        self.profile.euler_zero || self.dim % 2 == 1
    }

    /// Dual Pontryagin class `pd_i` vanishing, including the degree-forced
    /// vanishing `4i > dim`.
    pub fn dual_p_zero_effective(&self, i: usize) -> bool {
        self.profile.dual_p_zero_at(i) || 4 * i > self.dim
    }
}

/// One Eilenberg-MacLane factor `K(Q^rank, degree)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EMFactor {
    pub degree: usize,
    pub rank: usize,
}

/// Which theorem governs a component description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApplicableTheorem {
    OddCodim,
    EvenCodim,
    GeneralTarget,
    None,
}

impl fmt::Display for ApplicableTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ApplicableTheorem::OddCodim => "odd-codim",
            ApplicableTheorem::EvenCodim => "even-codim",
            ApplicableTheorem::GeneralTarget => "general-target",
            ApplicableTheorem::None => "none",
        };
        write!(f, "{s}")
    }
}

/// Rational homotopy type of one immersion-space component.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentDescriptor {
    /// Eilenberg-MacLane factors merged by degree, ascending.
    pub em_factors: Vec<EMFactor>,
    /// A `Map(M, S^k)` factor, even codimension only.
    pub sphere_factor: Option<usize>,
    /// True when the type is independent of the chosen immersion.
    pub component_independent: bool,
    pub applicable: ApplicableTheorem,
    pub notes: Vec<String>,
}

impl ComponentDescriptor {
    fn from_parts(
        factors: Vec<EMFactor>,
        sphere_factor: Option<usize>,
        component_independent: bool,
        applicable: ApplicableTheorem,
    ) -> Self {
        let mut merged = GradedDims::new();
        for f in &factors {
            merged.add(f.degree, f.rank);
        }
        ComponentDescriptor {
            em_factors: merged
                .iter()
                .map(|(degree, rank)| EMFactor { degree, rank })
                .collect(),
            sphere_factor,
            component_independent,
            applicable,
            notes: Vec::new(),
        }
    }

    /// One factor per line: `K(Q^r, d)` then `Map(M,S^k)`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for f in &self.em_factors {
            out.push_str(&format!("K(Q^{}, {})\n", f.rank, f.degree));
        }
        if let Some(k) = self.sphere_factor {
            out.push_str(&format!("Map(M,S^{k})\n"));
        }
        out
    }
}

/// A failed theorem hypothesis, named by its flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisViolation {
    pub flag: &'static str,
    pub message: String,
}

impl fmt::Display for HypothesisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed: {}", self.flag, self.message)
    }
}

impl std::error::Error for HypothesisViolation {}

fn violation(flag: &'static str, message: impl Into<String>) -> HypothesisViolation {
    HypothesisViolation {
        flag,
        message: message.into(),
    }
}

/// Immersion target: Euclidean space or a general manifold summarized by its
/// class-vanishing profile.
#[derive(Debug, Clone)]
pub enum Target {
    Euclidean,
    General(ClassVanishingProfile),
}

/// One checked hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub ok: bool,
    pub message: String,
}

fn flag(ok: bool, message: impl Into<String>) -> Flag {
    Flag {
        ok,
        message: message.into(),
    }
}

/// Evaluation of every hypothesis the component and series theorems consume.
#[derive(Debug, Clone)]
pub struct HypothesisReport {
    pub k: usize,
    pub k_odd: bool,
    pub euler_ok: Flag,
    pub dual_p_ok: Flag,
    pub target_p_ok: Flag,
    pub codim_bound_ok: Flag,
    pub closed_ok: Flag,
    pub hk_zero: Flag,
    pub applicable: ApplicableTheorem,
}

impl HypothesisReport {
    pub fn render(&self) -> String {
        let line = |name: &str, f: &Flag| {
            format!(
                "  {name}: {} ({})\n",
                if f.ok { "ok" } else { "FAIL" },
                f.message
            )
        };
        let mut out = String::new();
        out.push_str(&format!(
            "hypotheses (k = {}, {}):\n",
            self.k,
            if self.k_odd { "odd" } else { "even" }
        ));
        out.push_str(&line("euler_ok", &self.euler_ok));
        out.push_str(&line("dual_p_ok", &self.dual_p_ok));
        out.push_str(&line("target_p_ok", &self.target_p_ok));
        out.push_str(&line("codim_bound_ok", &self.codim_bound_ok));
        out.push_str(&line("closed_ok", &self.closed_ok));
        out.push_str(&line("hk_zero", &self.hk_zero));
        out.push_str(&format!("applicable: {}\n", self.applicable));
        out
    }
}

/// Evaluates every hypothesis flag for immersions of `m` in codimension `k`.
pub fn check_hypotheses(m: &ManifoldData, k: usize, target: &Target) -> HypothesisReport {
    assert!(k >= 2);
    let k_odd = k % 2 == 1;
    let euler_ok = if k_odd {
        flag(true, "not required for odd codimension")
    } else if m.euler_zero_effective() {
        flag(true, "e(tau_M) = 0")
    } else {
        flag(
            false,
            "e(tau_M) != 0 required by the even-codimension theorem",
        )
    };
    let dual_p_ok = if k_odd {
        flag(true, "not required for odd codimension")
    } else if m.dual_p_zero_effective(k / 2) {
        flag(true, format!("pd_{}(tau_M) = 0", k / 2))
    } else {
        flag(
            false,
            format!(
                "pd_{}(tau_M) = 0 required by the even-codimension theorem",
                k / 2
            ),
        )
    };
    let target_p_ok = match target {
        Target::Euclidean => flag(true, "Euclidean target"),
        Target::General(p) if p.p_zero_all => flag(true, "all Pontryagin classes of N vanish"),
        Target::General(_) => flag(false, "the Pontryagin classes of N must all vanish"),
    };
    let codim_bound_ok = if 2 * k >= m.dim + 2 {
        flag(true, format!("k = {k} >= m/2 + 1"))
    } else {
        flag(
            false,
            format!("rank series formulas need k >= m/2 + 1 = {}", m.dim / 2 + 1),
        )
    };
    let closed_ok = if m.closed {
        flag(true, "closed manifold")
    } else {
        flag(false, "rank series formulas need a closed manifold")
    };
    let hk_zero = if m.betti.get(k) == 0 {
        flag(true, format!("H^{k}(M;Q) = 0"))
    } else {
        flag(
            false,
            format!("H^{k}(M;Q) != 0: components of Map(M,S^{k}) may differ"),
        )
    };
    let applicable = match target {
        Target::General(_) if !target_p_ok.ok => ApplicableTheorem::None,
        Target::General(_) if k_odd && k >= 3 => ApplicableTheorem::GeneralTarget,
        Target::General(_) if !k_odd && euler_ok.ok && dual_p_ok.ok => {
            ApplicableTheorem::GeneralTarget
        }
        Target::Euclidean if k_odd && k >= 3 => ApplicableTheorem::OddCodim,
        Target::Euclidean if !k_odd && euler_ok.ok && dual_p_ok.ok => ApplicableTheorem::EvenCodim,
        _ => ApplicableTheorem::None,
    };
    HypothesisReport {
        k,
        k_odd,
        euler_ok,
        dual_p_ok,
        target_p_ok,
        codim_bound_ok,
        closed_ok,
        hk_zero,
        applicable,
    }
}

/// Factors of a mapping-space component into `K(Q, n)`:
/// one `K(H^{n-q}(M;Q), q)` for each `q = 1..=n` with `b_{n-q} > 0`.
pub fn moller_factors(betti: &GradedDims, n: usize) -> Vec<EMFactor> {
    assert!(n >= 1);
    (1..=n)
        .filter_map(|q| {
            let rank = betti.get(n - q);
            (rank > 0).then_some(EMFactor { degree: q, rank })
        })
        .collect()
}

/// The integer range of Eilenberg-MacLane indices for odd codimension.
fn odd_index_range(m: usize, k: usize) -> (usize, usize) {
    let lo = k.div_ceil(2);
    let hi = if m % 2 == 0 {
        (m + k) / 2
    } else {
        (m + k - 1) / 2
    };
    (lo, hi)
}

/// Component of `Imm(M, R^{m+k})` for odd `k >= 3`: a product of
/// Eilenberg-MacLane spaces depending only on `m`, `k`, and the Betti numbers.
pub fn imm_component_odd(
    m: &ManifoldData,
    k: usize,
) -> Result<ComponentDescriptor, HypothesisViolation> {
    if k % 2 == 0 || k < 3 {
        return Err(violation(
            "k_parity",
            format!("odd codimension theorem needs odd k >= 3, got {k}"),
        ));
    }
    if !m.simply_connected {
        return Err(violation("simply_connected", "M must be simply connected"));
    }
    if m.dim == 0 {
        return Ok(ComponentDescriptor::from_parts(
            Vec::new(),
            None,
            true,
            ApplicableTheorem::OddCodim,
        ));
    }
    let (lo, hi) = odd_index_range(m.dim, k);
    let mut factors = Vec::new();
    for i in lo..=hi {
        factors.extend(moller_factors(&m.betti, 4 * i - 1));
    }
    if m.dim % 2 == 1 {
        factors.extend(moller_factors(&m.betti, m.dim + k - 1));
    }
    Ok(ComponentDescriptor::from_parts(
        factors,
        None,
        true,
        ApplicableTheorem::OddCodim,
    ))
}

/// Component of `Imm(M, R^{m+k})` for even `k >= 2`, under the Euler and dual
/// Pontryagin vanishing hypotheses; carries a `Map(M, S^k)` factor.
pub fn imm_component_even(
    m: &ManifoldData,
    k: usize,
) -> Result<ComponentDescriptor, HypothesisViolation> {
    if k % 2 == 1 || k < 2 {
        return Err(violation(
            "k_parity",
            format!("even codimension theorem needs even k >= 2, got {k}"),
        ));
    }
    if !m.simply_connected {
        return Err(violation("simply_connected", "M must be simply connected"));
    }
    if m.dim == 0 {
        return Ok(ComponentDescriptor::from_parts(
            Vec::new(),
            None,
            true,
            ApplicableTheorem::EvenCodim,
        ));
    }
    if !m.euler_zero_effective() {
        return Err(violation(
            "euler_ok",
            "e(tau_M) != 0 required by the even-codimension theorem",
        ));
    }
    if !m.dual_p_zero_effective(k / 2) {
        return Err(violation(
            "dual_p_ok",
            format!(
                "pd_{}(tau_M) = 0 required by the even-codimension theorem",
                k / 2
            ),
        ));
    }
    let mut factors = Vec::new();
    for i in k / 2 + 1..=(m.dim + k - 1) / 2 {
        factors.extend(moller_factors(&m.betti, 4 * i - 1));
    }
    if m.dim % 2 == 0 {
        factors.extend(moller_factors(&m.betti, m.dim + k - 1));
    }
    let independent = m.betti.get(k) == 0;
    let mut descriptor = ComponentDescriptor::from_parts(
        factors,
        Some(k),
        independent,
        ApplicableTheorem::EvenCodim,
    );
    if !independent {
        descriptor.notes.push(format!(
            "H^{k}(M;Q) != 0: the Map(M,S^{k}) factor depends on the chosen immersion"
        ));
    }
    Ok(descriptor)
}

/// Dispatch on codimension parity.
pub fn imm_component(
    m: &ManifoldData,
    k: usize,
) -> Result<ComponentDescriptor, HypothesisViolation> {
    if k % 2 == 1 {
        imm_component_odd(m, k)
    } else {
        imm_component_even(m, k)
    }
}

/// Signed sphere-map rank polynomial
/// `R(x) = sum_i (dim H^{k-i} - dim H^{2k-i-1}) x^i`, `i >= 1`.
pub fn sphere_map_rank_poly(m: &ManifoldData, k: usize) -> IntPoly {
    let b = |d: i64| -> i64 {
        if d < 0 {
            0
        } else {
            m.betti.get(d as usize) as i64
        }
    };
    let mut coeffs = vec![0i64; 2 * k];
    for (i, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = b(k as i64 - i as i64) - b(2 * k as i64 - i as i64 - 1);
    }
    int_poly(&coeffs)
}

/// A rank series plus any warnings raised while assembling it.
#[derive(Debug, Clone)]
pub struct RankSeries {
    pub series: Series,
    pub warnings: Vec<String>,
}

/// `sum rank pi_i(Imm(M, R^{m+k}; f)) x^i` from the Eilenberg-MacLane
/// decomposition; for even `k` the sphere factor contributes the printed
/// `R(x)`, which is only evaluated when `H^k(M;Q) = 0` and may be flagged for
/// negative coefficients.
pub fn rank_series_expansion(
    m: &ManifoldData,
    k: usize,
    max_degree: usize,
) -> Result<RankSeries, HypothesisViolation> {
    let descriptor = imm_component(m, k)?;
    let mut series = Series::zero(max_degree);
    let mut warnings = Vec::new();
    for f in &descriptor.em_factors {
        series = series.add(&Series::monomial(
            crate::scalar::int(f.rank as i64),
            f.degree,
            max_degree,
        ));
    }
    if descriptor.sphere_factor.is_some() && m.dim > 0 {
        if m.betti.get(k) != 0 {
            return Err(violation(
                "hk_zero",
                format!("H^{k}(M;Q) != 0: sphere-map ranks depend on the component"),
            ));
        }
        let r = sphere_map_rank_poly(m, k);
        for d in 0..=r.degree().min(max_degree) {
            let c = r.coeff(d);
            if c.is_negative() {
                warnings.push(format!(
                    "NegativeCoefficient: sphere-map formula yields {c} at degree {d}"
                ));
            }
        }
        series = series.add(&crate::poly::int_series(&r, max_degree));
    }
    Ok(RankSeries { series, warnings })
}

/// Closed-form variants of the rank series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormVariant {
    /// The printed formulas, reproduced verbatim.
    Paper,
    /// Geometric sums over the exact integer index ranges; agrees with the
    /// expansion oracle.
    Corrected,
}

/// Closed form of the rank series as a rational function in `x`.
pub fn closed_form_series(
    m: &ManifoldData,
    k: usize,
    variant: ClosedFormVariant,
) -> Result<RationalFunction, HypothesisViolation> {
    if !m.closed {
        return Err(violation(
            "closed_ok",
            "rank series formulas need a closed manifold",
        ));
    }
    if !m.simply_connected {
        return Err(violation("simply_connected", "M must be simply connected"));
    }
    if 2 * k < m.dim + 2 {
        return Err(violation(
            "codim_bound_ok",
            format!("rank series formulas need k >= m/2 + 1 = {}", m.dim / 2 + 1),
        ));
    }
    let k_odd = k % 2 == 1;
    if k_odd && k < 3 {
        return Err(violation("k_parity", "odd codimension needs k >= 3"));
    }
    let mdim = m.dim;
    if mdim == 0 && variant == ClosedFormVariant::Corrected {
        // a point immerses with contractible components
        return Ok(RationalFunction::zero());
    }
    if !k_odd {
        if m.betti.get(k) != 0 {
            return Err(violation("hk_zero", format!("H^{k}(M;Q) must vanish")));
        }
        if !m.euler_zero_effective() {
            return Err(violation("euler_ok", "e(tau_M) must vanish"));
        }
    }
    let p = m.betti_poly();
    let den = one_minus_x_pow(4);
    match variant {
        ClosedFormVariant::Paper => {
            let r = sphere_map_rank_poly(m, k);
            let (shift, twist, square) = if k_odd {
                // m even: x^{2k-m-1} (1-x^{2m+2}) / (1-x^4) P;   m odd: P^2 with x^{3k-m-2}
                if mdim % 2 == 0 {
                    (2 * k - mdim - 1, one_minus_x_pow(2 * mdim + 2), false)
                } else {
                    (3 * k - mdim - 2, one_minus_x_pow(2 * mdim + 2), true)
                }
            } else {
                // parity roles swap in even codimension, and (1-x^{2m}) appears
                if mdim % 2 == 1 {
                    (2 * k - mdim - 1, one_minus_x_pow(2 * mdim), false)
                } else {
                    (3 * k - mdim - 2, one_minus_x_pow(2 * mdim), true)
                }
            };
            let mut num = Poly::x_pow(shift).mul(&twist).mul(&p);
            if square {
                num = num.mul(&p);
            }
            if !k_odd {
                num = num.mul(&r);
            }
            Ok(RationalFunction::new(num, den).expect("denominator 1 - x^4"))
        }
        ClosedFormVariant::Corrected => {
            // Sum x^{4i-1-m} P over the exact index range, plus the extra
            // Moller factor x^{k-1} P when it occurs, plus R(x) for even k.
            let (lo, hi) = if k_odd {
                odd_index_range(mdim, k)
            } else {
                (k / 2 + 1, (mdim + k - 1) / 2)
            };
            let count = (hi + 1).saturating_sub(lo);
            let mut num = Poly::zero();
            if count > 0 {
                num = Poly::x_pow(4 * lo - 1 - mdim)
                    .mul(&one_minus_x_pow(4 * count))
                    .mul(&p);
            }
            let extra_em = (k_odd && mdim % 2 == 1) || (!k_odd && mdim % 2 == 0);
            if extra_em && mdim > 0 {
                num = num.add(&Poly::x_pow(k - 1).mul(&den).mul(&p));
            }
            if !k_odd && mdim > 0 {
                num = num.add(&sphere_map_rank_poly(m, k).mul(&den));
            }
            Ok(RationalFunction::new(num, den).expect("denominator 1 - x^4"))
        }
    }
}

/// One factor of a general-target descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneralFactor {
    /// The `Map(M, N; phi^1)` factor.
    MapToTarget,
    Em(EMFactor),
    SphereMap(usize),
}

/// Symbolic description of `Imm(M, N; f)` for a general target `N`.
#[derive(Debug, Clone)]
pub struct GeneralDescriptor {
    /// The mapping space the component is equivalent to.
    pub equivalence: String,
    /// Product decomposition available when the Euler class of `N` vanishes.
    pub product: Option<Vec<GeneralFactor>>,
}

impl GeneralDescriptor {
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.equivalence);
        if let Some(product) = &self.product {
            for f in product {
                match f {
                    GeneralFactor::MapToTarget => out.push_str("Map(M,N)\n"),
                    GeneralFactor::Em(em) => {
                        out.push_str(&format!("K(Q^{}, {})\n", em.rank, em.degree))
                    }
                    GeneralFactor::SphereMap(k) => out.push_str(&format!("Map(M,S^{k})\n")),
                }
            }
        }
        out
    }
}

/// Component of `Imm(M, N; f)` for a simply connected target with vanishing
/// Pontryagin classes: equivalent to a component of `Map(M, V_m(tau_N))`, and
/// a product with the frame-space factors expanded when `e(tau_N) = 0` too.
pub fn imm_general_descriptor(
    m: &ManifoldData,
    n: &ManifoldData,
    k: usize,
) -> Result<GeneralDescriptor, HypothesisViolation> {
    if k < 2 {
        return Err(violation("k_parity", "general-target theorem needs k >= 2"));
    }
    if n.dim != m.dim + k {
        return Err(violation(
            "codim_bound_ok",
            format!("dim N = {} must equal dim M + k = {}", n.dim, m.dim + k),
        ));
    }
    if !n.simply_connected || !m.simply_connected {
        return Err(violation(
            "simply_connected",
            "M and N must be simply connected",
        ));
    }
    if !n.profile.p_zero_all {
        return Err(violation(
            "target_p_ok",
            "all Pontryagin classes of N must vanish",
        ));
    }
    if k % 2 == 0 {
        if !m.euler_zero_effective() {
            return Err(violation("euler_ok", "e(tau_M) must vanish for even k"));
        }
        if !m.dual_p_zero_effective(k / 2) {
            return Err(violation(
                "dual_p_ok",
                format!("pd_{}(tau_M) must vanish for even k", k / 2),
            ));
        }
    }
    let equivalence = format!("Map({}, V_{}(tau_{}); phi_f)", m.name, m.dim, n.name);
    let product = if n.euler_zero_effective() && m.dim > 0 {
        let mut factors = vec![GeneralFactor::MapToTarget];
        let mut em = GradedDims::new();
        let mut sphere = None;
        for f in stiefel_manifold_em_type(m.dim, k) {
            match f {
                StiefelFactor::Em(d) => {
                    for factor in moller_factors(&m.betti, d) {
                        em.add(factor.degree, factor.rank);
                    }
                }
                StiefelFactor::Sphere(s) => sphere = Some(s),
            }
        }
        factors.extend(
            em.iter()
                .map(|(degree, rank)| GeneralFactor::Em(EMFactor { degree, rank })),
        );
        if let Some(s) = sphere {
            factors.push(GeneralFactor::SphereMap(s));
        }
        Some(factors)
    } else {
        None
    };
    Ok(GeneralDescriptor {
        equivalence,
        product,
    })
}
