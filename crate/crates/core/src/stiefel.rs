//! Sullivan models of the Stiefel bundle attached to a pair of oriented
//! bundles of ranks `m` and `m+k`.
//!
//! The relative model adjoins generators `abar_l` (degree `4l-1`) for integer
//! `l` between `k/2` and `(m+k-1)/2`, an `e_k` of degree `k` when `k` is even,
//! and an `ebar` of degree `m+k-1` when `m+k` is even, with
//!
//! ```text
//! D abar_{k/2} = p_{k/2}(eta) - e_k^2 - pd_{k/2}(xi)      (k even)
//! D abar_l     = p_l(eta) - pd_l(xi)                      (l > k/2)
//! D ebar       = e(eta) - e(xi) e_k                       (e_k = 0 for k odd)
//! D e_k        = 0
//! ```
//!
//! Class representatives are modeled as closed generators of formal base and
//! target algebras; arbitrary algebras with chosen closed representatives are
//! accepted through [`build_stiefel_model_over`]. A rank-0 bundle has unit
//! Euler class, which the degenerate `m = 0` and `k = 0` cases rely on.

use std::collections::{BTreeMap, BTreeSet};

use crate::cgda::{CgdaBuilder, CgdaError, CgdaMorphism, Element, FreeCGDA, GenId};
use crate::classes::{dual_total_class, ClassVanishingProfile, TotalClass};
use crate::graded::GradedDims;

/// Which dual Pontryagin and Euler classes of the base bundle are zero;
/// unflagged classes stay symbolic.
#[derive(Debug, Clone, Default)]
pub struct XiClasses {
    pub zero_dual_p: BTreeSet<usize>,
    pub euler_zero: bool,
}

impl XiClasses {
    pub fn symbolic() -> Self {
        XiClasses::default()
    }

    pub fn all_zero(m: usize, k: usize) -> Self {
        let (lo, hi) = abar_range(m, k);
        XiClasses {
            zero_dual_p: (lo..=hi).collect(),
            euler_zero: true,
        }
    }

    pub fn from_profile(profile: &ClassVanishingProfile, m: usize, k: usize) -> Self {
        let (lo, hi) = abar_range(m, k);
        XiClasses {
            zero_dual_p: (lo..=hi).filter(|&l| profile.dual_p_zero_at(l)).collect(),
            euler_zero: profile.euler_zero,
        }
    }
}

/// Which Pontryagin and Euler classes of the big bundle are zero.
#[derive(Debug, Clone, Default)]
pub struct EtaClasses {
    pub zero_p: BTreeSet<usize>,
    pub euler_zero: bool,
}

impl EtaClasses {
    pub fn symbolic() -> Self {
        EtaClasses::default()
    }

    pub fn all_zero(m: usize, k: usize) -> Self {
        let (lo, hi) = abar_range(m, k);
        EtaClasses {
            zero_p: (lo..=hi).collect(),
            euler_zero: true,
        }
    }
}

/// Integer range of the `abar` generators: `ceil(k/2) <= l <= floor((m+k-1)/2)`,
/// empty when the lower end exceeds the upper.
pub fn abar_range(m: usize, k: usize) -> (usize, usize) {
    (k.div_ceil(2).max(1), (m + k).saturating_sub(1) / 2)
}

/// The relative Sullivan model of a Stiefel bundle together with the
/// partition of its generators.
#[derive(Debug, Clone)]
pub struct StiefelModelSpec {
    pub m: usize,
    pub k: usize,
    pub base_model: FreeCGDA,
    pub target_model: FreeCGDA,
    pub full_model: FreeCGDA,
    pub base_gens: Vec<GenId>,
    pub target_gens: Vec<GenId>,
    pub new_gens: Vec<GenId>,
    xi: XiClasses,
}

impl StiefelModelSpec {
    pub fn base_set(&self) -> BTreeSet<GenId> {
        self.base_gens.iter().copied().collect()
    }

    /// Target and adjoined generators together form the fiber subalgebra.
    pub fn fiber_set(&self) -> BTreeSet<GenId> {
        self.target_gens
            .iter()
            .chain(self.new_gens.iter())
            .copied()
            .collect()
    }
}

fn euler_exists(rank: usize) -> bool {
    rank % 2 == 0 && rank >= 2
}

/// Builds the model over formal base and target algebras in which every
/// non-vanishing class is a closed generator of the right degree.
pub fn build_stiefel_model(
    m: usize,
    k: usize,
    xi: &XiClasses,
    eta: &EtaClasses,
) -> StiefelModelSpec {
    let (lo, hi) = abar_range(m, k);

    let mut base_b = CgdaBuilder::new();
    for l in lo..=hi {
        if !xi.zero_dual_p.contains(&l) {
            base_b.add_gen(&format!("pd{l}_xi"), 4 * l);
        }
    }
    if euler_exists(m) && !xi.euler_zero {
        base_b.add_gen("e_xi", m);
    }
    let base = base_b.build();

    let mut target_b = CgdaBuilder::new();
    for l in lo..=hi {
        if !eta.zero_p.contains(&l) {
            target_b.add_gen(&format!("p{l}_eta"), 4 * l);
        }
    }
    if euler_exists(m + k) && !eta.euler_zero {
        target_b.add_gen("e_eta", m + k);
    }
    let target = target_b.build();

    let xi_dual: BTreeMap<usize, Element> = (lo..=hi)
        .filter_map(|l| {
            base.gen_by_name(&format!("pd{l}_xi"))
                .map(|g| (l, base.gen_elem(g)))
        })
        .collect();
    let xi_euler = if m == 0 {
        Some(base.unit())
    } else {
        base.gen_by_name("e_xi").map(|g| base.gen_elem(g))
    };
    let eta_p: BTreeMap<usize, Element> = (lo..=hi)
        .filter_map(|l| {
            target
                .gen_by_name(&format!("p{l}_eta"))
                .map(|g| (l, target.gen_elem(g)))
        })
        .collect();
    let eta_euler = target.gen_by_name("e_eta").map(|g| target.gen_elem(g));

    let mut spec = build_stiefel_model_over(
        m,
        k,
        &base,
        &xi_dual,
        xi_euler.as_ref(),
        &target,
        &eta_p,
        eta_euler.as_ref(),
    )
    .expect("formal class symbols have the right degrees");
    spec.xi = xi.clone();
    spec
}

/// Builds the model over caller-supplied algebras and closed class
/// representatives. `None` classes are zero; for `m = 0` pass the unit as the
/// Euler class of the base.
#[allow(clippy::too_many_arguments)]
pub fn build_stiefel_model_over(
    m: usize,
    k: usize,
    base: &FreeCGDA,
    xi_dual_p: &BTreeMap<usize, Element>,
    xi_euler: Option<&Element>,
    target: &FreeCGDA,
    eta_p: &BTreeMap<usize, Element>,
    eta_euler: Option<&Element>,
) -> Result<StiefelModelSpec, CgdaError> {
    let (lo, hi) = abar_range(m, k);

    for (&l, e) in xi_dual_p {
        check_class(base, e, 4 * l, "dual Pontryagin class of xi")?;
    }
    if let Some(e) = xi_euler {
        check_class(base, e, m, "Euler class of xi")?;
    }
    for (&l, e) in eta_p {
        check_class(target, e, 4 * l, "Pontryagin class of eta")?;
    }
    if let Some(e) = eta_euler {
        check_class(target, e, m + k, "Euler class of eta")?;
    }

    // Assemble the flat model: base gens, target gens, then the new ones.
    let mut b = CgdaBuilder::new();
    let mut base_gens = Vec::new();
    for g in base.gens() {
        base_gens.push(b.add_gen(&g.name, g.degree));
    }
    let mut target_gens = Vec::new();
    for g in target.gens() {
        target_gens.push(b.add_gen(&g.name, g.degree));
    }
    let mut new_gens = Vec::new();
    let e_k = if euler_exists(k) {
        let id = b.add_gen(&format!("e{k}"), k);
        new_gens.push(id);
        Some(id)
    } else {
        None
    };
    let mut abar = BTreeMap::new();
    for l in lo..=hi {
        let id = b.add_gen(&format!("abar{l}"), 4 * l - 1);
        abar.insert(l, id);
        new_gens.push(id);
    }
    let ebar = if euler_exists(m + k) {
        let id = b.add_gen(&format!("ebar{}", m + k), m + k - 1);
        new_gens.push(id);
        Some(id)
    } else {
        None
    };
    let mut full = b.build();

    // Carry the base and target differentials over.
    for (i, g) in base.gens().iter().enumerate() {
        let e = rebuild(&full, base, base.d_of(g.id), &base_gens);
        full.set_differential(base_gens[i], e)?;
    }
    for (i, g) in target.gens().iter().enumerate() {
        let e = rebuild(&full, target, target.d_of(g.id), &target_gens);
        full.set_differential(target_gens[i], e)?;
    }

    let xi_dual_in_full: BTreeMap<usize, Element> = xi_dual_p
        .iter()
        .map(|(&l, e)| (l, rebuild(&full, base, e, &base_gens)))
        .collect();
    let xi_euler_in_full = xi_euler.map(|e| rebuild(&full, base, e, &base_gens));
    let eta_p_in_full: BTreeMap<usize, Element> = eta_p
        .iter()
        .map(|(&l, e)| (l, rebuild(&full, target, e, &target_gens)))
        .collect();
    let eta_euler_in_full = eta_euler.map(|e| rebuild(&full, target, e, &target_gens));

    for (&l, &id) in &abar {
        let mut d = eta_p_in_full
            .get(&l)
            .cloned()
            .unwrap_or_else(|| full.zero());
        if k % 2 == 0 && l == k / 2 {
            if let Some(ek) = e_k {
                d = d.sub(&full.pow(&full.gen_elem(ek), 2));
            }
        }
        if let Some(pd) = xi_dual_in_full.get(&l) {
            d = d.sub(pd);
        }
        full.set_differential(id, d)?;
    }
    if let Some(eb) = ebar {
        let mut d = eta_euler_in_full.clone().unwrap_or_else(|| full.zero());
        // e_k = 0 when k is odd; for k = 0 the Euler class is the unit.
        let ek_elem = match (k, e_k) {
            (0, _) => Some(full.unit()),
            (_, Some(id)) => Some(full.gen_elem(id)),
            _ => None,
        };
        if let (Some(e_xi), Some(ek)) = (&xi_euler_in_full, &ek_elem) {
            d = d.sub(&full.mul(e_xi, ek));
        }
        full.set_differential(eb, d)?;
    }

    Ok(StiefelModelSpec {
        m,
        k,
        base_model: base.clone(),
        target_model: target.clone(),
        full_model: full,
        base_gens,
        target_gens,
        new_gens,
        xi: XiClasses::symbolic(),
    })
}

fn check_class(alg: &FreeCGDA, e: &Element, degree: usize, what: &str) -> Result<(), CgdaError> {
    if e.algebra_id() != alg.algebra_id() {
        return Err(CgdaError::MixedAlgebras);
    }
    if !e.is_zero() && alg.degree_of(e) != Some(degree) {
        return Err(CgdaError::InvalidDegrees(format!(
            "{what} must be homogeneous of degree {degree}"
        )));
    }
    if !alg.differential(e).is_zero() {
        return Err(CgdaError::InvalidDegrees(format!("{what} must be closed")));
    }
    Ok(())
}

fn rebuild(full: &FreeCGDA, _from: &FreeCGDA, e: &Element, map: &[GenId]) -> Element {
    let mut out = full.zero();
    for (mono, c) in e.terms() {
        let factors = mono
            .factors()
            .iter()
            .map(|&(g, exp)| (map[g.0 as usize], exp))
            .collect::<Vec<_>>();
        let elem_factors: Vec<Element> = factors
            .iter()
            .map(|&(g, exp)| full.pow(&full.gen_elem(g), exp))
            .collect();
        let refs: Vec<&Element> = elem_factors.iter().collect();
        out = out.add(&full.product(&refs).scale(c));
    }
    out
}

/// Substitutes the profile's vanishing into the base classes and reports
/// whether the differential then lands in the fiber subalgebra.
pub fn check_rational_triviality(spec: &StiefelModelSpec, profile: &ClassVanishingProfile) -> bool {
    let (lo, hi) = abar_range(spec.m, spec.k);
    let mut xi = spec.xi.clone();
    for l in lo..=hi {
        if profile.dual_p_zero_at(l) {
            xi.zero_dual_p.insert(l);
        }
    }
    xi.euler_zero = xi.euler_zero || profile.euler_zero;
    let substituted = build_stiefel_model(spec.m, spec.k, &xi, &EtaClasses::symbolic());
    substituted
        .full_model
        .is_split_trivial(&substituted.base_set(), &substituted.fiber_set())
        .expect("base and fiber partition the generators")
}

/// The fiber algebra of the Stiefel bundle over a base point: the target
/// model tensored with the adjoined generators.
#[derive(Debug, Clone)]
pub struct FiberModel {
    pub model: FreeCGDA,
    pub target_gens: Vec<GenId>,
    pub new_gens: Vec<GenId>,
    /// True when the differential of every adjoined generator avoids the
    /// target symbols, splitting the fiber as target x frame-space.
    pub splits: bool,
}

/// Model of the frame-space bundle fiber `V_m(eta)` for a bundle with the
/// given class flags over a formal base.
pub fn fiber_model(m: usize, k: usize, eta: &EtaClasses) -> FiberModel {
    let spec = build_stiefel_model(m, k, &XiClasses::all_zero(m, k), eta);
    // With the base fully zeroed the base algebra is trivial, so the full
    // model is exactly the fiber algebra.
    debug_assert!(spec.base_gens.is_empty());
    let target: BTreeSet<GenId> = spec.target_gens.iter().copied().collect();
    let rest: BTreeSet<GenId> = spec.new_gens.iter().copied().collect();
    let splits = spec
        .full_model
        .is_split_trivial(&target, &rest)
        .expect("target and new generators partition the fiber model");
    FiberModel {
        model: spec.full_model,
        target_gens: spec.target_gens,
        new_gens: spec.new_gens,
        splits,
    }
}

/// One factor of the rational homotopy type of a Stiefel manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StiefelFactor {
    /// An Eilenberg-MacLane factor `K(Q, degree)`.
    Em(usize),
    /// The sphere `S^degree` (even codimension only).
    Sphere(usize),
}

impl StiefelFactor {
    pub fn degree(&self) -> usize {
        match *self {
            StiefelFactor::Em(d) | StiefelFactor::Sphere(d) => d,
        }
    }
}

/// The rational homotopy type of `V_m(R^{m+k})` as a list of factors,
/// sorted by degree. `V_0` is a point.
pub fn stiefel_manifold_em_type(m: usize, k: usize) -> Vec<StiefelFactor> {
    assert!(k >= 2, "frame spaces with k < 2 are not simply connected");
    if m == 0 {
        return Vec::new();
    }
    let mut factors = Vec::new();
    if k % 2 == 1 {
        let lo = k.div_ceil(2);
        let hi = if m % 2 == 0 {
            (m + k) / 2
        } else {
            (m + k - 1) / 2
        };
        for l in lo..=hi {
            factors.push(StiefelFactor::Em(4 * l - 1));
        }
        if m % 2 == 1 {
            factors.push(StiefelFactor::Em(m + k - 1));
        }
    } else {
        for l in k / 2 + 1..=(m + k - 1) / 2 {
            factors.push(StiefelFactor::Em(4 * l - 1));
        }
        factors.push(StiefelFactor::Sphere(k));
        if m % 2 == 0 {
            factors.push(StiefelFactor::Em(m + k - 1));
        }
    }
    factors.sort_by_key(|f| (f.degree(), matches!(f, StiefelFactor::Em(_))));
    factors
}

/// Expected cohomology of the free graded algebra on the given factors,
/// through `max_degree`: exterior on odd degrees, polynomial on even ones,
/// truncated `1 + x^k` for a sphere factor.
pub fn factors_cohomology(factors: &[StiefelFactor], max_degree: usize) -> GradedDims {
    let mut dims = GradedDims::from_pairs(&[(0, 1)]);
    for f in factors {
        let factor_dims = match *f {
            StiefelFactor::Sphere(d) => GradedDims::from_pairs(&[(0, 1), (d, 1)]),
            StiefelFactor::Em(d) if d % 2 == 1 => GradedDims::from_pairs(&[(0, 1), (d, 1)]),
            StiefelFactor::Em(d) => {
                let mut g = GradedDims::new();
                let mut n = 0;
                while n <= max_degree {
                    g.set(n, 1);
                    n += d;
                }
                g
            }
        };
        dims = dims.kunneth(&factor_dims, max_degree);
    }
    dims
}

/// The universal relative model, its mapping-cylinder counterpart, and the
/// comparison morphism between them.
///
/// In the universal algebra the differential of `abar_l` is the degree-`l`
/// component of `pd(p) * (1 + a_1 + a_2 + ...)` (minus `e_k^2` at `l = k/2`),
/// and the morphism sends `abar_l` to `pd_{l-1} x_1 + pd_{l-2} x_2 + ... + x_l`.
/// Written this way both sides of the chain-map condition reduce to the same
/// dual-class relations checked by `classes::verify_ahl_identity`.
#[derive(Debug, Clone)]
pub struct UniversalModel {
    pub a1: FreeCGDA,
    pub a1_prime: FreeCGDA,
    pub phi: CgdaMorphism,
}

pub fn build_universal_model(m: usize, k: usize) -> UniversalModel {
    let (lo, hi) = abar_range(m, k);
    let big_l = (m + k).saturating_sub(1) / 2;
    let p_count = m.saturating_sub(1) / 2;
    let b_count = k.saturating_sub(1) / 2;

    // A1 = Lambda(a_*, e_{m+k}) tensor Lambda(abar_*, p_*, e_m, e_k, ebar)
    let mut b1 = CgdaBuilder::new();
    let a_ids: Vec<GenId> = (1..=big_l)
        .map(|i| b1.add_gen(&format!("a{i}"), 4 * i))
        .collect();
    let e_mk = euler_exists(m + k).then(|| b1.add_gen("e_mk", m + k));
    let p_ids: Vec<GenId> = (1..=p_count)
        .map(|t| b1.add_gen(&format!("p{t}"), 4 * t))
        .collect();
    let e_m = euler_exists(m).then(|| b1.add_gen("e_m", m));
    let e_k = euler_exists(k).then(|| b1.add_gen("e_k", k));
    let abar_ids: Vec<(usize, GenId)> = (lo..=hi)
        .map(|l| (l, b1.add_gen(&format!("abar{l}"), 4 * l - 1)))
        .collect();
    let ebar = euler_exists(m + k).then(|| b1.add_gen("ebar", m + k - 1));
    let mut a1 = b1.build();

    let p_total =
        TotalClass::new(&a1, p_ids.iter().map(|&g| a1.gen_elem(g)).collect()).expect("degrees");
    let dual = dual_total_class(&a1, &p_total, hi.max(1));
    for &(l, id) in &abar_ids {
        // [pd * (1 + sum a_i)]_l = pd_l + sum_{i=1}^{l} pd_{l-i} a_i
        let mut d = dual.component(&a1, l);
        for i in 1..=l {
            let ai = a1.gen_elem(a_ids[i - 1]);
            let term = if i == l {
                ai
            } else {
                a1.mul(&dual.component(&a1, l - i), &ai)
            };
            d = d.add(&term);
        }
        if k % 2 == 0 && l == k / 2 {
            if let Some(ek) = e_k {
                d = d.sub(&a1.pow(&a1.gen_elem(ek), 2));
            }
        }
        a1.set_differential(id, d).expect("degree k checked");
    }
    if let Some(eb) = ebar {
        let mut d = a1.gen_elem(e_mk.expect("ebar implies e_mk"));
        let em_elem = if m == 0 {
            Some(a1.unit())
        } else {
            e_m.map(|g| a1.gen_elem(g))
        };
        let ek_elem = if k == 0 {
            Some(a1.unit())
        } else {
            e_k.map(|g| a1.gen_elem(g))
        };
        if let (Some(em), Some(ek)) = (em_elem, ek_elem) {
            d = d.sub(&a1.mul(&em, &ek));
        }
        a1.set_differential(eb, d).expect("degree checked");
    }

    // A1' = Lambda(p_*, e_m, b_*, e_k) tensor Lambda(x_*, ebar, a_*, e_{m+k})
    let mut b2 = CgdaBuilder::new();
    let p2: Vec<GenId> = (1..=p_count)
        .map(|t| b2.add_gen(&format!("p{t}"), 4 * t))
        .collect();
    let e_m2 = euler_exists(m).then(|| b2.add_gen("e_m", m));
    let b2_ids: Vec<GenId> = (1..=b_count)
        .map(|j| b2.add_gen(&format!("b{j}"), 4 * j))
        .collect();
    let e_k2 = euler_exists(k).then(|| b2.add_gen("e_k", k));
    let x_ids: Vec<GenId> = (1..=big_l)
        .map(|i| b2.add_gen(&format!("x{i}"), 4 * i - 1))
        .collect();
    let ebar2 = euler_exists(m + k).then(|| b2.add_gen("ebar", m + k - 1));
    let a2: Vec<GenId> = (1..=big_l)
        .map(|i| b2.add_gen(&format!("a{i}"), 4 * i))
        .collect();
    let e_mk2 = euler_exists(m + k).then(|| b2.add_gen("e_mk", m + k));
    let mut a1p = b2.build();

    // b_j with the convention b_{k/2} = e_k^2 (and b_0 = 1 handled inline).
    let b_elem = |alg: &FreeCGDA, j: usize| -> Element {
        if (1..=b_count).contains(&j) {
            alg.gen_elem(b2_ids[j - 1])
        } else if k % 2 == 0 && k >= 2 && j == k / 2 {
            alg.pow(&alg.gen_elem(e_k2.expect("k even")), 2)
        } else {
            alg.zero()
        }
    };
    let p_elem = |alg: &FreeCGDA, t: usize| -> Element {
        if (1..=p_count).contains(&t) {
            alg.gen_elem(p2[t - 1])
        } else {
            alg.zero()
        }
    };
    for (i, &x) in x_ids.iter().enumerate() {
        let idx = i + 1;
        // f_i = a_i - sum_{t+j=idx} p_t b_j
        let mut wh = p_elem(&a1p, idx).add(&b_elem(&a1p, idx));
        for t in 1..idx {
            wh = wh.add(&a1p.mul(&p_elem(&a1p, t), &b_elem(&a1p, idx - t)));
        }
        let d = a1p.gen_elem(a2[i]).sub(&wh);
        a1p.set_differential(x, d).expect("degree checked");
    }
    if let Some(eb) = ebar2 {
        let mut d = a1p.gen_elem(e_mk2.expect("ebar implies e_mk"));
        let em_elem = if m == 0 {
            Some(a1p.unit())
        } else {
            e_m2.map(|g| a1p.gen_elem(g))
        };
        let ek_elem = if k == 0 {
            Some(a1p.unit())
        } else {
            e_k2.map(|g| a1p.gen_elem(g))
        };
        if let (Some(em), Some(ek)) = (em_elem, ek_elem) {
            d = d.sub(&a1p.mul(&em, &ek));
        }
        a1p.set_differential(eb, d).expect("degree checked");
    }

    // phi: identity on shared symbols, abar_l -> sum pd_{l-i} x_i.
    let p_total2 =
        TotalClass::new(&a1p, p2.iter().map(|&g| a1p.gen_elem(g)).collect()).expect("degrees");
    let dual2 = dual_total_class(&a1p, &p_total2, hi.max(1));
    let mut assign: Vec<Element> = Vec::with_capacity(a1.gens().len());
    for g in a1.gens() {
        let image = match g.name.as_str() {
            "e_mk" => a1p.gen_elem(e_mk2.expect("shared")),
            "e_m" => a1p.gen_elem(e_m2.expect("shared")),
            "e_k" => a1p.gen_elem(e_k2.expect("shared")),
            "ebar" => a1p.gen_elem(ebar2.expect("shared")),
            name if name.starts_with('a') && !name.starts_with("abar") => {
                let i: usize = name[1..].parse().expect("a index");
                a1p.gen_elem(a2[i - 1])
            }
            name if name.starts_with('p') => {
                let t: usize = name[1..].parse().expect("p index");
                a1p.gen_elem(p2[t - 1])
            }
            name => {
                let l: usize = name["abar".len()..].parse().expect("abar index");
                let mut img = a1p.zero();
                for i in 1..=l {
                    let xi = a1p.gen_elem(x_ids[i - 1]);
                    let term = if i == l {
                        xi
                    } else {
                        a1p.mul(&dual2.component(&a1p, l - i), &xi)
                    };
                    img = img.add(&term);
                }
                img
            }
        };
        assign.push(image);
    }
    let phi =
        CgdaMorphism::new(a1.clone(), a1p.clone(), assign).expect("assignments preserve degrees");

    UniversalModel {
        a1,
        a1_prime: a1p,
        phi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cgda::CgdaBuilder;

    fn names(spec: &StiefelModelSpec, ids: &[GenId]) -> Vec<(String, usize)> {
        ids.iter()
            .map(|&g| {
                let gen = spec.full_model.gen(g);
                (gen.name.clone(), gen.degree)
            })
            .collect()
    }

    #[test]
    fn model_m2_k3_generators() {
        let spec = build_stiefel_model(2, 3, &XiClasses::symbolic(), &EtaClasses::symbolic());
        // ceil(3/2) = 2, floor(4/2) = 2: single abar2 of degree 7; 5 odd, 3 odd
        assert_eq!(names(&spec, &spec.new_gens), vec![("abar2".into(), 7)]);
        assert!(spec.full_model.check_d_squared().pass());
    }

    #[test]
    fn model_m3_k3_generators() {
        let spec = build_stiefel_model(3, 3, &XiClasses::symbolic(), &EtaClasses::symbolic());
        assert_eq!(
            names(&spec, &spec.new_gens),
            vec![("abar2".into(), 7), ("ebar6".into(), 5)]
        );
        // D ebar = e(eta): e_k = 0 for odd k and e(xi) = 0 for odd m
        let ebar = spec.full_model.gen_by_name("ebar6").unwrap();
        let e_eta = spec.full_model.gen_by_name("e_eta").unwrap();
        assert_eq!(spec.full_model.d_of(ebar), &spec.full_model.gen_elem(e_eta));
    }

    #[test]
    fn model_m2_k2_differentials() {
        let spec = build_stiefel_model(2, 2, &XiClasses::symbolic(), &EtaClasses::symbolic());
        assert_eq!(
            names(&spec, &spec.new_gens),
            vec![("e2".into(), 2), ("abar1".into(), 3), ("ebar4".into(), 3)]
        );
        let alg = &spec.full_model;
        let gid = |n: &str| alg.gen_by_name(n).unwrap();
        let abar1 = gid("abar1");
        let expect = alg
            .gen_elem(gid("p1_eta"))
            .sub(&alg.pow(&alg.gen_elem(gid("e2")), 2))
            .sub(&alg.gen_elem(gid("pd1_xi")));
        assert_eq!(alg.d_of(abar1), &expect);
        let ebar = gid("ebar4");
        let expect = alg
            .gen_elem(gid("e_eta"))
            .sub(&alg.mul(&alg.gen_elem(gid("e_xi")), &alg.gen_elem(gid("e2"))));
        assert_eq!(alg.d_of(ebar), &expect);
        assert!(alg.check_d_squared().pass());
    }

    #[test]
    fn over_variant_rejects_wrong_degree_symbol() {
        let mut b = CgdaBuilder::new();
        let bad = b.add_gen("pd2_xi", 5); // should be degree 8
        let base = b.build();
        let target = CgdaBuilder::new().build();
        let dual = [(2usize, base.gen_elem(bad))].into_iter().collect();
        let r = build_stiefel_model_over(2, 3, &base, &dual, None, &target, &BTreeMap::new(), None);
        assert!(matches!(r, Err(CgdaError::InvalidDegrees(_))));
    }

    #[test]
    fn triviality_odd_codimension() {
        let spec = build_stiefel_model(2, 3, &XiClasses::symbolic(), &EtaClasses::symbolic());
        let profile = ClassVanishingProfile::new(false, Some(2), false);
        assert!(check_rational_triviality(&spec, &profile));
    }

    #[test]
    fn triviality_fails_with_euler_class() {
        // k = 2 with a symbolic nonzero e(xi): D ebar contains e(xi) e_k
        let spec = build_stiefel_model(2, 2, &XiClasses::symbolic(), &EtaClasses::symbolic());
        let profile = ClassVanishingProfile::new(false, Some(1), false);
        assert!(!check_rational_triviality(&spec, &profile));
    }

    #[test]
    fn triviality_even_codimension_with_vanishing() {
        let spec = build_stiefel_model(2, 2, &XiClasses::symbolic(), &EtaClasses::symbolic());
        let profile = ClassVanishingProfile::new(true, Some(1), false);
        assert!(check_rational_triviality(&spec, &profile));
    }

    #[test]
    fn fiber_v2_r5_is_a_rational_seven_sphere() {
        let fm = fiber_model(2, 3, &EtaClasses::all_zero(2, 3));
        assert!(fm.splits);
        assert_eq!(
            fm.model.cohomology_dims(14).unwrap(),
            GradedDims::from_pairs(&[(0, 1), (7, 1)])
        );
    }

    #[test]
    fn fiber_v2_r4_is_rationally_s2_x_s3() {
        let fm = fiber_model(2, 2, &EtaClasses::all_zero(2, 2));
        assert_eq!(
            fm.model.cohomology_dims(6).unwrap(),
            GradedDims::from_pairs(&[(0, 1), (2, 1), (3, 1), (5, 1)])
        );
    }

    #[test]
    fn fiber_with_symbolic_classes_does_not_split() {
        let fm = fiber_model(2, 3, &EtaClasses::symbolic());
        assert!(!fm.splits);
    }

    #[test]
    fn em_type_examples() {
        assert_eq!(stiefel_manifold_em_type(2, 3), vec![StiefelFactor::Em(7)]);
        assert_eq!(
            stiefel_manifold_em_type(3, 3),
            vec![StiefelFactor::Em(5), StiefelFactor::Em(7)]
        );
        assert_eq!(
            stiefel_manifold_em_type(2, 2),
            vec![StiefelFactor::Sphere(2), StiefelFactor::Em(3)]
        );
        assert_eq!(stiefel_manifold_em_type(0, 4), Vec::new());
    }

    #[test]
    fn universal_model_morphism_small_cases() {
        for (m, k) in [(2, 3), (2, 2), (3, 3), (4, 4)] {
            let um = build_universal_model(m, k);
            assert!(um.a1.check_d_squared().pass(), "(m,k)=({m},{k}) d^2 on A1");
            assert!(
                um.a1_prime.check_d_squared().pass(),
                "(m,k)=({m},{k}) d^2 on A1'"
            );
            let report = um.phi.check();
            assert!(
                report.pass(),
                "(m,k)=({m},{k}) morphism: {} failures",
                report.failures.len()
            );
        }
    }

    #[test]
    fn universal_model_cohomology_match_m2_k2() {
        let um = build_universal_model(2, 2);
        assert_eq!(
            um.a1.cohomology_dims(12).unwrap(),
            um.a1_prime.cohomology_dims(12).unwrap()
        );
    }
}
