//! Named invariant suites over parameter grids, shared by the `verify` CLI
//! subcommand and the acceptance tests.

use crate::classes::{ahl_index_range, verify_ahl_identity, ClassVanishingProfile};
use crate::immersion::{closed_form_series, rank_series_expansion, ClosedFormVariant};
use crate::io::catalog;
use crate::stiefel::{
    abar_range, build_stiefel_model, build_universal_model, check_rational_triviality,
    factors_cohomology, fiber_model, stiefel_manifold_em_type, EtaClasses, XiClasses,
};

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "suite {}: {} cases, {} failures",
            self.name,
            self.cases,
            self.failures.len()
        )
    }
}

fn grid(max: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=max).flat_map(move |m| (2..=max).map(move |k| (m, k)))
}

/// `d o d = 0` on the symbolic Stiefel model over the grid.
pub fn suite_d_squared(max: usize) -> SuiteResult {
    let mut cases = 0;
    let mut failures = Vec::new();
    for (m, k) in grid(max) {
        cases += 1;
        let spec = build_stiefel_model(m, k, &XiClasses::symbolic(), &EtaClasses::symbolic());
        let report = spec.full_model.check_d_squared();
        for (g, residual) in &report.failures {
            failures.push(format!(
                "d^2 != 0 at (m,k)=({m},{k}) on {}: {}",
                spec.full_model.gen(*g).name,
                spec.full_model.render(residual)
            ));
        }
    }
    SuiteResult {
        name: "d-squared".into(),
        cases,
        failures,
    }
}

/// The dual-class relations at every admissible index over the grid.
pub fn suite_ahl(max: usize) -> SuiteResult {
    let mut cases = 0;
    let mut failures = Vec::new();
    for (m, k) in grid(max) {
        let (lo, hi) = ahl_index_range(m, k);
        for ell in lo..=hi {
            cases += 1;
            match verify_ahl_identity(m, k, ell) {
                Ok(report) if report.pass() => {}
                Ok(_) => failures.push(format!("relation fails at (m,k,l)=({m},{k},{ell})")),
                Err(e) => failures.push(format!("(m,k,l)=({m},{k},{ell}): {e}")),
            }
        }
    }
    SuiteResult {
        name: "ahl".into(),
        cases,
        failures,
    }
}

/// Well-formedness of the universal model and its comparison morphism.
pub fn suite_phi(max: usize) -> SuiteResult {
    let mut cases = 0;
    let mut failures = Vec::new();
    for (m, k) in grid(max) {
        cases += 1;
        let um = build_universal_model(m, k);
        if !um.a1.check_d_squared().pass() {
            failures.push(format!("d^2 != 0 on A1 at (m,k)=({m},{k})"));
            continue;
        }
        if !um.a1_prime.check_d_squared().pass() {
            failures.push(format!("d^2 != 0 on A1' at (m,k)=({m},{k})"));
            continue;
        }
        let report = um.phi.check();
        for (g, residual) in &report.failures {
            failures.push(format!(
                "phi is not a chain map at (m,k)=({m},{k}) on {}: residual {}",
                um.a1.gen(*g).name,
                um.a1_prime.render(residual)
            ));
        }
    }
    SuiteResult {
        name: "phi".into(),
        cases,
        failures,
    }
}

/// The rational-triviality criterion against its truth table: split exactly
/// when every dual class from `ceil(k/2)` vanishes and (`k` odd or the Euler
/// class vanishes, the latter automatic for odd or zero `m`).
pub fn suite_triviality(max: usize) -> SuiteResult {
    let mut cases = 0;
    let mut failures = Vec::new();
    for (m, k) in grid(max) {
        let (lo, hi) = abar_range(m, k);
        let spec = build_stiefel_model(m, k, &XiClasses::symbolic(), &EtaClasses::symbolic());
        for euler_zero in [false, true] {
            for dual_from in [None, Some(lo), Some(lo + 1), Some(hi + 1)] {
                cases += 1;
                let profile = ClassVanishingProfile::new(euler_zero, dual_from, false);
                let got = check_rational_triviality(&spec, &profile);
                let dual_all_zero = lo > hi || dual_from.map(|d| d <= lo).unwrap_or(false);
                let euler_gone = k % 2 == 1 || euler_zero || m % 2 == 1 || m == 0;
                let expected = dual_all_zero && euler_gone;
                if got != expected {
                    failures.push(format!(
                        "triviality at (m,k)=({m},{k}) euler_zero={euler_zero} dual_from={dual_from:?}: got {got}, expected {expected}"
                    ));
                }
            }
        }
    }
    SuiteResult {
        name: "triviality".into(),
        cases,
        failures,
    }
}

/// Fiber cohomology against the free algebra on the frame-space factors.
pub fn suite_fiber_em(max: usize) -> SuiteResult {
    let mut cases = 0;
    let mut failures = Vec::new();
    for (m, k) in grid(max) {
        cases += 1;
        let cap = (2 * (m + k)).min(crate::cgda::COHOMOLOGY_DEGREE_CAP);
        let fm = fiber_model(m, k, &EtaClasses::all_zero(m, k));
        let got = match fm.model.cohomology_dims(cap) {
            Ok(d) => d,
            Err(e) => {
                failures.push(format!("(m,k)=({m},{k}): {e}"));
                continue;
            }
        };
        let expected = factors_cohomology(&stiefel_manifold_em_type(m, k), cap);
        if got != expected {
            failures.push(format!(
                "fiber cohomology at (m,k)=({m},{k}): got {got}, expected {expected}"
            ));
        }
    }
    SuiteResult {
        name: "fiber-em".into(),
        cases,
        failures,
    }
}

/// Corrected closed forms against the expansion oracle on the catalog.
pub fn suite_series_consistency(_max: usize) -> SuiteResult {
    let mut cases = 0;
    let mut failures = Vec::new();
    for m in catalog() {
        if !m.closed || !m.simply_connected {
            continue;
        }
        for k in (3..=m.dim + 3).filter(|k| k % 2 == 1 && 2 * k >= m.dim + 2) {
            cases += 1;
            let cap = 4 * (m.dim + k);
            let rf = match closed_form_series(&m, k, ClosedFormVariant::Corrected) {
                Ok(rf) => rf,
                Err(e) => {
                    failures.push(format!("{} k={k}: {e}", m.name));
                    continue;
                }
            };
            let closed = rf.expand(cap).expect("denominator is 1 - x^4");
            let direct = rank_series_expansion(&m, k, cap)
                .expect("hypotheses hold")
                .series;
            if closed != direct {
                failures.push(format!(
                    "{} k={k}: corrected closed form {closed} differs from expansion {direct}",
                    m.name
                ));
            }
        }
    }
    SuiteResult {
        name: "series-consistency".into(),
        cases,
        failures,
    }
}

/// Runs a suite by CLI name.
pub fn run_suite(name: &str, grid_max: usize) -> Option<SuiteResult> {
    match name {
        "d-squared" => Some(suite_d_squared(grid_max)),
        "ahl" => Some(suite_ahl(grid_max)),
        "phi" => Some(suite_phi(grid_max)),
        "triviality" => Some(suite_triviality(grid_max)),
        "fiber-em" => Some(suite_fiber_em(grid_max)),
        "series-consistency" => Some(suite_series_consistency(grid_max)),
        _ => None,
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "d-squared",
    "ahl",
    "phi",
    "triviality",
    "fiber-em",
    "series-consistency",
];
