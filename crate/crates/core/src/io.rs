//! Manifold data files and the built-in catalog.
//!
//! A manifold file is a single JSON object with exactly the fields below;
//! unknown fields are rejected, since class-vanishing data cannot be inferred
//! from Betti numbers and must be asserted explicitly:
//!
//! ```json
//! {
//!   "name": "S2",
//!   "dim": 2,
//!   "betti": [1, 0, 1],
//!   "simply_connected": true,
//!   "closed": true,
//!   "euler_zero": false,
//!   "dual_pontryagin_zero_from": 1,
//!   "pontryagin_all_zero": true
//! }
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classes::ClassVanishingProfile;
use crate::graded::GradedDims;
use crate::immersion::ManifoldData;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifoldFile {
    name: String,
    dim: usize,
    betti: Vec<usize>,
    simply_connected: bool,
    closed: bool,
    euler_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual_pontryagin_zero_from: Option<usize>,
    pontryagin_all_zero: bool,
}

/// Errors from reading a manifold file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IoError {
    /// Malformed syntax or unknown fields.
    Parse(String),
    /// Well-formed but inconsistent data, naming the offending field.
    Validation(String),
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Parse(msg) => write!(f, "parse error: {msg}"),
            IoError::Validation(msg) => write!(f, "validation error: {msg}"),
        }
    }
}

impl std::error::Error for IoError {}

/// Parses and validates a manifold file.
pub fn parse_manifold(text: &str) -> Result<ManifoldData, IoError> {
    let file: ManifoldFile =
        serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    if file.betti.len() != file.dim + 1 {
        return Err(IoError::Validation(format!(
            "betti: list has length {} but dim + 1 = {}",
            file.betti.len(),
            file.dim + 1
        )));
    }
    let profile = ClassVanishingProfile {
        euler_zero: file.euler_zero,
        dual_p_zero_from: file.dual_pontryagin_zero_from,
        p_zero_all: file.pontryagin_all_zero,
    };
    ManifoldData::new(
        &file.name,
        file.dim,
        GradedDims::from_list(&file.betti),
        file.simply_connected,
        file.closed,
        profile,
    )
    .map_err(|e| IoError::Validation(e.0))
}

/// Serializes manifold data in the file format; `parse_manifold` inverts this.
pub fn print_manifold(m: &ManifoldData) -> String {
    let file = ManifoldFile {
        name: m.name.clone(),
        dim: m.dim,
        betti: (0..=m.dim).map(|d| m.betti.get(d)).collect(),
        simply_connected: m.simply_connected,
        closed: m.closed,
        euler_zero: m.profile.euler_zero,
        dual_pontryagin_zero_from: m.profile.dual_p_zero_from,
        pontryagin_all_zero: m.profile.p_zero_all,
    };
    serde_json::to_string_pretty(&file).expect("manifold data serializes")
}

fn sphere(n: usize) -> ManifoldData {
    let mut betti = GradedDims::new();
    betti.set(0, 1);
    betti.add(n, 1);
    ManifoldData::new(
        &format!("S{n}"),
        n,
        betti,
        true,
        true,
        // chi = 0 exactly when n is odd; spheres are stably parallelizable
        ClassVanishingProfile::new(n % 2 == 1, Some(1), true),
    )
    .expect("sphere data is valid")
}

fn complex_projective(n: usize) -> ManifoldData {
    let mut betti = GradedDims::new();
    for i in 0..=n {
        betti.set(2 * i, 1);
    }
    // pd_i lives in H^{4i}(CP^n) = 0 for 4i > 2n; below that it is nonzero
    ManifoldData::new(
        &format!("CP{n}"),
        2 * n,
        betti,
        true,
        true,
        ClassVanishingProfile::new(false, Some(n / 2 + 1), false),
    )
    .expect("projective space data is valid")
}

fn sphere_product(p: usize, q: usize) -> ManifoldData {
    let mut betti = GradedDims::new();
    betti.set(0, 1);
    betti.add(p, 1);
    betti.add(q, 1);
    betti.add(p + q, 1);
    ManifoldData::new(
        &format!("S{p}xS{q}"),
        p + q,
        betti,
        true,
        true,
        ClassVanishingProfile::new(p % 2 == 1 || q % 2 == 1, Some(1), true),
    )
    .expect("sphere product data is valid")
}

fn point() -> ManifoldData {
    ManifoldData::new(
        "point",
        0,
        GradedDims::from_pairs(&[(0, 1)]),
        true,
        true,
        ClassVanishingProfile::new(false, Some(1), true),
    )
    .expect("point data is valid")
}

/// The built-in manifolds, in a fixed order.
pub fn catalog() -> Vec<ManifoldData> {
    vec![
        sphere(2),
        sphere(3),
        sphere(4),
        sphere(5),
        sphere(6),
        complex_projective(2),
        complex_projective(3),
        sphere_product(2, 2),
        sphere_product(2, 3),
        sphere_product(3, 3),
        sphere_product(3, 4),
        point(),
    ]
}

/// Catalog entry by name.
pub fn catalog_lookup(name: &str) -> Option<ManifoldData> {
    catalog().into_iter().find(|m| m.name == name)
}
