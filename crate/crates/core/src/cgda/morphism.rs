//! Morphisms between free CGDAs, defined on generators.

use crate::cgda::algebra::{CgdaError, FreeCGDA};
use crate::cgda::element::{Element, GenId};

/// Algebra morphism determined by generator assignments; multiplicative by
/// construction since the source is free.
#[derive(Debug, Clone)]
pub struct CgdaMorphism {
    source: FreeCGDA,
    target: FreeCGDA,
    assign: Vec<Element>,
}

/// Outcome of the chain-map check `phi(d g) = d(phi g)` on generators.
#[derive(Debug, Clone)]
pub struct MorphismReport {
    pub failures: Vec<(GenId, Element)>,
}

impl MorphismReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl CgdaMorphism {
    /// Builds a morphism from one assignment per source generator, in id order.
    /// Every image must be homogeneous of the generator's degree.
    pub fn new(
        source: FreeCGDA,
        target: FreeCGDA,
        assign: Vec<Element>,
    ) -> Result<Self, CgdaError> {
        if assign.len() != source.gens().len() {
            return Err(CgdaError::InvalidDegrees(
                "assignment must cover every source generator".into(),
            ));
        }
        for (i, e) in assign.iter().enumerate() {
            if e.algebra_id() != target.algebra_id() {
                return Err(CgdaError::MixedAlgebras);
            }
            let g = &source.gens()[i];
            if !e.is_zero() && target.degree_of(e) != Some(g.degree) {
                return Err(CgdaError::InvalidDegrees(format!(
                    "image of {} must be homogeneous of degree {}",
                    g.name, g.degree
                )));
            }
        }
        Ok(CgdaMorphism {
            source,
            target,
            assign,
        })
    }

    pub fn identity(alg: &FreeCGDA) -> Self {
        let assign = alg.all_gen_ids().map(|g| alg.gen_elem(g)).collect();
        CgdaMorphism {
            source: alg.clone(),
            target: alg.clone(),
            assign,
        }
    }

    pub fn source(&self) -> &FreeCGDA {
        &self.source
    }

    pub fn target(&self) -> &FreeCGDA {
        &self.target
    }

    pub fn image_of(&self, g: GenId) -> &Element {
        &self.assign[g.0 as usize]
    }

    /// Replaces the image of one generator (used to build perturbed morphisms
    /// in the verification suites).
    pub fn with_image(&self, g: GenId, e: Element) -> Result<Self, CgdaError> {
        let mut assign = self.assign.clone();
        assign[g.0 as usize] = e;
        CgdaMorphism::new(self.source.clone(), self.target.clone(), assign)
    }

    /// Applies the morphism to an arbitrary element.
    pub fn apply(&self, e: &Element) -> Element {
        assert_eq!(e.algebra_id(), self.source.algebra_id(), "algebra mismatch");
        let mut out = self.target.zero();
        for (m, c) in e.terms() {
            let mut term = self.target.unit();
            for &(g, exp) in m.factors() {
                let img = self.target.pow(&self.assign[g.0 as usize], exp);
                term = self.target.mul(&term, &img);
            }
            out = out.add(&term.scale(c));
        }
        out
    }

    /// Checks commutation with the differentials on every generator; failures
    /// carry the residual `phi(d g) - d(phi g)`.
    pub fn check(&self) -> MorphismReport {
        let mut failures = Vec::new();
        for g in self.source.all_gen_ids() {
            let lhs = self.apply(self.source.d_of(g));
            let rhs = self.target.differential(&self.assign[g.0 as usize]);
            let residual = lhs.sub(&rhs);
            if !residual.is_zero() {
                failures.push((g, residual));
            }
        }
        MorphismReport { failures }
    }
}
