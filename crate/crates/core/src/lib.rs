//! Rational homotopy of immersion spaces.
//!
//! Computes the rational homotopy invariants of connected components of
//! immersion spaces of a manifold into Euclidean space (or a more general
//! target) from Betti numbers and characteristic-class vanishing data, and
//! symbolically constructs and verifies the Sullivan model of the Stiefel
//! bundle everything rests on.
//!
//! The layers, bottom to top:
//!
//! - [`series`], [`poly`], [`graded`]: exact truncated power series, integer
//!   polynomial quotients, and graded dimension vectors;
//! - [`cgda`]: free graded-commutative differential algebras with Koszul
//!   signs, derivations, morphism checks, and exact cohomology;
//! - [`classes`]: Pontryagin, dual Pontryagin, and Euler class algebra;
//! - [`stiefel`]: the relative Sullivan model of the Stiefel bundle, the
//!   universal model, triviality and fiber-splitting checks;
//! - [`immersion`]: Eilenberg-MacLane decompositions of immersion-space
//!   components and homotopy rank generating series;
//! - [`io`], [`cli`]: the manifold file format, built-in catalog, and the
//!   command-line interface.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod cgda;
pub mod classes;
pub mod cli;
pub mod graded;
pub mod immersion;
pub mod io;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod stiefel;
pub mod verify;

/// Exact arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;

/// Truncated power series over the exact rationals.
pub type Series = series::TruncatedSeries<Rational>;

/// Integer-coefficient polynomial.
pub type IntPoly = poly::Poly<Int>;

pub use graded::GradedDims;
pub use poly::RationalFunction;
pub use series::TruncatedSeries;
