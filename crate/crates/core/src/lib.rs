//! Exact toolkit for fractional-linear maps, polytope polarity and order
//! isomorphisms between classes of convex functions on convex windows.
//!
//! Everything is computed over the rationals; there is no floating point
//! anywhere in the crate. The modules build on each other bottom-up:
//!
//! * [`exact`]: rational scalars, vectors and small dense matrices.
//! * [`projective`]: maps `x -> (Ax+b)/(<c,x>+d)` stored as `(n+1)x(n+1)` matrices.
//! * [`polyhedra`]: convex polyhedra with lazily synchronized H/V representations.
//! * [`plfunc`]: piecewise-linear convex functions stored as closed epigraphs,
//!   with the Legendre transform and the `J`/`A` transforms.
//! * [`orderiso`]: classification of matrices inducing order isomorphisms.
//! * [`verify`]: seeded generators, brute-force oracles and invariant suites.
//! * [`cli`]: the JSON command-line front end.

pub mod cli;
pub mod exact;
pub mod json;
pub mod orderiso;
pub mod plfunc;
pub mod polyhedra;
pub mod projective;
pub mod verify;

pub use exact::{Extended, QMatrix, QVector, Rational};
pub use orderiso::{AdmissibilityVerdict, InducedTransform, TransformKind, VerdictStatus};
pub use plfunc::PLConvexFunction;
pub use polyhedra::{HRep, Polyhedron, VRep};
pub use projective::{Hyperplane, ProjectiveMap};

use thiserror::Error;

/// Errors shared by all modules. The CLI maps `Usage`/`Parse` to exit code 2
/// and everything else to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("point lies on the defining hyperplane")]
    OnDefiningHyperplane,
    #[error("affine map has no canonical form")]
    NotCanonicalizable,
    #[error("degenerate simplex: {0}")]
    DegenerateSimplex(String),
    #[error("degenerate cross-ratio: points coincide")]
    DegenerateCrossRatio,
    #[error("irrational parameter: {0}")]
    IrrationalParameter(String),
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("function is identically +inf")]
    PlusInfinity,
    #[error("not a geometric convex function: {0}")]
    NotGeometric(String),
    #[error("generation failed: {0}")]
    Generation(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
