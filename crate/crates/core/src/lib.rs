//! Matroid invariants and the polyhedral machinery around them.
//!
//! The crate has four layers:
//!
//! * [`matroid`] — matroids on up to 16 elements with bases stored as bitmasks,
//!   the standard constructions (duals, minors, sums, extensions) and
//!   connectivity analysis.
//! * [`polytope`] — exact-rational regular subdivisions of hypersimplices
//!   induced by lifts on the d-subsets, interior face lattices, f-vectors and
//!   the factorial bound on interior face counts.
//! * [`invariants`] — the Tutte polynomial, the beta invariant and the
//!   g-polynomial engine (closed forms, reduction rules, subdivision
//!   additivity).
//! * [`ktheory`] — localized torus-equivariant K-classes of matroids: one
//!   Laurent polynomial per basis, GKM congruence checks and valuativity
//!   under matroidal subdivisions.
//!
//! Everything is exact: lifts and geometry use `BigRational`, polynomial
//! coefficients are integers. No floating point is used anywhere.

pub mod corpus;
pub mod invariants;
pub mod json;
pub mod ktheory;
pub mod linalg;
pub mod matroid;
pub mod polytope;
pub mod rat;
pub mod rng;
pub mod verify;

pub use matroid::Matroid;
