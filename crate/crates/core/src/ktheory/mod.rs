//! Torus-equivariant K-theory of matroids, made executable: localized
//! classes indexed by bases, GKM congruences, and valuativity under
//! matroidal subdivisions.

mod class;
mod cone;
mod laurent;
pub mod ratfn;

pub use class::{brion_check, check_gkm, check_valuative, localized_class, GkmWitness, ValuativeReport};
pub use cone::{cone_hilbert_series, tangent_cone_generators};
pub use laurent::LaurentPoly;
pub use ratfn::RationalFn;

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KError {
    #[error("{0:?} is not a basis")]
    NotABasis(Vec<usize>),
    #[error("generators span a cone containing a line")]
    NotPointed,
    #[error("class at basis {0:?} did not cancel to a Laurent polynomial")]
    NotLaurent(Vec<usize>),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// The localized class of a matroid: one degree-zero Laurent polynomial per
/// basis (non-bases are implicitly zero).
#[derive(Debug, Clone, PartialEq)]
pub struct EquivariantClass {
    pub n: usize,
    pub d: usize,
    /// Keyed by basis mask.
    pub f: BTreeMap<u32, LaurentPoly>,
}
