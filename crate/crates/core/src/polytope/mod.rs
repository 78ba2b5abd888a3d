//! Hypersimplex lifts, regular subdivisions and interior face counts.

pub mod dd;
pub mod faces;
pub mod lift;
pub mod lp;
mod subdivide;

pub use lift::{is_tropical_pluecker, tropical_minors, PlueckerWitness};
pub use subdivide::{fvector_bound, regular_subdivision, trivial_subdivision, BoundReport};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::matroid::{subsets_of_size, Matroid, MatroidError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolytopeError {
    #[error("lift parameters out of range: need 1 <= d <= n-1 and n <= 16, got d={d}, n={n}")]
    BadParams { d: usize, n: usize },
    #[error("lift must assign a value to every d-subset exactly once; problem near {0:?}")]
    LiftTotality(Vec<usize>),
    #[error("volume certificate failed: cells sum to {got}, hypersimplex has {expected}")]
    VolumeCertificateFailure { got: BigInt, expected: BigInt },
    #[error("face {face:?} has dimension {dim} but its matroid has {components} components")]
    DimComponentMismatch { face: Vec<Vec<usize>>, dim: usize, components: usize },
    #[error("subdivision is not matroidal: face {0:?} fails the exchange axiom")]
    NotMatroidal(Vec<Vec<usize>>),
    #[error("bound check index c={c} outside 1..=min(d, n-d)")]
    BadBoundIndex { c: usize },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A lift: one exact rational per d-subset of `{1..n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalPlueckerVector {
    n: usize,
    d: usize,
    /// Sorted d-subset masks; `values[i]` lifts `subsets[i]`.
    subsets: Vec<u32>,
    values: Vec<BigRational>,
}

impl TropicalPlueckerVector {
    /// Values listed in ascending mask order of the d-subsets.
    pub fn new(n: usize, d: usize, values: Vec<BigRational>) -> Result<Self, PolytopeError> {
        if n < 2 || n > crate::matroid::MAX_GROUND || d == 0 || d >= n {
            return Err(PolytopeError::BadParams { d, n });
        }
        let subsets = subsets_of_size(n, d);
        if values.len() != subsets.len() {
            return Err(PolytopeError::LiftTotality(vec![values.len(), subsets.len()]));
        }
        Ok(TropicalPlueckerVector { n, d, subsets, values })
    }

    /// Builds from (mask, value) pairs, checking totality.
    pub fn from_pairs(n: usize, d: usize, pairs: &[(u32, BigRational)]) -> Result<Self, PolytopeError> {
        if n < 2 || n > crate::matroid::MAX_GROUND || d == 0 || d >= n {
            return Err(PolytopeError::BadParams { d, n });
        }
        let subsets = subsets_of_size(n, d);
        let mut values: Vec<Option<BigRational>> = vec![None; subsets.len()];
        for (mask, v) in pairs {
            let Ok(i) = subsets.binary_search(mask) else {
                return Err(PolytopeError::LiftTotality(crate::matroid::bits(*mask).map(|e| e + 1).collect()));
            };
            if values[i].is_some() {
                return Err(PolytopeError::LiftTotality(crate::matroid::bits(*mask).map(|e| e + 1).collect()));
            }
            values[i] = Some(v.clone());
        }
        let values: Option<Vec<BigRational>> = values.into_iter().collect();
        match values {
            Some(values) => Ok(TropicalPlueckerVector { n, d, subsets, values }),
            None => Err(PolytopeError::LiftTotality(vec![])),
        }
    }

    /// The 0/1 indicator lift of a matroid: 0 on bases, 1 elsewhere.
    pub fn indicator(m: &Matroid) -> Result<Self, PolytopeError> {
        use num_traits::{One, Zero};
        let subsets = subsets_of_size(m.n(), m.rank());
        let values = subsets
            .iter()
            .map(|&s| if m.is_basis(s) { BigRational::zero() } else { BigRational::one() })
            .collect();
        TropicalPlueckerVector::new(m.n(), m.rank(), values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn subsets(&self) -> &[u32] {
        &self.subsets
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, mask: u32) -> &BigRational {
        let i = self.subsets.binary_search(&mask).expect("mask is a d-subset");
        &self.values[i]
    }
}

/// A face of a subdivision: its vertex set as d-subset masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub vertices: Vec<u32>,
    pub dim: usize,
}

impl Cell {
    /// The matroid whose bases are the vertices, when the exchange axiom holds.
    pub fn face_matroid(&self, n: usize, d: usize) -> Result<Matroid, MatroidError> {
        Matroid::from_bases(n, d, &self.vertices)
    }

    pub fn vertex_subsets(&self) -> Vec<Vec<usize>> {
        self.vertices
            .iter()
            .map(|&m| crate::matroid::bits(m).map(|e| e + 1).collect())
            .collect()
    }
}

/// A maximal cell together with its supporting functional: `lambda·x + offset`
/// equals the lift exactly on the cell and is strictly below it elsewhere.
#[derive(Debug, Clone)]
pub struct FacetCell {
    pub cell: Cell,
    pub lambda: Vec<BigRational>,
    pub offset: BigRational,
}

/// A polyhedral subdivision of `Delta(d,n)` (or of a matroid polytope inside
/// it), with its interior faces and f-vector.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub n: usize,
    pub d: usize,
    /// Vertices of the subdivided polytope.
    pub ambient_vertices: Vec<u32>,
    pub facets: Vec<FacetCell>,
    /// Faces not contained in the boundary of the ambient polytope, facets
    /// included; sorted by codimension, then by vertex set.
    pub interior_faces: Vec<Cell>,
    /// Every face of every facet cell (interior and boundary), deduplicated.
    pub all_faces: Vec<Vec<u32>>,
    /// `c ->` number of interior faces of dimension `n - c`.
    pub f_vector: BTreeMap<usize, usize>,
    /// Total normalized volume of the facet cells.
    pub volume: BigInt,
}

impl Subdivision {
    /// True when every face is a matroid polytope; otherwise the first
    /// failing face.
    pub fn is_matroidal(&self) -> Result<(), PolytopeError> {
        for f in &self.facets {
            if f.cell.face_matroid(self.n, self.d).is_err() {
                return Err(PolytopeError::NotMatroidal(f.cell.vertex_subsets()));
            }
        }
        for verts in &self.all_faces {
            let c = Cell { vertices: verts.clone(), dim: 0 };
            if Matroid::from_bases(self.n, self.d, verts).is_err() {
                return Err(PolytopeError::NotMatroidal(c.vertex_subsets()));
            }
        }
        Ok(())
    }

    /// The interior f-vector with the decomposition cross-check: every
    /// matroidal interior face must satisfy `dim = n - #components`.
    pub fn interior_f_vector(&self) -> Result<BTreeMap<usize, usize>, PolytopeError> {
        let mut out = BTreeMap::new();
        for cell in &self.interior_faces {
            let m = cell
                .face_matroid(self.n, self.d)
                .map_err(|_| PolytopeError::NotMatroidal(cell.vertex_subsets()))?;
            let comps = m.components().num_components();
            if cell.dim != self.n - comps {
                return Err(PolytopeError::DimComponentMismatch {
                    face: cell.vertex_subsets(),
                    dim: cell.dim,
                    components: comps,
                });
            }
            *out.entry(self.n - cell.dim).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// The matroid of the subdivided polytope itself.
    pub fn ambient_matroid(&self) -> Result<Matroid, MatroidError> {
        Matroid::from_bases(self.n, self.d, &self.ambient_vertices)
    }
}
