//! Face lattices, pulling triangulations and normalized volumes of cells.
//!
//! A cell is a set of hypersimplex vertices (d-subset masks). Facets come
//! from the double description method on the homogenized points; every other face
//! is an intersection of facets, and volumes come from a pulling
//! triangulation whose simplices are measured by integer determinants.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::dd::extreme_rays;
use crate::linalg::{affine_rank, det_i64, pivot_columns, QVec};

/// 0/1 coordinates of a d-subset mask in R^n.
pub fn coords(mask: u32, n: usize) -> Vec<i64> {
    (0..n).map(|j| (mask >> j & 1) as i64).collect()
}

/// Homogenized coordinates `(x, 1)`.
fn homog(mask: u32, n: usize) -> Vec<i64> {
    let mut v = coords(mask, n);
    v.push(1);
    v
}

/// A facet of a cell: which vertices are tight, plus a supporting functional
/// on `(x, 1)` that vanishes on the facet and is positive on the rest of the
/// cell.
#[derive(Debug, Clone)]
pub struct CellFacet {
    pub tight: u128,
    pub normal: Vec<BigInt>,
}

/// Facets of `conv{e_I : I in masks}` via double description in the span of
/// the homogenized points. Cells here have at most 126 vertices.
pub fn cell_facets(n: usize, masks: &[u32]) -> Vec<CellFacet> {
    assert!(masks.len() <= 128);
    let rows_q: Vec<QVec> = masks
        .iter()
        .map(|&m| homog(m, n).into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        .collect();
    let piv = pivot_columns(&rows_q);
    let r = piv.len();
    let proj: Vec<Vec<i64>> = masks
        .iter()
        .map(|&m| {
            let h = homog(m, n);
            piv.iter().map(|&c| h[c]).collect()
        })
        .collect();
    let rays = extreme_rays(&proj);
    let mut out = Vec::new();
    for u in rays {
        let mut tight: u128 = 0;
        for (i, p) in proj.iter().enumerate() {
            let s: BigInt = u.iter().zip(p).map(|(a, &b)| a * BigInt::from(b)).sum();
            if s.is_zero() {
                tight |= 1 << i;
            }
        }
        if tight == 0 {
            // only happens for 0-dimensional cells; not a polytope facet
            continue;
        }
        let mut normal = vec![BigInt::zero(); n + 1];
        for (k, &c) in piv.iter().enumerate() {
            normal[c] = u[k].clone();
        }
        out.push(CellFacet { tight, normal });
    }
    debug_assert!(r >= 1);
    out
}

/// All nonempty faces of the cell (including the cell itself), as vertex
/// bitsets, via intersection closure of the facet tight sets.
pub fn all_faces(nverts: usize, facets: &[CellFacet]) -> Vec<u128> {
    let full: u128 = if nverts == 128 { u128::MAX } else { (1 << nverts) - 1 };
    let mut seen: std::collections::HashSet<u128> = std::collections::HashSet::new();
    seen.insert(full);
    let mut stack = vec![full];
    while let Some(f) = stack.pop() {
        for fac in facets {
            let g = f & fac.tight;
            if g != 0 && !seen.contains(&g) {
                seen.insert(g);
                stack.push(g);
            }
        }
    }
    let mut v: Vec<u128> = seen.into_iter().collect();
    v.sort_unstable();
    v
}

/// Triangulation and volume bookkeeping for one cell.
pub struct CellGeometry<'a> {
    n: usize,
    masks: &'a [u32],
    facet_tights: Vec<u128>,
    dims: HashMap<u128, usize>,
    tris: HashMap<u128, Vec<u128>>,
}

impl<'a> CellGeometry<'a> {
    pub fn new(n: usize, masks: &'a [u32], facets: &[CellFacet]) -> Self {
        CellGeometry {
            n,
            masks,
            facet_tights: facets.iter().map(|f| f.tight).collect(),
            dims: HashMap::new(),
            tris: HashMap::new(),
        }
    }

    pub fn dim(&mut self, face: u128) -> usize {
        if let Some(&d) = self.dims.get(&face) {
            return d;
        }
        let pts: Vec<Vec<i64>> = iter_bits(face)
            .map(|i| coords(self.masks[i], self.n))
            .collect();
        let d = affine_rank(&pts) - 1;
        self.dims.insert(face, d);
        d
    }

    /// Facets of a face: maximal proper intersections with the cell facets.
    fn facets_of(&self, face: u128) -> Vec<u128> {
        let mut cands: Vec<u128> = self
            .facet_tights
            .iter()
            .map(|&t| face & t)
            .filter(|&g| g != 0 && g != face)
            .collect();
        cands.sort_unstable();
        cands.dedup();
        let maximal: Vec<u128> = cands
            .iter()
            .copied()
            .filter(|&g| !cands.iter().any(|&h| h != g && h & g == g))
            .collect();
        maximal
    }

    /// Pulling triangulation: cone the smallest vertex over the facet
    /// triangulations that avoid it.
    pub fn triangulate(&mut self, face: u128) -> Vec<u128> {
        if let Some(t) = self.tris.get(&face) {
            return t.clone();
        }
        let nv = face.count_ones() as usize;
        let d = self.dim(face);
        let result = if nv == d + 1 {
            vec![face]
        } else {
            let v0 = face.trailing_zeros() as u128;
            let v0bit = 1u128 << v0;
            let mut simplices = Vec::new();
            for g in self.facets_of(face) {
                if g & v0bit == 0 {
                    for s in self.triangulate(g) {
                        simplices.push(s | v0bit);
                    }
                }
            }
            simplices
        };
        self.tris.insert(face, result.clone());
        result
    }

    /// Normalized lattice volume of a full-dimensional cell (dimension n-1
    /// inside the coordinate-sum slice): the unimodular simplex has volume 1.
    pub fn normalized_volume(&mut self, face: u128) -> BigInt {
        let n = self.n;
        let mut total = BigInt::zero();
        for s in self.triangulate(face) {
            let verts: Vec<usize> = iter_bits(s).collect();
            debug_assert_eq!(verts.len(), n); // dim n-1 simplices have n vertices
            let base = coords(self.masks[verts[0]], n);
            let rows: Vec<Vec<i64>> = verts[1..]
                .iter()
                .map(|&i| {
                    let p = coords(self.masks[i], n);
                    // edge vector in the root-lattice basis e_j - e_n
                    (0..n - 1).map(|j| p[j] - base[j]).collect()
                })
                .collect();
            let det = det_i64(&rows).abs();
            total += det;
        }
        total
    }
}

pub fn iter_bits(set: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&i| set >> i & 1 == 1)
}

/// Eulerian number A(m, k): permutations of m with k descents. The normalized
/// volume of the hypersimplex is `A(n-1, d-1)`.
pub fn eulerian(m: usize, k: usize) -> BigInt {
    if k >= m {
        return if m == 0 && k == 0 { BigInt::from(1) } else { BigInt::zero() };
    }
    let mut row: Vec<BigInt> = vec![BigInt::from(1)];
    for mm in 1..=m {
        let mut next = vec![BigInt::zero(); mm];
        for (kk, slot) in next.iter_mut().enumerate() {
            let left = if kk < row.len() {
                &row[kk] * BigInt::from((kk + 1) as u64)
            } else {
                BigInt::zero()
            };
            let right = if kk >= 1 && kk - 1 < row.len() {
                &row[kk - 1] * BigInt::from((mm - kk) as u64)
            } else {
                BigInt::zero()
            };
            *slot = left + right;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::subsets_of_size;

    #[test]
    fn eulerian_values() {
        // row m=3: 1, 4, 1
        assert_eq!(eulerian(3, 0), BigInt::from(1));
        assert_eq!(eulerian(3, 1), BigInt::from(4));
        assert_eq!(eulerian(3, 2), BigInt::from(1));
        // row m=8 peak values used by Delta(3,9)
        assert_eq!(eulerian(8, 1), BigInt::from(247));
        assert_eq!(eulerian(8, 2), BigInt::from(4293));
    }

    #[test]
    fn octahedron_face_count_and_volume() {
        // Delta(2,4) is the octahedron: 8 facets, 12 edges, 6 vertices
        let masks = subsets_of_size(4, 2);
        let facets = cell_facets(4, &masks);
        assert_eq!(facets.len(), 8);
        let faces = all_faces(masks.len(), &facets);
        // 6 vertices + 12 edges + 8 triangles + 1 full = 27
        assert_eq!(faces.len(), 27);
        let mut geo = CellGeometry::new(4, &masks, &facets);
        let full = (1u128 << masks.len()) - 1;
        assert_eq!(geo.dim(full), 3);
        assert_eq!(geo.normalized_volume(full), eulerian(3, 1));
    }

    #[test]
    fn pyramid_cell() {
        // square pyramid {12,13,14,23,24} inside Delta(2,4)
        let masks = vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010];
        let facets = cell_facets(4, &masks);
        assert_eq!(facets.len(), 5); // 4 triangles + square base
        let mut geo = CellGeometry::new(4, &masks, &facets);
        let full = (1u128 << masks.len()) - 1;
        assert_eq!(geo.dim(full), 3);
        assert_eq!(geo.normalized_volume(full), BigInt::from(2));
    }

    #[test]
    fn simplex_hypersimplex() {
        // Delta(1,4) is the unit simplex: volume 1, 4 facets
        let masks = subsets_of_size(4, 1);
        let facets = cell_facets(4, &masks);
        assert_eq!(facets.len(), 4);
        let mut geo = CellGeometry::new(4, &masks, &facets);
        let full = (1u128 << masks.len()) - 1;
        assert_eq!(geo.normalized_volume(full), BigInt::from(1));
    }

    #[test]
    fn segment_and_point_cells() {
        // a single vertex has no facets; a segment has two
        let point = vec![0b0011u32];
        assert!(cell_facets(4, &point).is_empty());
        let seg = vec![0b0011u32, 0b0101];
        let f = cell_facets(4, &seg);
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn hypersimplex_36_volume() {
        let masks = subsets_of_size(6, 3);
        let facets = cell_facets(6, &masks);
        assert_eq!(facets.len(), 12);
        let mut geo = CellGeometry::new(6, &masks, &facets);
        let full = (1u128 << masks.len()) - 1;
        assert_eq!(geo.normalized_volume(full), eulerian(5, 2));
    }
}
