//! Regular subdivisions by wall-crossing search over the lower hull.
//!
//! A maximal cell is the argmin set of `P_I + lambda·e_I` for some functional
//! `lambda`. We find one cell from an exact LP at the barycenter and then walk
//! across interior walls: pivoting the supporting functional around a wall
//! reaches the neighboring cell. The union of the face lattices of the
//! maximal cells is the subdivision; a normalized-volume certificate against
//! the Eulerian number guards the whole computation.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::faces::{all_faces, cell_facets, coords, eulerian, iter_bits, CellFacet, CellGeometry};
use super::lp::{simplex, LpStatus};
use super::{Cell, FacetCell, PolytopeError, Subdivision, TropicalPlueckerVector};
use crate::linalg::affine_rank;
use crate::matroid::Matroid;

/// The regular subdivision of `Delta(d,n)` induced by the lift.
pub fn regular_subdivision(lift: &TropicalPlueckerVector) -> Result<Subdivision, PolytopeError> {
    let n = lift.n();
    let d = lift.d();
    let verts = lift.subsets().to_vec();
    let pts: Vec<Vec<i64>> = verts.iter().map(|&m| coords(m, n)).collect();

    let initial = initial_facet(lift, &verts, &pts);
    let mut seen: BTreeMap<Vec<u32>, (Vec<BigRational>, BigRational)> = BTreeMap::new();
    let mut queue: VecDeque<Vec<u32>> = VecDeque::new();
    let mut cell_data: Vec<(Vec<u32>, Vec<BigRational>, BigRational, Vec<CellFacet>)> = Vec::new();
    seen.insert(initial.0.clone(), (initial.1.clone(), initial.2.clone()));
    queue.push_back(initial.0);

    while let Some(cellverts) = queue.pop_front() {
        let (lambda, offset) = seen.get(&cellverts).unwrap().clone();
        let walls = cell_facets(n, &cellverts);
        for wall in &walls {
            if let Some((nverts, nlam, noff)) =
                pivot_across(lift, &verts, &pts, &cellverts, &lambda, &offset, wall)
            {
                if !seen.contains_key(&nverts) {
                    seen.insert(nverts.clone(), (nlam, noff));
                    queue.push_back(nverts);
                }
            }
        }
        cell_data.push((cellverts, lambda, offset, walls));
    }

    let expected = eulerian(n - 1, d - 1);
    assemble(n, d, verts, cell_data, Some(expected))
}

/// The subdivision of `Poly_M` with a single maximal cell.
pub fn trivial_subdivision(m: &Matroid) -> Result<Subdivision, PolytopeError> {
    let n = m.n();
    let verts = m.bases().to_vec();
    let walls = cell_facets(n, &verts);
    let lambda = vec![BigRational::zero(); n];
    let cell_data = vec![(verts.clone(), lambda, BigRational::zero(), walls)];
    assemble(n, m.rank(), verts, cell_data, None)
}

/// Finds one maximal cell: the dual solution of the lower-envelope LP at the
/// barycenter supports a cell, and its basis forces full dimension.
fn initial_facet(
    lift: &TropicalPlueckerVector,
    verts: &[u32],
    pts: &[Vec<i64>],
) -> (Vec<u32>, Vec<BigRational>, BigRational) {
    let n = lift.n();
    let d = lift.d();
    // rows: coordinates 0..n-2 then the convexity row; the dropped coordinate
    // row is dependent on these.
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for r in 0..n - 1 {
        a.push(pts.iter().map(|p| BigRational::from_integer(p[r].into())).collect());
    }
    a.push(vec![BigRational::one(); verts.len()]);
    let mut b: Vec<BigRational> = vec![
        BigRational::new(BigInt::from(d as i64), BigInt::from(n as i64));
        n - 1
    ];
    b.push(BigRational::one());
    let c: Vec<BigRational> = lift.values().to_vec();
    let sol = simplex(&a, &b, &c);
    assert_eq!(sol.status, LpStatus::Optimal, "barycenter LP is feasible and bounded");
    let mut lambda: Vec<BigRational> = sol.dual[..n - 1].to_vec();
    lambda.push(BigRational::zero());
    let offset = sol.dual[n - 1].clone();
    let tight = tight_set(lift, verts, pts, &lambda, &offset);
    (tight, lambda, offset)
}

fn tight_set(
    lift: &TropicalPlueckerVector,
    verts: &[u32],
    pts: &[Vec<i64>],
    lambda: &[BigRational],
    offset: &BigRational,
) -> Vec<u32> {
    let mut out = Vec::new();
    for (i, &v) in verts.iter().enumerate() {
        let val = eval(lambda, &pts[i]) + offset;
        let slack = lift.values()[i].clone() - val;
        debug_assert!(!slack.is_negative(), "support functional exceeded the lift");
        if slack.is_zero() {
            out.push(v);
        }
    }
    out
}

fn eval(lambda: &[BigRational], p: &[i64]) -> BigRational {
    let mut s = BigRational::zero();
    for (l, &x) in lambda.iter().zip(p) {
        if x != 0 {
            s += l * BigRational::from_integer(x.into());
        }
    }
    s
}

/// Crosses one wall of a cell. Returns the neighbor cell and its functional,
/// or `None` when the wall lies on the boundary of the hypersimplex.
#[allow(clippy::too_many_arguments)]
fn pivot_across(
    lift: &TropicalPlueckerVector,
    verts: &[u32],
    pts: &[Vec<i64>],
    cellverts: &[u32],
    lambda: &[BigRational],
    offset: &BigRational,
    wall: &CellFacet,
) -> Option<(Vec<u32>, Vec<BigRational>, BigRational)> {
    let n = lift.n();
    let cellset: HashSet<u32> = cellverts.iter().copied().collect();
    // w·(x,1) >= 0 on the cell, zero exactly on the wall
    let w: Vec<BigRational> = wall
        .normal
        .iter()
        .map(|z| BigRational::from_integer(z.clone()))
        .collect();
    let mut best: Option<BigRational> = None;
    for (i, &v) in verts.iter().enumerate() {
        if cellset.contains(&v) {
            continue;
        }
        let wv = eval(&w[..n], &pts[i]) + &w[n];
        if !wv.is_negative() {
            continue;
        }
        let slack = lift.values()[i].clone() - eval(lambda, &pts[i]) - offset;
        debug_assert!(slack.is_positive());
        let step = slack / -wv;
        match &best {
            Some(b) if *b <= step => {}
            _ => best = Some(step),
        }
    }
    let step = best?; // no vertex beyond: boundary wall
    let nlam: Vec<BigRational> = lambda
        .iter()
        .zip(&w[..n])
        .map(|(l, wi)| l - &step * wi)
        .collect();
    let noff = offset - &step * &w[n];
    let tight = tight_set(lift, verts, pts, &nlam, &noff);
    Some((tight, nlam, noff))
}

fn assemble(
    n: usize,
    d: usize,
    ambient_vertices: Vec<u32>,
    cell_data: Vec<(Vec<u32>, Vec<BigRational>, BigRational, Vec<CellFacet>)>,
    expected_volume: Option<BigInt>,
) -> Result<Subdivision, PolytopeError> {
    // boundary description of the ambient polytope, for interiority
    let ambient_facets = cell_facets(n, &ambient_vertices);
    let ambient_tights: Vec<HashSet<u32>> = ambient_facets
        .iter()
        .map(|f| iter_bits(f.tight).map(|i| ambient_vertices[i]).collect())
        .collect();

    let mut volume = BigInt::zero();
    let mut face_set: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut facets: Vec<FacetCell> = Vec::new();
    for (cellverts, lambda, offset, walls) in &cell_data {
        let mut geo = CellGeometry::new(n, cellverts, walls);
        volume += geo.normalized_volume(full_set(cellverts.len()));
        for f in all_faces(cellverts.len(), walls) {
            face_set.insert(iter_bits(f).map(|i| cellverts[i]).collect());
        }
        facets.push(FacetCell {
            cell: Cell { vertices: cellverts.clone(), dim: n - 1 },
            lambda: lambda.clone(),
            offset: offset.clone(),
        });
    }
    if let Some(expected) = expected_volume {
        if volume != expected {
            return Err(PolytopeError::VolumeCertificateFailure { got: volume, expected });
        }
    }

    let mut interior: Vec<Cell> = Vec::new();
    for verts in &face_set {
        let boundary = ambient_tights
            .iter()
            .any(|t| verts.iter().all(|v| t.contains(v)));
        if boundary {
            continue;
        }
        let pts: Vec<Vec<i64>> = verts.iter().map(|&m| coords(m, n)).collect();
        let dim = affine_rank(&pts) - 1;
        interior.push(Cell { vertices: verts.clone(), dim });
    }
    interior.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.vertices.cmp(&b.vertices)));

    let mut f_vector = BTreeMap::new();
    for c in &interior {
        *f_vector.entry(n - c.dim).or_insert(0usize) += 1;
    }

    facets.sort_by(|a, b| a.cell.vertices.cmp(&b.cell.vertices));
    Ok(Subdivision {
        n,
        d,
        ambient_vertices,
        facets,
        interior_faces: interior,
        all_faces: face_set.into_iter().collect(),
        f_vector,
        volume,
    })
}

fn full_set(k: usize) -> u128 {
    if k == 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    }
}

/// The interior face bound `(n-c-1)! / ((d-c)! (n-d-c)! (c-1)!)` for
/// `1 <= c <= min(d, n-d)`.
pub fn fvector_bound(d: usize, n: usize, c: usize) -> Result<u64, PolytopeError> {
    if c < 1 || c > d.min(n - d) {
        return Err(PolytopeError::BadBoundIndex { c });
    }
    let fact = |k: usize| -> u128 { (1..=k as u128).product::<u128>().max(1) };
    let num = fact(n - c - 1);
    let den = fact(d - c) * fact(n - d - c) * fact(c - 1);
    Ok((num / den) as u64)
}

/// Per-codimension comparison of the interior f-vector against the bound.
#[derive(Debug, Clone)]
pub struct BoundReport {
    /// `(c, f_c, bound, f_c <= bound)` for each `c` in `1..=min(d, n-d)`.
    pub rows: Vec<(usize, usize, u64, bool)>,
    pub all_within: bool,
    /// Equality in every coordinate.
    pub equality: bool,
    /// Every facet cell is a series-parallel matroid.
    pub all_facets_series_parallel: bool,
}

impl Subdivision {
    /// Checks the interior f-vector against the factorial bound and reports
    /// whether equality holds alongside facet series-parallelness.
    pub fn check_fvector_bound(&self) -> Result<BoundReport, PolytopeError> {
        let f = self.interior_f_vector()?;
        let cmax = self.d.min(self.n - self.d);
        let mut rows = Vec::new();
        let mut all_within = true;
        let mut equality = true;
        for c in 1..=cmax {
            let bound = fvector_bound(self.d, self.n, c)?;
            let fc = *f.get(&c).unwrap_or(&0);
            let ok = fc as u64 <= bound;
            all_within &= ok;
            equality &= fc as u64 == bound;
            rows.push((c, fc, bound, ok));
        }
        // any interior face deeper than the bound range violates the theorem
        for (&c, &fc) in &f {
            if c > cmax && fc > 0 {
                all_within = false;
                equality = false;
            }
        }
        let all_sp = self.facets.iter().all(|fc| {
            fc.cell
                .face_matroid(self.n, self.d)
                .map(|m| crate::invariants::is_series_parallel(&m))
                .unwrap_or(false)
        });
        Ok(BoundReport {
            rows,
            all_within,
            equality,
            all_facets_series_parallel: all_sp,
        })
    }
}
