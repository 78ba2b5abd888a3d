//! Lattice-point generating functions of pointed rational cones.
//!
//! The pipeline: extract extremal rays (LP redundancy tests), cut a rational
//! cross-section, triangulate it by pulling, make the simplicial pieces
//! half-open against a deterministic generic reference point, and sum the
//! fundamental-parallelepiped contributions over the binomial denominators.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ratfn::RationalFn;
use super::{KError, LaurentPoly};
use crate::linalg::{pivot_columns, primitive_integer, solve_square, QVec};
use crate::matroid::{bits, Matroid};
use crate::polytope::dd::extreme_rays;
use crate::polytope::lp::{simplex, LpStatus};

/// Exchange directions at a basis: all `e_j - e_i` with `i` in the basis,
/// `j` outside, and the swap again a basis.
pub fn tangent_cone_generators(m: &Matroid, basis: u32) -> Result<Vec<Vec<i32>>, KError> {
    if !m.is_basis(basis) {
        return Err(KError::NotABasis(bits(basis).map(|e| e + 1).collect()));
    }
    let n = m.n();
    let mut gens = Vec::new();
    for i in bits(basis) {
        for j in 0..n {
            if basis >> j & 1 == 1 {
                continue;
            }
            if m.is_basis(basis & !(1 << i) | 1 << j) {
                let mut v = vec![0i32; n];
                v[i] = -1;
                v[j] = 1;
                gens.push(v);
            }
        }
    }
    Ok(gens)
}

/// `sum of x^a over the lattice points of cone(generators)`, as a rational
/// function with binomial denominators. The cone must be pointed.
pub fn cone_hilbert_series(nvars: usize, generators: &[Vec<i32>]) -> Result<RationalFn, KError> {
    let mut gens: Vec<Vec<i32>> = generators
        .iter()
        .filter(|g| g.iter().any(|&x| x != 0))
        .map(|g| primitive_i32(g))
        .collect();
    gens.sort();
    gens.dedup();
    if gens.is_empty() {
        return Ok(RationalFn::one(nvars));
    }

    // positive functional; its existence is exactly pointedness
    let w = positive_functional(nvars, &gens).ok_or(KError::NotPointed)?;

    let rays = extremal_generators(nvars, &gens);
    debug_assert!(!rays.is_empty());

    // cross-section points p_k = r_k / (w . r_k) in the hyperplane w.x = 1
    let wdot = |r: &[i32]| -> BigRational {
        r.iter()
            .zip(&w)
            .map(|(&x, c)| c * BigRational::from_integer(x.into()))
            .sum()
    };
    let pts: Vec<QVec> = rays
        .iter()
        .map(|r| {
            let s = wdot(r);
            debug_assert!(s.is_positive());
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)) / &s)
                .collect()
        })
        .collect();

    let simplices = triangulate_points(&pts);

    // reference point for the half-open decomposition: sum of rays, broken
    // lexicographically by the rays themselves
    let zseq: Vec<Vec<i32>> = {
        let mut z0 = vec![0i32; nvars];
        for r in &rays {
            for (a, &b) in z0.iter_mut().zip(r) {
                *a += b;
            }
        }
        std::iter::once(z0).chain(rays.iter().cloned()).collect()
    };

    let mut total: Option<RationalFn> = None;
    for sigma in simplices {
        let sel: Vec<&Vec<i32>> = sigma.iter().map(|&k| &rays[k]).collect();
        let open = half_open_flags(&sel, &zseq);
        let points = parallelepiped_points(&sel, &open);
        let mut num = LaurentPoly::zero(nvars);
        for p in points {
            num.add_term(p, BigRational::one());
        }
        let mut piece = RationalFn::from_poly(num);
        for r in &sel {
            piece.div_binomial(r);
        }
        total = Some(match total {
            None => piece,
            Some(t) => t.add(&piece),
        });
    }
    Ok(total.expect("a pointed cone with generators has at least one simplex"))
}

fn primitive_i32(v: &[i32]) -> Vec<i32> {
    let mut g: i64 = 0;
    for &x in v {
        g = num_integer::Integer::gcd(&g, &(x as i64));
    }
    if g > 1 {
        v.iter().map(|&x| (x as i64 / g) as i32).collect()
    } else {
        v.to_vec()
    }
}

/// A rational `w` with `w . g > 0` for every generator, or `None` when the
/// cone contains a line.
fn positive_functional(nvars: usize, gens: &[Vec<i32>]) -> Option<QVec> {
    // try the matroid-vertex pattern and the ray sum before the LP
    let dot_all_positive = |w: &QVec| gens.iter().all(|g| {
        let s: BigRational = g
            .iter()
            .zip(w)
            .map(|(&x, c)| c * BigRational::from_integer(x.into()))
            .sum();
        s.is_positive()
    });
    let mut sum = vec![BigRational::zero(); nvars];
    for g in gens {
        for (a, &b) in sum.iter_mut().zip(g) {
            *a += BigRational::from_integer(b.into());
        }
    }
    if dot_all_positive(&sum) {
        return Some(sum);
    }
    // LP: w . g_k - s_k = 1, s_k >= 0, w free (split into u - v)
    let m = gens.len();
    let ncols = 2 * nvars + m;
    let mut a: Vec<QVec> = Vec::with_capacity(m);
    for (k, g) in gens.iter().enumerate() {
        let mut row = vec![BigRational::zero(); ncols];
        for (i, &x) in g.iter().enumerate() {
            row[i] = BigRational::from_integer(x.into());
            row[nvars + i] = BigRational::from_integer((-x).into());
        }
        row[2 * nvars + k] = -BigRational::one();
        a.push(row);
    }
    let b: Vec<BigRational> = vec![BigRational::one(); m];
    let c = vec![BigRational::zero(); ncols];
    let sol = simplex(&a, &b, &c);
    if sol.status != LpStatus::Optimal {
        return None;
    }
    let w: QVec = (0..nvars).map(|i| &sol.x[i] - &sol.x[nvars + i]).collect();
    debug_assert!(dot_all_positive(&w));
    Some(w)
}

/// Keeps the generators that are not nonnegative combinations of the others.
fn extremal_generators(nvars: usize, gens: &[Vec<i32>]) -> Vec<Vec<i32>> {
    if gens.len() <= 1 {
        return gens.to_vec();
    }
    let mut keep = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let others: Vec<&Vec<i32>> = gens.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, v)| v).collect();
        // feasibility of  sum t_j other_j = g, t >= 0
        let a: Vec<QVec> = (0..nvars)
            .map(|i| others.iter().map(|o| BigRational::from_integer(o[i].into())).collect())
            .collect();
        let b: QVec = g.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let c = vec![BigRational::zero(); others.len()];
        let sol = simplex(&a, &b, &c);
        if sol.status != LpStatus::Optimal {
            keep.push(g.clone());
        }
    }
    keep
}

/// Pulling triangulation of a rational point configuration (all points are
/// vertices). Returns simplices as index sets into `pts`.
fn triangulate_points(pts: &[QVec]) -> Vec<Vec<usize>> {
    assert!(pts.len() <= 128);
    let nv = pts.len();
    let homog: Vec<QVec> = pts
        .iter()
        .map(|p| {
            let mut v = p.clone();
            v.push(BigRational::one());
            v
        })
        .collect();
    if nv == 1 {
        return vec![vec![0]];
    }
    let piv = pivot_columns(&homog);
    let rows: Vec<Vec<i64>> = homog
        .iter()
        .map(|h| {
            let proj: QVec = piv.iter().map(|&c| h[c].clone()).collect();
            primitive_integer(&proj)
                .into_iter()
                .map(|x| i64::try_from(&x).expect("small coordinates"))
                .collect()
        })
        .collect();
    let dual_rays = extreme_rays(&rows);
    let mut facet_tights: Vec<u128> = Vec::new();
    for u in dual_rays {
        let mut tight: u128 = 0;
        for (i, row) in rows.iter().enumerate() {
            let s: BigInt = u.iter().zip(row).map(|(a, &b)| a * BigInt::from(b)).sum();
            if s.is_zero() {
                tight |= 1 << i;
            }
        }
        if tight != 0 {
            facet_tights.push(tight);
        }
    }
    let full: u128 = if nv == 128 { u128::MAX } else { (1 << nv) - 1 };
    let mut ctx = TriCtx { homog, facet_tights, dims: HashMap::new(), tris: HashMap::new() };
    ctx.triangulate(full)
        .into_iter()
        .map(|s| (0..nv).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

struct TriCtx {
    homog: Vec<QVec>,
    facet_tights: Vec<u128>,
    dims: HashMap<u128, usize>,
    tris: HashMap<u128, Vec<u128>>,
}

impl TriCtx {
    fn dim(&mut self, face: u128) -> usize {
        if let Some(&d) = self.dims.get(&face) {
            return d;
        }
        let rows: Vec<QVec> = (0..128)
            .filter(|&i| face >> i & 1 == 1)
            .map(|i| self.homog[i].clone())
            .collect();
        let d = crate::linalg::rank(&rows) - 1;
        self.dims.insert(face, d);
        d
    }

    fn triangulate(&mut self, face: u128) -> Vec<u128> {
        if let Some(t) = self.tris.get(&face) {
            return t.clone();
        }
        let nv = face.count_ones() as usize;
        let d = self.dim(face);
        let result = if nv == d + 1 {
            vec![face]
        } else {
            let v0 = 1u128 << face.trailing_zeros();
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
            let mut out = Vec::new();
            for g in maximal {
                if g & v0 == 0 {
                    for s in self.triangulate(g) {
                        out.push(s | v0);
                    }
                }
            }
            out
        };
        self.tris.insert(face, result.clone());
        result
    }
}

/// For each ray of a simplicial cone, whether the opposite facet is open
/// (excluded): the facet functional pairs negatively with the reference
/// sequence, lexicographically.
fn half_open_flags(rays: &[&Vec<i32>], zseq: &[Vec<i32>]) -> Vec<bool> {
    let nvars = rays[0].len();
    let r = rays.len();
    // functional a_k supported on pivot coordinates with a_k . r_j = delta_jk
    let ray_rows: Vec<QVec> = rays
        .iter()
        .map(|g| g.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let piv = pivot_columns(&ray_rows);
    debug_assert_eq!(piv.len(), r, "simplicial cone rays are independent");
    let sys: Vec<QVec> = (0..r)
        .map(|j| piv.iter().map(|&c| ray_rows[j][c].clone()).collect())
        .collect();
    let mut flags = Vec::with_capacity(r);
    for k in 0..r {
        let rhs: QVec = (0..r)
            .map(|j| if j == k { BigRational::one() } else { BigRational::zero() })
            .collect();
        let sol = solve_square(&sys, &rhs).expect("independent rays");
        let mut a = vec![BigRational::zero(); nvars];
        for (idx, &c) in piv.iter().enumerate() {
            a[c] = sol[idx].clone();
        }
        // lexicographic sign against the reference sequence
        let mut sign = 0;
        for z in zseq {
            let s: BigRational = a
                .iter()
                .zip(z)
                .map(|(ai, &zi)| ai * BigRational::from_integer(zi.into()))
                .sum();
            if !s.is_zero() {
                sign = if s.is_positive() { 1 } else { -1 };
                break;
            }
        }
        debug_assert_ne!(sign, 0, "reference sequence spans the cone");
        flags.push(sign < 0);
    }
    flags
}

/// Integer points of the half-open fundamental parallelepiped
/// `{ sum t_k r_k : t_k in [0,1) closed / (0,1] open }`.
fn parallelepiped_points(rays: &[&Vec<i32>], open: &[bool]) -> Vec<Vec<i32>> {
    let nvars = rays[0].len();
    let r = rays.len();
    let mut lo = vec![0i64; nvars];
    let mut hi = vec![0i64; nvars];
    for g in rays {
        for (i, &x) in g.iter().enumerate() {
            if x < 0 {
                lo[i] += x as i64;
            } else {
                hi[i] += x as i64;
            }
        }
    }
    let ray_rows: Vec<QVec> = rays
        .iter()
        .map(|g| g.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let piv = pivot_columns(&ray_rows);
    let sys: Vec<QVec> = (0..r)
        .map(|j| piv.iter().map(|&c| ray_rows[j][c].clone()).collect())
        .collect();

    let mut out = Vec::new();
    let mut p = lo.clone();
    'outer: loop {
        // solve for barycentric t from the pivot coordinates, then verify
        let rhs: QVec = piv.iter().map(|&c| BigRational::from_integer(p[c].into())).collect();
        // sys^T t = rhs  (sys rows are rays in pivot coords)
        let syst: Vec<QVec> = (0..r).map(|i| (0..r).map(|j| sys[j][i].clone()).collect()).collect();
        if let Some(t) = solve_square(&syst, &rhs) {
            let in_box = t.iter().zip(open).all(|(tk, &op)| {
                if op {
                    tk.is_positive() && *tk <= BigRational::one()
                } else {
                    !tk.is_negative() && *tk < BigRational::one()
                }
            });
            if in_box {
                // membership in the span: p must equal sum t_k r_k exactly
                let consistent = (0..nvars).all(|i| {
                    let s: BigRational = (0..r)
                        .map(|k| &t[k] * BigRational::from_integer(rays[k][i].into()))
                        .sum();
                    s == BigRational::from_integer(p[i].into())
                });
                if consistent {
                    out.push(p.iter().map(|&x| x as i32).collect());
                }
            }
        }
        // odometer
        for i in 0..nvars {
            p[i] += 1;
            if p[i] <= hi[i] {
                continue 'outer;
            }
            p[i] = lo[i];
        }
        break;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::uniform;
    use crate::rat::rat;

    fn series_for(m: &Matroid, basis: u32) -> RationalFn {
        let gens = tangent_cone_generators(m, basis).unwrap();
        cone_hilbert_series(m.n(), &gens).unwrap()
    }

    #[test]
    fn generators_at_bases() {
        let m = uniform(2, 4);
        let gens = tangent_cone_generators(&m, 0b0011).unwrap();
        assert_eq!(gens.len(), 4);
        assert!(tangent_cone_generators(&m, 0b0111).is_err());
        let single = Matroid::from_bases(3, 2, &[0b011]).unwrap();
        assert!(tangent_cone_generators(&single, 0b011).unwrap().is_empty());
    }

    #[test]
    fn single_ray_series() {
        // cone over e2 - e1: 1 / (1 - x2/x1)
        let f = cone_hilbert_series(2, &[vec![-1, 1]]).unwrap();
        let mut expect = RationalFn::one(2);
        expect.div_binomial(&[-1, 1]);
        assert!(f.equal(&expect));
    }

    #[test]
    fn simplicial_unimodular_cone() {
        // U(1,3) at {1}: rays e2-e1, e3-e1
        let m = uniform(1, 3);
        let f = series_for(&m, 0b001);
        let mut expect = RationalFn::one(3);
        expect.div_binomial(&[-1, 1, 0]);
        expect.div_binomial(&[-1, 0, 1]);
        assert!(f.equal(&expect));
    }

    #[test]
    fn cone_over_square_has_binomial_numerator() {
        // U(2,4) at {1,2}: (1 - x3 x4 / (x1 x2)) / prod (1 - xj/xi)
        let m = uniform(2, 4);
        let f = series_for(&m, 0b0011);
        let mut expect = RationalFn::from_poly(
            LaurentPoly::one(4).sub(&LaurentPoly::monomial(vec![-1, -1, 1, 1], rat(1))),
        );
        for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
            let mut b = vec![0i32; 4];
            b[i] = -1;
            b[j] = 1;
            expect.div_binomial(&b);
        }
        assert!(f.equal(&expect));
    }

    #[test]
    fn not_pointed_detected() {
        assert!(matches!(
            cone_hilbert_series(2, &[vec![1, 0], vec![-1, 0]]),
            Err(KError::NotPointed)
        ));
    }

    #[test]
    fn empty_generators_give_one() {
        let f = cone_hilbert_series(3, &[]).unwrap();
        assert!(f.equal(&RationalFn::one(3)));
    }

    #[test]
    fn positive_orthant_counts_correctly() {
        // sanity: cone(e1, e2) in Z^2 is 1/((1-x1)(1-x2))
        let f = cone_hilbert_series(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let mut expect = RationalFn::one(2);
        expect.div_binomial(&[1, 0]);
        expect.div_binomial(&[0, 1]);
        assert!(f.equal(&expect));
    }

    #[test]
    fn non_unimodular_cone() {
        // cone((1,0), (1,2)): index 2, numerator 1 + x1 x2
        let f = cone_hilbert_series(2, &[vec![1, 0], vec![1, 2]]).unwrap();
        let num = LaurentPoly::one(2).add(&LaurentPoly::monomial(vec![1, 1], rat(1)));
        let mut expect = RationalFn::from_poly(num);
        expect.div_binomial(&[1, 0]);
        expect.div_binomial(&[1, 2]);
        assert!(f.equal(&expect));
    }
}
