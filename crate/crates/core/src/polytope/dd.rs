//! Double description: extreme rays of a pointed cone `{w : M w >= 0}`.
//!
//! The classic incremental algorithm with the combinatorial adjacency test.
//! Inputs are integer constraint rows that span the space (so the cone is
//! pointed); rays come back as primitive integer vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::{echelon, primitive_integer, solve_square, QVec};

#[derive(Clone, Debug)]
struct Ray {
    v: Vec<BigInt>,
    /// Bit `i` set when constraint `i` (input order) is tight on this ray.
    zero: u128,
}

/// Extreme rays of `{w in R^r : rows[i] · w >= 0 for all i}`.
///
/// Requires `rows` to span `R^r` (pointedness) and at most 128 rows.
pub fn extreme_rays(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let m = rows.len();
    assert!(m <= 128, "double description capped at 128 constraints");
    if m == 0 {
        return vec![];
    }
    let r = rows[0].len();
    // independent subset for the initial simplicial cone
    let mut work: Vec<QVec> = Vec::new();
    let mut init: Vec<usize> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let q: QVec = row.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        work.push(q);
        let mut probe = work.clone();
        if echelon(&mut probe).len() == work.len() {
            init.push(i);
        } else {
            work.pop();
        }
        if init.len() == r {
            break;
        }
    }
    assert_eq!(init.len(), r, "constraint rows must span the space");

    // rays of the initial cone: w_j with rows[init[i]] · w_j = delta_ij
    let sys: Vec<QVec> = init
        .iter()
        .map(|&i| rows[i].iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut rays: Vec<Ray> = (0..r)
        .map(|j| {
            let rhs: QVec = (0..r)
                .map(|i| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect();
            let sol = solve_square(&sys, &rhs).expect("independent rows");
            Ray { v: primitive_integer(&sol), zero: 0 }
        })
        .collect();

    let dot = |ray: &[BigInt], row: &[i64]| -> BigInt {
        ray.iter().zip(row).map(|(a, &b)| a * BigInt::from(b)).sum()
    };

    // constraint order: the initial ones first (they only set zero bits)
    let mut order: Vec<usize> = init.clone();
    order.extend((0..m).filter(|i| !init.contains(i)));

    let mut processed: Vec<usize> = Vec::new();
    for &ci in &order {
        let row = &rows[ci];
        let bit = 1u128 << processed.len();
        let signs: Vec<BigInt> = rays.iter().map(|ray| dot(&ray.v, row)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (k, ray) in rays.iter().enumerate() {
            if signs[k].is_zero() {
                let mut nr = ray.clone();
                nr.zero |= bit;
                next.push(nr);
            } else if signs[k].is_positive() {
                next.push(ray.clone());
            }
        }
        // combine adjacent positive/negative pairs
        for (p, ray_p) in rays.iter().enumerate() {
            if !signs[p].is_positive() {
                continue;
            }
            for (q, ray_q) in rays.iter().enumerate() {
                if !signs[q].is_negative() {
                    continue;
                }
                let common = ray_p.zero & ray_q.zero;
                // adjacency: no third ray is tight on every common constraint
                let adjacent = rays.iter().enumerate().all(|(u, ray_u)| {
                    u == p || u == q || ray_u.zero & common != common
                });
                if !adjacent {
                    continue;
                }
                let mut v: Vec<BigInt> = ray_p
                    .v
                    .iter()
                    .zip(&ray_q.v)
                    .map(|(a, b)| &signs[p] * b - &signs[q] * a)
                    .collect();
                // normalize to a primitive vector
                let mut g = BigInt::zero();
                for x in &v {
                    g = num_integer::Integer::gcd(&g, x);
                }
                if !g.is_zero() && !g.is_one() {
                    for x in v.iter_mut() {
                        *x = &*x / &g;
                    }
                }
                let zero = recompute_zero(&v, rows, &processed) | bit;
                next.push(Ray { v, zero });
            }
        }
        rays = next;
        processed.push(ci);
    }

    // map the zero bitsets back to nothing; callers only need the vectors.
    // dedupe defensively (equal primitive vectors)
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    out
}

fn recompute_zero(v: &[BigInt], rows: &[Vec<i64>], processed: &[usize]) -> u128 {
    let mut z = 0u128;
    for (pos, &ci) in processed.iter().enumerate() {
        let s: BigInt = v.iter().zip(&rows[ci]).map(|(a, &b)| a * BigInt::from(b)).sum();
        if s.is_zero() {
            z |= 1 << pos;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_i64(rays: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = rays
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn positive_orthant() {
        let rays = extreme_rays(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(as_i64(&rays), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn square_cone() {
        // cone over a square: 4 constraints in R^3, 4 extreme rays
        let rows = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![-1, 0, 1],
            vec![0, -1, 1],
        ];
        let rays = extreme_rays(&rows);
        assert_eq!(rays.len(), 4);
        for r in &rays {
            for row in &rows {
                let s: BigInt = r.iter().zip(row).map(|(a, &b)| a * BigInt::from(b)).sum();
                assert!(!s.is_negative());
            }
        }
    }

    #[test]
    fn redundant_constraint_changes_nothing() {
        let base = vec![vec![1, 0], vec![0, 1]];
        let with_red = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        assert_eq!(as_i64(&extreme_rays(&base)), as_i64(&extreme_rays(&with_red)));
    }

    #[test]
    fn simplicial_cone_in_dim_4() {
        let rows = vec![
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 1],
            vec![1, 0, 0, 0],
        ];
        let rays = extreme_rays(&rows);
        // every ray satisfies all constraints, none is a positive multiple of another
        for r in &rays {
            for row in &rows {
                let s: BigInt = r.iter().zip(row).map(|(a, &b)| a * BigInt::from(b)).sum();
                assert!(!s.is_negative());
            }
        }
        assert!(!rays.is_empty());
    }
}
