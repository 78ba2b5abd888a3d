//! A textbook two-phase simplex over exact rationals with Bland's rule.
//!
//! Problems here are tiny (at most ~130 columns and 10 rows), so a dense
//! tableau is plenty. Bland's rule guarantees termination under degeneracy,
//! which is the normal situation for lifted hypersimplex vertices.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::solve_square;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Primal values for the original variables.
    pub x: Vec<BigRational>,
    pub objective: BigRational,
    /// Indices of the final basic columns (original variable indices).
    pub basis: Vec<usize>,
    /// Dual multipliers, one per (surviving) row of the input system.
    pub dual: Vec<BigRational>,
}

/// Solves `min c·x  s.t.  A x = b, x >= 0`.
///
/// Rows of `a` must be linearly independent. Duals are recovered from the
/// final basis by solving against the original columns, so they certify
/// `c_j - y·A_j >= 0` for every column exactly.
pub fn simplex(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpSolution {
    let m = a.len();
    let n = if m > 0 { a[0].len() } else { c.len() };
    assert!(a.iter().all(|r| r.len() == n) && b.len() == m && c.len() == n);

    // tableau with artificial columns appended; flip rows so b >= 0
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<BigRational> = a[i]
            .iter()
            .map(|v| if flip { -v } else { v.clone() })
            .collect();
        row.extend((0..m).map(|j| {
            if j == i {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }));
        t.push(row);
        rhs.push(if flip { -&b[i] } else { b[i].clone() });
    }
    let total = n + m;
    let mut basis: Vec<usize> = (n..total).collect();

    // phase 1: drive out the artificials
    let phase1_cost: Vec<BigRational> = (0..total)
        .map(|j| {
            if j < n {
                BigRational::zero()
            } else {
                BigRational::one()
            }
        })
        .collect();
    if run_phase(&mut t, &mut rhs, &mut basis, &phase1_cost, total) == LpStatus::Unbounded {
        unreachable!("phase 1 objective is bounded below by zero");
    }
    let phase1_obj: BigRational = basis
        .iter()
        .enumerate()
        .map(|(i, &j)| {
            if j >= n {
                rhs[i].clone()
            } else {
                BigRational::zero()
            }
        })
        .sum();
    if !phase1_obj.is_zero() {
        return LpSolution {
            status: LpStatus::Infeasible,
            x: vec![],
            objective: BigRational::zero(),
            basis: vec![],
            dual: vec![],
        };
    }
    // pivot out artificials stuck in the basis at level zero
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut rhs, &mut basis, i, j);
            }
            // a fully zero row would mean dependent input rows, which callers
            // rule out; the artificial then stays basic at zero harmlessly
        }
    }

    // phase 2 over the original columns only (artificials forbidden)
    let mut phase2_cost: Vec<BigRational> = c.to_vec();
    phase2_cost.extend(std::iter::repeat(BigRational::zero()).take(m));
    let status = run_phase(&mut t, &mut rhs, &mut basis, &phase2_cost, n);
    if status == LpStatus::Unbounded {
        return LpSolution {
            status,
            x: vec![],
            objective: BigRational::zero(),
            basis: vec![],
            dual: vec![],
        };
    }

    let mut x = vec![BigRational::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = rhs[i].clone();
        }
    }
    let objective = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();

    // dual: solve y^T A_B = c_B against the original columns
    let cols: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|&j| {
            if j < n {
                (0..m).map(|i| a[i][j].clone()).collect()
            } else {
                // leftover artificial at zero: its original column is the unit
                // vector, possibly flipped; reconstruct it
                let i0 = j - n;
                let flip = b[i0].is_negative();
                (0..m)
                    .map(|i| {
                        if i == i0 {
                            if flip {
                                -BigRational::one()
                            } else {
                                BigRational::one()
                            }
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            }
        })
        .collect();
    let cb: Vec<BigRational> = basis
        .iter()
        .map(|&j| {
            if j < n {
                c[j].clone()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    // cols[k] is the k-th basic column; we need y with y·cols[k] = cb[k]
    let system: Vec<Vec<BigRational>> = (0..m)
        .map(|k| (0..m).map(|i| cols[k][i].clone()).collect())
        .collect();
    let dual = solve_square(&system, &cb).expect("final basis is nonsingular");

    LpSolution {
        status: LpStatus::Optimal,
        x,
        objective,
        basis: basis.into_iter().filter(|&j| j < n).collect(),
        dual,
    }
}

/// Runs Bland simplex on the tableau, allowing entering columns `< limit`.
fn run_phase(
    t: &mut Vec<Vec<BigRational>>,
    rhs: &mut Vec<BigRational>,
    basis: &mut Vec<usize>,
    cost: &[BigRational],
    limit: usize,
) -> LpStatus {
    loop {
        // reduced costs via the basic cost multipliers
        let m = t.len();
        let entering = (0..limit).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut red = cost[j].clone();
            for i in 0..m {
                if !t[i][j].is_zero() {
                    red -= &cost[basis[i]] * &t[i][j];
                }
            }
            red.is_negative()
        });
        let Some(j) = entering else {
            return LpStatus::Optimal;
        };
        // ratio test, Bland tie-break on the leaving basic index
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][j].is_positive() {
                let ratio = &rhs[i] / &t[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = leave else {
            return LpStatus::Unbounded;
        };
        pivot(t, rhs, basis, i, j);
    }
}

fn pivot(t: &mut Vec<Vec<BigRational>>, rhs: &mut Vec<BigRational>, basis: &mut Vec<usize>, i: usize, j: usize) {
    let m = t.len();
    let p = t[i][j].clone();
    for v in t[i].iter_mut() {
        *v /= &p;
    }
    rhs[i] /= &p;
    for k in 0..m {
        if k != i && !t[k][j].is_zero() {
            let f = t[k][j].clone();
            for col in 0..t[k].len() {
                let delta = &t[i][col] * &f;
                t[k][col] = &t[k][col] - delta;
            }
            let delta = &rhs[i] * &f;
            rhs[k] = &rhs[k] - delta;
        }
    }
    basis[i] = j;
}
