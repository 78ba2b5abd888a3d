//! Tutte polynomial and beta invariant by deletion-contraction.

use std::collections::HashMap;

use super::TuttePolynomial;
use crate::matroid::{Matroid, MatroidError};

/// Tutte polynomial via deletion-contraction, memoized on the labeled basis
/// set: loops contribute a factor `y`, coloops a factor `x`.
pub fn tutte(m: &Matroid) -> TuttePolynomial {
    let mut memo = HashMap::new();
    tutte_rec(m, &mut memo)
}

fn tutte_rec(m: &Matroid, memo: &mut HashMap<Matroid, TuttePolynomial>) -> TuttePolynomial {
    if let Some(t) = memo.get(m) {
        return t.clone();
    }
    let loops = m.loops();
    let coloops = m.coloops();
    let free = m.ground_mask() & !loops & !coloops;
    let result = if free == 0 {
        TuttePolynomial::monomial(coloops.count_ones() as usize, loops.count_ones() as usize)
    } else {
        let e = free.trailing_zeros() as usize;
        let (del, _) = m.delete(e).expect("e is not a coloop");
        let (con, _) = m.contract(e).expect("e is not a loop");
        tutte_rec(&del, memo).add(&tutte_rec(&con, memo))
    };
    memo.insert(m.clone(), result.clone());
    result
}

/// Crapo's beta invariant by its defining recurrence:
/// `beta = beta(M/e) + beta(M\e)`, zero in the presence of a loop or coloop,
/// and 1 on the two-element circuit.
pub fn beta(m: &Matroid) -> Result<u64, MatroidError> {
    if m.n() < 2 {
        return Err(MatroidError::GroundSetTooSmall);
    }
    let mut memo = HashMap::new();
    Ok(beta_rec(m, &mut memo))
}

fn beta_rec(m: &Matroid, memo: &mut HashMap<Matroid, u64>) -> u64 {
    if m.loops() != 0 || m.coloops() != 0 {
        return 0;
    }
    if m.n() == 2 {
        return 1; // loopless and coloopless on two elements: U(1,2)
    }
    if let Some(&b) = memo.get(m) {
        return b;
    }
    let (del, _) = m.delete(0).expect("no coloops present");
    let (con, _) = m.contract(0).expect("no loops present");
    let b = beta_rec(&del, memo) + beta_rec(&con, memo);
    memo.insert(m.clone(), b);
    b
}

/// Connected, loopless, coloopless and `beta = 1`: exactly the
/// series-parallel matroids.
pub fn is_series_parallel(m: &Matroid) -> bool {
    m.n() >= 2
        && m.loops() == 0
        && m.coloops() == 0
        && m.is_connected()
        && beta(m) == Ok(1)
}

/// Greedy series/parallel reduction: removes parallel elements and contracts
/// series elements until none remain (never shrinking below two elements).
/// A connected matroid is series-parallel iff this reaches U(1,2).
pub fn sp_reduce(m: &Matroid) -> Matroid {
    let mut cur = m.clone();
    'outer: loop {
        if cur.n() <= 2 {
            return cur;
        }
        let dual = cur.dual();
        for i in 0..cur.n() {
            for j in i + 1..cur.n() {
                let parallel = cur.are_parallel(i, j);
                let series = dual.are_parallel(i, j);
                // a pair that is both a circuit and a cocircuit is a U(1,2)
                // component; removing half of it would create a coloop
                if parallel && series {
                    continue;
                }
                if parallel {
                    cur = cur.delete(j).expect("parallel elements are not coloops").0;
                    continue 'outer;
                }
                if series {
                    cur = cur.contract(j).expect("series elements are not loops").0;
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}
