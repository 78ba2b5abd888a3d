//! The tropical Pluecker predicate and realizable lifts from tropical minors.

use num_rational::BigRational;
use num_traits::Zero;

use super::{PolytopeError, TropicalPlueckerVector};
use crate::matroid::{bits, subsets_of_size};

/// A violated three-term relation: the minimum of the three sums over the
/// quadruple `i<j<k<l` (1-indexed) on top of `s` is attained only once.
#[derive(Debug, Clone, PartialEq)]
pub struct PlueckerWitness {
    pub s: Vec<usize>,
    pub quad: [usize; 4],
    pub sums: [BigRational; 3],
}

/// Checks the three-term tropical Pluecker relations: for every `(d-2)`-subset
/// S and every quadruple `i<j<k<l` disjoint from it, the minimum of
/// `P(Sij)+P(Skl), P(Sik)+P(Sjl), P(Sil)+P(Sjk)` must be attained at least
/// twice.
pub fn is_tropical_pluecker(p: &TropicalPlueckerVector) -> Result<(), PlueckerWitness> {
    let n = p.n();
    let d = p.d();
    if d < 2 || n < d + 2 {
        // no quadruple fits; the condition is vacuous
        return Ok(());
    }
    for s in subsets_of_size(n, d - 2) {
        let free: Vec<usize> = (0..n).filter(|&e| s >> e & 1 == 0).collect();
        let q = free.len();
        for a in 0..q {
            for b in a + 1..q {
                for c in b + 1..q {
                    for e in c + 1..q {
                        let (i, j, k, l) = (free[a], free[b], free[c], free[e]);
                        let pij_kl = p.value(s | 1 << i | 1 << j) + p.value(s | 1 << k | 1 << l);
                        let pik_jl = p.value(s | 1 << i | 1 << k) + p.value(s | 1 << j | 1 << l);
                        let pil_jk = p.value(s | 1 << i | 1 << l) + p.value(s | 1 << j | 1 << k);
                        let min = pij_kl.clone().min(pik_jl.clone()).min(pil_jk.clone());
                        let hits = [&pij_kl, &pik_jl, &pil_jk]
                            .iter()
                            .filter(|v| ***v == min)
                            .count();
                        if hits < 2 {
                            return Err(PlueckerWitness {
                                s: bits(s).map(|x| x + 1).collect(),
                                quad: [i + 1, j + 1, k + 1, l + 1],
                                sums: [pij_kl, pik_jl, pil_jk],
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Tropical maximal minors of a `d x n` rational matrix:
/// `P_I = min over permutations of sum_k A[k][I_sigma(k)]`.
///
/// Such lifts are valuations of Puiseux-realizable points, so they always
/// satisfy the tropical Pluecker relations.
pub fn tropical_minors(a: &[Vec<BigRational>]) -> Result<TropicalPlueckerVector, PolytopeError> {
    let d = a.len();
    let n = if d > 0 { a[0].len() } else { 0 };
    if d == 0 || n < 2 || d >= n || a.iter().any(|r| r.len() != n) {
        return Err(PolytopeError::BadParams { d, n });
    }
    let subsets = subsets_of_size(n, d);
    let mut values = Vec::with_capacity(subsets.len());
    for &mask in &subsets {
        let cols: Vec<usize> = bits(mask).collect();
        let mut best: Option<BigRational> = None;
        permute(&mut (0..d).collect::<Vec<_>>(), 0, &mut |perm| {
            let mut sum = BigRational::zero();
            for (row, &ci) in perm.iter().enumerate() {
                sum += &a[row][cols[ci]];
            }
            match &best {
                Some(b) if *b <= sum => {}
                _ => best = Some(sum),
            }
        });
        values.push(best.expect("d >= 1"));
    }
    TropicalPlueckerVector::new(n, d, values)
}

fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, k: usize, f: &mut F) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}
