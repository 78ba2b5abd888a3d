//! Ground-set isomorphism search by backtracking with invariant pruning.

use super::{bits, Matroid, MatroidError};

pub const DEFAULT_ISO_CAP: usize = 10;

impl Matroid {
    /// Searches for a ground-set bijection carrying the bases of `self` onto
    /// the bases of `other`; returns the witness permutation (`self` index ->
    /// `other` index) if one exists.
    ///
    /// `cap` bounds the exhaustive search (default 10 elements).
    pub fn is_isomorphic(
        &self,
        other: &Matroid,
        cap: Option<usize>,
    ) -> Result<Option<Vec<usize>>, MatroidError> {
        let cap = cap.unwrap_or(DEFAULT_ISO_CAP);
        if self.n() != other.n() || self.rank() != other.rank() || self.num_bases() != other.num_bases() {
            return Ok(None);
        }
        let n = self.n();
        if self == other {
            return Ok(Some((0..n).collect()));
        }
        if self.is_uniform() && other.is_uniform() {
            return Ok(Some((0..n).collect()));
        }
        if n > cap {
            return Err(MatroidError::GroundSetTooLarge(cap));
        }
        // per-element signature: (degree, loop?, coloop?, parallel degree)
        let sig = |m: &Matroid, e: usize| -> (usize, bool, bool, usize) {
            let deg = m.bases().iter().filter(|&&b| b >> e & 1 == 1).count();
            let par = (0..m.n()).filter(|&f| m.are_parallel(e, f)).count();
            (deg, m.is_loop(e), m.is_coloop(e), par)
        };
        let sig1: Vec<_> = (0..n).map(|e| sig(self, e)).collect();
        let sig2: Vec<_> = (0..n).map(|e| sig(other, e)).collect();
        {
            let mut a = sig1.clone();
            let mut b = sig2.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Ok(None);
            }
        }
        // pair type: rank of {i,j} in the matroid and in its dual
        let pair_table = |m: &Matroid| -> Vec<Vec<(usize, usize)>> {
            let dual = m.dual();
            (0..m.n())
                .map(|i| {
                    (0..m.n())
                        .map(|j| {
                            let s = 1u32 << i | 1 << j;
                            (m.rank_of(s), dual.rank_of(s))
                        })
                        .collect()
                })
                .collect()
        };
        let pt1 = pair_table(self);
        let pt2 = pair_table(other);

        // map elements in order of scarcest signature first
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&e| {
            let count = sig1.iter().filter(|&&s| s == sig1[e]).count();
            (count, e)
        });

        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.backtrack(other, &order, 0, &mut image, &mut used, &sig1, &sig2, &pt1, &pt2) {
            return Ok(Some(image));
        }
        Ok(None)
    }

    #[allow(clippy::too_many_arguments)]
    fn backtrack(
        &self,
        other: &Matroid,
        order: &[usize],
        k: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sig1: &[(usize, bool, bool, usize)],
        sig2: &[(usize, bool, bool, usize)],
        pt1: &[Vec<(usize, usize)>],
        pt2: &[Vec<(usize, usize)>],
    ) -> bool {
        if k == order.len() {
            // full check: permuted bases must equal the target set
            let mapped: Vec<u32> = self
                .bases()
                .iter()
                .map(|&b| bits(b).map(|e| 1u32 << image[e]).sum())
                .collect();
            let mut mapped = mapped;
            mapped.sort_unstable();
            return mapped == other.bases();
        }
        let e = order[k];
        for t in 0..other.n() {
            if used[t] || sig1[e] != sig2[t] {
                continue;
            }
            let consistent = order[..k]
                .iter()
                .all(|&f| pt1[e][f] == pt2[t][image[f]]);
            if !consistent {
                continue;
            }
            image[e] = t;
            used[t] = true;
            if self.backtrack(other, order, k + 1, image, used, sig1, sig2, pt1, pt2) {
                return true;
            }
            used[t] = false;
            image[e] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::super::construct::{from_graph, uniform, wheel, whirl};
    use super::*;

    #[test]
    fn identity_and_relabel() {
        let m = whirl(3);
        assert!(m.is_isomorphic(&m, None).unwrap().is_some());
        let perm = vec![3, 0, 5, 1, 4, 2];
        let r = m.relabel(&perm);
        let witness = m.is_isomorphic(&r, None).unwrap().unwrap();
        assert_eq!(m.relabel(&witness), r);
    }

    #[test]
    fn distinguishes_by_basis_count() {
        let a = uniform(2, 4);
        let b = uniform(2, 3).parallel_ext(0).unwrap();
        assert!(a.is_isomorphic(&b, None).unwrap().is_none());
    }

    #[test]
    fn wheel_vs_whirl() {
        assert!(wheel(3).is_isomorphic(&whirl(3), None).unwrap().is_none());
    }

    #[test]
    fn k4_is_wheel3() {
        let k4 = from_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let w = wheel(3);
        let witness = w.is_isomorphic(&k4, None).unwrap().unwrap();
        assert_eq!(w.relabel(&witness), k4);
        // K4 is self-dual as a matroid
        assert!(w.dual().is_isomorphic(&w, None).unwrap().is_some());
    }

    #[test]
    fn cap_is_enforced() {
        let m = whirl(3).direct_sum(&whirl(3)).unwrap(); // n = 12, non-uniform
        let swapped = m.relabel(&[6, 1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11]);
        assert_ne!(m, swapped);
        assert_eq!(
            m.is_isomorphic(&swapped, None).unwrap_err(),
            MatroidError::GroundSetTooLarge(10)
        );
    }
}
