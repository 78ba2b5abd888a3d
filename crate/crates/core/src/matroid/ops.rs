//! Duals, minors, sums and extensions.
//!
//! Minors relabel the surviving elements to a contiguous 0-indexed ground set
//! by order-preserving collapse; operations that relabel also return the map
//! from new indices to the elements they came from.

use super::{bits, Matroid, MatroidError, MAX_GROUND};

impl Matroid {
    /// Dual: bases are the complements of bases.
    pub fn dual(&self) -> Matroid {
        let g = self.ground_mask();
        let bases: Vec<u32> = self.bases.iter().map(|&b| g & !b).collect();
        Matroid::from_valid_parts(self.n(), self.corank(), bases)
    }

    /// Deletes a non-coloop `e`; keeps the bases avoiding `e`.
    /// Returns the minor and, for each new index, the old element it names.
    pub fn delete(&self, e: usize) -> Result<(Matroid, Vec<usize>), MatroidError> {
        if e >= self.n() {
            return Err(MatroidError::ElementOutOfRange(e));
        }
        if self.is_coloop(e) {
            return Err(MatroidError::ColoopDeletion(e));
        }
        let bases: Vec<u32> = self
            .bases
            .iter()
            .filter(|&&b| b >> e & 1 == 0)
            .map(|&b| collapse(b, e))
            .collect();
        let relabel: Vec<usize> = (0..self.n()).filter(|&x| x != e).collect();
        Ok((
            Matroid::from_valid_parts(self.n() - 1, self.rank(), bases),
            relabel,
        ))
    }

    /// Contracts a non-loop `e`; bases are `B \ e` for bases containing `e`.
    pub fn contract(&self, e: usize) -> Result<(Matroid, Vec<usize>), MatroidError> {
        if e >= self.n() {
            return Err(MatroidError::ElementOutOfRange(e));
        }
        if self.is_loop(e) {
            return Err(MatroidError::LoopContraction(e));
        }
        let bases: Vec<u32> = self
            .bases
            .iter()
            .filter(|&&b| b >> e & 1 == 1)
            .map(|&b| collapse(b & !(1 << e), e))
            .collect();
        let relabel: Vec<usize> = (0..self.n()).filter(|&x| x != e).collect();
        Ok((
            Matroid::from_valid_parts(self.n() - 1, self.rank() - 1, bases),
            relabel,
        ))
    }

    /// Direct sum; the second summand is shifted past the first.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        let n = self.n() + other.n();
        if n > MAX_GROUND {
            return Err(MatroidError::GroundSetSize(n));
        }
        let shift = self.n();
        let mut bases = Vec::with_capacity(self.num_bases() * other.num_bases());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1 | b2 << shift);
            }
        }
        Ok(Matroid::from_valid_parts(n, self.rank() + other.rank(), bases))
    }

    /// Two-sum along terminals `e1`, `e2`: bases use exactly one terminal.
    ///
    /// The ground set is `(E1 \ e1) ⊔ (E2 \ e2)`. The basis rule is validated
    /// against the exchange axiom after construction.
    pub fn two_sum(
        &self,
        e1: usize,
        other: &Matroid,
        e2: usize,
    ) -> Result<Matroid, MatroidError> {
        if self.n() < 2 || other.n() < 2 {
            return Err(MatroidError::GroundSetTooSmall);
        }
        if e1 >= self.n() {
            return Err(MatroidError::ElementOutOfRange(e1));
        }
        if e2 >= other.n() {
            return Err(MatroidError::ElementOutOfRange(e2));
        }
        if self.is_loop(e1) || self.is_coloop(e1) {
            return Err(MatroidError::DegenerateTerminal(e1));
        }
        if other.is_loop(e2) || other.is_coloop(e2) {
            return Err(MatroidError::DegenerateTerminal(e2));
        }
        let n = self.n() + other.n() - 2;
        if n > MAX_GROUND {
            return Err(MatroidError::GroundSetSize(n));
        }
        let shift = self.n() - 1;
        let mut bases = Vec::new();
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                let use1 = b1 >> e1 & 1 == 1;
                let use2 = b2 >> e2 & 1 == 1;
                if use1 == use2 {
                    continue;
                }
                let p1 = collapse(b1 & !(1 << e1), e1);
                let p2 = collapse(b2 & !(1 << e2), e2);
                bases.push(p1 | p2 << shift);
            }
        }
        Matroid::from_bases(n, self.rank() + other.rank() - 1, &bases)
    }

    /// Adds element `n` parallel to the non-loop `e`.
    pub fn parallel_ext(&self, e: usize) -> Result<Matroid, MatroidError> {
        if e >= self.n() {
            return Err(MatroidError::ElementOutOfRange(e));
        }
        if self.is_loop(e) {
            return Err(MatroidError::LoopParallel(e));
        }
        let n = self.n() + 1;
        if n > MAX_GROUND {
            return Err(MatroidError::GroundSetSize(n));
        }
        let fresh = 1u32 << self.n();
        let mut bases = self.bases.clone();
        for &b in &self.bases {
            if b >> e & 1 == 1 {
                bases.push(b & !(1 << e) | fresh);
            }
        }
        Ok(Matroid::from_valid_parts(n, self.rank(), bases))
    }

    /// Series coextension at a non-coloop `e`: dual of parallel extension of
    /// the dual.
    pub fn series_ext(&self, e: usize) -> Result<Matroid, MatroidError> {
        if e >= self.n() {
            return Err(MatroidError::ElementOutOfRange(e));
        }
        if self.is_coloop(e) {
            return Err(MatroidError::ColoopSeries(e));
        }
        Ok(self.dual().parallel_ext(e)?.dual())
    }

    /// Keeps the smallest-index representative of each parallel class and
    /// relabels. Requires a loopless matroid.
    pub fn simplify(&self) -> Result<(Matroid, Vec<usize>), MatroidError> {
        if self.loops() != 0 {
            return Err(MatroidError::HasLoops);
        }
        let mut kept: Vec<usize> = Vec::new();
        'outer: for e in 0..self.n() {
            for &r in &kept {
                if self.are_parallel(r, e) {
                    continue 'outer;
                }
            }
            kept.push(e);
        }
        Ok((self.restrict_to(&kept), kept))
    }

    /// dual ∘ simplify ∘ dual. Requires a coloopless matroid.
    pub fn cosimplify(&self) -> Result<(Matroid, Vec<usize>), MatroidError> {
        if self.coloops() != 0 {
            return Err(MatroidError::HasColoops);
        }
        let (s, kept) = self.dual().simplify()?;
        Ok((s.dual(), kept))
    }

    /// Restriction to `kept` (ascending element list), relabeled to
    /// `0..kept.len()`. Correct when `rank(kept) = rank(M)`, which holds for
    /// the callers here (parallel-class representatives, component blocks).
    pub(crate) fn restrict_to(&self, kept: &[usize]) -> Matroid {
        debug_assert!(kept.windows(2).all(|w| w[0] < w[1]));
        let keep_mask: u32 = kept.iter().map(|&e| 1u32 << e).sum();
        let mut bases: Vec<u32> = Vec::new();
        let target = self.rank_of(keep_mask);
        for &b in &self.bases {
            let inter = b & keep_mask;
            if inter.count_ones() as usize == target {
                bases.push(compress(inter, kept));
            }
        }
        Matroid::from_valid_parts(kept.len(), target, bases)
    }

    /// Applies a ground-set permutation: element `e` becomes `perm[e]`.
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        assert_eq!(perm.len(), self.n());
        let bases: Vec<u32> = self
            .bases
            .iter()
            .map(|&b| bits(b).map(|e| 1u32 << perm[e]).sum())
            .collect();
        Matroid::from_valid_parts(self.n(), self.rank(), bases)
    }
}

/// Removes position `e` from a mask that avoids `e`, shifting higher bits down.
fn collapse(mask: u32, e: usize) -> u32 {
    let low = mask & ((1 << e) - 1);
    let high = mask >> (e + 1);
    low | high << e
}

/// Relabels a mask supported on `kept` to indices `0..kept.len()`.
fn compress(mask: u32, kept: &[usize]) -> u32 {
    let mut out = 0;
    for (new, &old) in kept.iter().enumerate() {
        if mask >> old & 1 == 1 {
            out |= 1 << new;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::construct::uniform;
    use super::*;

    #[test]
    fn dual_is_involutive() {
        let m = uniform(2, 5);
        assert_eq!(m.dual().dual(), m);
        assert_eq!(uniform(2, 4).dual(), uniform(2, 4));
        assert_eq!(uniform(1, 3).dual(), uniform(2, 3));
    }

    #[test]
    fn minors_of_uniform() {
        let m = uniform(2, 4);
        let (c, _) = m.contract(3).unwrap();
        assert_eq!(c, uniform(1, 3));
        let (d, _) = m.delete(3).unwrap();
        assert_eq!(d, uniform(2, 3));
    }

    #[test]
    fn delete_contract_commute_with_dual() {
        let m = uniform(2, 5);
        for e in 0..5 {
            let lhs = m.delete(e).unwrap().0.dual();
            let rhs = m.dual().contract(e).unwrap().0;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn minor_preconditions() {
        let single = Matroid::from_bases(3, 2, &[0b011]).unwrap();
        assert_eq!(single.delete(0).unwrap_err(), MatroidError::ColoopDeletion(0));
        assert_eq!(single.contract(2).unwrap_err(), MatroidError::LoopContraction(2));
    }

    #[test]
    fn direct_sum_of_two_circuits() {
        let u12 = uniform(1, 2);
        let s = u12.direct_sum(&u12).unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.bases(), &[0b0101, 0b0110, 0b1001, 0b1010]);
    }

    #[test]
    fn two_sum_with_a_parallel_pair_is_identity() {
        // 2-summing with U(1,2) glues a parallel copy and removes it again.
        let u12 = uniform(1, 2);
        let s = u12.two_sum(1, &u12, 0).unwrap();
        assert_eq!(s, uniform(1, 2));
    }

    #[test]
    fn two_sum_of_u24s() {
        let m = uniform(2, 4).two_sum(3, &uniform(2, 4), 0).unwrap();
        assert_eq!(m.n(), 6);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.num_bases(), 18);
        // duality compatibility: (M1 +2 M2)* = M1* +2 M2*
        let dd = uniform(2, 4)
            .dual()
            .two_sum(3, &uniform(2, 4).dual(), 0)
            .unwrap();
        assert_eq!(m.dual(), dd);
    }

    #[test]
    fn parallel_extension_counts() {
        let m = uniform(2, 3);
        let p = m.parallel_ext(0).unwrap();
        let with_e = m.bases().iter().filter(|&&b| b & 1 == 1).count();
        assert_eq!(p.num_bases(), m.num_bases() + with_e);
        assert_eq!(p.loops(), 0);
    }

    #[test]
    fn all_parallel_rank_one() {
        let m = uniform(1, 2);
        let p = m.parallel_ext(0).unwrap();
        assert_eq!(p, uniform(1, 3));
    }

    #[test]
    fn series_ext_of_circuit() {
        let m = uniform(1, 2);
        let s = m.series_ext(0).unwrap();
        assert_eq!(s, uniform(2, 3));
        // definition: series = dual ∘ parallel ∘ dual, exactly
        assert_eq!(s, m.dual().parallel_ext(0).unwrap().dual());
    }

    #[test]
    fn simplify_collapses_parallel_classes() {
        let (s, kept) = uniform(1, 3).simplify().unwrap();
        assert_eq!(s, uniform(1, 1));
        assert_eq!(kept, vec![0]);

        let m = uniform(2, 3).parallel_ext(0).unwrap();
        let (s, _) = m.simplify().unwrap();
        assert_eq!(s, uniform(2, 3));

        // a simple matroid is untouched
        let (s, kept) = uniform(2, 4).simplify().unwrap();
        assert_eq!(s, uniform(2, 4));
        assert_eq!(kept, vec![0, 1, 2, 3]);
    }

    #[test]
    fn cosimplify_undoes_series_extension() {
        let m = uniform(2, 4).series_ext(1).unwrap();
        let (c, _) = m.cosimplify().unwrap();
        assert_eq!(c, uniform(2, 4));
    }
}
