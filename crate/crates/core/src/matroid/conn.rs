//! Connectivity: connected components and 2-separations.

use super::{bits, Matroid, MatroidError};

/// Partition of the ground set into connected components, with the rank each
/// block carries. `sum(ranks) = rank(M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundPartition {
    /// Blocks as masks, sorted by smallest element.
    pub blocks: Vec<u32>,
    /// Rank of each block.
    pub ranks: Vec<usize>,
}

impl GroundPartition {
    pub fn num_components(&self) -> usize {
        self.blocks.len()
    }
}

impl Matroid {
    /// Connected components: the equivalence relation generated by basis
    /// exchanges. Loops and coloops form singleton blocks.
    pub fn components(&self) -> GroundPartition {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        let mut is_basis = vec![false; 1 << n];
        for &b in &self.bases {
            is_basis[b as usize] = true;
        }
        for &b in &self.bases {
            let out = self.ground_mask() & !b;
            for i in bits(b) {
                let stripped = b & !(1 << i);
                for j in bits(out) {
                    if is_basis[(stripped | 1 << j) as usize] {
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        if ri != rj {
                            parent[ri] = rj;
                        }
                    }
                }
            }
        }
        let mut blocks_by_root: Vec<u32> = vec![0; n];
        for e in 0..n {
            let r = find(&mut parent, e);
            blocks_by_root[r] |= 1 << e;
        }
        let mut blocks: Vec<u32> = blocks_by_root.into_iter().filter(|&m| m != 0).collect();
        blocks.sort_by_key(|&m| m.trailing_zeros());
        let ranks = blocks.iter().map(|&b| self.rank_of(b)).collect();
        GroundPartition { blocks, ranks }
    }

    pub fn is_connected(&self) -> bool {
        self.components().num_components() == 1
    }

    /// The restriction of `M` to one component block, relabeled. The direct
    /// sum of these over all blocks recovers `M` up to the interleaving.
    pub fn component_factor(&self, block: u32) -> Matroid {
        let kept: Vec<usize> = bits(block).collect();
        self.restrict_to(&kept)
    }

    /// All 2-separations `(A, E\A)`: both sides of size >= 2 and
    /// `r(A) + r(E\A) - r(E) <= 1`. The matroid must be connected.
    ///
    /// Returned masks `A` contain element 0, so each split appears once.
    pub fn two_separations(&self) -> Result<Vec<u32>, MatroidError> {
        if !self.is_connected() {
            return Err(MatroidError::NotConnected);
        }
        let n = self.n();
        let r = self.rank();
        let mut out = Vec::new();
        for a in 0u32..(1 << n) {
            if a & 1 == 0 {
                continue; // canonical side contains element 0
            }
            let comp = self.ground_mask() & !a;
            if (a.count_ones() as usize) < 2 || (comp.count_ones() as usize) < 2 {
                continue;
            }
            if self.rank_of(a) + self.rank_of(comp) <= r + 1 {
                out.push(a);
            }
        }
        Ok(out)
    }

    /// 3-connected in the sense used here: connected with no 2-separation
    /// (meaningful for `n >= 4`).
    pub fn is_three_connected(&self) -> bool {
        self.is_connected() && self.two_separations().map(|v| v.is_empty()).unwrap_or(false)
    }

    /// Splits `M = M1 +2 M2` along a 2-separation `(A, E\A)`.
    ///
    /// Each factor keeps its side of the ground set plus a fresh terminal as
    /// its last element; the reconstruction `two_sum(M1, p, M2, q)` is checked
    /// to reproduce `M` exactly (after undoing the interleaving relabel) and
    /// `None` is returned when it does not.
    pub fn split_two_sum(&self, a: u32) -> Option<(Matroid, Matroid)> {
        let comp = self.ground_mask() & !a;
        let ra = self.rank_of(a);
        let rb = self.rank_of(comp);
        if ra + rb != self.rank() + 1 {
            return None;
        }
        let side = |mask: u32, rk: usize| -> Option<Matroid> {
            let kept: Vec<usize> = bits(mask).collect();
            let terminal = 1u32 << kept.len();
            let mut bases: Vec<u32> = Vec::new();
            for &b in &self.bases {
                let inter = b & mask;
                let k = inter.count_ones() as usize;
                let local = ops_compress(inter, &kept);
                if k == rk {
                    bases.push(local);
                } else if k + 1 == rk {
                    bases.push(local | terminal);
                }
            }
            Matroid::from_bases(kept.len() + 1, rk, &bases).ok()
        };
        let m1 = side(a, ra)?;
        let m2 = side(comp, rb)?;
        let glued = m1.two_sum(m1.n() - 1, &m2, m2.n() - 1).ok()?;
        // two_sum concatenates sides; undo the interleaving of A and E\A.
        let mut perm = vec![0usize; self.n()];
        for (pos, e) in bits(a).chain(bits(comp)).enumerate() {
            perm[pos] = e;
        }
        if &glued.relabel(&perm) == self {
            Some((m1, m2))
        } else {
            None
        }
    }
}

pub(super) fn ops_compress(mask: u32, kept: &[usize]) -> u32 {
    let mut out = 0;
    for (new, &old) in kept.iter().enumerate() {
        if mask >> old & 1 == 1 {
            out |= 1 << new;
        }
    }
    out
}
