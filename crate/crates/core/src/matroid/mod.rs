//! Matroids on a ground set of at most 16 elements.
//!
//! Bases are stored as sorted `u32` bitmasks over a 0-indexed ground set
//! (every JSON surface is 1-indexed; the translation happens in [`crate::json`]).
//! Keeping the ground set this small means every validation — the exchange
//! axiom, connectivity, submodularity — can be checked exhaustively.

mod conn;
mod construct;
mod iso;
mod ops;

pub use conn::GroundPartition;
pub use construct::{from_graph, from_matrix, uniform, wheel, whirl, whirl_matrix, Field, FieldMatrix};
pub use iso::DEFAULT_ISO_CAP;

use thiserror::Error;

pub const MAX_GROUND: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("ground set size {0} out of range 1..=16")]
    GroundSetSize(usize),
    #[error("rank {rank} out of range 0..={n}")]
    RankRange { rank: usize, n: usize },
    #[error("bases must be nonempty")]
    EmptyBases,
    #[error("basis {0:?} does not have exactly rank many elements inside the ground set")]
    MalformedBasis(Vec<usize>),
    #[error("exchange axiom violated: B1={b1:?}, B2={b2:?}, i={i} has no exchange partner")]
    ExchangeAxiomViolation { b1: Vec<usize>, b2: Vec<usize>, i: usize },
    #[error("element {0} out of range")]
    ElementOutOfRange(usize),
    #[error("cannot delete coloop {0}")]
    ColoopDeletion(usize),
    #[error("cannot contract loop {0}")]
    LoopContraction(usize),
    #[error("two-sum terminal {0} is a loop or coloop")]
    DegenerateTerminal(usize),
    #[error("cannot extend in parallel at loop {0}")]
    LoopParallel(usize),
    #[error("cannot extend in series at coloop {0}")]
    ColoopSeries(usize),
    #[error("matroid has loops")]
    HasLoops,
    #[error("matroid has coloops")]
    HasColoops,
    #[error("matroid is not connected")]
    NotConnected,
    #[error("ground set too large for this operation (cap {0})")]
    GroundSetTooLarge(usize),
    #[error("ground set too small for this operation")]
    GroundSetTooSmall,
    #[error("zero matrix has no column matroid")]
    ZeroMatrix,
    #[error("{0} is not a prime supported for finite-field input (2, 3, 5, 7)")]
    UnsupportedPrime(u32),
    #[error("matrix is ragged or empty")]
    MalformedMatrix,
    #[error("{0:?} is not a basis")]
    NotABasis(Vec<usize>),
}

/// A matroid given by its set of bases.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matroid {
    n: u8,
    rank: u8,
    /// Sorted, deduplicated; each mask has exactly `rank` bits, all below `n`.
    bases: Vec<u32>,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matroid(n={}, d={}, bases=[", self.n, self.rank)?;
        for (k, &b) in self.bases.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let elems: Vec<String> = bits(b).map(|e| (e + 1).to_string()).collect();
            write!(f, "{}", elems.join(""))?;
        }
        write!(f, "])")
    }
}

/// Iterates over set bit positions, ascending.
pub fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask >> i & 1 == 1)
}

pub fn mask_of(elems: &[usize]) -> u32 {
    elems.iter().fold(0, |m, &e| m | 1 << e)
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// All k-subsets of `{0..n}` as masks, ascending.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(binomial(n, k) as usize);
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let mut m: u32 = (1 << k) - 1;
    let limit: u32 = 1 << n;
    while m < limit {
        out.push(m);
        // Gosper's hack
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
        if c == 0 {
            break;
        }
    }
    out
}

impl Matroid {
    /// Validating constructor: checks sizes, nonemptiness and the basis
    /// exchange axiom, returning the failing triple on violation.
    pub fn from_bases(n: usize, rank: usize, bases: &[u32]) -> Result<Self, MatroidError> {
        if n == 0 || n > MAX_GROUND {
            return Err(MatroidError::GroundSetSize(n));
        }
        if rank > n {
            return Err(MatroidError::RankRange { rank, n });
        }
        if bases.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        let ground: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        let mut sorted: Vec<u32> = bases.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &b in &sorted {
            if b & !ground != 0 || b.count_ones() as usize != rank {
                return Err(MatroidError::MalformedBasis(elems_of(b)));
            }
        }
        let m = Matroid { n: n as u8, rank: rank as u8, bases: sorted };
        m.check_exchange()?;
        Ok(m)
    }

    /// Constructor for bases produced by operations that preserve
    /// matroidness. Checked exhaustively in debug builds.
    pub(crate) fn from_valid_parts(n: usize, rank: usize, mut bases: Vec<u32>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        let m = Matroid { n: n as u8, rank: rank as u8, bases };
        debug_assert!(m.check_exchange().is_ok(), "internal construction broke the exchange axiom: {m:?}");
        m
    }

    pub fn check_exchange(&self) -> Result<(), MatroidError> {
        // Uniform matroids are always valid; skip the quadratic scan.
        if self.bases.len() as u64 == binomial(self.n(), self.rank()) {
            return Ok(());
        }
        let mut is_basis = vec![false; 1 << self.n];
        for &b in &self.bases {
            is_basis[b as usize] = true;
        }
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                let only1 = b1 & !b2;
                if only1 == 0 {
                    continue;
                }
                let only2 = b2 & !b1;
                for i in bits(only1) {
                    let stripped = b1 & !(1 << i);
                    let found = bits(only2).any(|j| is_basis[(stripped | 1 << j) as usize]);
                    if !found {
                        // witness reported 1-indexed, like every I/O surface
                        return Err(MatroidError::ExchangeAxiomViolation {
                            b1: elems_of(b1).iter().map(|e| e + 1).collect(),
                            b2: elems_of(b2).iter().map(|e| e + 1).collect(),
                            i: i + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn corank(&self) -> usize {
        self.n() - self.rank()
    }

    pub fn bases(&self) -> &[u32] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn ground_mask(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn is_basis(&self, mask: u32) -> bool {
        self.bases.binary_search(&mask).is_ok()
    }

    pub fn is_uniform(&self) -> bool {
        self.bases.len() as u64 == binomial(self.n(), self.rank())
    }

    /// Rank of a subset: `max |B ∩ S|` over bases `B`.
    pub fn rank_of(&self, subset: u32) -> usize {
        self.bases
            .iter()
            .map(|&b| (b & subset).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Elements contained in no basis, as a mask.
    pub fn loops(&self) -> u32 {
        let mut union = 0;
        for &b in &self.bases {
            union |= b;
        }
        self.ground_mask() & !union
    }

    /// Elements contained in every basis, as a mask.
    pub fn coloops(&self) -> u32 {
        let mut inter = self.ground_mask();
        for &b in &self.bases {
            inter &= b;
        }
        inter
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.loops() >> e & 1 == 1
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.coloops() >> e & 1 == 1
    }

    /// `i` and `j` are parallel: distinct non-loops with `rank({i,j}) = 1`.
    pub fn are_parallel(&self, i: usize, j: usize) -> bool {
        i != j
            && !self.is_loop(i)
            && !self.is_loop(j)
            && self.rank_of(1 << i | 1 << j) == 1
    }
}

pub(crate) fn elems_of(mask: u32) -> Vec<usize> {
    bits(mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets_of_size(4, 2).len(), 6);
        assert_eq!(subsets_of_size(9, 3).len(), 84);
        assert_eq!(subsets_of_size(3, 0), vec![0]);
        assert_eq!(subsets_of_size(2, 3), Vec::<u32>::new());
        // ascending and distinct
        let s = subsets_of_size(9, 3);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn uniform_always_valid() {
        let m = Matroid::from_bases(4, 2, &subsets_of_size(4, 2)).unwrap();
        assert_eq!(m.num_bases(), 6);
        assert!(m.is_uniform());
        assert_eq!(m.loops(), 0);
        assert_eq!(m.coloops(), 0);
    }

    #[test]
    fn exchange_violation_named() {
        // {12, 34} fails: i=1 in B1\B2 has no partner.
        let err = Matroid::from_bases(4, 2, &[0b0011, 0b1100]).unwrap_err();
        match err {
            MatroidError::ExchangeAxiomViolation { b1, b2, .. } => {
                assert_ne!(b1, b2);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn empty_bases_rejected() {
        assert_eq!(
            Matroid::from_bases(3, 1, &[]).unwrap_err(),
            MatroidError::EmptyBases
        );
    }

    #[test]
    fn single_basis_loops_and_coloops() {
        let m = Matroid::from_bases(4, 2, &[0b0011]).unwrap();
        assert_eq!(m.loops(), 0b1100);
        assert_eq!(m.coloops(), 0b0011);
    }

    #[test]
    fn rank_function_is_submodular_on_small_cases() {
        // r(A) + r(B) >= r(A∪B) + r(A∩B) for U(2,4) and a non-uniform example
        let ms = [
            Matroid::from_bases(4, 2, &subsets_of_size(4, 2)).unwrap(),
            Matroid::from_bases(4, 2, &[0b0011, 0b0101, 0b1001, 0b0110, 0b1010]).unwrap(),
        ];
        for m in &ms {
            for a in 0..16u32 {
                for b in 0..16u32 {
                    assert!(m.rank_of(a) + m.rank_of(b) >= m.rank_of(a | b) + m.rank_of(a & b));
                }
            }
        }
    }

    #[test]
    fn pappus_bases_are_a_matroid() {
        let non_bases = [
            [1, 2, 3], [4, 5, 6], [7, 8, 9], [1, 5, 9], [1, 6, 8],
            [2, 4, 9], [2, 6, 7], [3, 4, 8], [3, 5, 7],
        ];
        let nb: Vec<u32> = non_bases
            .iter()
            .map(|t| t.iter().map(|&e| 1u32 << (e - 1)).sum())
            .collect();
        let bases: Vec<u32> = subsets_of_size(9, 3)
            .into_iter()
            .filter(|m| !nb.contains(m))
            .collect();
        let m = Matroid::from_bases(9, 3, &bases).unwrap();
        assert_eq!(m.num_bases(), 84 - 9);
        assert_eq!(m.loops(), 0);
        assert_eq!(m.coloops(), 0);
    }
}
