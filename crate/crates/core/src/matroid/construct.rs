//! Constructors: uniform matroids, wheels and whirls, column matroids of
//! matrices over Q or a small prime field, and cycle matroids of graphs.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{bits, subsets_of_size, Matroid, MatroidError, MAX_GROUND};
use crate::rat::parse_rational;

/// Uniform matroid U(d, n): every d-subset is a basis.
pub fn uniform(d: usize, n: usize) -> Matroid {
    assert!(n >= 1 && n <= MAX_GROUND && d <= n);
    Matroid::from_valid_parts(n, d, subsets_of_size(n, d))
}

/// The rank-d wheel: column matroid of the d x 2d matrix whose first block is
/// the identity (spokes) and whose second block has columns `e_k - e_{k+1}`
/// cyclically (rim). Equals the cycle matroid of the wheel graph.
pub fn wheel(d: usize) -> Matroid {
    assert!(d >= 2, "wheels need rank at least 2");
    let mat = wheel_matrix(d, BigRational::one());
    from_matrix(&FieldMatrix::Q(mat)).expect("wheel matrix is nonzero")
}

/// The rank-d whirl: the wheel plus the outer rim as one extra basis.
pub fn whirl(d: usize) -> Matroid {
    let w = wheel(d);
    let rim: u32 = (((1u32 << d) - 1) << d) as u32;
    let mut bases = w.bases().to_vec();
    bases.push(rim);
    Matroid::from_bases(2 * d, d, &bases).expect("whirl bases satisfy exchange")
}

/// The whirl is also the column matroid of the wheel matrix with the corner
/// entry scaled by any `alpha` other than 0 and 1; exposed for tests.
pub fn whirl_matrix(d: usize, alpha: BigRational) -> Vec<Vec<BigRational>> {
    assert!(!alpha.is_zero() && !alpha.is_one());
    wheel_matrix(d, alpha)
}

fn wheel_matrix(d: usize, alpha: BigRational) -> Vec<Vec<BigRational>> {
    let mut m = vec![vec![BigRational::zero(); 2 * d]; d];
    for (r, row) in m.iter_mut().enumerate() {
        row[r] = BigRational::one();
    }
    for c in 0..d {
        // rim column c: +1 in row c, -1 in row c+1 (cyclically); the wrap
        // entry carries -alpha.
        m[c][d + c] += BigRational::one();
        if c + 1 < d {
            m[c + 1][d + c] -= BigRational::one();
        } else {
            m[0][d + c] -= alpha.clone();
        }
    }
    m
}

/// A matrix over Q or over GF(p), p in {2, 3, 5, 7}.
#[derive(Debug, Clone)]
pub enum FieldMatrix {
    Q(Vec<Vec<BigRational>>),
    Fp { p: u32, rows: Vec<Vec<u32>> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Q,
    Fp(u32),
}

impl FieldMatrix {
    pub fn parse(field: Field, rows: &[Vec<String>]) -> Result<FieldMatrix, MatroidError> {
        if rows.is_empty() || rows[0].is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
            return Err(MatroidError::MalformedMatrix);
        }
        match field {
            Field::Q => {
                let parsed: Result<Vec<Vec<BigRational>>, _> = rows
                    .iter()
                    .map(|r| r.iter().map(|s| parse_rational(s)).collect())
                    .collect();
                Ok(FieldMatrix::Q(parsed.map_err(|_| MatroidError::MalformedMatrix)?))
            }
            Field::Fp(p) => {
                if ![2, 3, 5, 7].contains(&p) {
                    return Err(MatroidError::UnsupportedPrime(p));
                }
                let parsed: Result<Vec<Vec<u32>>, MatroidError> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|s| {
                                s.trim()
                                    .parse::<i64>()
                                    .map(|v| (v.rem_euclid(p as i64)) as u32)
                                    .map_err(|_| MatroidError::MalformedMatrix)
                            })
                            .collect()
                    })
                    .collect();
                Ok(FieldMatrix::Fp { p, rows: parsed? })
            }
        }
    }

    fn ncols(&self) -> usize {
        match self {
            FieldMatrix::Q(rows) => rows[0].len(),
            FieldMatrix::Fp { rows, .. } => rows[0].len(),
        }
    }
}

/// Column matroid: rank is the row rank, bases are the column d-subsets with
/// nonzero d x d minor, both by exact elimination.
pub fn from_matrix(mat: &FieldMatrix) -> Result<Matroid, MatroidError> {
    let n = mat.ncols();
    if n == 0 || n > MAX_GROUND {
        return Err(MatroidError::GroundSetSize(n));
    }
    match mat {
        FieldMatrix::Q(rows) => from_matrix_generic(rows, n, RatField),
        FieldMatrix::Fp { p, rows } => {
            if ![2u32, 3, 5, 7].contains(p) {
                return Err(MatroidError::UnsupportedPrime(*p));
            }
            let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|&v| v % p).collect()).collect();
            from_matrix_generic(&rows, n, PrimeField { p: *p })
        }
    }
}

trait Arith<T: Clone + PartialEq> {
    fn is_zero(&self, x: &T) -> bool;
    fn sub_mul_div(&self, a: &T, b: &T, c: &T, d: &T) -> T; // a - b*c/d
}

struct RatField;
impl Arith<BigRational> for RatField {
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn sub_mul_div(&self, a: &BigRational, b: &BigRational, c: &BigRational, d: &BigRational) -> BigRational {
        a - b * c / d
    }
}

struct PrimeField {
    p: u32,
}
impl PrimeField {
    fn inv(&self, x: u32) -> u32 {
        // Fermat: p is prime and x nonzero mod p.
        let mut acc = 1u64;
        let mut base = x as u64 % self.p as u64;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            e >>= 1;
        }
        acc as u32
    }
}
impl Arith<u32> for PrimeField {
    fn is_zero(&self, x: &u32) -> bool {
        *x % self.p == 0
    }
    fn sub_mul_div(&self, a: &u32, b: &u32, c: &u32, d: &u32) -> u32 {
        let p = self.p as u64;
        let bc = (*b as u64 % p) * (*c as u64 % p) % p;
        let bcd = bc * self.inv(*d) as u64 % p;
        ((*a as u64 % p) + p - bcd) as u32 % self.p
    }
}

fn rank_generic<T: Clone + PartialEq, F: Arith<T>>(rows: &[Vec<T>], f: &F) -> usize {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if !f.is_zero(&m[i][c]) {
                let (num, den) = (m[i][c].clone(), m[r][c].clone());
                for j in c..ncols {
                    m[i][j] = f.sub_mul_div(&m[i][j], &m[r][j], &num, &den);
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

fn from_matrix_generic<T: Clone + PartialEq, F: Arith<T>>(
    rows: &[Vec<T>],
    n: usize,
    f: F,
) -> Result<Matroid, MatroidError> {
    let d = rank_generic(rows, &f);
    if d == 0 {
        return Err(MatroidError::ZeroMatrix);
    }
    let mut bases = Vec::new();
    for cols in subsets_of_size(n, d) {
        let idx: Vec<usize> = bits(cols).collect();
        let sub: Vec<Vec<T>> = rows
            .iter()
            .map(|r| idx.iter().map(|&c| r[c].clone()).collect())
            .collect();
        if rank_generic(&sub, &f) == d {
            bases.push(cols);
        }
    }
    Ok(Matroid::from_valid_parts(n, d, bases))
}

/// Cycle matroid of a multigraph given as 0-indexed vertex pairs: bases are
/// the spanning forests of maximal size. Self-loop edges become loops.
pub fn from_graph(vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid, MatroidError> {
    let n = edges.len();
    if n == 0 || n > MAX_GROUND {
        return Err(MatroidError::GroundSetSize(n));
    }
    for &(u, v) in edges {
        if u >= vertices || v >= vertices {
            return Err(MatroidError::ElementOutOfRange(u.max(v)));
        }
    }
    let forest_size = |mask: u32| -> Option<usize> {
        // union-find acyclicity; None when the edge subset has a cycle
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            r
        }
        let mut used = 0;
        for e in bits(mask) {
            let (u, v) = edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return None;
            }
            parent[ru] = rv;
            used += 1;
        }
        Some(used)
    };
    // rank = vertices - #graph components
    let mut rank = 0;
    {
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            r
        }
        for &(u, v) in edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                rank += 1;
            }
        }
    }
    if rank == 0 {
        // all edges are self-loops; that is the rank-0 matroid on n elements
        return Ok(Matroid::from_valid_parts(n, 0, vec![0]));
    }
    let mut bases = Vec::new();
    for mask in subsets_of_size(n, rank) {
        if forest_size(mask) == Some(rank) {
            bases.push(mask);
        }
    }
    Ok(Matroid::from_valid_parts(n, rank, bases))
}
