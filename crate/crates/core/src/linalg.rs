//! Small dense exact linear algebra over `BigRational` and `i64`.
//!
//! Problem sizes in this crate are tiny (dimension at most 17), so everything
//! is straightforward Gaussian elimination; what matters is exactness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QVec = Vec<BigRational>;

/// Row-reduces `rows` in place and returns the pivot column of each produced
/// echelon row. Rows end up in echelon form (not reduced).
pub fn echelon(rows: &mut Vec<QVec>) -> Vec<usize> {
    let mut pivots = Vec::new();
    if rows.is_empty() {
        return pivots;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for j in c..ncols {
                    let t = &rows[r][j] * &f;
                    rows[i][j] = &rows[i][j] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[QVec]) -> usize {
    let mut m: Vec<QVec> = rows.to_vec();
    echelon(&mut m).len()
}

/// Affine rank of a set of integer points: `dim(aff hull) + 1`.
pub fn affine_rank(points: &[Vec<i64>]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let rows: Vec<QVec> = points
        .iter()
        .map(|p| {
            let mut v: QVec = p.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            v.push(BigRational::one());
            v
        })
        .collect();
    rank(&rows)
}

/// Solves `A x = b` for square `A` (rows of length n). `None` if singular.
pub fn solve_square(a: &[QVec], b: &[BigRational]) -> Option<QVec> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<QVec> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    // forward elimination with partial (first nonzero) pivoting
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                for j in c..=n {
                    let t = &m[c][j] * &f;
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
    }
    // back substitution
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].clone();
        for j in i + 1..n {
            acc -= &m[i][j] * &x[j];
        }
        x[i] = acc / &m[i][i];
    }
    Some(x)
}

/// Pivot columns of the row space: a set of column indices on which the
/// projection of the row span is injective.
pub fn pivot_columns(rows: &[QVec]) -> Vec<usize> {
    let mut m: Vec<QVec> = rows.to_vec();
    echelon(&mut m)
}

/// Integer determinant by fraction-free Bareiss elimination.
///
/// Sizes here are at most 16x16 with entries in {-1,0,1}, so i128
/// intermediates are far within range.
pub fn det_i64(mat: &[Vec<i64>]) -> i64 {
    let n = mat.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    (sign * m[n - 1][n - 1]) as i64
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction. The zero vector maps to itself.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    ints
}

/// Does `target` lie in the linear span of `rows`?
pub fn in_row_span(rows: &[QVec], target: &[BigRational]) -> bool {
    let r0 = rank(rows);
    let mut all: Vec<QVec> = rows.to_vec();
    all.push(target.to_vec());
    rank(&all) == r0
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    debug_assert_eq!(a.len(), b.len());
    let mut s = BigRational::zero();
    for (x, y) in a.iter().zip(b) {
        s += x * y;
    }
    s
}

pub fn dot_int(a: &[BigInt], b: &[i64]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    let mut s = BigInt::zero();
    for (x, &y) in a.iter().zip(b) {
        s += x * BigInt::from(y);
    }
    s
}

/// Sign of an integer dot product, as -1 / 0 / +1.
pub fn sign_dot_int(a: &[BigInt], b: &[i64]) -> i32 {
    let s = dot_int(a, b);
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}
