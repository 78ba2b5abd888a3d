//! Matroid invariants: the Tutte polynomial, the beta invariant, and the
//! g-polynomial with its reduction rules and closed forms.

mod g;
mod tutte;

pub use g::{
    g_from_subdivision, g_invariant, g_rank3, g_sanity, g_uniform, g_wheel, g_whirl, GEngine,
    SanityReport,
};
pub use tutte::{beta, is_series_parallel, sp_reduce, tutte};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::matroid::MatroidError;
use crate::polytope::PolytopeError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GError {
    #[error("matroid has loops or coloops, so it lies in a coordinate subgrassmannian")]
    CoordinateSubgrassmannian,
    #[error("no reduction path applies: {0}")]
    NotComputable(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("rank-2 flats do not cover every pair exactly once")]
    FlatCountMismatch,
    #[error("{0} interior faces have unknown g; can solve for at most one")]
    TooManyUnknowns(usize),
    #[error("subdivision additivity produced an invalid polynomial: {0}")]
    InconsistentSum(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// Polynomial in `t` with integer coefficients and zero constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GPolynomial {
    /// exponent -> coefficient; zero coefficients are never stored, and no
    /// exponent 0 term may appear.
    coeffs: BTreeMap<usize, i64>,
}

impl GPolynomial {
    pub fn zero() -> Self {
        GPolynomial::default()
    }

    /// The monomial `c * t^i`, `i >= 1`.
    pub fn term(i: usize, c: i64) -> Self {
        assert!(i >= 1, "g-polynomials have zero constant term");
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(i, c);
        }
        GPolynomial { coeffs }
    }

    pub fn from_coeffs(pairs: &[(usize, i64)]) -> Self {
        let mut p = GPolynomial::zero();
        for &(i, c) in pairs {
            p.add_term(i, c);
        }
        p
    }

    pub fn add_term(&mut self, i: usize, c: i64) {
        assert!(i >= 1);
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(i).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn coefficient(&self, i: usize) -> i64 {
        *self.coeffs.get(&i).unwrap_or(&0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    /// Smallest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs.keys().next().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn add(&self, other: &GPolynomial) -> GPolynomial {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &GPolynomial) -> GPolynomial {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_term(i, -c);
        }
        out
    }

    pub fn mul(&self, other: &GPolynomial) -> GPolynomial {
        let mut out = GPolynomial::zero();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                out.add_term(i + j, a * b);
            }
        }
        out
    }

    /// Exact division by `t`; fails loudly when the coefficient of `t` is
    /// nonzero (the quotient would acquire a constant term).
    pub fn div_t(&self) -> Result<GPolynomial, GError> {
        if self.coefficient(1) != 0 {
            return Err(GError::InconsistentSum(format!(
                "{self} is not divisible by t within zero-constant polynomials"
            )));
        }
        let mut out = GPolynomial::zero();
        for (i, c) in self.iter() {
            out.add_term(i - 1, c);
        }
        Ok(out)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.iter().map(|(i, c)| c * x.pow(i as u32)).sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.iter().all(|(_, c)| c >= 0)
    }
}

impl std::fmt::Display for GPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.iter() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            let a = c.abs();
            match (a, i) {
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "t^{i}")?,
                (_, 1) => write!(f, "{a}t")?,
                (_, _) => write!(f, "{a}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Tutte polynomial in `x, y` with nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(usize, usize), u64>,
}

impl TuttePolynomial {
    pub fn one() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), 1);
        TuttePolynomial { coeffs }
    }

    pub fn monomial(i: usize, j: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((i, j), 1);
        TuttePolynomial { coeffs }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> u64 {
        *self.coeffs.get(&(i, j)).unwrap_or(&0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    pub fn add(&self, other: &TuttePolynomial) -> TuttePolynomial {
        let mut out = self.clone();
        for ((i, j), c) in other.iter() {
            *out.coeffs.entry((i, j)).or_insert(0) += c;
        }
        out
    }

    /// Multiplies by `x^i y^j`.
    pub fn shift(&self, i: usize, j: usize) -> TuttePolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&(a, b), &c)| ((a + i, b + j), c))
            .collect();
        TuttePolynomial { coeffs }
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.iter()
            .map(|((i, j), c)| c as i64 * x.pow(i as u32) * y.pow(j as u32))
            .sum()
    }
}

impl std::fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let mut terms: Vec<_> = self.iter().collect();
        terms.reverse(); // highest x-degree first
        for ((i, j), c) in terms {
            let mut s = String::new();
            if c != 1 || (i == 0 && j == 0) {
                s.push_str(&c.to_string());
            }
            if i == 1 {
                s.push('x');
            } else if i > 1 {
                s.push_str(&format!("x^{i}"));
            }
            if j == 1 {
                s.push('y');
            } else if j > 1 {
                s.push_str(&format!("y^{j}"));
            }
            parts.push(s);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gpoly_arithmetic() {
        let a = GPolynomial::from_coeffs(&[(1, 2), (2, 1)]); // 2t + t^2
        let b = GPolynomial::from_coeffs(&[(1, 1)]); // t
        assert_eq!(a.mul(&b), GPolynomial::from_coeffs(&[(2, 2), (3, 1)]));
        assert_eq!(a.eval(-1), -1);
        assert_eq!(a.degree(), 2);
        assert_eq!(a.to_string(), "2t + t^2");
        let sq = a.mul(&a); // 4t^2 + 4t^3 + t^4
        assert_eq!(
            sq.div_t().unwrap(),
            GPolynomial::from_coeffs(&[(1, 4), (2, 4), (3, 1)])
        );
        assert!(a.div_t().is_err());
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = GPolynomial::from_coeffs(&[(1, 2)]);
        let b = GPolynomial::from_coeffs(&[(1, 2)]);
        assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn tutte_display_and_eval() {
        let t = TuttePolynomial::monomial(1, 0).add(&TuttePolynomial::monomial(0, 1));
        assert_eq!(t.to_string(), "x + y");
        assert_eq!(t.eval(1, 1), 2);
    }
}
