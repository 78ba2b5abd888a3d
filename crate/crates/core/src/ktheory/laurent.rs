//! Multivariate Laurent polynomials with exact rational coefficients.
//!
//! Exponent vectors are fixed-length `i32` vectors in a fixed number of
//! variables; terms are kept in a `BTreeMap`, so iteration order (and every
//! serialization) is lexicographic in the exponent.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigRational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::monomial(vec![0; nvars], BigRational::one())
    }

    pub fn monomial(exp: Vec<i32>, coeff: BigRational) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[i32]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exp: Vec<i32>, coeff: BigRational) {
        debug_assert_eq!(exp.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let exp: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    /// Multiplies by the monomial `c * x^e`.
    pub fn mul_monomial(&self, e: &[i32], c: &BigRational) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in self.terms() {
            let exp: Vec<i32> = e1.iter().zip(e).map(|(a, b)| a + b).collect();
            out.add_term(exp, c1 * c);
        }
        out
    }

    /// Multiplies by `1 - x^b`.
    pub fn mul_binomial(&self, b: &[i32]) -> LaurentPoly {
        let shifted = self.mul_monomial(b, &BigRational::one());
        self.sub(&shifted)
    }

    /// The substitution `x_i := x_j` (merging the two exponents).
    pub fn substitute(&self, i: usize, j: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in self.terms() {
            let mut exp = e.clone();
            exp[j] += exp[i];
            exp[i] = 0;
            out.add_term(exp, c.clone());
        }
        out
    }

    /// Every exponent vector sums to zero.
    pub fn is_degree_zero(&self) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<i32>() == 0)
    }

    /// Relabels variables: exponent of variable `v` moves to `perm[v]`.
    pub fn permute_vars(&self, perm: &[usize]) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in self.terms() {
            let mut exp = vec![0; self.nvars];
            for (v, &val) in e.iter().enumerate() {
                exp[perm[v]] = val;
            }
            out.add_term(exp, c.clone());
        }
        out
    }
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: String = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(v, &p)| {
                    if p == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, p)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            if mono.is_empty() {
                write!(f, "{}", crate::rat::format_rational(c))?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", crate::rat::format_rational(c))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn arithmetic_and_cancellation() {
        let x = LaurentPoly::monomial(vec![1, 0], rat(1));
        let y = LaurentPoly::monomial(vec![0, 1], rat(1));
        let s = x.add(&y);
        assert_eq!(s.num_terms(), 2);
        assert!(s.sub(&s).is_zero());
        let p = s.mul(&s); // x^2 + 2xy + y^2
        assert_eq!(p.coefficient(&[1, 1]), rat(2));
    }

    #[test]
    fn binomial_and_substitution() {
        // (1 - x2/x1) vanishes under x1 := x2
        let one = LaurentPoly::one(2);
        let b = one.mul_binomial(&[-1, 1]);
        assert_eq!(b.num_terms(), 2);
        assert!(b.substitute(0, 1).is_zero());
        assert!(b.is_degree_zero());
    }

    #[test]
    fn permutation_of_variables() {
        let p = LaurentPoly::monomial(vec![2, -1, 0], rat(3));
        let q = p.permute_vars(&[2, 0, 1]);
        assert_eq!(q.coefficient(&[-1, 0, 2]), rat(3));
    }
}
