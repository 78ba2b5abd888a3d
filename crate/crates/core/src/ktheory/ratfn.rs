//! Rational functions with denominators kept factored as binomials `1 - x^b`.
//!
//! Denominator vectors are canonicalized (first nonzero entry positive, so
//! `1 - x^b` and `1 - x^-b` merge up to a monomial unit) and cancellation is
//! by exact division attempts against the numerator.

use num_rational::BigRational;
use num_traits::One;

use super::laurent::LaurentPoly;

#[derive(Debug, Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    /// Multiset of canonical binomial exponents, sorted.
    den: Vec<Vec<i32>>,
}

impl RationalFn {
    pub fn from_poly(num: LaurentPoly) -> Self {
        RationalFn { num, den: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        RationalFn::from_poly(LaurentPoly::one(nvars))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[Vec<i32>] {
        &self.den
    }

    /// The underlying Laurent polynomial, when the denominator has fully
    /// cancelled.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den.is_empty() || self.num.is_zero() {
            if self.num.is_zero() {
                return Some(&self.num);
            }
            Some(&self.num)
        } else {
            None
        }
    }

    /// Divides by `1 - x^b` (appending a denominator factor).
    pub fn div_binomial(&mut self, b: &[i32]) {
        let (canon, flip) = canonical(b);
        if flip {
            // 1/(1 - x^b) = -x^(-b) / (1 - x^(-b))
            let minus_one = -BigRational::one();
            self.num = self.num.mul_monomial(&canon, &minus_one);
        }
        self.den.push(canon);
        self.den.sort();
    }

    /// Multiplies by `1 - x^b`, cancelling against the denominator when the
    /// factor is present.
    pub fn mul_binomial(&mut self, b: &[i32]) {
        let (canon, flip) = canonical(b);
        if let Ok(pos) = self.den.binary_search(&canon) {
            self.den.remove(pos);
            if flip {
                // (1 - x^b) = -x^b (1 - x^(-b)) with canon = -b
                let neg: Vec<i32> = canon.iter().map(|x| -x).collect();
                let minus_one = -BigRational::one();
                self.num = self.num.mul_monomial(&neg, &minus_one);
            }
        } else {
            self.num = self.num.mul_binomial(b);
        }
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        // common denominator: multiset maximum
        let common = multiset_max(&self.den, &other.den);
        let extra_self = multiset_diff(&common, &self.den);
        let extra_other = multiset_diff(&common, &other.den);
        let mut a = self.num.clone();
        for b in &extra_self {
            a = a.mul_binomial(b);
        }
        let mut o = other.num.clone();
        for b in &extra_other {
            o = o.mul_binomial(b);
        }
        let mut out = RationalFn { num: a.add(&o), den: common };
        out.reduce();
        out
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        let mut neg = other.clone();
        neg.num = neg.num.neg();
        self.add(&neg)
    }

    pub fn mul_poly(&mut self, p: &LaurentPoly) {
        self.num = self.num.mul(p);
        self.reduce();
    }

    /// Cancels denominator binomials that divide the numerator exactly.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        loop {
            let mut progress = false;
            let mut i = 0;
            while i < self.den.len() {
                let b = self.den[i].clone();
                if let Some(q) = exact_div_binomial(&self.num, &b) {
                    self.num = q;
                    self.den.remove(i);
                    progress = true;
                    if self.num.is_zero() {
                        self.den.clear();
                        return;
                    }
                } else {
                    i += 1;
                }
            }
            if !progress {
                return;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Structural equality as rational functions.
    pub fn equal(&self, other: &RationalFn) -> bool {
        self.sub(other).is_zero()
    }
}

/// Canonical form of a binomial exponent: first nonzero entry positive.
/// Returns `(canonical, flipped)`.
fn canonical(b: &[i32]) -> (Vec<i32>, bool) {
    let first = b.iter().find(|&&x| x != 0);
    match first {
        Some(&x) if x < 0 => (b.iter().map(|v| -v).collect(), true),
        _ => (b.to_vec(), false),
    }
}

fn multiset_max(a: &[Vec<i32>], b: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = Vec::new();
    let count = |xs: &[Vec<i32>], v: &Vec<i32>| xs.iter().filter(|x| *x == v).count();
    let mut keys: Vec<Vec<i32>> = a.iter().chain(b.iter()).cloned().collect();
    keys.sort();
    keys.dedup();
    for k in keys {
        let m = count(a, &k).max(count(b, &k));
        for _ in 0..m {
            out.push(k.clone());
        }
    }
    out
}

fn multiset_diff(big: &[Vec<i32>], small: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = Vec::new();
    let mut small_left: Vec<&Vec<i32>> = small.iter().collect();
    for k in big {
        if let Some(pos) = small_left.iter().position(|x| *x == k) {
            small_left.remove(pos);
        } else {
            out.push(k.clone());
        }
    }
    out
}

/// Exact division of `p` by `1 - x^b`, or `None` if it does not divide.
///
/// Terms are peeled in increasing order of the linear functional `<b, .>`
/// (ties by lexicographic exponent): the smallest term of `q (1 - x^b)` on
/// that order is the smallest term of `q`, so the quotient can be read off
/// bottom-up.
pub fn exact_div_binomial(p: &LaurentPoly, b: &[i32]) -> Option<LaurentPoly> {
    if p.is_zero() {
        return Some(LaurentPoly::zero(p.nvars()));
    }
    let phi = |e: &[i32]| -> i64 { e.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum() };
    let phi_b: i64 = b.iter().map(|&y| (y as i64) * (y as i64)).sum();
    debug_assert!(phi_b > 0, "zero binomial exponent");
    let max_phi = p.terms().map(|(e, _)| phi(e)).max().unwrap();
    let mut rem = p.clone();
    let mut q = LaurentPoly::zero(p.nvars());
    while !rem.is_zero() {
        // smallest remaining term in (phi, lex) order
        let (e, c) = rem
            .terms()
            .min_by(|(e1, _), (e2, _)| phi(e1).cmp(&phi(e2)).then_with(|| e1.cmp(e2)))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        if phi(&e) + phi_b > max_phi {
            return None; // quotient term would overshoot the numerator
        }
        q.add_term(e.clone(), c.clone());
        rem.add_term(e.clone(), -c.clone());
        let shifted: Vec<i32> = e.iter().zip(b).map(|(x, y)| x + y).collect();
        rem.add_term(shifted, c);
    }
    Some(q)
}
