//! The g-polynomial: closed forms, reduction pipeline and subdivision
//! additivity.
//!
//! The engine shrinks a matroid by series/parallel reduction, splits along
//! connected components (g multiplies) and 2-separations (g multiplies and
//! divides by t), then applies closed forms: series-parallel, uniform, wheel,
//! whirl, rank 3 (or corank 3 through the dual). As a last resort it
//! subdivides the hypersimplex along the indicator lift of the matroid and
//! solves for the one unknown interior face. When nothing applies the result
//! is `NotComputable` — g has no known general algorithm, and the engine
//! never guesses.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::tutte::{beta, is_series_parallel};
use super::{GError, GPolynomial};
use crate::matroid::{binomial, Matroid};
use crate::polytope::{is_tropical_pluecker, regular_subdivision, Subdivision, TropicalPlueckerVector};

/// `g_{U(d,n)} = sum_i (n-i-1)! / ((d-i)! (n-d-i)! (i-1)!) t^i`,
/// summed over `1 <= i <= min(d, n-d)`.
pub fn g_uniform(d: usize, n: usize) -> Result<GPolynomial, GError> {
    if d == 0 || d >= n {
        return Err(GError::PreconditionViolated(format!(
            "uniform closed form needs 1 <= d <= n-1, got ({d},{n})"
        )));
    }
    let fact = |k: usize| -> u128 { (1..=k as u128).product::<u128>().max(1) };
    let mut g = GPolynomial::zero();
    for i in 1..=d.min(n - d) {
        let num = fact(n - i - 1);
        let den = fact(d - i) * fact(n - d - i) * fact(i - 1);
        g.add_term(i, (num / den) as i64);
    }
    Ok(g)
}

/// `g` of the rank-d wheel: `(1+t)^d - 1 - t - t^2`.
pub fn g_wheel(d: usize) -> Result<GPolynomial, GError> {
    if d < 2 {
        return Err(GError::PreconditionViolated("wheels need rank >= 2".into()));
    }
    let mut g = binomial_poly(d);
    g.add_term(1, -1);
    g.add_term(2, -1);
    Ok(g)
}

/// `g` of the rank-d whirl: `(1+t)^d - 1`.
pub fn g_whirl(d: usize) -> Result<GPolynomial, GError> {
    if d < 2 {
        return Err(GError::PreconditionViolated("whirls need rank >= 2".into()));
    }
    Ok(binomial_poly(d))
}

/// `(1+t)^d - 1`.
fn binomial_poly(d: usize) -> GPolynomial {
    let mut g = GPolynomial::zero();
    for i in 1..=d {
        g.add_term(i, binomial(d, i) as i64);
    }
    g
}

/// The rank-3 closed form from the sizes `d_1..d_r` of the rank-2 flats:
/// requires a simple, connected rank-3 matroid.
pub fn g_rank3(m: &Matroid) -> Result<GPolynomial, GError> {
    if m.rank() != 3 {
        return Err(GError::PreconditionViolated("rank must be 3".into()));
    }
    if m.loops() != 0 {
        return Err(GError::PreconditionViolated("matroid has loops".into()));
    }
    if (0..m.n()).any(|i| (i + 1..m.n()).any(|j| m.are_parallel(i, j))) {
        return Err(GError::PreconditionViolated("matroid has parallel pairs".into()));
    }
    if !m.is_connected() {
        return Err(GError::PreconditionViolated("matroid is disconnected".into()));
    }
    let n = m.n();
    let line_sizes = rank2_flat_sizes(m)?;
    let c2 = |k: i64| if k >= 2 { k * (k - 1) / 2 } else { 0 };
    let ni = n as i64;
    let mut t1 = c2(ni - 2);
    let mut t2 = (ni - 3) * (ni - 4);
    let mut t3 = c2(ni - 4);
    for &s in &line_sizes {
        let s = s as i64;
        t1 -= c2(s - 1);
        t2 -= (s - 2) * (s - 2);
        t3 -= c2(s - 2);
    }
    if t1 < 0 || t2 < 0 || t3 < 0 {
        return Err(GError::InconsistentSum(format!(
            "rank-3 closed form went negative: ({t1}, {t2}, {t3})"
        )));
    }
    Ok(GPolynomial::from_coeffs(&[(1, t1), (2, t2), (3, t3)]))
}

/// Sizes of the rank-2 flats (closures of pairs). Validates that every pair
/// lies in exactly one flat: `sum C(d_i, 2) = C(n, 2)`.
fn rank2_flat_sizes(m: &Matroid) -> Result<Vec<usize>, GError> {
    let n = m.n();
    let mut flats: HashSet<u32> = HashSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let pair = 1u32 << i | 1 << j;
            let mut flat = pair;
            for k in 0..n {
                if k != i && k != j && m.rank_of(pair | 1 << k) == 2 {
                    flat |= 1 << k;
                }
            }
            flats.insert(flat);
        }
    }
    let sizes: Vec<usize> = flats.iter().map(|f| f.count_ones() as usize).collect();
    let covered: u64 = sizes.iter().map(|&s| binomial(s, 2)).sum();
    if covered != binomial(n, 2) {
        return Err(GError::FlatCountMismatch);
    }
    Ok(sizes)
}

/// One-shot computation of `g`; use [`GEngine`] to share work across calls.
pub fn g_invariant(m: &Matroid) -> Result<GPolynomial, GError> {
    GEngine::new().g(m)
}

/// The reduction engine with a memo table keyed on the labeled matroid.
///
/// The table is confined to one engine value, so concurrent callers each use
/// their own engine (all inputs are immutable).
pub struct GEngine {
    memo: HashMap<Matroid, GPolynomial>,
    in_progress: HashSet<Matroid>,
    /// Ground-set cap for the hypersimplex-subdivision fallback.
    pub fallback_cap: usize,
}

impl Default for GEngine {
    fn default() -> Self {
        GEngine::new()
    }
}

impl GEngine {
    pub fn new() -> Self {
        GEngine {
            memo: HashMap::new(),
            in_progress: HashSet::new(),
            fallback_cap: 9,
        }
    }

    pub fn g(&mut self, m: &Matroid) -> Result<GPolynomial, GError> {
        if m.loops() != 0 || m.coloops() != 0 {
            return Err(GError::CoordinateSubgrassmannian);
        }
        if let Some(g) = self.memo.get(m) {
            return Ok(g.clone());
        }
        if !self.in_progress.insert(m.clone()) {
            return Err(GError::NotComputable(
                "subdivision recursion revisited the same matroid".into(),
            ));
        }
        let result = self.compute(m);
        self.in_progress.remove(m);
        if let Ok(g) = &result {
            self.memo.insert(m.clone(), g.clone());
        }
        result
    }

    fn compute(&mut self, m: &Matroid) -> Result<GPolynomial, GError> {
        // (1) series/parallel classes do not change g
        let reduced = super::tutte::sp_reduce(m);
        if reduced.n() < m.n() {
            return self.g(&reduced);
        }
        // (2) components multiply
        let parts = m.components();
        if parts.num_components() > 1 {
            let mut acc: Option<GPolynomial> = None;
            for &block in &parts.blocks {
                let factor = self.g(&m.component_factor(block))?;
                acc = Some(match acc {
                    None => factor,
                    Some(a) => a.mul(&factor),
                });
            }
            return Ok(acc.expect("at least one component"));
        }
        // connected and fully series/parallel reduced from here on
        if m.n() == 2 {
            return Ok(GPolynomial::term(1, 1)); // U(1,2)
        }
        if is_series_parallel(m) {
            return Ok(GPolynomial::term(1, 1));
        }
        // (3) split along a 2-separation: g(M1 +2 M2) = g(M1) g(M2) / t
        let seps = m.two_separations().map_err(GError::Matroid)?;
        for a in seps {
            if let Some((m1, m2)) = m.split_two_sum(a) {
                let g1 = self.g(&m1)?;
                let g2 = self.g(&m2)?;
                return g1.mul(&g2).div_t();
            }
        }
        // (4) closed forms for the 3-connected base cases
        if m.is_uniform() {
            return g_uniform(m.rank(), m.n());
        }
        if m.n() == 2 * m.rank() && m.n() <= 10 {
            let d = m.rank();
            if m.is_isomorphic(&crate::matroid::wheel(d), None).ok().flatten().is_some() {
                return g_wheel(d);
            }
            if m.is_isomorphic(&crate::matroid::whirl(d), None).ok().flatten().is_some() {
                return g_whirl(d);
            }
        }
        if m.rank() == 3 {
            return g_rank3(m);
        }
        if m.corank() == 3 {
            return g_rank3(&m.dual()); // g is dual-invariant
        }
        // (5) last resort: indicator-lift subdivision of the hypersimplex
        self.fallback(m)
    }

    /// Subdivide `Delta(d,n)` along the indicator lift of `m`; if every other
    /// interior face has computable g, additivity determines `g(m)`.
    fn fallback(&mut self, m: &Matroid) -> Result<GPolynomial, GError> {
        if m.n() > self.fallback_cap {
            return Err(GError::NotComputable(format!(
                "no closed form applies and n={} exceeds the subdivision fallback cap {}",
                m.n(),
                self.fallback_cap
            )));
        }
        let lift = TropicalPlueckerVector::indicator(m)?;
        if is_tropical_pluecker(&lift).is_err() {
            return Err(GError::NotComputable(
                "indicator lift is not a tropical Pluecker vector".into(),
            ));
        }
        let sub = regular_subdivision(&lift)?;
        if sub.is_matroidal().is_err() {
            return Err(GError::NotComputable("indicator subdivision is not matroidal".into()));
        }
        let mut known: BTreeMap<Matroid, GPolynomial> = BTreeMap::new();
        let mut found_self = false;
        for cell in &sub.interior_faces {
            let fm = cell
                .face_matroid(sub.n, sub.d)
                .map_err(GError::Matroid)?;
            if &fm == m {
                found_self = true;
                continue;
            }
            let g = self.g(&fm).map_err(|e| match e {
                GError::NotComputable(msg) => GError::NotComputable(format!(
                    "interior face {:?} is not computable: {msg}",
                    cell.vertex_subsets()
                )),
                other => other,
            })?;
            known.insert(fm, g);
        }
        if !found_self {
            return Err(GError::NotComputable(
                "matroid polytope is not a facet of its indicator subdivision".into(),
            ));
        }
        let solved = g_from_subdivision(&sub, &known)?;
        solved
            .get(m)
            .cloned()
            .ok_or_else(|| GError::NotComputable("additivity did not determine the matroid".into()))
    }
}

/// Subdivision additivity: `g(ambient) = sum over interior faces of g(face)`.
///
/// Faces are resolved from `known` (with uniform matroids always known).
/// With no unknowns the identity is verified; with exactly one unknown it is
/// solved by subtraction. The returned map carries every face (and the
/// ambient matroid) to its g-polynomial.
pub fn g_from_subdivision(
    sub: &Subdivision,
    known: &BTreeMap<Matroid, GPolynomial>,
) -> Result<BTreeMap<Matroid, GPolynomial>, GError> {
    sub.is_matroidal().map_err(GError::Polytope)?;
    let resolve = |m: &Matroid| -> Option<GPolynomial> {
        if let Some(g) = known.get(m) {
            return Some(g.clone());
        }
        if m.is_uniform() && m.rank() >= 1 && m.rank() < m.n() {
            return g_uniform(m.rank(), m.n()).ok();
        }
        None
    };
    let ambient = sub.ambient_matroid().map_err(GError::Matroid)?;
    let ambient_g = resolve(&ambient);

    let mut face_gs: BTreeMap<Matroid, Option<GPolynomial>> = BTreeMap::new();
    for cell in &sub.interior_faces {
        let fm = cell.face_matroid(sub.n, sub.d).map_err(GError::Matroid)?;
        let g = resolve(&fm);
        face_gs.insert(fm, g);
    }
    let unknown_faces: Vec<Matroid> = face_gs
        .iter()
        .filter(|(_, g)| g.is_none())
        .map(|(m, _)| m.clone())
        .collect();
    let unknowns = unknown_faces.len() + usize::from(ambient_g.is_none());
    if unknowns > 1 {
        return Err(GError::TooManyUnknowns(unknowns));
    }

    let sum_known: GPolynomial = face_gs
        .values()
        .flatten()
        .fold(GPolynomial::zero(), |acc, g| acc.add(g));

    let mut out: BTreeMap<Matroid, GPolynomial> = face_gs
        .iter()
        .filter_map(|(m, g)| g.clone().map(|g| (m.clone(), g)))
        .collect();
    match (ambient_g, unknown_faces.first()) {
        (Some(total), None) => {
            if total != sum_known {
                return Err(GError::InconsistentSum(format!(
                    "interior faces sum to {sum_known}, ambient g is {total}"
                )));
            }
            out.insert(ambient, total);
        }
        (Some(total), Some(face)) => {
            let g = total.sub(&sum_known);
            if !g.has_nonnegative_coeffs() || g.is_zero() {
                return Err(GError::InconsistentSum(format!(
                    "solved face value {g} is not a valid g-polynomial"
                )));
            }
            out.insert(face.clone(), g);
            out.insert(ambient, total);
        }
        (None, None) => {
            out.insert(ambient, sum_known);
        }
        (None, Some(_)) => return Err(GError::TooManyUnknowns(2)),
    }
    Ok(out)
}

/// The sanity checks every computed g-polynomial must pass.
#[derive(Debug, Clone)]
pub struct SanityReport {
    /// `(check name, passed, detail)`.
    pub checks: Vec<(&'static str, bool, String)>,
}

impl SanityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok, _)| *ok)
    }
}

/// Checks `g(-1) = (-1)^c`, `[t] g = beta`, the degree bound, nonnegativity,
/// and that `t^c` exactly divides with positive leading block coefficient.
pub fn g_sanity(m: &Matroid, g: &GPolynomial) -> SanityReport {
    let c = m.components().num_components();
    let mut checks = Vec::new();

    let val = g.eval(-1);
    let expect = if c % 2 == 0 { 1 } else { -1 };
    checks.push((
        "value_at_minus_one",
        val == expect,
        format!("g(-1) = {val}, (-1)^c = {expect}"),
    ));

    match beta(m) {
        Ok(b) => {
            let t1 = g.coefficient(1);
            checks.push((
                "t_coefficient_is_beta",
                t1 == b as i64,
                format!("[t] g = {t1}, beta = {b}"),
            ));
        }
        Err(_) => checks.push(("t_coefficient_is_beta", false, "ground set too small".into())),
    }

    let bound = m.rank().min(m.n() - m.rank());
    checks.push((
        "degree_bound",
        g.degree() <= bound,
        format!("deg g = {}, min(d, n-d) = {bound}", g.degree()),
    ));

    checks.push((
        "nonnegative_coefficients",
        g.has_nonnegative_coeffs(),
        format!("{g}"),
    ));

    let tc_positive = g.coefficient(c) > 0;
    let divisible = g.valuation() >= c && !g.is_zero();
    checks.push((
        "t_to_the_c_divides_with_positive_coefficient",
        tc_positive && divisible,
        format!("valuation {}, [t^{c}] g = {}", g.valuation(), g.coefficient(c)),
    ));

    SanityReport { checks }
}
