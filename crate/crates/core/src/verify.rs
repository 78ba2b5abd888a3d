//! The batch verification driver: nine acceptance criteria over the golden
//! corpus and seeded randomized sweeps. Reports are deterministic for a fixed
//! seed.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::Serialize;

use crate::corpus::CorpusEntry;
use crate::invariants::{
    beta, g_from_subdivision, g_rank3, g_sanity, g_uniform, is_series_parallel, tutte, GEngine,
    GPolynomial,
};
use crate::ktheory::{brion_check, check_gkm, check_valuative, localized_class, LaurentPoly};
use crate::matroid::{from_matrix, uniform, whirl, whirl_matrix, FieldMatrix, Matroid};
use crate::polytope::{
    is_tropical_pluecker, regular_subdivision, tropical_minors, TropicalPlueckerVector,
};
use crate::rat::rat;
use crate::rng::Rng;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub name: String,
    pub pass: bool,
    pub details: Vec<String>,
}

impl CriterionReport {
    fn new(id: usize, name: &str) -> Self {
        CriterionReport { id, name: name.to_string(), pass: true, details: Vec::new() }
    }

    fn fail(&mut self, msg: String) {
        self.pass = false;
        self.details.push(msg);
    }

    fn note(&mut self, msg: String) {
        self.details.push(msg);
    }
}

/// Runs all nine criteria. `seed` drives every randomized sweep.
pub fn run_all(corpus: &[CorpusEntry], seed: u64) -> Vec<CriterionReport> {
    vec![
        criterion_1_golden_g(corpus),
        criterion_2_uniform_cross_checks(),
        criterion_3_identity_suite(corpus, seed),
        criterion_4_multiplicativity(corpus, seed),
        criterion_5_subdivision_sweep(seed),
        criterion_6_pappus_end_to_end(corpus),
        criterion_7_ktheory_suite(corpus),
        criterion_8_valuativity(seed),
        criterion_9_beta_vs_tutte(corpus),
    ]
}

fn gp(pairs: &[(usize, i64)]) -> GPolynomial {
    GPolynomial::from_coeffs(pairs)
}

/// The pinned golden values.
fn golden_table() -> Vec<(&'static str, GPolynomial)> {
    vec![
        ("u24", gp(&[(1, 2), (2, 1)])),
        ("u25", gp(&[(1, 3), (2, 2)])),
        ("u26", gp(&[(1, 4), (2, 3)])),
        ("wheel3", gp(&[(1, 2), (2, 2), (3, 1)])),
        ("whirl3", gp(&[(1, 3), (2, 3), (3, 1)])),
        ("wheel4", gp(&[(1, 3), (2, 5), (3, 4), (4, 1)])),
        ("whirl4", gp(&[(1, 4), (2, 6), (3, 4), (4, 1)])),
        ("pappus", gp(&[(1, 12), (2, 21), (3, 10)])),
    ]
}

fn find<'a>(corpus: &'a [CorpusEntry], name: &str) -> Option<&'a CorpusEntry> {
    corpus.iter().find(|e| e.name == name)
}

pub fn criterion_1_golden_g(corpus: &[CorpusEntry]) -> CriterionReport {
    let mut r = CriterionReport::new(1, "golden g values match exactly");
    let mut eng = GEngine::new();
    for (name, pinned) in golden_table() {
        let Some(entry) = find(corpus, name) else {
            r.fail(format!("{name}: missing from corpus"));
            continue;
        };
        if entry.expected_g.as_ref() != Some(&pinned) {
            r.fail(format!(
                "{name}: corpus expectation {:?} disagrees with the pinned value {pinned}",
                entry.expected_g
            ));
        }
        match eng.g(&entry.matroid) {
            Ok(g) if g == pinned => r.note(format!("{name}: g = {g}")),
            Ok(g) => r.fail(format!("{name}: computed {g}, expected {pinned}")),
            Err(e) => r.fail(format!("{name}: {e}")),
        }
    }
    // the whirl-4 value again through its representing matrix with alpha = 2
    let alpha = from_matrix(&FieldMatrix::Q(whirl_matrix(4, rat(2)))).expect("nonzero matrix");
    match alpha.is_isomorphic(&whirl(4), None) {
        Ok(Some(_)) => r.note("alpha-matrix (alpha=2) is isomorphic to whirl4".into()),
        _ => r.fail("alpha-matrix (alpha=2) is not isomorphic to whirl4".into()),
    }
    match eng.g(&alpha) {
        Ok(g) if g == gp(&[(1, 4), (2, 6), (3, 4), (4, 1)]) => {}
        other => r.fail(format!("alpha-matrix g mismatch: {other:?}")),
    }
    r
}

pub fn criterion_2_uniform_cross_checks() -> CriterionReport {
    let mut r = CriterionReport::new(2, "g_uniform vs rank-3 closed form and subdivision additivity");
    for n in 4..=9 {
        let closed = g_uniform(3, n).expect("valid parameters");
        match g_rank3(&uniform(3, n)) {
            Ok(flats) if flats == closed => r.note(format!("U(3,{n}): {closed}")),
            Ok(flats) => r.fail(format!("U(3,{n}): flats formula {flats} != closed form {closed}")),
            Err(e) => r.fail(format!("U(3,{n}): {e}")),
        }
    }
    // the octahedron split: t + t + t^2 = g(U(2,4))
    match split_24() {
        Ok(sub) => {
            let mut eng = GEngine::new();
            let mut known = BTreeMap::new();
            let mut failed = false;
            for cell in &sub.interior_faces {
                let fm = cell.face_matroid(4, 2).expect("matroidal");
                match eng.g(&fm) {
                    Ok(g) => {
                        known.insert(fm, g);
                    }
                    Err(e) => {
                        r.fail(format!("octahedron split face: {e}"));
                        failed = true;
                    }
                }
            }
            if !failed {
                match g_from_subdivision(&sub, &known) {
                    Ok(solved) => {
                        let got = solved.get(&uniform(2, 4)).cloned();
                        if got == Some(gp(&[(1, 2), (2, 1)])) {
                            r.note("octahedron split: t + t + t^2 = 2t + t^2".into());
                        } else {
                            r.fail(format!("octahedron split solved to {got:?}"));
                        }
                    }
                    Err(e) => r.fail(format!("octahedron split: {e}")),
                }
            }
        }
        Err(e) => r.fail(format!("octahedron split subdivision: {e}")),
    }
    r
}

fn split_24() -> Result<crate::polytope::Subdivision, crate::polytope::PolytopeError> {
    let pairs: Vec<(u32, BigRational)> = vec![
        (0b0011, rat(1)),
        (0b1100, rat(1)),
        (0b0101, rat(0)),
        (0b0110, rat(0)),
        (0b1001, rat(0)),
        (0b1010, rat(0)),
    ];
    let lift = TropicalPlueckerVector::from_pairs(4, 2, &pairs)?;
    regular_subdivision(&lift)
}

pub fn criterion_3_identity_suite(corpus: &[CorpusEntry], seed: u64) -> CriterionReport {
    let mut r = CriterionReport::new(3, "identity suite on every computable corpus matroid");
    let mut eng = GEngine::new();
    let mut rng = Rng::new(seed ^ 0x3);
    let mut computable = 0usize;
    for entry in corpus {
        let m = &entry.matroid;
        let g = match eng.g(m) {
            Ok(g) => g,
            Err(_) => {
                r.note(format!("{}: not computable, skipped", entry.name));
                continue;
            }
        };
        computable += 1;
        let sanity = g_sanity(m, &g);
        if !sanity.all_pass() {
            for (name, ok, detail) in &sanity.checks {
                if !ok {
                    r.fail(format!("{}: {name} failed ({detail})", entry.name));
                }
            }
        }
        match eng.g(&m.dual()) {
            Ok(gd) if gd == g => {}
            other => r.fail(format!("{}: dual mismatch {other:?} vs {g}", entry.name)),
        }
        // five random series/parallel extensions, applied cumulatively
        let mut ext = m.clone();
        for step in 0..5 {
            if ext.n() >= crate::matroid::MAX_GROUND {
                break;
            }
            let e = rng.below(ext.n() as u64) as usize;
            ext = if rng.below(2) == 0 {
                ext.parallel_ext(e).expect("loopless")
            } else {
                ext.series_ext(e).expect("coloopless")
            };
            match eng.g(&ext) {
                Ok(ge) if ge == g => {}
                other => {
                    r.fail(format!(
                        "{}: extension step {step} changed g: {other:?} vs {g}",
                        entry.name
                    ));
                    break;
                }
            }
        }
    }
    r.note(format!("{computable} computable corpus matroids"));
    if computable < 15 {
        r.fail(format!("only {computable} computable corpus matroids; need at least 15"));
    }
    r
}

pub fn criterion_4_multiplicativity(corpus: &[CorpusEntry], seed: u64) -> CriterionReport {
    let mut r = CriterionReport::new(4, "g is multiplicative over direct sums and 2-sums");
    let pool: Vec<&CorpusEntry> = ["u12", "u23", "u24", "u25", "u26", "wheel3", "whirl3"]
        .iter()
        .filter_map(|name| find(corpus, name))
        .collect();
    if pool.len() < 4 {
        r.fail("corpus pool for random pairs is too small".into());
        return r;
    }
    let mut eng = GEngine::new();
    let mut rng = Rng::new(seed ^ 0x4);
    for trial in 0..20 {
        let a = pool[rng.below(pool.len() as u64) as usize];
        let b = pool[rng.below(pool.len() as u64) as usize];
        let (m1, m2) = (&a.matroid, &b.matroid);
        let (g1, g2) = (eng.g(m1).expect("pool computable"), eng.g(m2).expect("pool computable"));
        if m1.n() + m2.n() <= crate::matroid::MAX_GROUND {
            let sum = m1.direct_sum(m2).expect("fits");
            match eng.g(&sum) {
                Ok(gsum) if gsum == g1.mul(&g2) => {}
                other => r.fail(format!(
                    "trial {trial}: g({} + {}) = {other:?} != product",
                    a.name, b.name
                )),
            }
        }
        let e1 = rng.below(m1.n() as u64) as usize;
        let e2 = rng.below(m2.n() as u64) as usize;
        match m1.two_sum(e1, m2, e2) {
            Ok(ts) => match eng.g(&ts) {
                Ok(gts) if gts.mul(&GPolynomial::term(1, 1)) == g1.mul(&g2) => {}
                other => r.fail(format!(
                    "trial {trial}: t*g({} +2 {}) = {other:?} != product",
                    a.name, b.name
                )),
            },
            Err(e) => r.fail(format!("trial {trial}: two-sum failed: {e}")),
        }
    }
    r.note("20 random pairs checked for both operations".into());
    r
}

pub fn criterion_5_subdivision_sweep(seed: u64) -> CriterionReport {
    let mut r = CriterionReport::new(5, "200 random realizable lifts: matroidal, volume, dims, bounds");
    let mut rng = Rng::new(seed ^ 0x5);
    let shapes = [(2usize, 4usize), (2, 5), (2, 6), (3, 6)];
    let mut count = 0;
    for &(d, n) in &shapes {
        for _ in 0..50 {
            count += 1;
            let a: Vec<Vec<BigRational>> = (0..d)
                .map(|_| (0..n).map(|_| rat(rng.int_in(-9, 9))).collect())
                .collect();
            let lift = tropical_minors(&a).expect("valid shape");
            if is_tropical_pluecker(&lift).is_err() {
                r.fail(format!("({d},{n}) trial {count}: tropical minors lift failed the relations"));
                continue;
            }
            let sub = match regular_subdivision(&lift) {
                Ok(s) => s,
                Err(e) => {
                    r.fail(format!("({d},{n}) trial {count}: {e}"));
                    continue;
                }
            };
            if let Err(e) = sub.is_matroidal() {
                r.fail(format!("({d},{n}) trial {count}: {e}"));
                continue;
            }
            // interior_f_vector re-checks dim = n - components on every face
            if let Err(e) = sub.interior_f_vector() {
                r.fail(format!("({d},{n}) trial {count}: {e}"));
                continue;
            }
            match sub.check_fvector_bound() {
                Ok(report) => {
                    if !report.all_within {
                        r.fail(format!("({d},{n}) trial {count}: bound violated: {:?}", report.rows));
                    }
                    if report.all_facets_series_parallel != report.equality {
                        r.fail(format!(
                            "({d},{n}) trial {count}: equality {} but all-SP {}",
                            report.equality, report.all_facets_series_parallel
                        ));
                    }
                }
                Err(e) => r.fail(format!("({d},{n}) trial {count}: {e}")),
            }
        }
    }
    r.note(format!("{count} lifts checked"));
    r
}

pub fn criterion_6_pappus_end_to_end(corpus: &[CorpusEntry]) -> CriterionReport {
    let mut r = CriterionReport::new(6, "Pappus indicator lift end to end");
    let Some(entry) = find(corpus, "pappus") else {
        r.fail("pappus missing from corpus".into());
        return r;
    };
    let m = &entry.matroid;
    let lift = match TropicalPlueckerVector::indicator(m) {
        Ok(l) => l,
        Err(e) => {
            r.fail(format!("indicator lift: {e}"));
            return r;
        }
    };
    if is_tropical_pluecker(&lift).is_err() {
        r.fail("indicator lift fails the tropical Pluecker relations".into());
        return r;
    }
    let sub = match regular_subdivision(&lift) {
        Ok(s) => s,
        Err(e) => {
            r.fail(format!("subdivision: {e}"));
            return r;
        }
    };
    if sub.facets.len() != 10 {
        r.fail(format!("expected 10 facets, got {}", sub.facets.len()));
    }
    let expected_f: BTreeMap<usize, usize> = BTreeMap::from([(1, 10), (2, 9)]);
    if sub.f_vector != expected_f {
        r.fail(format!("interior f-vector {:?}, expected {{1:10, 2:9}}", sub.f_vector));
    }
    // solve for g(pappus) from the other interior faces
    let mut eng = GEngine::new();
    let mut known = BTreeMap::new();
    for cell in &sub.interior_faces {
        let fm = cell.face_matroid(sub.n, sub.d).expect("matroidal");
        if &fm == m {
            continue;
        }
        match eng.g(&fm) {
            Ok(g) => {
                known.insert(fm, g);
            }
            Err(e) => r.fail(format!("interior face not computable: {e}")),
        }
    }
    match g_from_subdivision(&sub, &known) {
        Ok(solved) => match solved.get(m) {
            Some(g) if *g == gp(&[(1, 12), (2, 21), (3, 10)]) => {
                r.note(format!("g(pappus) = {g} recovered from the subdivision"));
            }
            other => r.fail(format!("solved g(pappus) = {other:?}")),
        },
        Err(e) => r.fail(format!("additivity solve: {e}")),
    }
    r
}

pub fn criterion_7_ktheory_suite(corpus: &[CorpusEntry]) -> CriterionReport {
    let mut r = CriterionReport::new(7, "K-theory: Laurent, degree zero, GKM, pinned class, Brion");
    let mut checked = 0;
    for entry in corpus {
        let m = &entry.matroid;
        if m.n() > 6 {
            continue;
        }
        checked += 1;
        match localized_class(m) {
            Ok(class) => {
                for (&basis, poly) in &class.f {
                    if !poly.is_degree_zero() {
                        r.fail(format!("{}: basis {basis:b} not degree zero", entry.name));
                    }
                }
                if let Err(w) = check_gkm(&class) {
                    r.fail(format!(
                        "{}: GKM congruence fails at B={:?}, i={}, j={}",
                        entry.name, w.b, w.i, w.j
                    ));
                }
            }
            Err(e) => r.fail(format!("{}: {e}", entry.name)),
        }
    }
    r.note(format!("{checked} corpus matroids with n <= 6 checked"));
    // the pinned value: f_{12}(U(2,4)) = 1 - x3 x4 / (x1 x2)
    match localized_class(&uniform(2, 4)) {
        Ok(class) => {
            let expect = LaurentPoly::one(4)
                .sub(&LaurentPoly::monomial(vec![-1, -1, 1, 1], rat(1)));
            if class.f_at(0b0011) != expect {
                r.fail(format!("f_12(U(2,4)) = {}, expected {expect}", class.f_at(0b0011)));
            }
        }
        Err(e) => r.fail(format!("U(2,4) class: {e}")),
    }
    // Brion on small matroid polytopes
    let smalls = [
        uniform(1, 2),
        uniform(1, 3),
        uniform(2, 3),
        uniform(2, 4),
        uniform(1, 2).direct_sum(&uniform(1, 2)).expect("fits"),
        Matroid::from_bases(3, 2, &[0b011]).expect("valid"),
    ];
    let mut brion_ok = 0;
    for m in &smalls {
        match brion_check(m) {
            Ok(true) => brion_ok += 1,
            Ok(false) => r.fail(format!("Brion identity fails for {m:?}")),
            Err(e) => r.fail(format!("Brion check errored for {m:?}: {e}")),
        }
    }
    r.note(format!("Brion identity verified on {brion_ok} small polytopes"));
    if brion_ok < 5 {
        r.fail(format!("need at least 5 Brion cross-checks, got {brion_ok}"));
    }
    r
}

pub fn criterion_8_valuativity(seed: u64) -> CriterionReport {
    let mut r = CriterionReport::new(8, "valuativity at every fixed point, 50 random subdivisions");
    let mut rng = Rng::new(seed ^ 0x8);
    let shapes = [(2usize, 4usize), (2, 5), (3, 5)];
    let mut count = 0;
    'outer: for &(d, n) in &shapes {
        let per = if (d, n) == (3, 5) { 16 } else { 17 };
        for _ in 0..per {
            count += 1;
            let a: Vec<Vec<BigRational>> = (0..d)
                .map(|_| (0..n).map(|_| rat(rng.int_in(-5, 5))).collect())
                .collect();
            let lift = tropical_minors(&a).expect("valid shape");
            let sub = match regular_subdivision(&lift) {
                Ok(s) => s,
                Err(e) => {
                    r.fail(format!("({d},{n}) trial {count}: {e}"));
                    continue;
                }
            };
            match check_valuative(&sub, &uniform(d, n)) {
                Ok(report) if report.holds => {}
                Ok(report) => {
                    let failing: Vec<_> = report
                        .per_basis
                        .iter()
                        .filter(|(_, ok)| !ok)
                        .map(|(b, _)| b.clone())
                        .collect();
                    r.fail(format!(
                        "({d},{n}) trial {count}: fails at fixed points {failing:?}"
                    ));
                    if r.details.len() > 20 {
                        break 'outer;
                    }
                }
                Err(e) => r.fail(format!("({d},{n}) trial {count}: {e}")),
            }
        }
    }
    // and the octahedron split
    match split_24() {
        Ok(sub) => match check_valuative(&sub, &uniform(2, 4)) {
            Ok(report) if report.holds => r.note("octahedron split holds at all 6 fixed points".into()),
            Ok(_) => r.fail("octahedron split fails valuativity".into()),
            Err(e) => r.fail(format!("octahedron split: {e}")),
        },
        Err(e) => r.fail(format!("octahedron split: {e}")),
    }
    r.note(format!("{count} random subdivisions checked"));
    r
}

pub fn criterion_9_beta_vs_tutte(corpus: &[CorpusEntry]) -> CriterionReport {
    let mut r = CriterionReport::new(9, "beta equals the Tutte x-coefficient; positive when connected");
    for entry in corpus {
        let m = &entry.matroid;
        if m.n() < 2 {
            continue;
        }
        let b = match beta(m) {
            Ok(b) => b,
            Err(e) => {
                r.fail(format!("{}: {e}", entry.name));
                continue;
            }
        };
        if let Some(expected) = entry.expected_beta {
            if b != expected {
                r.fail(format!("{}: beta = {b}, corpus expects {expected}", entry.name));
            }
        }
        let t = tutte(m);
        if b != t.coefficient(1, 0) {
            r.fail(format!(
                "{}: beta = {b} but [x] tutte = {}",
                entry.name,
                t.coefficient(1, 0)
            ));
        }
        if m.is_connected() && b == 0 {
            r.fail(format!("{}: connected with beta = 0", entry.name));
        }
    }
    let sp_probe = uniform(2, 3).parallel_ext(0).expect("loopless");
    if !is_series_parallel(&sp_probe) {
        r.fail("series-parallel probe misclassified".into());
    }
    r
}
