//! The acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Run with `cargo test -p gmat --test acceptance -- --nocapture`.

use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::Instant;

use gmat::corpus::{load_corpus, CorpusEntry};
use gmat::verify::{
    criterion_1_golden_g, criterion_2_uniform_cross_checks, criterion_3_identity_suite,
    criterion_4_multiplicativity, criterion_5_subdivision_sweep, criterion_6_pappus_end_to_end,
    criterion_7_ktheory_suite, criterion_8_valuativity, criterion_9_beta_vs_tutte,
    CriterionReport,
};

const SEED: u64 = 0x5eed_2024;

fn corpus() -> &'static [CorpusEntry] {
    static CORPUS: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
        load_corpus(&dir).expect("corpus directory is part of the repository")
    })
}

fn finish(report: CriterionReport) {
    let verdict = if report.pass { "PASS" } else { "FAIL" };
    println!("criterion {}: {} - {}", report.id, verdict, report.name);
    for d in &report.details {
        println!("    {d}");
    }
    assert!(report.pass, "criterion {} failed: {:?}", report.id, report.details);
}

#[test]
fn criterion_1_golden_g_values() {
    // pin the golden values here as well, independent of the corpus files
    use gmat::invariants::{g_invariant, GPolynomial};
    let pin = |name: &str, coeffs: &[(usize, i64)]| {
        let entry = corpus().iter().find(|e| e.name == name).expect("corpus entry");
        let g = g_invariant(&entry.matroid).expect("computable");
        assert_eq!(g, GPolynomial::from_coeffs(coeffs), "{name}");
    };
    pin("u24", &[(1, 2), (2, 1)]);
    pin("u25", &[(1, 3), (2, 2)]);
    pin("u26", &[(1, 4), (2, 3)]);
    pin("wheel3", &[(1, 2), (2, 2), (3, 1)]);
    pin("whirl3", &[(1, 3), (2, 3), (3, 1)]);
    pin("wheel4", &[(1, 3), (2, 5), (3, 4), (4, 1)]);
    pin("whirl4", &[(1, 4), (2, 6), (3, 4), (4, 1)]);
    pin("pappus", &[(1, 12), (2, 21), (3, 10)]);
    finish(criterion_1_golden_g(corpus()));
}

#[test]
fn criterion_2_uniform_agreements() {
    finish(criterion_2_uniform_cross_checks());
}

#[test]
fn criterion_3_identities() {
    finish(criterion_3_identity_suite(corpus(), SEED));
}

#[test]
fn criterion_4_multiplicativity_of_g() {
    finish(criterion_4_multiplicativity(corpus(), SEED));
}

#[test]
fn criterion_5_subdivision_engine_sweep() {
    finish(criterion_5_subdivision_sweep(SEED));
}

#[test]
fn criterion_6_pappus_end_to_end_under_five_minutes() {
    let start = Instant::now();
    let report = criterion_6_pappus_end_to_end(corpus());
    let elapsed = start.elapsed();
    println!("    pappus end-to-end took {elapsed:.2?}");
    assert!(
        elapsed.as_secs() < 300,
        "pappus run exceeded five minutes: {elapsed:?}"
    );
    finish(report);
}

#[test]
fn criterion_7_ktheory() {
    finish(criterion_7_ktheory_suite(corpus()));
}

#[test]
fn criterion_8_valuativity_sweep() {
    finish(criterion_8_valuativity(SEED));
}

#[test]
fn criterion_9_beta_recurrence_vs_tutte() {
    finish(criterion_9_beta_vs_tutte(corpus()));
}

#[test]
fn reports_are_deterministic_for_a_fixed_seed() {
    let a = criterion_4_multiplicativity(corpus(), 99);
    let b = criterion_4_multiplicativity(corpus(), 99);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let a = criterion_8_valuativity(7);
    let b = criterion_8_valuativity(7);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn tampered_corpus_is_detected_by_name() {
    // flip one expected value; exactly the affected criterion rows fail
    let mut corpus: Vec<CorpusEntry> = corpus().to_vec();
    let idx = corpus.iter().position(|e| e.name == "u25").unwrap();
    corpus[idx].expected_g = Some(gmat::invariants::GPolynomial::from_coeffs(&[(1, 99)]));
    let report = criterion_1_golden_g(&corpus);
    assert!(!report.pass);
    assert!(report.details.iter().any(|d| d.contains("u25")));
    let clean: Vec<CorpusEntry> = self::corpus().to_vec();
    assert!(criterion_1_golden_g(&clean).pass);
}
