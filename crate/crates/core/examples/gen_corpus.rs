//! Regenerates the golden corpus JSON files under `corpus/`.
//!
//! Run from the workspace root: `cargo run -p gmat --example gen_corpus`.
//! Expected values are the closed-form/classification values that the
//! acceptance suite also pins in code; the files exist so the corpus can be
//! inspected, extended, and fed back through the CLI.

use std::fs;
use std::path::Path;

use gmat::corpus::{ExpectedFileJson, MatroidFileJson};
use gmat::invariants::GPolynomial;
use gmat::json::{GPolyJson, LiftJson, MatroidJson};
use gmat::matroid::{from_graph, from_matrix, subsets_of_size, uniform, wheel, whirl, FieldMatrix, Matroid};
use gmat::polytope::TropicalPlueckerVector;

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let corpus = root.join("corpus");
    fs::create_dir_all(corpus.join("matroids")).unwrap();
    fs::create_dir_all(corpus.join("expected")).unwrap();
    fs::create_dir_all(corpus.join("lifts")).unwrap();

    let gp = |pairs: &[(usize, i64)]| GPolynomial::from_coeffs(pairs);

    let entries: Vec<(&str, Matroid, Option<GPolynomial>, Option<u64>, &str)> = vec![
        (
            "u12",
            uniform(1, 2),
            Some(gp(&[(1, 1)])),
            Some(1),
            "two-element circuit; base case of the beta recurrence and g = t",
        ),
        (
            "u23",
            uniform(2, 3),
            Some(gp(&[(1, 1)])),
            Some(1),
            "series extension of u12; series-parallel, so g = t",
        ),
        (
            "u24",
            uniform(2, 4),
            Some(gp(&[(1, 2), (2, 1)])),
            Some(2),
            "uniform closed form; the unique 3-connected matroid with beta = 2 besides M(K4)",
        ),
        (
            "u25",
            uniform(2, 5),
            Some(gp(&[(1, 3), (2, 2)])),
            Some(3),
            "uniform closed form; beta = 3 classification row",
        ),
        (
            "u26",
            uniform(2, 6),
            Some(gp(&[(1, 4), (2, 3)])),
            Some(4),
            "uniform closed form; beta = 4 classification row",
        ),
        (
            "u36",
            uniform(3, 6),
            Some(gp(&[(1, 6), (2, 6), (3, 1)])),
            Some(6),
            "uniform closed form evaluated at d=3, n=6",
        ),
        (
            "u39",
            uniform(3, 9),
            Some(gp(&[(1, 21), (2, 30), (3, 10)])),
            Some(21),
            "uniform closed form evaluated at d=3, n=9; ambient total for the Pappus subdivision",
        ),
        (
            "wheel3",
            wheel(3),
            Some(gp(&[(1, 2), (2, 2), (3, 1)])),
            Some(2),
            "wheel closed form (1+t)^d - 1 - t - t^2 at d=3; equals the cycle matroid of K4",
        ),
        (
            "whirl3",
            whirl(3),
            Some(gp(&[(1, 3), (2, 3), (3, 1)])),
            Some(3),
            "whirl closed form (1+t)^d - 1 at d=3",
        ),
        (
            "wheel4",
            wheel(4),
            Some(gp(&[(1, 3), (2, 5), (3, 4), (4, 1)])),
            Some(3),
            "wheel closed form at d=4; also recomputable through the strong-map worked example",
        ),
        (
            "whirl4",
            whirl(4),
            Some(gp(&[(1, 4), (2, 6), (3, 4), (4, 1)])),
            Some(4),
            "whirl closed form at d=4; equals the column matroid of the rim matrix with alpha not 0 or 1",
        ),
        (
            "pappus",
            pappus(),
            Some(gp(&[(1, 12), (2, 21), (3, 10)])),
            Some(12),
            "g(U(3,9)) - 9t - 9t^2 via the indicator-lift subdivision; also the rank-3 flats formula",
        ),
        (
            "pappus-dual",
            pappus().dual(),
            Some(gp(&[(1, 12), (2, 21), (3, 10)])),
            Some(12),
            "duality invariance of g and beta applied to the Pappus matroid",
        ),
        (
            "fano",
            fano(),
            Some(gp(&[(1, 3), (2, 5), (3, 3)])),
            Some(3),
            "rank-3 flats formula: n=7 with seven 3-point lines; beta = 3 classification row",
        ),
        (
            "k4",
            from_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
            Some(gp(&[(1, 2), (2, 2), (3, 1)])),
            Some(2),
            "cycle matroid of the complete graph on 4 vertices; isomorphic to wheel3",
        ),
        (
            "sum-u12-u12",
            uniform(1, 2).direct_sum(&uniform(1, 2)).unwrap(),
            Some(gp(&[(2, 1)])),
            Some(0),
            "direct sum of two series-parallel matroids: g = t^2, beta = 0",
        ),
        (
            "twosum-u24-u24",
            uniform(2, 4).two_sum(3, &uniform(2, 4), 0).unwrap(),
            Some(gp(&[(1, 4), (2, 4), (3, 1)])),
            Some(4),
            "two-sum rule: g = (2t+t^2)^2 / t",
        ),
        (
            "pext-u23",
            uniform(2, 3).parallel_ext(0).unwrap(),
            Some(gp(&[(1, 1)])),
            Some(1),
            "parallel extension leaves g fixed; series-parallel, so g = t",
        ),
    ];

    for (name, matroid, g, beta, source) in &entries {
        let mfile = MatroidFileJson {
            name: name.to_string(),
            matroid: MatroidJson::from_matroid(matroid),
            source: source.to_string(),
        };
        write_json(&corpus.join("matroids").join(format!("{name}.json")), &mfile);
        let efile = ExpectedFileJson {
            name: name.to_string(),
            g: g.as_ref().map(GPolyJson::from_poly),
            beta: *beta,
            source: source.to_string(),
        };
        write_json(&corpus.join("expected").join(format!("{name}.json")), &efile);
    }

    // lifts: the zero lift, the octahedron split, and the Pappus indicator
    let zero24 = TropicalPlueckerVector::new(
        4,
        2,
        vec![gmat::rat::rat(0); 6],
    )
    .unwrap();
    write_json(&corpus.join("lifts").join("zero24.json"), &LiftJson::from_lift(&zero24));

    let split = TropicalPlueckerVector::from_pairs(
        4,
        2,
        &[
            (0b0011, gmat::rat::rat(1)),
            (0b1100, gmat::rat::rat(1)),
            (0b0101, gmat::rat::rat(0)),
            (0b0110, gmat::rat::rat(0)),
            (0b1001, gmat::rat::rat(0)),
            (0b1010, gmat::rat::rat(0)),
        ],
    )
    .unwrap();
    write_json(&corpus.join("lifts").join("split24.json"), &LiftJson::from_lift(&split));

    let pappus_lift = TropicalPlueckerVector::indicator(&pappus()).unwrap();
    write_json(
        &corpus.join("lifts").join("pappus-indicator.json"),
        &LiftJson::from_lift(&pappus_lift),
    );

    println!("wrote {} matroids + expected values and 3 lifts", entries.len());

    // keep the generator honest: the alpha-matrix really is the whirl
    let alpha = from_matrix(&FieldMatrix::Q(gmat::matroid::whirl_matrix(4, gmat::rat::rat(2)))).unwrap();
    assert!(alpha.is_isomorphic(&whirl(4), None).unwrap().is_some());
}

fn pappus() -> Matroid {
    let non_bases: [[usize; 3]; 9] = [
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
    Matroid::from_bases(9, 3, &bases).unwrap()
}

fn fano() -> Matroid {
    let rows = vec![
        vec![1, 0, 0, 1, 1, 0, 1],
        vec![0, 1, 0, 1, 0, 1, 1],
        vec![0, 0, 1, 0, 1, 1, 1],
    ];
    from_matrix(&FieldMatrix::Fp { p: 2, rows }).unwrap()
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) {
    let text = serde_json::to_string_pretty(value).unwrap();
    fs::write(path, text + "\n").unwrap();
}
