//! Independent oracles for the geometry and matroid layers: results that the
//! library computes one way are recomputed here by a different route and
//! compared exactly.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use gmat::linalg::{affine_rank, echelon, QVec};
use gmat::matroid::{bits, from_matrix, subsets_of_size, uniform, FieldMatrix, Matroid};
use gmat::polytope::lp::{simplex, LpStatus};
use gmat::polytope::{is_tropical_pluecker, regular_subdivision, TropicalPlueckerVector};
use gmat::rat::rat;
use gmat::rng::Rng;

/// Brute-force lower-hull oracle: a vertex subset is a maximal cell iff some
/// functional is tight exactly there (checked by LP with a strictness margin)
/// and the subset is full-dimensional.
fn brute_force_facets(lift: &TropicalPlueckerVector) -> Vec<Vec<u32>> {
    let n = lift.n();
    let verts = lift.subsets().to_vec();
    let pts: Vec<Vec<i64>> = verts
        .iter()
        .map(|&m| (0..n).map(|j| (m >> j & 1) as i64).collect())
        .collect();
    let nv = verts.len();
    let mut out = Vec::new();
    for set in 1u32..(1 << nv) {
        let members: Vec<usize> = (0..nv).filter(|&i| set >> i & 1 == 1).collect();
        let member_pts: Vec<Vec<i64>> = members.iter().map(|&i| pts[i].clone()).collect();
        if affine_rank(&member_pts) != n {
            continue; // not full-dimensional
        }
        if cell_certificate(lift, &verts, &pts, set) {
            out.push(members.iter().map(|&i| verts[i]).collect());
        }
    }
    out.sort();
    out
}

/// LP certificate: maximize the margin eps subject to
/// `lambda . a_I + c = P_I` on the set and `<= P_K - eps` off it.
fn cell_certificate(
    lift: &TropicalPlueckerVector,
    verts: &[u32],
    pts: &[Vec<i64>],
    set: u32,
) -> bool {
    let n = lift.n();
    // columns: lambda+ (n), lambda- (n), c+ , c-, eps, slacks (one per off vertex)
    let off: Vec<usize> = (0..verts.len()).filter(|&i| set >> i & 1 == 0).collect();
    let ncols = 2 * n + 3 + off.len() + 1; // + eps cap slack
    let mut rows: Vec<QVec> = Vec::new();
    let mut rhs: Vec<BigRational> = Vec::new();
    let fill = |i: usize, eps_coeff: i64, slack: Option<usize>| -> QVec {
        let mut row = vec![BigRational::zero(); ncols];
        for j in 0..n {
            let v = BigRational::from_integer(pts[i][j].into());
            row[j] = v.clone();
            row[n + j] = -v;
        }
        row[2 * n] = BigRational::one();
        row[2 * n + 1] = -BigRational::one();
        row[2 * n + 2] = BigRational::from_integer(eps_coeff.into());
        if let Some(s) = slack {
            row[2 * n + 3 + s] = BigRational::one();
        }
        row
    };
    for i in 0..verts.len() {
        if set >> i & 1 == 1 {
            rows.push(fill(i, 0, None));
            rhs.push(lift.values()[i].clone());
        }
    }
    for (s, &i) in off.iter().enumerate() {
        rows.push(fill(i, 1, Some(s)));
        rhs.push(lift.values()[i].clone());
    }
    // eps <= 1
    let mut cap = vec![BigRational::zero(); ncols];
    cap[2 * n + 2] = BigRational::one();
    cap[ncols - 1] = BigRational::one();
    rows.push(cap);
    rhs.push(BigRational::one());
    let mut cost = vec![BigRational::zero(); ncols];
    cost[2 * n + 2] = -BigRational::one(); // maximize eps
    let sol = simplex(&rows, &rhs, &cost);
    sol.status == LpStatus::Optimal && sol.objective.is_negative()
}

#[test]
fn bfs_facets_match_brute_force_on_small_lifts() {
    let mut rng = Rng::new(1234);
    // the named split, the zero lift, and ten random integer lifts
    let mut lifts: Vec<TropicalPlueckerVector> = vec![
        TropicalPlueckerVector::new(4, 2, vec![rat(0); 6]).unwrap(),
        TropicalPlueckerVector::new(4, 2, vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(1)]).unwrap(),
    ];
    for _ in 0..10 {
        let values: Vec<BigRational> = (0..6).map(|_| rat(rng.int_in(-3, 3))).collect();
        lifts.push(TropicalPlueckerVector::new(4, 2, values).unwrap());
    }
    for lift in &lifts {
        let sub = regular_subdivision(lift).expect("volume certificate");
        let mut got: Vec<Vec<u32>> = sub.facets.iter().map(|f| f.cell.vertices.clone()).collect();
        got.sort();
        let expected = brute_force_facets(lift);
        assert_eq!(got, expected, "lift {:?}", lift.values());
    }
}

#[test]
fn tropical_pluecker_iff_matroidal() {
    let mut rng = Rng::new(777);
    let shapes = [(2usize, 4usize), (2, 5), (2, 6), (3, 6)];
    let mut both_seen = [0usize; 2];
    for &(d, n) in &shapes {
        let count = subsets_of_size(n, d).len();
        for _ in 0..50 {
            let values: Vec<BigRational> = (0..count).map(|_| rat(rng.int_in(0, 2))).collect();
            let lift = TropicalPlueckerVector::new(n, d, values).unwrap();
            let tropical = is_tropical_pluecker(&lift).is_ok();
            let sub = regular_subdivision(&lift).expect("volume certificate");
            let matroidal = sub.is_matroidal().is_ok();
            assert_eq!(tropical, matroidal, "({d},{n}) lift {:?}", lift.values());
            both_seen[usize::from(tropical)] += 1;
        }
    }
    // the sweep must exercise both sides of the equivalence
    assert!(both_seen[0] > 0, "no non-tropical lift sampled");
    assert!(both_seen[1] > 0, "no tropical lift sampled");
}

/// The linear two-sum: project `(L1 + L2) ∩ {z_e1 = alpha z_e2}` away from
/// the glued coordinates and take the column matroid.
fn linear_two_sum(
    a1: &[Vec<BigRational>],
    e1: usize,
    a2: &[Vec<BigRational>],
    e2: usize,
    alpha: i64,
) -> Option<Matroid> {
    let (d1, n1) = (a1.len(), a1[0].len());
    let (d2, n2) = (a2.len(), a2[0].len());
    // rows of the direct sum
    let mut rows: Vec<QVec> = Vec::new();
    for r in a1 {
        let mut row = r.clone();
        row.extend(std::iter::repeat(BigRational::zero()).take(n2));
        rows.push(row);
    }
    for r in a2 {
        let mut row: QVec = std::iter::repeat(BigRational::zero()).take(n1).collect();
        row.extend(r.iter().cloned());
        rows.push(row);
    }
    // solve sum c_i rows_i in the hyperplane z_e1 = alpha * z_(n1+e2)
    let constraint: QVec = rows
        .iter()
        .map(|row| &row[e1] - rat(alpha) * &row[n1 + e2])
        .collect();
    // nullspace of one linear functional on coefficient space
    let mut basis: Vec<QVec> = Vec::new();
    let k = d1 + d2;
    let pivot = (0..k).find(|&i| !constraint[i].is_zero());
    match pivot {
        None => return None, // hyperplane contains everything; degenerate
        Some(p) => {
            for i in 0..k {
                if i == p {
                    continue;
                }
                // c = e_i - (constraint_i / constraint_p) e_p
                let mut vec = vec![BigRational::zero(); n1 + n2];
                for j in 0..n1 + n2 {
                    vec[j] = &rows[i][j] - &constraint[i] / &constraint[p] * &rows[p][j];
                }
                basis.push(vec);
            }
        }
    }
    // project away the glued coordinates e1 and n1+e2
    let projected: Vec<QVec> = basis
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != e1 && j != n1 + e2)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect();
    let mut probe = projected.clone();
    if echelon(&mut probe).len() != d1 + d2 - 1 {
        return None; // degenerate intersection; caller resamples
    }
    from_matrix(&FieldMatrix::Q(projected)).ok()
}

#[test]
fn two_sum_basis_rule_matches_linear_construction() {
    let mut rng = Rng::new(42);
    let mut done = 0;
    while done < 20 {
        let (d1, n1) = (2usize, 2 + rng.below(3) as usize);
        let (d2, n2) = (2usize, 2 + rng.below(3) as usize);
        let sample = |rng: &mut Rng, d: usize, n: usize| -> Vec<Vec<BigRational>> {
            (0..d)
                .map(|_| (0..n).map(|_| rat(rng.int_in(-4, 4))).collect())
                .collect()
        };
        let a1 = sample(&mut rng, d1, n1);
        let a2 = sample(&mut rng, d2, n2);
        let (Ok(m1), Ok(m2)) = (
            from_matrix(&FieldMatrix::Q(a1.clone())),
            from_matrix(&FieldMatrix::Q(a2.clone())),
        ) else {
            continue;
        };
        if m1.rank() != d1 || m2.rank() != d2 {
            continue; // rank dropped; resample
        }
        let e1 = rng.below(n1 as u64) as usize;
        let e2 = rng.below(n2 as u64) as usize;
        if m1.is_loop(e1) || m1.is_coloop(e1) || m2.is_loop(e2) || m2.is_coloop(e2) {
            continue;
        }
        let Some(linear) = linear_two_sum(&a1, e1, &a2, e2, 2) else {
            continue;
        };
        let rule = m1.two_sum(e1, &m2, e2).expect("terminals are not degenerate");
        assert_eq!(rule, linear, "m1={m1:?} e1={e1} m2={m2:?} e2={e2}");
        done += 1;
    }
}

#[test]
fn interiority_matches_the_loop_coloop_criterion() {
    // a face of a hypersimplex subdivision is interior iff its vertex-set
    // system has no loops and no coloops
    let mut rng = Rng::new(31);
    for trial in 0..12 {
        let (d, n) = *rng.choose(&[(2usize, 4usize), (2, 5), (3, 6)]);
        let count = subsets_of_size(n, d).len();
        let values: Vec<BigRational> = (0..count).map(|_| rat(rng.int_in(0, 3))).collect();
        let lift = TropicalPlueckerVector::new(n, d, values).unwrap();
        let sub = regular_subdivision(&lift).unwrap();
        let interior: std::collections::BTreeSet<Vec<u32>> = sub
            .interior_faces
            .iter()
            .map(|c| c.vertices.clone())
            .collect();
        let ground = (1u32 << n) - 1;
        for face in &sub.all_faces {
            let union = face.iter().fold(0u32, |a, &b| a | b);
            let inter = face.iter().fold(ground, |a, &b| a & b);
            let loopfree_coloopfree = union == ground && inter == 0;
            assert_eq!(
                interior.contains(face),
                loopfree_coloopfree,
                "trial {trial} ({d},{n}): face {face:?}"
            );
        }
    }
}

#[test]
fn two_sum_duality_oracle() {
    // (M1 +2 M2)* = M1* +2 M2* at the same terminals
    let mut rng = Rng::new(4242);
    let pool = [uniform(2, 4), uniform(2, 5), uniform(1, 2), uniform(2, 3)];
    for _ in 0..20 {
        let m1 = rng.choose(&pool).clone();
        let m2 = rng.choose(&pool).clone();
        let e1 = rng.below(m1.n() as u64) as usize;
        let e2 = rng.below(m2.n() as u64) as usize;
        let lhs = m1.two_sum(e1, &m2, e2).unwrap().dual();
        let rhs = m1.dual().two_sum(e1, &m2.dual(), e2).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn rank_superadditivity_over_complements() {
    // r(A) + r(E\A) >= r(E) for every subset
    for m in [
        uniform(2, 5),
        gmat::matroid::wheel(3),
        uniform(2, 4).two_sum(3, &uniform(2, 4), 0).unwrap(),
    ] {
        let full = m.ground_mask();
        for a in 0..=full {
            assert!(m.rank_of(a) + m.rank_of(full & !a) >= m.rank());
        }
    }
}

#[test]
fn components_factor_the_bases() {
    // bases of a direct sum are exactly the products over component blocks
    let m = uniform(2, 4)
        .direct_sum(&uniform(1, 3))
        .unwrap()
        .direct_sum(&uniform(1, 2))
        .unwrap();
    let parts = m.components();
    assert_eq!(parts.num_components(), 3);
    let mut product = 1usize;
    for &b in &parts.blocks {
        product *= m.component_factor(b).num_bases();
    }
    assert_eq!(product, m.num_bases());
    // and every basis restricts to a basis of each factor
    for &basis in m.bases() {
        for (&block, &rk) in parts.blocks.iter().zip(&parts.ranks) {
            assert_eq!((basis & block).count_ones() as usize, rk);
        }
    }
}

#[test]
fn whirl_counts_against_wheels() {
    for d in 2..=5 {
        let w = gmat::matroid::wheel(d);
        let wh = gmat::matroid::whirl(d);
        assert_eq!(wh.num_bases(), w.num_bases() + 1);
        // the extra basis is the outer rim
        let rim: u32 = ((1u32 << d) - 1) << d;
        assert!(wh.is_basis(rim) && !w.is_basis(rim));
    }
}

#[test]
fn series_and_parallel_preserve_g_on_random_elements() {
    use gmat::invariants::GEngine;
    let mut rng = Rng::new(2025);
    let mut eng = GEngine::new();
    for m in [uniform(2, 4), uniform(2, 5), gmat::matroid::wheel(3)] {
        let g = eng.g(&m).unwrap();
        for _ in 0..5 {
            let e = rng.below(m.n() as u64) as usize;
            assert_eq!(eng.g(&m.parallel_ext(e).unwrap()).unwrap(), g);
            assert_eq!(eng.g(&m.series_ext(e).unwrap()).unwrap(), g);
        }
    }
}

#[test]
fn delete_contract_give_valid_minors_on_wheel() {
    let w = gmat::matroid::wheel(3);
    for e in 0..w.n() {
        let (c, _) = w.contract(e).unwrap();
        let (d, _) = w.delete(e).unwrap();
        assert!(c.check_exchange().is_ok());
        assert!(d.check_exchange().is_ok());
        assert_eq!(c.rank() + 1, w.rank());
        assert_eq!(d.rank(), w.rank());
    }
}

#[test]
fn bits_roundtrip() {
    for mask in [0u32, 0b1, 0b1010, 0b111111] {
        let elems: Vec<usize> = bits(mask).collect();
        let back: u32 = elems.iter().map(|&e| 1u32 << e).sum();
        assert_eq!(back, mask);
    }
}
