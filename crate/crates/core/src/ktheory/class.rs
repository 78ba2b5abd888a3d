//! Localized equivariant K-classes of matroids and their checks.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::cone::{cone_hilbert_series, tangent_cone_generators};
use super::{EquivariantClass, KError, LaurentPoly};
use crate::matroid::{bits, subsets_of_size, Matroid};
use crate::polytope::Subdivision;

/// The localized class: at each basis `I`,
/// `f_I = h_I * prod_{i in I, j not in I} (1 - x_j/x_i)`
/// where `h_I` is the Hilbert series of the tangent cone. Every `f_I` must
/// cancel to a Laurent polynomial; anything else is a bug trap.
pub fn localized_class(m: &Matroid) -> Result<EquivariantClass, KError> {
    let n = m.n();
    let mut f = BTreeMap::new();
    for &basis in m.bases() {
        let gens = tangent_cone_generators(m, basis)?;
        let mut h = cone_hilbert_series(n, &gens)?;
        for i in bits(basis) {
            for j in 0..n {
                if basis >> j & 1 == 1 {
                    continue;
                }
                let mut b = vec![0i32; n];
                b[i] = -1;
                b[j] = 1;
                h.mul_binomial(&b);
            }
        }
        let poly = h
            .as_poly()
            .ok_or_else(|| KError::NotLaurent(bits(basis).map(|e| e + 1).collect()))?
            .clone();
        debug_assert!(poly.is_degree_zero());
        f.insert(basis, poly);
    }
    Ok(EquivariantClass { n, d: m.rank(), f })
}

/// A failing GKM congruence: `f_{B+i}` and `f_{B+j}` differ after the
/// substitution `x_i := x_j`.
#[derive(Debug, Clone)]
pub struct GkmWitness {
    pub b: Vec<usize>,
    pub i: usize,
    pub j: usize,
    pub difference: LaurentPoly,
}

/// Checks every GKM congruence
/// `f_{B+i} = f_{B+j} mod (1 - x_i/x_j)` by substituting `x_i := x_j`.
pub fn check_gkm(class: &EquivariantClass) -> Result<(), Box<GkmWitness>> {
    let n = class.n;
    let d = class.d;
    if d == 0 {
        return Ok(());
    }
    for b in subsets_of_size(n, d - 1) {
        for i in 0..n {
            if b >> i & 1 == 1 {
                continue;
            }
            for j in i + 1..n {
                if b >> j & 1 == 1 {
                    continue;
                }
                let fi = class.f_at(b | 1 << i);
                let fj = class.f_at(b | 1 << j);
                let diff = fi.sub(&fj).substitute(i, j);
                if !diff.is_zero() {
                    return Err(Box::new(GkmWitness {
                        b: bits(b).map(|e| e + 1).collect(),
                        i: i + 1,
                        j: j + 1,
                        difference: diff,
                    }));
                }
            }
        }
    }
    Ok(())
}

/// Per-fixed-point result of the valuativity identity.
#[derive(Debug, Clone)]
pub struct ValuativeReport {
    /// `(basis of the ambient matroid, identity holds there)`.
    pub per_basis: Vec<(Vec<usize>, bool)>,
    pub holds: bool,
}

/// Tests, fixed point by fixed point, whether the localized class of `m`
/// equals the inclusion-exclusion sum `sum_F (-1)^{components(F)-1} f(F)`
/// over the interior faces of a matroidal subdivision of `Poly_m`.
///
/// The identity is a theorem non-equivariantly; this equivariant refinement
/// is measured and reported, never assumed.
pub fn check_valuative(sub: &Subdivision, m: &Matroid) -> Result<ValuativeReport, KError> {
    if m.loops() != 0 || m.coloops() != 0 {
        return Err(KError::Precondition("matroid has loops or coloops".into()));
    }
    if !m.is_connected() {
        return Err(KError::Precondition("matroid is disconnected".into()));
    }
    if sub.ambient_matroid().as_ref() != Ok(m) {
        return Err(KError::Precondition(
            "subdivision does not subdivide the matroid polytope".into(),
        ));
    }
    sub.is_matroidal()
        .map_err(|_| KError::Precondition("subdivision is not matroidal".into()))?;

    let lhs = localized_class(m)?;
    // localized classes of the interior faces, with signs
    let mut pieces: Vec<(i32, EquivariantClass)> = Vec::new();
    for cell in &sub.interior_faces {
        let fm = cell
            .face_matroid(sub.n, sub.d)
            .map_err(|_| KError::Precondition("face is not matroidal".into()))?;
        let c = fm.components().num_components();
        let sign = if (c - 1) % 2 == 0 { 1 } else { -1 };
        pieces.push((sign, localized_class(&fm)?));
    }

    let mut per_basis = Vec::new();
    let mut holds = true;
    for &basis in m.bases() {
        let mut rhs = LaurentPoly::zero(m.n());
        for (sign, piece) in &pieces {
            let term = piece.f_at(basis);
            rhs = if *sign > 0 { rhs.add(&term) } else { rhs.sub(&term) };
        }
        let ok = rhs == lhs.f_at(basis);
        holds &= ok;
        per_basis.push((bits(basis).map(|e| e + 1).collect(), ok));
    }
    Ok(ValuativeReport { per_basis, holds })
}

/// Brion: the (finite) lattice-point sum of `Poly_m` equals the sum over its
/// vertices of the translated tangent-cone series, as rational functions.
/// The lattice points of a matroid polytope are exactly its vertices.
pub fn brion_check(m: &Matroid) -> Result<bool, KError> {
    use super::ratfn::RationalFn;
    let n = m.n();
    let mut lhs_poly = LaurentPoly::zero(n);
    for &b in m.bases() {
        lhs_poly.add_term(indicator_exp(b, n), BigRational::one());
    }
    let lhs = RationalFn::from_poly(lhs_poly);
    let mut rhs: Option<RationalFn> = None;
    for &b in m.bases() {
        let gens = tangent_cone_generators(m, b)?;
        let mut piece = cone_hilbert_series(n, &gens)?;
        piece.mul_poly(&LaurentPoly::monomial(indicator_exp(b, n), BigRational::one()));
        rhs = Some(match rhs {
            None => piece,
            Some(r) => r.add(&piece),
        });
    }
    Ok(lhs.equal(&rhs.expect("bases are nonempty")))
}

fn indicator_exp(mask: u32, n: usize) -> Vec<i32> {
    (0..n).map(|i| (mask >> i & 1) as i32).collect()
}

impl EquivariantClass {
    /// `f_I`, with non-bases mapped to zero.
    pub fn f_at(&self, basis: u32) -> LaurentPoly {
        self.f
            .get(&basis)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.n))
    }

    /// Ground-set relabeling: permutes both the index set and the variables.
    pub fn relabel(&self, perm: &[usize]) -> EquivariantClass {
        let f = self
            .f
            .iter()
            .map(|(&b, poly)| {
                let nb: u32 = bits(b).map(|e| 1u32 << perm[e]).sum();
                (nb, poly.permute_vars(perm))
            })
            .collect();
        EquivariantClass { n: self.n, d: self.d, f }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::uniform;
    use crate::rat::rat;
    use crate::rng::Rng;

    #[test]
    fn u12_class_is_all_ones() {
        let class = localized_class(&uniform(1, 2)).unwrap();
        assert_eq!(class.f_at(0b01), LaurentPoly::one(2));
        assert_eq!(class.f_at(0b10), LaurentPoly::one(2));
        assert!(check_gkm(&class).is_ok());
    }

    #[test]
    fn single_basis_class_is_the_full_product() {
        let m = Matroid::from_bases(3, 2, &[0b011]).unwrap();
        let class = localized_class(&m).unwrap();
        // empty cone: f = prod over (i in I, j outside) of (1 - xj/xi)
        let mut expect = LaurentPoly::one(3);
        expect = expect.mul_binomial(&[-1, 0, 1]);
        expect = expect.mul_binomial(&[0, -1, 1]);
        assert_eq!(class.f_at(0b011), expect);
        assert!(check_gkm(&class).is_ok());
    }

    #[test]
    fn u24_class_matches_paper_value() {
        let class = localized_class(&uniform(2, 4)).unwrap();
        let expect = LaurentPoly::one(4).sub(&LaurentPoly::monomial(vec![-1, -1, 1, 1], rat(1)));
        assert_eq!(class.f_at(0b0011), expect);
        assert!(check_gkm(&class).is_ok());
        // degree zero everywhere
        for &b in uniform(2, 4).bases() {
            assert!(class.f_at(b).is_degree_zero());
        }
    }

    #[test]
    fn perturbed_class_fails_gkm() {
        let mut class = localized_class(&uniform(2, 4)).unwrap();
        let f12 = class.f.get_mut(&0b0011).unwrap();
        *f12 = f12.add(&LaurentPoly::one(4));
        let w = check_gkm(&class).unwrap_err();
        assert!(!w.difference.is_zero());
    }

    #[test]
    fn equivariance_under_relabeling() {
        let mut rng = Rng::new(5);
        let m = uniform(2, 4);
        let class = localized_class(&m).unwrap();
        for _ in 0..5 {
            // random permutation of 4 elements
            let mut perm: Vec<usize> = (0..4).collect();
            for i in (1..4).rev() {
                let j = rng.below((i + 1) as u64) as usize;
                perm.swap(i, j);
            }
            let relabeled = m.relabel(&perm);
            let direct = localized_class(&relabeled).unwrap();
            let pushed = class.relabel(&perm);
            assert_eq!(direct.f, pushed.f);
        }
    }

    #[test]
    fn dual_negates_tangent_cones() {
        let m = uniform(2, 4);
        let dual = m.dual();
        for &b in m.bases() {
            let comp = m.ground_mask() & !b;
            let gens = tangent_cone_generators(&m, b).unwrap();
            let dgens = tangent_cone_generators(&dual, comp).unwrap();
            let negated: std::collections::BTreeSet<Vec<i32>> =
                gens.iter().map(|g| g.iter().map(|&x| -x).collect()).collect();
            let dset: std::collections::BTreeSet<Vec<i32>> = dgens.into_iter().collect();
            assert_eq!(negated, dset);
        }
    }

    #[test]
    fn brion_on_small_polytopes() {
        for m in [
            uniform(1, 2),
            uniform(1, 3),
            uniform(2, 3),
            uniform(2, 4),
            Matroid::from_bases(3, 2, &[0b011]).unwrap(),
            uniform(1, 2).direct_sum(&uniform(1, 2)).unwrap(),
        ] {
            assert!(brion_check(&m).unwrap(), "{m:?}");
        }
    }

    #[test]
    fn valuativity_on_the_octahedron_split() {
        use crate::polytope::{regular_subdivision, TropicalPlueckerVector};
        let pairs: Vec<(u32, num_rational::BigRational)> = vec![
            (0b0011, rat(1)),
            (0b1100, rat(1)),
            (0b0101, rat(0)),
            (0b0110, rat(0)),
            (0b1001, rat(0)),
            (0b1010, rat(0)),
        ];
        let lift = TropicalPlueckerVector::from_pairs(4, 2, &pairs).unwrap();
        let sub = regular_subdivision(&lift).unwrap();
        let m = uniform(2, 4);
        let report = check_valuative(&sub, &m).unwrap();
        assert!(report.holds, "{report:?}");
        assert_eq!(report.per_basis.len(), 6);
    }

    #[test]
    fn valuativity_trivial_subdivision() {
        use crate::polytope::trivial_subdivision;
        let m = uniform(2, 4).two_sum(3, &uniform(2, 4), 0).unwrap();
        let sub = trivial_subdivision(&m).unwrap();
        let report = check_valuative(&sub, &m).unwrap();
        assert!(report.holds);
    }
}
