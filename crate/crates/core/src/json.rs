//! JSON surfaces for every type the CLI and demo exchange.
//!
//! Ground sets are 1-indexed on the wire and 0-indexed internally; rationals
//! travel as strings `"a"` or `"a/b"` in lowest terms so nothing ever hits
//! floating point.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::invariants::{GPolynomial, TuttePolynomial};
use crate::ktheory::{EquivariantClass, LaurentPoly};
use crate::matroid::{bits, mask_of, Field, FieldMatrix, Matroid, MatroidError};
use crate::polytope::{
    BoundReport, Cell, PolytopeError, Subdivision, TropicalPlueckerVector,
};
use crate::rat::{format_rational, parse_rational, RatParseError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("element {0} out of range for ground set of size {1}")]
    ElementRange(usize, usize),
    #[error("unknown field `{0}`; expected \"Q\" or \"GF(p)\" with p in 2,3,5,7")]
    UnknownField(String),
    #[error(transparent)]
    Rational(#[from] RatParseError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Serde(#[from] serde_json::Error),
}

/// `{"n":4,"rank":2,"bases":[[1,2],[1,3],...]}`
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatroidJson {
    pub n: usize,
    pub rank: usize,
    pub bases: Vec<Vec<usize>>,
}

impl MatroidJson {
    pub fn from_matroid(m: &Matroid) -> Self {
        MatroidJson {
            n: m.n(),
            rank: m.rank(),
            bases: m
                .bases()
                .iter()
                .map(|&b| bits(b).map(|e| e + 1).collect())
                .collect(),
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid, JsonError> {
        let masks = one_indexed_masks(&self.bases, self.n)?;
        Ok(Matroid::from_bases(self.n, self.rank, &masks)?)
    }
}

fn one_indexed_masks(subsets: &[Vec<usize>], n: usize) -> Result<Vec<u32>, JsonError> {
    subsets
        .iter()
        .map(|s| {
            let zero_based: Result<Vec<usize>, JsonError> = s
                .iter()
                .map(|&e| {
                    if e == 0 || e > n {
                        Err(JsonError::ElementRange(e, n))
                    } else {
                        Ok(e - 1)
                    }
                })
                .collect();
            Ok(mask_of(&zero_based?))
        })
        .collect()
}

/// `{"field":"Q"|"GF(p)","rows":[["1","0","1/2"],...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub field: String,
    pub rows: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<FieldMatrix, JsonError> {
        let field = parse_field(&self.field)?;
        Ok(FieldMatrix::parse(field, &self.rows)?)
    }
}

fn parse_field(s: &str) -> Result<Field, JsonError> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(Field::Q);
    }
    if let Some(inner) = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
    {
        if let Ok(p) = inner.trim().parse::<u32>() {
            return Ok(Field::Fp(p));
        }
    }
    Err(JsonError::UnknownField(s.to_string()))
}

/// `{"vertices":4,"edges":[[1,2],...]}` with 1-indexed vertices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn to_matroid(&self) -> Result<Matroid, JsonError> {
        let edges: Result<Vec<(usize, usize)>, JsonError> = self
            .edges
            .iter()
            .map(|&[u, v]| {
                if u == 0 || v == 0 || u > self.vertices || v > self.vertices {
                    Err(JsonError::ElementRange(u.max(v), self.vertices))
                } else {
                    Ok((u - 1, v - 1))
                }
            })
            .collect();
        Ok(crate::matroid::from_graph(self.vertices, &edges?)?)
    }
}

/// `{"n":4,"d":2,"values":[{"I":[1,2],"p":"1"},...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LiftJson {
    pub n: usize,
    pub d: usize,
    pub values: Vec<LiftValueJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LiftValueJson {
    #[serde(rename = "I")]
    pub subset: Vec<usize>,
    pub p: String,
}

impl LiftJson {
    pub fn from_lift(lift: &TropicalPlueckerVector) -> Self {
        LiftJson {
            n: lift.n(),
            d: lift.d(),
            values: lift
                .subsets()
                .iter()
                .zip(lift.values())
                .map(|(&mask, v)| LiftValueJson {
                    subset: bits(mask).map(|e| e + 1).collect(),
                    p: format_rational(v),
                })
                .collect(),
        }
    }

    pub fn to_lift(&self) -> Result<TropicalPlueckerVector, JsonError> {
        let mut pairs = Vec::with_capacity(self.values.len());
        for entry in &self.values {
            let masks = one_indexed_masks(std::slice::from_ref(&entry.subset), self.n)?;
            pairs.push((masks[0], parse_rational(&entry.p)?));
        }
        Ok(TropicalPlueckerVector::from_pairs(self.n, self.d, &pairs)?)
    }
}

/// `{"t":[["1",12],["2",21],["3",10]]}`
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GPolyJson {
    pub t: Vec<(String, i64)>,
}

impl GPolyJson {
    pub fn from_poly(g: &GPolynomial) -> Self {
        GPolyJson {
            t: g.iter().map(|(i, c)| (i.to_string(), c)).collect(),
        }
    }

    pub fn to_poly(&self) -> Result<GPolynomial, JsonError> {
        let mut g = GPolynomial::zero();
        for (exp, c) in &self.t {
            let i: usize = exp
                .parse()
                .map_err(|_| JsonError::UnknownField(format!("exponent `{exp}`")))?;
            g.add_term(i, *c);
        }
        Ok(g)
    }
}

/// `{"xy":[[[1,0],1],...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TutteJson {
    pub xy: Vec<([usize; 2], u64)>,
}

impl TutteJson {
    pub fn from_poly(t: &TuttePolynomial) -> Self {
        TutteJson {
            xy: t.iter().map(|((i, j), c)| ([i, j], c)).collect(),
        }
    }
}

/// `{"n":4,"d":2,"fI":[{"I":[1,2],"terms":[{"exp":[...],"c":"1"},...]},...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassJson {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "fI")]
    pub f_i: Vec<ClassEntryJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassEntryJson {
    #[serde(rename = "I")]
    pub basis: Vec<usize>,
    pub terms: Vec<ClassTermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassTermJson {
    pub exp: Vec<i32>,
    pub c: String,
}

impl ClassJson {
    pub fn from_class(class: &EquivariantClass) -> Self {
        ClassJson {
            n: class.n,
            d: class.d,
            f_i: class
                .f
                .iter()
                .map(|(&basis, poly)| ClassEntryJson {
                    basis: bits(basis).map(|e| e + 1).collect(),
                    terms: laurent_terms(poly),
                })
                .collect(),
        }
    }
}

fn laurent_terms(p: &LaurentPoly) -> Vec<ClassTermJson> {
    p.terms()
        .map(|(e, c)| ClassTermJson {
            exp: e.clone(),
            c: format_rational(c),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellJson {
    pub vertices: Vec<Vec<usize>>,
    pub dim: usize,
    /// Number of connected components when the face is matroidal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    pub matroidal: bool,
}

impl CellJson {
    pub fn from_cell(cell: &Cell, n: usize, d: usize) -> Self {
        let matroid = cell.face_matroid(n, d).ok();
        CellJson {
            vertices: cell.vertex_subsets(),
            dim: cell.dim,
            components: matroid.as_ref().map(|m| m.components().num_components()),
            matroidal: matroid.is_some(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FacetJson {
    pub vertices: Vec<Vec<usize>>,
    pub lambda: Vec<String>,
    pub offset: String,
    pub matroidal: bool,
    pub series_parallel: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundRowJson {
    pub c: usize,
    pub f_c: usize,
    pub bound: u64,
    pub within: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReportJson {
    pub rows: Vec<BoundRowJson>,
    pub all_within: bool,
    pub equality: bool,
    pub all_facets_series_parallel: bool,
}

impl BoundReportJson {
    pub fn from_report(r: &BoundReport) -> Self {
        BoundReportJson {
            rows: r
                .rows
                .iter()
                .map(|&(c, f_c, bound, within)| BoundRowJson { c, f_c, bound, within })
                .collect(),
            all_within: r.all_within,
            equality: r.equality,
            all_facets_series_parallel: r.all_facets_series_parallel,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubdivisionJson {
    pub n: usize,
    pub d: usize,
    pub matroidal: bool,
    pub facets: Vec<FacetJson>,
    pub interior_faces: Vec<CellJson>,
    /// `[c, count]` pairs.
    pub f_vector: Vec<(usize, usize)>,
    pub volume: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_report: Option<BoundReportJson>,
}

impl SubdivisionJson {
    pub fn from_subdivision(s: &Subdivision, with_bounds: bool) -> Self {
        let matroidal = s.is_matroidal().is_ok();
        let bound_report = if with_bounds && matroidal {
            s.check_fvector_bound().ok().map(|r| BoundReportJson::from_report(&r))
        } else {
            None
        };
        SubdivisionJson {
            n: s.n,
            d: s.d,
            matroidal,
            facets: s
                .facets
                .iter()
                .map(|f| {
                    let m = f.cell.face_matroid(s.n, s.d).ok();
                    FacetJson {
                        vertices: f.cell.vertex_subsets(),
                        lambda: f.lambda.iter().map(format_rational).collect(),
                        offset: format_rational(&f.offset),
                        matroidal: m.is_some(),
                        series_parallel: m
                            .map(|m| crate::invariants::is_series_parallel(&m))
                            .unwrap_or(false),
                    }
                })
                .collect(),
            interior_faces: s
                .interior_faces
                .iter()
                .map(|c| CellJson::from_cell(c, s.n, s.d))
                .collect(),
            f_vector: s.f_vector.iter().map(|(&c, &k)| (c, k)).collect(),
            volume: s.volume.to_string(),
            bound_report,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::uniform;

    #[test]
    fn matroid_roundtrip() {
        let m = uniform(2, 4);
        let j = MatroidJson::from_matroid(&m);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"n":4,"rank":2,"bases":[[1,2],[1,3],[2,3],[1,4],[2,4],[3,4]]}"#);
        let back: MatroidJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_matroid().unwrap(), m);
    }

    #[test]
    fn gpoly_json_shape() {
        let g = GPolynomial::from_coeffs(&[(1, 12), (2, 21), (3, 10)]);
        let j = GPolyJson::from_poly(&g);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"t":[["1",12],["2",21],["3",10]]}"#);
        assert_eq!(serde_json::from_str::<GPolyJson>(&text).unwrap().to_poly().unwrap(), g);
    }

    #[test]
    fn lift_roundtrip() {
        use crate::rat::rat;
        let lift = TropicalPlueckerVector::new(4, 2, vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(1)]).unwrap();
        let j = LiftJson::from_lift(&lift);
        let text = serde_json::to_string(&j).unwrap();
        let back: LiftJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_lift().unwrap(), lift);
    }

    #[test]
    fn field_strings() {
        assert!(matches!(parse_field("Q"), Ok(Field::Q)));
        assert!(matches!(parse_field("GF(2)"), Ok(Field::Fp(2))));
        assert!(matches!(parse_field("GF(7)"), Ok(Field::Fp(7))));
        assert!(parse_field("R").is_err());
    }

    #[test]
    fn one_indexing_is_enforced() {
        let j = MatroidJson { n: 3, rank: 1, bases: vec![vec![0]] };
        assert!(j.to_matroid().is_err());
        let j = MatroidJson { n: 3, rank: 1, bases: vec![vec![4]] };
        assert!(j.to_matroid().is_err());
    }
}
