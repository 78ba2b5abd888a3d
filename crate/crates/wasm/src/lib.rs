//! JSON-in/JSON-out bindings for the browser demo page.
//!
//! Build with `wasm-pack build crates/wasm --target web` and open
//! `crates/wasm/www/index.html`. Every function takes a JSON string and
//! returns a JSON string; failures come back as `{"error": "..."}` so the
//! page never has to catch exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use gmat::invariants::{beta, g_sanity, tutte, GEngine};
use gmat::json::{ClassJson, GPolyJson, GraphJson, LiftJson, MatrixJson, MatroidJson, SubdivisionJson, TutteJson};
use gmat::ktheory::{check_gkm, localized_class};
use gmat::matroid::{from_matrix, Matroid};
use gmat::polytope::{is_tropical_pluecker, regular_subdivision};

fn parse_matroid(text: &str) -> Result<Matroid, String> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if let Some(inner) = value.get("matroid") {
        value = inner.clone();
    }
    let obj = value.as_object().ok_or("expected a JSON object")?;
    if obj.contains_key("bases") {
        serde_json::from_value::<MatroidJson>(value.clone())
            .map_err(|e| e.to_string())?
            .to_matroid()
            .map_err(|e| e.to_string())
    } else if obj.contains_key("rows") {
        let m = serde_json::from_value::<MatrixJson>(value.clone())
            .map_err(|e| e.to_string())?
            .to_matrix()
            .map_err(|e| e.to_string())?;
        from_matrix(&m).map_err(|e| e.to_string())
    } else if obj.contains_key("edges") {
        serde_json::from_value::<GraphJson>(value.clone())
            .map_err(|e| e.to_string())?
            .to_matroid()
            .map_err(|e| e.to_string())
    } else {
        Err("expected keys `bases`, `rows`, or `edges`".into())
    }
}

fn err(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

/// g-polynomial, beta, Tutte polynomial and structural facts of a matroid
/// given as matroid/matrix/graph JSON.
#[wasm_bindgen]
pub fn invariants(matroid_json: &str) -> String {
    let m = match parse_matroid(matroid_json) {
        Ok(m) => m,
        Err(e) => return err(e),
    };
    let mut out = json!({
        "n": m.n(),
        "rank": m.rank(),
        "bases": m.num_bases(),
        "connected": m.is_connected(),
        "components": m.components().num_components(),
        "tutte": TutteJson::from_poly(&tutte(&m)),
        "tutte_pretty": tutte(&m).to_string(),
    });
    let obj = out.as_object_mut().expect("object");
    if let Ok(b) = beta(&m) {
        obj.insert("beta".into(), json!(b));
    }
    let mut eng = GEngine::new();
    match eng.g(&m) {
        Ok(g) => {
            obj.insert("g".into(), serde_json::to_value(GPolyJson::from_poly(&g)).expect("serializable"));
            obj.insert("g_pretty".into(), json!(g.to_string()));
            obj.insert("g_sanity_pass".into(), json!(g_sanity(&m, &g).all_pass()));
        }
        Err(e) => {
            obj.insert("g_error".into(), json!(e.to_string()));
        }
    }
    out.to_string()
}

/// Regular subdivision of a lift, with the tropical Pluecker verdict, the
/// interior f-vector against its bound, and (for n = 4, d = 2) octahedron
/// coordinates for rendering.
#[wasm_bindgen]
pub fn subdivide(lift_json: &str) -> String {
    let lift = match serde_json::from_str::<LiftJson>(lift_json).map_err(|e| e.to_string()).and_then(|j| j.to_lift().map_err(|e| e.to_string())) {
        Ok(l) => l,
        Err(e) => return err(e),
    };
    if lift.n() > 7 {
        return err("demo caps lifts at n = 7; use the CLI for larger instances");
    }
    let tropical = is_tropical_pluecker(&lift).is_ok();
    let sub = match regular_subdivision(&lift) {
        Ok(s) => s,
        Err(e) => return err(e),
    };
    let mut out = match serde_json::to_value(SubdivisionJson::from_subdivision(&sub, true)) {
        Ok(v) => v,
        Err(e) => return err(e),
    };
    let obj = out.as_object_mut().expect("object");
    obj.insert("tropical_pluecker".into(), json!(tropical));
    if sub.n == 4 && sub.d == 2 {
        // orthogonal projection of the slice sum(x) = 2 onto the octahedron
        let coords: Vec<Value> = sub
            .ambient_vertices
            .iter()
            .map(|&mask| {
                let a: Vec<f64> = (0..4).map(|i| (mask >> i & 1) as f64).collect();
                json!({
                    "I": gmat::matroid::bits(mask).map(|e| e + 1).collect::<Vec<_>>(),
                    "xyz": [
                        (a[0] + a[1] - a[2] - a[3]) / 2.0,
                        (a[0] - a[1] + a[2] - a[3]) / 2.0,
                        (a[0] - a[1] - a[2] + a[3]) / 2.0,
                    ],
                })
            })
            .collect();
        obj.insert("coords3d".into(), json!(coords));
    }
    out.to_string()
}

/// Localized equivariant class with the GKM verdict.
#[wasm_bindgen]
pub fn kclass(matroid_json: &str) -> String {
    let m = match parse_matroid(matroid_json) {
        Ok(m) => m,
        Err(e) => return err(e),
    };
    if m.n() > 7 {
        return err("demo caps classes at n = 7; use the CLI for larger instances");
    }
    let class = match localized_class(&m) {
        Ok(c) => c,
        Err(e) => return err(e),
    };
    let mut out = match serde_json::to_value(ClassJson::from_class(&class)) {
        Ok(v) => v,
        Err(e) => return err(e),
    };
    let obj = out.as_object_mut().expect("object");
    let pretty: Vec<Value> = class
        .f
        .iter()
        .map(|(&b, poly)| {
            json!({
                "I": gmat::matroid::bits(b).map(|e| e + 1).collect::<Vec<_>>(),
                "f": poly.to_string(),
            })
        })
        .collect();
    obj.insert("pretty".into(), json!(pretty));
    obj.insert("gkm".into(), json!(check_gkm(&class).is_ok()));
    out.to_string()
}
