//! `gmat` : matroid invariants, exact hypersimplex subdivisions, and
//! localized equivariant classes from the command line.
//!
//! Exit codes: 0 = success/verified, 1 = a check failed (the witness is in
//! the output), 2 = usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gmat::corpus::load_corpus;
use gmat::invariants::{beta, g_from_subdivision, g_sanity, tutte, GEngine, GError};
use gmat::json::{
    ClassJson, GPolyJson, GraphJson, LiftJson, MatrixJson, MatroidJson, SubdivisionJson,
    TutteJson,
};
use gmat::ktheory::{check_gkm, check_valuative, localized_class};
use gmat::matroid::{from_matrix, Matroid};
use gmat::polytope::{is_tropical_pluecker, regular_subdivision, TropicalPlueckerVector};
use gmat::verify::run_all;

#[derive(Parser)]
#[command(name = "gmat", version, about = "matroid invariants and hypersimplex subdivisions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized property drivers.
    #[arg(long, global = true, default_value_t = 0x5eed_2024)]
    seed: u64,
    /// Safety cap on the ground-set size for subdivision and class
    /// computations.
    #[arg(long, global = true, default_value_t = 9)]
    max_n: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a matroid (or matrix/graph) file against the exchange axiom.
    Check(FileArg),
    /// Dual matroid.
    Dual(FileArg),
    /// Delete a (1-indexed) non-coloop element.
    Delete(FileElemArgs),
    /// Contract a (1-indexed) non-loop element.
    Contract(FileElemArgs),
    /// Direct sum of two matroids.
    Dsum { file1: PathBuf, file2: PathBuf },
    /// Two-sum along (1-indexed) terminal elements.
    Twosum { file1: PathBuf, e1: usize, file2: PathBuf, e2: usize },
    /// Series coextension at a (1-indexed) element.
    Sext(FileElemArgs),
    /// Parallel extension at a (1-indexed) element.
    Pext(FileElemArgs),
    /// Tutte polynomial.
    Tutte(FileArg),
    /// Beta invariant.
    Beta(FileArg),
    /// The g-polynomial, with its sanity report.
    G(FileArg),
    /// Tropical Pluecker operations on lift files.
    Tplv {
        #[command(subcommand)]
        sub: TplvCommand,
    },
    /// Regular subdivision of the hypersimplex induced by a lift.
    Subdivide {
        file: PathBuf,
        /// Include the interior f-vector with the decomposition cross-check.
        #[arg(long)]
        fvector: bool,
        /// Compare the interior f-vector against the factorial bound.
        #[arg(long)]
        verify_bound: bool,
        /// Solve the subdivision-additivity equation for the interior faces.
        #[arg(long)]
        solve_g: bool,
    },
    /// Localized equivariant class of a matroid.
    Kclass {
        file: PathBuf,
        /// Also check the GKM congruences.
        #[arg(long)]
        verify_gkm: bool,
    },
    /// Check valuativity of the subdivision induced by a lift, at every
    /// fixed point of the ambient uniform matroid.
    Valuative { file: PathBuf },
    /// Corpus operations.
    Corpus {
        #[command(subcommand)]
        sub: CorpusCommand,
    },
}

#[derive(Subcommand)]
enum TplvCommand {
    /// Check the three-term tropical Pluecker relations.
    Check(FileArg),
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Run the full golden + property suite.
    Verify {
        /// Corpus directory (containing matroids/, expected/, lifts/).
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
    },
}

#[derive(Args)]
struct FileArg {
    file: PathBuf,
}

#[derive(Args)]
struct FileElemArgs {
    file: PathBuf,
    /// 1-indexed ground-set element.
    element: usize,
}

/// Input problems: exit 2.
struct InputError(String);

enum Outcome {
    Ok(Value),
    Failed(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok(v)) => {
            emit(&cli, &v);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(v)) => {
            emit(&cli, &v);
            ExitCode::from(1)
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, v: &Value) {
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string(v).expect("serializable")),
        Format::Text => println!("{}", render_text(v, 0)),
    }
}

fn render_text(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, val)| match val {
                Value::Object(_) | Value::Array(_) => {
                    format!("{pad}{k}:\n{}", render_text(val, indent + 1))
                }
                _ => format!("{pad}{k}: {}", render_scalar(val)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Value::Array(items) => items
            .iter()
            .map(|item| match item {
                Value::Object(_) | Value::Array(_) => render_text(item, indent),
                _ => format!("{pad}{}", render_scalar(item)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => format!("{pad}{}", render_scalar(other)),
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run(cli: &Cli) -> Result<Outcome, InputError> {
    match &cli.command {
        Command::Check(arg) => check_cmd(&arg.file),
        Command::Dual(arg) => {
            let m = load_matroid(&arg.file)?;
            Ok(Outcome::Ok(json!({ "matroid": MatroidJson::from_matroid(&m.dual()) })))
        }
        Command::Delete(args) => minor_cmd(&args.file, args.element, false),
        Command::Contract(args) => minor_cmd(&args.file, args.element, true),
        Command::Dsum { file1, file2 } => {
            let m1 = load_matroid(file1)?;
            let m2 = load_matroid(file2)?;
            let s = m1.direct_sum(&m2).map_err(input)?;
            Ok(Outcome::Ok(json!({ "matroid": MatroidJson::from_matroid(&s) })))
        }
        Command::Twosum { file1, e1, file2, e2 } => {
            let m1 = load_matroid(file1)?;
            let m2 = load_matroid(file2)?;
            let (z1, z2) = (one_indexed(*e1, m1.n())?, one_indexed(*e2, m2.n())?);
            let s = m1.two_sum(z1, &m2, z2).map_err(input)?;
            Ok(Outcome::Ok(json!({ "matroid": MatroidJson::from_matroid(&s) })))
        }
        Command::Sext(args) => {
            let m = load_matroid(&args.file)?;
            let e = one_indexed(args.element, m.n())?;
            let s = m.series_ext(e).map_err(input)?;
            Ok(Outcome::Ok(json!({ "matroid": MatroidJson::from_matroid(&s) })))
        }
        Command::Pext(args) => {
            let m = load_matroid(&args.file)?;
            let e = one_indexed(args.element, m.n())?;
            let s = m.parallel_ext(e).map_err(input)?;
            Ok(Outcome::Ok(json!({ "matroid": MatroidJson::from_matroid(&s) })))
        }
        Command::Tutte(arg) => {
            let m = load_matroid(&arg.file)?;
            Ok(Outcome::Ok(json!({ "tutte": TutteJson::from_poly(&tutte(&m)) })))
        }
        Command::Beta(arg) => {
            let m = load_matroid(&arg.file)?;
            match beta(&m) {
                Ok(b) => Ok(Outcome::Ok(json!({ "beta": b }))),
                Err(e) => Ok(Outcome::Failed(json!({ "error": e.to_string() }))),
            }
        }
        Command::G(arg) => g_cmd(cli, &arg.file),
        Command::Tplv { sub: TplvCommand::Check(arg) } => {
            let lift = load_lift(&arg.file)?;
            match is_tropical_pluecker(&lift) {
                Ok(()) => Ok(Outcome::Ok(json!({ "tropical_pluecker": true }))),
                Err(w) => Ok(Outcome::Failed(json!({
                    "tropical_pluecker": false,
                    "witness": { "S": w.s, "quad": w.quad, "sums": w.sums.iter().map(gmat::rat::format_rational).collect::<Vec<_>>() },
                }))),
            }
        }
        Command::Subdivide { file, fvector, verify_bound, solve_g } => {
            subdivide_cmd(cli, file, *fvector, *verify_bound, *solve_g)
        }
        Command::Kclass { file, verify_gkm } => kclass_cmd(cli, file, *verify_gkm),
        Command::Valuative { file } => valuative_cmd(cli, file),
        Command::Corpus { sub: CorpusCommand::Verify { corpus } } => corpus_cmd(cli, corpus),
    }
}

fn input<E: std::fmt::Display>(e: E) -> InputError {
    InputError(e.to_string())
}

fn one_indexed(e: usize, n: usize) -> Result<usize, InputError> {
    if e == 0 || e > n {
        return Err(InputError(format!("element {e} out of range 1..={n}")));
    }
    Ok(e - 1)
}

/// Loads a matroid from a matroid, matrix, or graph JSON file (sniffed by
/// the object keys).
fn load_matroid(path: &Path) -> Result<Matroid, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let mut value = value;
    // corpus files wrap the matroid under a `matroid` key
    if let Some(inner) = value.get("matroid") {
        value = inner.clone();
    }
    let obj = value
        .as_object()
        .ok_or_else(|| InputError(format!("{}: expected a JSON object", path.display())))?;
    let result = if obj.contains_key("bases") {
        serde_json::from_value::<MatroidJson>(value.clone())
            .map_err(|e| InputError(format!("{}: {e}", path.display())))?
            .to_matroid()
            .map_err(|e| InputError(format!("{}: {e}", path.display())))
    } else if obj.contains_key("rows") {
        let m = serde_json::from_value::<MatrixJson>(value.clone())
            .map_err(|e| InputError(format!("{}: {e}", path.display())))?
            .to_matrix()
            .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        from_matrix(&m).map_err(|e| InputError(format!("{}: {e}", path.display())))
    } else if obj.contains_key("edges") {
        serde_json::from_value::<GraphJson>(value.clone())
            .map_err(|e| InputError(format!("{}: {e}", path.display())))?
            .to_matroid()
            .map_err(|e| InputError(format!("{}: {e}", path.display())))
    } else {
        Err(InputError(format!(
            "{}: expected keys `bases`, `rows`, or `edges`",
            path.display()
        )))
    };
    result
}

fn load_lift(path: &Path) -> Result<TropicalPlueckerVector, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let lift: LiftJson = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    lift.to_lift()
        .map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn check_cmd(path: &Path) -> Result<Outcome, InputError> {
    // run the sniffing loader but report exchange violations as check
    // failures rather than input errors
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    if value.get("bases").is_some() {
        let mj: MatroidJson = serde_json::from_value(value)
            .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        return match mj.to_matroid() {
            Ok(m) => Ok(Outcome::Ok(describe(&m))),
            Err(e) => Ok(Outcome::Failed(json!({ "valid": false, "witness": e.to_string() }))),
        };
    }
    let m = load_matroid(path)?;
    Ok(Outcome::Ok(describe(&m)))
}

fn describe(m: &Matroid) -> Value {
    let elems = |mask: u32| gmat::matroid::bits(mask).map(|e| e + 1).collect::<Vec<_>>();
    let parts = m.components();
    json!({
        "valid": true,
        "n": m.n(),
        "rank": m.rank(),
        "bases": m.num_bases(),
        "loops": elems(m.loops()),
        "coloops": elems(m.coloops()),
        "connected": m.is_connected(),
        "components": parts.blocks.iter().map(|&b| elems(b)).collect::<Vec<_>>(),
    })
}

fn minor_cmd(path: &Path, element: usize, contract: bool) -> Result<Outcome, InputError> {
    let m = load_matroid(path)?;
    let e = one_indexed(element, m.n())?;
    let result = if contract { m.contract(e) } else { m.delete(e) };
    match result {
        Ok((minor, relabel)) => Ok(Outcome::Ok(json!({
            "matroid": MatroidJson::from_matroid(&minor),
            "relabeling": relabel.iter().map(|&old| old + 1).collect::<Vec<_>>(),
        }))),
        Err(e) => Ok(Outcome::Failed(json!({ "error": e.to_string() }))),
    }
}

fn g_cmd(cli: &Cli, path: &Path) -> Result<Outcome, InputError> {
    let m = load_matroid(path)?;
    let mut eng = GEngine::new();
    eng.fallback_cap = cli.max_n;
    match eng.g(&m) {
        Ok(g) => {
            let sanity = g_sanity(&m, &g);
            Ok(Outcome::Ok(json!({
                "g": GPolyJson::from_poly(&g),
                "pretty": g.to_string(),
                "sanity": sanity.checks.iter().map(|(name, ok, detail)| json!({
                    "check": name, "pass": ok, "detail": detail,
                })).collect::<Vec<_>>(),
            })))
        }
        Err(GError::NotComputable(why)) => {
            Ok(Outcome::Failed(json!({ "error": "not_computable", "detail": why })))
        }
        Err(e) => Ok(Outcome::Failed(json!({ "error": e.to_string() }))),
    }
}

fn subdivide_cmd(
    cli: &Cli,
    path: &Path,
    fvector: bool,
    verify_bound: bool,
    solve_g: bool,
) -> Result<Outcome, InputError> {
    let lift = load_lift(path)?;
    if lift.n() > cli.max_n {
        return Err(InputError(format!(
            "lift has n = {} over the cap {} (raise with --max-n)",
            lift.n(),
            cli.max_n
        )));
    }
    let tropical = is_tropical_pluecker(&lift).is_ok();
    let sub = regular_subdivision(&lift).map_err(input)?;
    let mut out = serde_json::to_value(SubdivisionJson::from_subdivision(&sub, verify_bound))
        .map_err(input)?;
    let obj = out.as_object_mut().expect("object");
    obj.insert("tropical_pluecker".into(), json!(tropical));
    if fvector {
        match sub.interior_f_vector() {
            Ok(f) => {
                obj.insert(
                    "interior_f_vector".into(),
                    json!(f.iter().map(|(&c, &k)| (c, k)).collect::<Vec<_>>()),
                );
            }
            Err(e) => {
                obj.insert("interior_f_vector_error".into(), json!(e.to_string()));
            }
        }
    }
    let mut failed = false;
    if verify_bound {
        if let Some(report) = obj.get("bound_report") {
            let ok = report
                .get("all_within")
                .and_then(Value::as_bool)
                .unwrap_or(false);
            failed |= !ok;
        } else {
            failed = true; // bound check requested but subdivision not matroidal
        }
    }
    if solve_g {
        let mut eng = GEngine::new();
        eng.fallback_cap = cli.max_n;
        let mut known = std::collections::BTreeMap::new();
        let mut unknown = Vec::new();
        for cell in &sub.interior_faces {
            if let Ok(fm) = cell.face_matroid(sub.n, sub.d) {
                match eng.g(&fm) {
                    Ok(g) => {
                        known.insert(fm, g);
                    }
                    Err(_) => unknown.push(MatroidJson::from_matroid(&fm)),
                }
            }
        }
        match g_from_subdivision(&sub, &known) {
            Ok(solved) => {
                let entries: Vec<Value> = solved
                    .iter()
                    .map(|(m, g)| {
                        json!({
                            "matroid": MatroidJson::from_matroid(m),
                            "g": GPolyJson::from_poly(g),
                        })
                    })
                    .collect();
                obj.insert("solved_g".into(), json!(entries));
            }
            Err(e) => {
                obj.insert("solve_g_error".into(), json!(e.to_string()));
                failed = true;
            }
        }
    }
    if failed {
        Ok(Outcome::Failed(out))
    } else {
        Ok(Outcome::Ok(out))
    }
}

fn kclass_cmd(cli: &Cli, path: &Path, verify_gkm: bool) -> Result<Outcome, InputError> {
    let m = load_matroid(path)?;
    if m.n() > cli.max_n.min(9) {
        return Err(InputError(format!(
            "class computation capped at n = {} (raise with --max-n)",
            cli.max_n.min(9)
        )));
    }
    let class = match localized_class(&m) {
        Ok(c) => c,
        Err(e) => return Ok(Outcome::Failed(json!({ "error": e.to_string() }))),
    };
    let mut out = serde_json::to_value(ClassJson::from_class(&class)).map_err(input)?;
    let obj = out.as_object_mut().expect("object");
    if verify_gkm {
        match check_gkm(&class) {
            Ok(()) => {
                obj.insert("gkm".into(), json!(true));
            }
            Err(w) => {
                obj.insert("gkm".into(), json!(false));
                obj.insert(
                    "gkm_witness".into(),
                    json!({ "B": w.b, "i": w.i, "j": w.j, "difference": w.difference.to_string() }),
                );
                return Ok(Outcome::Failed(out));
            }
        }
    }
    Ok(Outcome::Ok(out))
}

fn valuative_cmd(cli: &Cli, path: &Path) -> Result<Outcome, InputError> {
    let lift = load_lift(path)?;
    if lift.n() > cli.max_n.min(7) {
        return Err(InputError(format!(
            "valuativity check capped at n = {} (raise with --max-n)",
            cli.max_n.min(7)
        )));
    }
    let sub = regular_subdivision(&lift).map_err(input)?;
    let ambient = gmat::matroid::uniform(lift.d(), lift.n());
    match check_valuative(&sub, &ambient) {
        Ok(report) => {
            let v = json!({
                "holds": report.holds,
                "per_basis": report.per_basis.iter().map(|(b, ok)| json!({ "I": b, "holds": ok })).collect::<Vec<_>>(),
            });
            if report.holds {
                Ok(Outcome::Ok(v))
            } else {
                Ok(Outcome::Failed(v))
            }
        }
        Err(e) => Ok(Outcome::Failed(json!({ "error": e.to_string() }))),
    }
}

fn corpus_cmd(cli: &Cli, dir: &Path) -> Result<Outcome, InputError> {
    let corpus = load_corpus(dir).map_err(input)?;
    let reports = run_all(&corpus, cli.seed);
    let all_pass = reports.iter().all(|r| r.pass);
    let v = json!({
        "seed": cli.seed,
        "all_pass": all_pass,
        "criteria": reports,
    });
    if all_pass {
        Ok(Outcome::Ok(v))
    } else {
        Ok(Outcome::Failed(v))
    }
}
