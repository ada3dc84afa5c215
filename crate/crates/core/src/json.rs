//! JSON encodings of every value type.
//!
//! Rationals are strings `"p/q"` (or `"p"`); plain JSON integers are accepted
//! on input. `+inf` is the string `"inf"`.

use serde_json::{json, Value};

use crate::exact::{parse_rational, Extended, QMatrix, QVector, Rational};
use crate::orderiso::AdmissibilityVerdict;
use crate::plfunc::PLConvexFunction;
use crate::polyhedra::Polyhedron;
use crate::projective::{Hyperplane, ProjectiveMap};
use crate::verify::{Failure, SuiteReport};
use crate::{Error, Result};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn extended(x: &Extended) -> Value {
    Value::String(x.to_string())
}

pub fn vector(v: &QVector) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn matrix(m: &QMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(rational).collect())).collect())
}

pub fn map(f: &ProjectiveMap) -> Value {
    json!({"dim": f.dim(), "matrix": matrix(f.matrix())})
}

pub fn hyperplane(h: &Hyperplane) -> Value {
    json!({"normal": vector(&h.normal), "offset": rational(&h.offset)})
}

pub fn polyhedron(p: &Polyhedron) -> Value {
    let v = p.vrep();
    let h = p.hrep();
    json!({
        "dim": p.dim(),
        "vrep": {
            "vertices": v.vertices.iter().map(vector).collect::<Vec<_>>(),
            "rays": v.rays.iter().map(vector).collect::<Vec<_>>(),
        },
        "hrep": {
            "ineqs": h.ineqs.iter().map(|(a, b)| json!({"a": vector(a), "b": rational(b)})).collect::<Vec<_>>(),
        },
        "empty": p.is_empty(),
    })
}

pub fn function(f: &PLConvexFunction) -> Value {
    json!({"dim": f.dim(), "window": polyhedron(f.window()), "epigraph": polyhedron(f.epigraph())})
}

pub fn verdict(v: &AdmissibilityVerdict) -> Value {
    json!({
        "status": v.status.as_str(),
        "reason": v.reason,
        "target_window": v.target_window.as_ref().map(polyhedron),
    })
}

pub fn report(r: &SuiteReport) -> Value {
    json!({
        "suite": r.suite,
        "trials": r.trials,
        "passed": r.passed,
        "failed": r.failed,
        "seed": r.seed,
        "first_failure": r.first_failure.as_ref().map(|f| json!({
            "trial": f.trial,
            "message": f.message,
            "inputs": f.inputs,
        })),
        "ms": r.ms,
    })
}

pub fn parse_rational_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => Err(perr(format!("number {n} is not an integer; use a \"p/q\" string"))),
        },
        other => Err(perr(format!("expected a rational, got {other}"))),
    }
}

pub fn parse_extended(v: &Value) -> Result<Extended> {
    match v.as_str() {
        Some("inf") => Ok(Extended::PosInfinity),
        Some("-inf") => Ok(Extended::NegInfinity),
        _ => Ok(Extended::Finite(parse_rational_value(v)?)),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(format!("{what}: expected an array")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| perr(format!("missing field {key:?}")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| perr(format!("field {key:?} must be a nonnegative integer")))
}

pub fn parse_vector(v: &Value) -> Result<QVector> {
    Ok(QVector(array(v, "vector")?.iter().map(parse_rational_value).collect::<Result<_>>()?))
}

pub fn parse_matrix(v: &Value) -> Result<QMatrix> {
    let rows = array(v, "matrix")?
        .iter()
        .map(|r| Ok(parse_vector(r)?.0))
        .collect::<Result<Vec<_>>>()?;
    QMatrix::from_rows(rows).map_err(|e| perr(e.to_string()))
}

/// Accepts `{"dim", "matrix"}` or a bare matrix.
pub fn parse_map(v: &Value) -> Result<ProjectiveMap> {
    let m = match v.get("matrix") {
        Some(m) => parse_matrix(m)?,
        None => parse_matrix(v)?,
    };
    if let Some(d) = v.get("dim") {
        if d.as_u64() != Some(m.rows() as u64 - 1) {
            return Err(perr("dim does not match the matrix size"));
        }
    }
    ProjectiveMap::new(m)
}

pub fn parse_hyperplane(v: &Value) -> Result<Hyperplane> {
    Hyperplane::new(parse_vector(field(v, "normal")?)?, parse_rational_value(field(v, "offset")?)?)
}

/// Uses the V-representation when present, otherwise the H-representation.
pub fn parse_polyhedron(v: &Value) -> Result<Polyhedron> {
    let dim = usize_field(v, "dim")?;
    if v.get("empty").and_then(Value::as_bool) == Some(true) {
        return Ok(Polyhedron::empty(dim));
    }
    if let Some(vr) = v.get("vrep").filter(|x| !x.is_null()) {
        let list = |key: &str| -> Result<Vec<QVector>> {
            match vr.get(key) {
                Some(x) => array(x, key)?.iter().map(parse_vector).collect(),
                None => Ok(vec![]),
            }
        };
        return Polyhedron::from_vrep(dim, list("vertices")?, list("rays")?);
    }
    if let Some(hr) = v.get("hrep").filter(|x| !x.is_null()) {
        let ineqs = array(field(hr, "ineqs")?, "ineqs")?
            .iter()
            .map(|row| Ok((parse_vector(field(row, "a")?)?, parse_rational_value(field(row, "b")?)?)))
            .collect::<Result<Vec<_>>>()?;
        return Polyhedron::from_hrep(dim, ineqs);
    }
    Err(perr("polyhedron needs \"vrep\" or \"hrep\""))
}

pub fn parse_function(v: &Value) -> Result<PLConvexFunction> {
    let window = parse_polyhedron(field(v, "window")?)?;
    let epi = parse_polyhedron(field(v, "epigraph")?)?;
    if let Some(d) = v.get("dim") {
        if d.as_u64() != Some(window.dim() as u64) {
            return Err(perr("dim does not match the window"));
        }
    }
    PLConvexFunction::from_epigraph(&window, epi)
}

pub fn parse_report(v: &Value) -> Result<SuiteReport> {
    let u = |key: &str| -> Result<u64> {
        field(v, key)?.as_u64().ok_or_else(|| perr(format!("field {key:?} must be a nonnegative integer")))
    };
    let first_failure = match v.get("first_failure") {
        None | Some(Value::Null) => None,
        Some(f) => Some(Failure {
            trial: field(f, "trial")?.as_u64().ok_or_else(|| perr("failure trial index"))?,
            message: field(f, "message")?.as_str().unwrap_or_default().to_string(),
            inputs: f.get("inputs").cloned().unwrap_or(Value::Null),
        }),
    };
    Ok(SuiteReport {
        suite: field(v, "suite")?.as_str().ok_or_else(|| perr("suite must be a string"))?.to_string(),
        trials: u("trials")?,
        passed: u("passed")?,
        failed: u("failed")?,
        seed: u("seed")?,
        first_failure,
        ms: u("ms")?,
    })
}

/// Document kinds understood by [`schema_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemaKind {
    Matrix,
    Polyhedron,
    PlFunction,
    Report,
}

impl SchemaKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "matrix" => Some(SchemaKind::Matrix),
            "polyhedron" => Some(SchemaKind::Polyhedron),
            "plfunction" => Some(SchemaKind::PlFunction),
            "report" => Some(SchemaKind::Report),
            _ => None,
        }
    }
}

/// Structural validation with diagnostics; an empty list means valid.
pub fn schema_check(doc: &Value, kind: SchemaKind) -> (bool, Vec<String>) {
    let mut diag = Vec::new();
    match kind {
        SchemaKind::Matrix => check_matrix(doc, &mut diag),
        SchemaKind::Polyhedron => check_polyhedron(doc, "", &mut diag),
        SchemaKind::PlFunction => check_function(doc, &mut diag),
        SchemaKind::Report => check_report(doc, &mut diag),
    }
    (diag.is_empty(), diag)
}

fn check_rational(v: &Value, at: &str, diag: &mut Vec<String>) {
    match v {
        Value::String(s) => {
            if let Err(e) = parse_rational(s) {
                diag.push(format!("{at}: {e}"));
            }
        }
        Value::Number(n) if n.is_i64() => {}
        other => diag.push(format!("{at}: expected a rational string, got {other}")),
    }
}

fn check_vector(v: &Value, at: &str, len: Option<usize>, diag: &mut Vec<String>) -> Option<usize> {
    let Some(xs) = v.as_array() else {
        diag.push(format!("{at}: expected an array"));
        return None;
    };
    if let Some(n) = len {
        if xs.len() != n {
            diag.push(format!("{at}: length {} != dim {n}", xs.len()));
        }
    }
    for (i, x) in xs.iter().enumerate() {
        check_rational(x, &format!("{at}[{i}]"), diag);
    }
    Some(xs.len())
}

fn check_matrix(doc: &Value, diag: &mut Vec<String>) {
    let (m, dim) = match doc.get("matrix") {
        Some(m) => (m, doc.get("dim").and_then(Value::as_u64)),
        None => (doc, None),
    };
    let Some(rows) = m.as_array() else {
        diag.push("matrix: expected an array of rows".into());
        return;
    };
    if rows.is_empty() {
        diag.push("matrix: no rows".into());
        return;
    }
    for (i, r) in rows.iter().enumerate() {
        if let Some(len) = check_vector(r, &format!("matrix[{i}]"), None, diag) {
            if len != rows.len() {
                diag.push(format!("rows≠cols: row {i} has {len} entries, matrix has {} rows", rows.len()));
            }
        }
    }
    if let Some(d) = dim {
        if d as usize + 1 != rows.len() {
            diag.push(format!("dim {d} does not match {} rows", rows.len()));
        }
    }
}

fn check_polyhedron(doc: &Value, at: &str, diag: &mut Vec<String>) {
    let Some(dim) = doc.get("dim").and_then(Value::as_u64).map(|d| d as usize) else {
        diag.push(format!("{at}dim: missing or not a nonnegative integer"));
        return;
    };
    let vrep = doc.get("vrep").filter(|v| !v.is_null());
    let hrep = doc.get("hrep").filter(|v| !v.is_null());
    if vrep.is_none() && hrep.is_none() {
        diag.push(format!("{at}: at least one of vrep/hrep required"));
    }
    if let Some(v) = vrep {
        for key in ["vertices", "rays"] {
            match v.get(key) {
                Some(Value::Array(xs)) => {
                    for (i, x) in xs.iter().enumerate() {
                        check_vector(x, &format!("{at}vrep.{key}[{i}]"), Some(dim), diag);
                    }
                }
                Some(_) => diag.push(format!("{at}vrep.{key}: expected an array")),
                None => {}
            }
        }
    }
    if let Some(h) = hrep {
        match h.get("ineqs").and_then(Value::as_array) {
            Some(rows) => {
                for (i, row) in rows.iter().enumerate() {
                    match (row.get("a"), row.get("b")) {
                        (Some(a), Some(b)) => {
                            check_vector(a, &format!("{at}hrep.ineqs[{i}].a"), Some(dim), diag);
                            check_rational(b, &format!("{at}hrep.ineqs[{i}].b"), diag);
                        }
                        _ => diag.push(format!("{at}hrep.ineqs[{i}]: needs \"a\" and \"b\"")),
                    }
                }
            }
            None => diag.push(format!("{at}hrep.ineqs: expected an array")),
        }
    }
    if let Some(e) = doc.get("empty") {
        if !e.is_boolean() {
            diag.push(format!("{at}empty: expected a boolean"));
        }
    }
}

fn check_function(doc: &Value, diag: &mut Vec<String>) {
    let dim = doc.get("dim").and_then(Value::as_u64);
    if dim.is_none() {
        diag.push("dim: missing or not a nonnegative integer".into());
    }
    for key in ["window", "epigraph"] {
        match doc.get(key) {
            Some(p) => {
                check_polyhedron(p, &format!("{key}."), diag);
                let expect = dim.map(|d| if key == "window" { d } else { d + 1 });
                if let (Some(e), Some(got)) = (expect, p.get("dim").and_then(Value::as_u64)) {
                    if e != got {
                        diag.push(format!("{key}.dim: expected {e}, got {got}"));
                    }
                }
            }
            None => diag.push(format!("{key}: missing")),
        }
    }
}

fn check_report(doc: &Value, diag: &mut Vec<String>) {
    if !doc.get("suite").is_some_and(Value::is_string) {
        diag.push("suite: expected a string".into());
    }
    for key in ["trials", "passed", "failed", "seed", "ms"] {
        if !doc.get(key).is_some_and(Value::is_u64) {
            diag.push(format!("{key}: expected a nonnegative integer"));
        }
    }
    let get = |k: &str| doc.get(k).and_then(Value::as_u64);
    if let (Some(t), Some(p), Some(f)) = (get("trials"), get("passed"), get("failed")) {
        if p + f != t {
            diag.push(format!("passed + failed = {} but trials = {t}", p + f));
        }
    }
    match doc.get("first_failure") {
        None | Some(Value::Null) | Some(Value::Object(_)) => {}
        Some(_) => diag.push("first_failure: expected null or an object".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn rational_format() {
        assert_eq!(rational(&rat(3, 2)), json!("3/2"));
        assert_eq!(rational(&int(-4)), json!("-4"));
        assert_eq!(parse_rational_value(&json!("-6/4")).unwrap(), rat(-3, 2));
        assert_eq!(parse_rational_value(&json!(7)).unwrap(), int(7));
        assert!(parse_rational_value(&json!(0.5)).is_err());
        assert_eq!(extended(&Extended::PosInfinity), json!("inf"));
    }

    #[test]
    fn round_trips() {
        let f = ProjectiveMap::f_trapezoid(&rat(1, 3)).unwrap();
        assert!(parse_map(&map(&f)).unwrap().agrees_up_to_scalar(&f));
        let p = Polyhedron::standard_simplex(2);
        assert!(parse_polyhedron(&polyhedron(&p)).unwrap().set_equal(&p));
        let e = Polyhedron::empty(3);
        assert!(parse_polyhedron(&polyhedron(&e)).unwrap().is_empty());
        let g = PLConvexFunction::from_pieces(&p, &[(QVector::from_ints(&[1, -1]), rat(1, 2))]).unwrap();
        assert!(parse_function(&function(&g)).unwrap().same_function(&g));
        let h = Hyperplane::new(QVector::from_ints(&[1, 0]), int(1)).unwrap();
        assert_eq!(parse_hyperplane(&hyperplane(&h)).unwrap(), h);
    }

    #[test]
    fn hrep_only_input() {
        let doc = json!({"dim": 1, "hrep": {"ineqs": [{"a": ["1"], "b": "2"}, {"a": ["-1"], "b": "0"}]}});
        let p = parse_polyhedron(&doc).unwrap();
        assert!(p.set_equal(&Polyhedron::interval(int(0), int(2))));
    }

    #[test]
    fn schema_examples() {
        let p = polyhedron(&Polyhedron::orthant(2));
        assert_eq!(schema_check(&p, SchemaKind::Polyhedron), (true, vec![]));
        let (ok, diag) = schema_check(&json!([["1", "0"], ["0"]]), SchemaKind::Matrix);
        assert!(!ok);
        assert!(diag.iter().any(|d| d.contains("rows≠cols")), "{diag:?}");
        let (ok, diag) = schema_check(&json!([["1/0"]]), SchemaKind::Matrix);
        assert!(!ok);
        assert!(diag.iter().any(|d| d.contains("zero denominator")), "{diag:?}");
        let f = function(&PLConvexFunction::indicator(&Polyhedron::orthant(1)));
        assert!(schema_check(&f, SchemaKind::PlFunction).0);
        let bad = json!({"suite": "x", "trials": 2, "passed": 1, "failed": 0, "seed": 1, "first_failure": null, "ms": 3});
        assert!(!schema_check(&bad, SchemaKind::Report).0);
    }
}
