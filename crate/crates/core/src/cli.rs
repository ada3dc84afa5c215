//! JSON command-line front end.
//!
//! Every value argument accepts inline JSON, `@path` for a file, or `-` for
//! standard input. Rationals are `"p/q"` strings. Exit codes: 0 on success,
//! 1 on a domain error or a failing suite, 2 on usage and parse errors; on
//! failure the error is written to standard error as JSON.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::exact::{parse_rational, QVector, Rational};
use crate::json;
use crate::orderiso::{self, FiberKind, InducedTransform, Interval1d, TransformKind};
use crate::plfunc::PLConvexFunction;
use crate::polyhedra::Polyhedron;
use crate::projective::ProjectiveMap;
use crate::verify::{self, SuiteReport, TrialConfig};
use crate::{Error, Result};

/// Environment variable holding the default seed for `verify`.
pub const SEED_ENV: &str = "WINDOW_DUALITY_SEED";

#[derive(Parser, Debug)]
#[command(name = "window-duality", version, about = "Exact projective maps, polarity and order isomorphisms of convex functions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Fractional-linear maps.
    #[command(subcommand)]
    Flmap(FlmapCmd),
    /// Polyhedra.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Piecewise-linear convex functions.
    #[command(subcommand)]
    Fun(FunCmd),
    /// Order isomorphisms induced by matrices.
    #[command(subcommand)]
    Iso(IsoCmd),
    /// Run a named invariant suite.
    Verify(VerifyArgs),
    /// Validate a JSON document.
    SchemaCheck {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        doc: String,
    },
    /// Render a saved suite report.
    Render {
        #[arg(long)]
        report: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Subcommand, Debug)]
enum FlmapCmd {
    Apply {
        #[arg(long)]
        map: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        point: String,
    },
    Compose {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        dim: Option<usize>,
    },
    Invert {
        #[arg(long)]
        map: String,
        #[arg(long)]
        dim: Option<usize>,
    },
    Canonical {
        #[arg(long)]
        map: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        x0: String,
    },
    FromPoints {
        /// JSON array of the n+1 simplex vertices.
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        p: String,
    },
    /// Named maps: f0, epigraph-inversion, ball, trapezoid.
    Gallery {
        #[arg(long)]
        name: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        param: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    Polar(PolyArg),
    Image {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long)]
        map: String,
    },
    Hull(PairArgs),
    Intersect(PairArgs),
    Convert(PolyArg),
    Equal(PairArgs),
}

#[derive(Args, Debug)]
struct PolyArg {
    /// JSON polyhedron or one of orthant, simplex, slab, universe.
    #[arg(long)]
    poly: String,
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum FunCmd {
    Eval {
        #[arg(long)]
        fun: String,
        #[arg(long)]
        point: String,
    },
    Sup(FamilyArgs),
    Infhat(FamilyArgs),
    Legendre(FunArg),
    Jtransform(FunArg),
    Atransform(FunArg),
    #[command(subcommand)]
    Make(MakeCmd),
}

#[derive(Args, Debug)]
struct FunArg {
    #[arg(long)]
    fun: String,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long = "fun", required = true)]
    funs: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum MakeCmd {
    Delta {
        #[arg(long)]
        window: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        point: String,
        #[arg(long)]
        value: String,
    },
    Indicator {
        #[arg(long)]
        window: String,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// `t z -> c t` on the ray through `z`.
    Linear {
        #[arg(long)]
        z: String,
        #[arg(long)]
        c: String,
    },
    Triangle {
        #[arg(long)]
        z: String,
        #[arg(long)]
        h: String,
    },
    /// `max_i <a_i, x> + b_i` from a JSON array of `[a_i, b_i]`.
    Pieces {
        #[arg(long)]
        window: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        pieces: String,
    },
}

#[derive(Subcommand, Debug)]
enum IsoCmd {
    Classify(IsoArgs),
    Induce {
        #[command(flatten)]
        iso: IsoArgs,
        #[arg(long)]
        fun: String,
    },
    Table1d {
        /// Positive endpoint of `[0, x)` or `inf`.
        #[arg(long)]
        i1: String,
        #[arg(long)]
        i2: String,
        /// `I` or `J`.
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    Fz {
        #[arg(long)]
        z: String,
    },
}

#[derive(Args, Debug)]
struct IsoArgs {
    /// `cvx` or `cvx0`.
    #[arg(long)]
    kind: String,
    #[arg(long)]
    matrix: String,
    #[arg(long)]
    window: String,
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: String,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value = "json")]
    format: String,
}

/// Report output formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
    SvgSummary,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            "svg-summary" => Ok(ReportFormat::SvgSummary),
            other => Err(Error::Usage(format!("unknown format {other:?}; expected json, text or svg-summary"))),
        }
    }
}

/// Renders a report. The text format starts with `<suite> <passed>/<trials>
/// PASS|FAIL` followed by aligned detail rows.
pub fn render_report(r: &SuiteReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => json::report(r).to_string(),
        ReportFormat::Text => {
            let status = if r.all_passed() { "PASS" } else { "FAIL" };
            let mut out = format!("{} {}/{} {}\n", r.suite, r.passed, r.trials, status);
            for (k, v) in [("seed", r.seed.to_string()), ("failed", r.failed.to_string()), ("ms", r.ms.to_string())] {
                out.push_str(&format!("  {k:<8}{v:>12}\n"));
            }
            if let Some(f) = &r.first_failure {
                out.push_str(&format!("  {:<8}{:>12}\n  {}\n", "trial", f.trial, f.message));
            }
            out
        }
        ReportFormat::SvgSummary => {
            let width = 400u64;
            let pass_w = (width * r.passed).checked_div(r.trials).unwrap_or(0);
            format!(
                concat!(
                    "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"60\" viewBox=\"0 0 {w} 60\">\n",
                    "  <title>{suite}</title>\n",
                    "  <rect x=\"0\" y=\"20\" width=\"{pw}\" height=\"20\" fill=\"#2e7d32\"/>\n",
                    "  <rect x=\"{pw}\" y=\"20\" width=\"{fw}\" height=\"20\" fill=\"#c62828\"/>\n",
                    "  <text x=\"0\" y=\"14\" font-family=\"monospace\" font-size=\"12\">{suite} {p}/{t}</text>\n",
                    "</svg>\n"
                ),
                w = width,
                pw = pass_w,
                fw = width - pass_w,
                suite = xml_escape(&r.suite),
                p = r.passed,
                t = r.trials,
            )
        }
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Runs the CLI on `argv` (including the program name) with the process's
/// standard streams and returns the exit code.
pub fn run(argv: &[String]) -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`] with explicit streams.
pub fn run_with(argv: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let _ = writeln!(stderr, "{}", json!({"error": "usage", "message": e.to_string()}));
            return 2;
        }
    };
    let mut io = Io { stdin, stdin_used: false };
    match dispatch(cli.cmd, &mut io) {
        Ok((text, code)) => {
            let _ = writeln!(stdout, "{}", text.trim_end_matches('\n'));
            code
        }
        Err(e) => {
            let (kind, code) = match e {
                Error::Usage(_) => ("usage", 2),
                Error::Parse(_) => ("parse", 2),
                _ => ("domain", 1),
            };
            let _ = writeln!(stderr, "{}", json!({"error": kind, "message": e.to_string()}));
            code
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn text(&mut self, arg: &str) -> Result<String> {
        if arg == "-" {
            if self.stdin_used {
                return Err(Error::Usage("standard input can be used by one argument only".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| Error::Usage(format!("reading stdin: {e}")))?;
            return Ok(s);
        }
        if let Some(path) = arg.strip_prefix('@') {
            return std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("reading {path}: {e}")));
        }
        Ok(arg.to_string())
    }

    fn json(&mut self, arg: &str) -> Result<Value> {
        let text = self.text(arg)?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))
    }

    fn rational(&mut self, arg: &str) -> Result<Rational> {
        let text = self.text(arg)?;
        let t = text.trim();
        match serde_json::from_str::<Value>(t) {
            Ok(v) => json::parse_rational_value(&v),
            Err(_) => parse_rational(t),
        }
    }

    fn vector(&mut self, arg: &str) -> Result<QVector> {
        json::parse_vector(&self.json(arg)?)
    }

    fn map(&mut self, arg: &str, dim: Option<usize>) -> Result<ProjectiveMap> {
        match arg {
            "f0" => Ok(ProjectiveMap::f0(need_dim(dim)?)),
            "identity" => Ok(ProjectiveMap::identity(need_dim(dim)?)),
            "epigraph-inversion" => Ok(ProjectiveMap::epigraph_inversion(need_dim(dim)?)),
            _ => json::parse_map(&self.json(arg)?),
        }
    }

    fn poly(&mut self, arg: &str, dim: Option<usize>) -> Result<Polyhedron> {
        match arg {
            "orthant" => Ok(Polyhedron::orthant(need_dim(dim)?)),
            "simplex" => Ok(Polyhedron::standard_simplex(need_dim(dim)?)),
            "slab" => Ok(Polyhedron::slab(need_dim(dim)?)),
            "universe" => Ok(Polyhedron::universe(need_dim(dim)?)),
            _ => json::parse_polyhedron(&self.json(arg)?),
        }
    }

    fn fun(&mut self, arg: &str) -> Result<PLConvexFunction> {
        json::parse_function(&self.json(arg)?)
    }
}

fn need_dim(dim: Option<usize>) -> Result<usize> {
    match dim {
        Some(d) if d >= 1 => Ok(d),
        Some(_) => Err(Error::Usage("--dim must be at least 1".into())),
        None => Err(Error::Usage("named values need --dim".into())),
    }
}

fn interval(s: &str) -> Result<Interval1d> {
    if s == "inf" {
        return Ok(Interval1d::HalfLine);
    }
    Ok(Interval1d::Bounded(parse_rational(s).map_err(|e| Error::Usage(e.to_string()))?))
}

fn transform_kind(s: &str) -> Result<TransformKind> {
    match s {
        "cvx" => Ok(TransformKind::Cvx),
        "cvx0" => Ok(TransformKind::Cvx0),
        other => Err(Error::Usage(format!("unknown kind {other:?}; expected cvx or cvx0"))),
    }
}

fn transform(t: &InducedTransform) -> Value {
    json!({
        "kind": t.kind.as_str(),
        "matrix": json::matrix(t.map.matrix()),
        "source_window": json::polyhedron(&t.source_window),
        "target_window": json::polyhedron(&t.target_window),
    })
}

type Output = (String, i32);

fn ok(v: Value) -> Result<Output> {
    Ok((v.to_string(), 0))
}

fn dispatch(cmd: Cmd, io: &mut Io<'_>) -> Result<Output> {
    match cmd {
        Cmd::Flmap(c) => flmap(c, io),
        Cmd::Poly(c) => poly(c, io),
        Cmd::Fun(c) => fun(c, io),
        Cmd::Iso(c) => iso(c, io),
        Cmd::Verify(a) => verify_cmd(a),
        Cmd::SchemaCheck { kind, doc } => {
            let kind = json::SchemaKind::parse(&kind)
                .ok_or_else(|| Error::Usage(format!("unknown schema kind {kind:?}")))?;
            let (valid, diagnostics) = json::schema_check(&io.json(&doc)?, kind);
            Ok((json!({"valid": valid, "diagnostics": diagnostics}).to_string(), if valid { 0 } else { 1 }))
        }
        Cmd::Render { report, format } => {
            let format = ReportFormat::parse(&format)?;
            let r = json::parse_report(&io.json(&report)?)?;
            Ok((render_report(&r, format), 0))
        }
    }
}

fn flmap(c: FlmapCmd, io: &mut Io<'_>) -> Result<Output> {
    match c {
        FlmapCmd::Apply { map, dim, point } => {
            let f = io.map(&map, dim)?;
            ok(json::vector(&f.apply(&io.vector(&point)?)?))
        }
        FlmapCmd::Compose { f, g, dim } => {
            let (f, g) = (io.map(&f, dim)?, io.map(&g, dim)?);
            ok(json::map(&f.compose(&g)?))
        }
        FlmapCmd::Invert { map, dim } => ok(json::map(&io.map(&map, dim)?.inverse())),
        FlmapCmd::Canonical { map, dim, x0 } => {
            let f = io.map(&map, dim)?;
            let cf = f.canonical_form(&io.vector(&x0)?)?;
            ok(json!({"B": json::matrix(&cf.b), "C": json::matrix(&cf.c), "y0": json::vector(&cf.y0)}))
        }
        FlmapCmd::FromPoints { x, y, p } => {
            let xs = io.json(&x)?;
            let xs = xs
                .as_array()
                .ok_or_else(|| Error::Parse("--x must be an array of vectors".into()))?
                .iter()
                .map(json::parse_vector)
                .collect::<Result<Vec<_>>>()?;
            let (y, p) = (io.vector(&y)?, io.vector(&p)?);
            ok(json::map(&ProjectiveMap::from_simplex_data(&xs, &y, &p)?))
        }
        FlmapCmd::Gallery { name, dim, param } => {
            let mut param = |what: &str| -> Result<Rational> {
                let p = param.clone().ok_or_else(|| Error::Usage(format!("{what} needs --param")))?;
                io.rational(&p)
            };
            let f = match name.as_str() {
                "f0" => ProjectiveMap::f0(need_dim(dim)?),
                "epigraph-inversion" => ProjectiveMap::epigraph_inversion(need_dim(dim)?),
                "ball" => ProjectiveMap::f_ball(need_dim(dim)?, &param("ball")?)?,
                "trapezoid" => ProjectiveMap::f_trapezoid(&param("trapezoid")?)?,
                other => return Err(Error::Usage(format!("unknown gallery map {other:?}"))),
            };
            ok(json::map(&f))
        }
    }
}

fn poly(c: PolyCmd, io: &mut Io<'_>) -> Result<Output> {
    match c {
        PolyCmd::Polar(p) => ok(json::polyhedron(&io.poly(&p.poly, p.dim)?.polar()?)),
        PolyCmd::Image { poly, map } => {
            let k = io.poly(&poly.poly, poly.dim)?;
            let f = io.map(&map, Some(k.dim()))?;
            ok(json::polyhedron(&k.projective_image(&f)?))
        }
        PolyCmd::Hull(p) => {
            let (a, b) = (io.poly(&p.a, p.dim)?, io.poly(&p.b, p.dim)?);
            ok(json::polyhedron(&a.convex_hull_join(&b)?))
        }
        PolyCmd::Intersect(p) => {
            let (a, b) = (io.poly(&p.a, p.dim)?, io.poly(&p.b, p.dim)?);
            ok(json::polyhedron(&a.intersect(&b)?))
        }
        PolyCmd::Convert(p) => ok(json::polyhedron(&io.poly(&p.poly, p.dim)?)),
        PolyCmd::Equal(p) => {
            let (a, b) = (io.poly(&p.a, p.dim)?, io.poly(&p.b, p.dim)?);
            if a.dim() != b.dim() {
                return Err(Error::Shape(format!("dimensions {} and {}", a.dim(), b.dim())));
            }
            ok(json!({"equal": a.set_equal(&b)}))
        }
    }
}

fn fun(c: FunCmd, io: &mut Io<'_>) -> Result<Output> {
    match c {
        FunCmd::Eval { fun, point } => {
            let f = io.fun(&fun)?;
            let x = io.vector(&point)?;
            if x.dim() != f.dim() {
                return Err(Error::Shape(format!("point of dim {} for a function of dim {}", x.dim(), f.dim())));
            }
            ok(json::extended(&f.evaluate(&x)))
        }
        FunCmd::Sup(a) => {
            let fs = a.funs.iter().map(|s| io.fun(s)).collect::<Result<Vec<_>>>()?;
            ok(json::function(&PLConvexFunction::sup_of(&fs)?))
        }
        FunCmd::Infhat(a) => {
            let fs = a.funs.iter().map(|s| io.fun(s)).collect::<Result<Vec<_>>>()?;
            ok(json::function(&PLConvexFunction::inf_hat(&fs)?))
        }
        FunCmd::Legendre(a) => ok(json::function(&io.fun(&a.fun)?.legendre()?)),
        FunCmd::Jtransform(a) => ok(json::function(&io.fun(&a.fun)?.j_transform()?)),
        FunCmd::Atransform(a) => ok(json::function(&io.fun(&a.fun)?.a_transform()?)),
        FunCmd::Make(m) => make(m, io),
    }
}

fn make(m: MakeCmd, io: &mut Io<'_>) -> Result<Output> {
    let f = match m {
        MakeCmd::Delta { window, dim, point, value } => {
            let w = io.poly(&window, dim)?;
            PLConvexFunction::delta(&w, &io.vector(&point)?, io.rational(&value)?)?
        }
        MakeCmd::Indicator { window, dim } => PLConvexFunction::indicator(&io.poly(&window, dim)?),
        MakeCmd::Linear { z, c } => PLConvexFunction::linear_ray(&io.vector(&z)?, io.rational(&c)?)?,
        MakeCmd::Triangle { z, h } => PLConvexFunction::triangle(&io.vector(&z)?, io.rational(&h)?)?,
        MakeCmd::Pieces { window, dim, pieces } => {
            let w = io.poly(&window, dim)?;
            let doc = io.json(&pieces)?;
            let pieces = doc
                .as_array()
                .ok_or_else(|| Error::Parse("--pieces must be an array of [a, b] pairs".into()))?
                .iter()
                .map(|p| match p.as_array().map(Vec::as_slice) {
                    Some([a, b]) => Ok((json::parse_vector(a)?, json::parse_rational_value(b)?)),
                    _ => Err(Error::Parse("each piece must be [a, b]".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            PLConvexFunction::from_pieces(&w, &pieces)?
        }
    };
    ok(json::function(&f))
}

fn iso(c: IsoCmd, io: &mut Io<'_>) -> Result<Output> {
    match c {
        IsoCmd::Classify(a) => {
            let kind = transform_kind(&a.kind)?;
            let m = json::parse_matrix(&{
                let v = io.json(&a.matrix)?;
                v.get("matrix").cloned().unwrap_or(v)
            })?;
            let k = io.poly(&a.window, a.dim)?;
            let verdict = match kind {
                TransformKind::Cvx => orderiso::classify_cvx(&m, &k),
                TransformKind::Cvx0 => orderiso::classify_cvx0(&m, &k),
            };
            ok(json::verdict(&verdict))
        }
        IsoCmd::Induce { iso, fun } => {
            let kind = transform_kind(&iso.kind)?;
            let m = json::parse_matrix(&{
                let v = io.json(&iso.matrix)?;
                v.get("matrix").cloned().unwrap_or(v)
            })?;
            let k = io.poly(&iso.window, iso.dim)?;
            let f = io.fun(&fun)?;
            ok(json::function(&orderiso::induce(kind, &m, &k, &f)?))
        }
        IsoCmd::Table1d { i1, i2, kind, a, b } => {
            let kind = match kind.as_str() {
                "I" => FiberKind::I,
                "J" => FiberKind::J,
                other => return Err(Error::Usage(format!("unknown type {other:?}; expected I or J"))),
            };
            let (i1, i2) = (interval(&i1)?, interval(&i2)?);
            let (a, b) = (io.rational(&a)?, io.rational(&b)?);
            ok(transform(&orderiso::table_1d(&i1, &i2, kind, &a, &b)?))
        }
        IsoCmd::Fz { z } => ok(transform(&orderiso::f_z(&io.rational(&z)?)?)),
    }
}

fn verify_cmd(a: VerifyArgs) -> Result<Output> {
    let format = ReportFormat::parse(&a.format)?;
    let dim = match a.dim {
        Some(d) => d,
        None => verify::default_dim(&a.suite).ok_or_else(|| Error::Usage(format!("unknown suite {:?}", a.suite)))?,
    };
    let seed = match a.seed {
        Some(s) => s,
        None => match std::env::var(SEED_ENV) {
            Ok(s) => s.trim().parse().map_err(|_| Error::Usage(format!("{SEED_ENV} must be an unsigned integer")))?,
            Err(_) => 0,
        },
    };
    let report = verify::run_suite(&TrialConfig::new(&a.suite, dim, a.trials, seed))?;
    let code = if report.all_passed() { 0 } else { 1 };
    Ok((render_report(&report, format), code))
}
