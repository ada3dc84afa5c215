//! Seeded generators, brute-force oracles and named invariant suites.
//!
//! Trial `i` of a run draws all of its randomness from a ChaCha8 stream keyed
//! by `(seed, i)`, so a report is a pure function of its [`TrialConfig`] up to
//! the wall time. Trials run in parallel; the reduction keeps counts and the
//! failure with the smallest trial index.

mod gen;
mod oracle;
mod suites;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

pub use gen::{FunctionClass, Gen, PolytopeConstraint, SizeBounds};
pub use oracle::{oracle_a_pointwise, oracle_j_pointwise};

use crate::plfunc::PLConvexFunction;
use crate::polyhedra::Polyhedron;
use crate::projective::ProjectiveMap;
use crate::{Error, Result};

/// Every suite name accepted by [`run_suite`], with its `(min, max, default)`
/// dimension.
pub const SUITES: &[(&str, usize, usize, usize)] = &[
    ("interval-preservation", 1, 3, 2),
    ("composition", 1, 4, 2),
    ("polar-lens", 1, 3, 2),
    ("canonical-form", 1, 4, 2),
    ("transitivity-uniqueness", 1, 3, 2),
    ("cross-ratio", 1, 1, 1),
    ("legendre-involution", 1, 2, 1),
    ("j-involution", 1, 2, 1),
    ("a-duality", 1, 2, 1),
    ("cvx-admissible", 1, 2, 1),
    ("cvx0-table", 1, 1, 1),
    ("extremal-exchange", 1, 3, 1),
    ("gallery", 2, 3, 2),
];

/// Default dimension of a suite, `None` if the name is unknown.
pub fn default_dim(suite: &str) -> Option<usize> {
    SUITES.iter().find(|s| s.0 == suite).map(|s| s.3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub suite: String,
    pub dim: usize,
    pub trials: u64,
    pub seed: u64,
    pub bounds: SizeBounds,
}

impl TrialConfig {
    pub fn new(suite: &str, dim: usize, trials: u64, seed: u64) -> Self {
        TrialConfig { suite: suite.into(), dim, trials, seed, bounds: SizeBounds::default() }
    }

    /// The generator for trial `index`.
    pub fn gen(&self, index: u64) -> Gen {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        Gen::new(rng, self.bounds.clone())
    }
}

/// A failing trial with a reproducer.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub trial: u64,
    pub message: String,
    pub inputs: Value,
}

/// `passed + failed = trials`.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
    pub seed: u64,
    pub first_failure: Option<Failure>,
    pub ms: u64,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.passed == self.trials
    }
}

/// Inputs recorded by a trial, serialized only when the trial fails.
#[derive(Clone, Debug)]
pub(crate) enum Input {
    Poly(Polyhedron),
    Func(PLConvexFunction),
    Map(ProjectiveMap),
    Json(Value),
}

impl Input {
    fn to_json(&self) -> Value {
        match self {
            Input::Poly(p) => crate::json::polyhedron(p),
            Input::Func(f) => crate::json::function(f),
            Input::Map(m) => crate::json::map(m),
            Input::Json(v) => v.clone(),
        }
    }
}

/// Per-trial state handed to a suite body.
pub(crate) struct Trial {
    pub gen: Gen,
    pub dim: usize,
    pub index: u64,
    inputs: Vec<(String, Input)>,
}

impl Trial {
    pub fn record(&mut self, key: &str, input: Input) {
        self.inputs.push((key.into(), input));
    }

    fn inputs_json(&self) -> Value {
        Value::Object(self.inputs.iter().map(|(k, v)| (k.clone(), v.to_json())).collect())
    }
}

impl From<Error> for TrialFailure {
    fn from(e: Error) -> Self {
        TrialFailure(e.to_string())
    }
}

pub(crate) struct TrialFailure(pub String);

pub(crate) type Body = fn(&mut Trial) -> std::result::Result<(), TrialFailure>;

fn check_dim(cfg: &TrialConfig) -> Result<Body> {
    let &(name, lo, hi, _) = SUITES
        .iter()
        .find(|s| s.0 == cfg.suite)
        .ok_or_else(|| Error::Usage(format!("unknown suite {:?}", cfg.suite)))?;
    if cfg.trials == 0 {
        return Err(Error::Usage("trials must be at least 1".into()));
    }
    if cfg.dim < lo || cfg.dim > hi {
        return Err(Error::Usage(format!("suite {name} supports dimensions {lo}..={hi}, got {}", cfg.dim)));
    }
    Ok(suites::body(name))
}

fn run_trial(cfg: &TrialConfig, body: Body, index: u64) -> Option<Failure> {
    let mut trial = Trial { gen: cfg.gen(index), dim: cfg.dim, index, inputs: Vec::new() };
    let outcome = catch_unwind(AssertUnwindSafe(|| body(&mut trial)));
    let message = match outcome {
        Ok(Ok(())) => return None,
        Ok(Err(TrialFailure(m))) => m,
        Err(panic) => {
            let text = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            format!("panic: {text}")
        }
    };
    Some(Failure { trial: index, message, inputs: trial.inputs_json() })
}

/// Runs `cfg.trials` independent trials of the named suite.
pub fn run_suite(cfg: &TrialConfig) -> Result<SuiteReport> {
    let body = check_dim(cfg)?;
    let start = Instant::now();
    let failures: Vec<Failure> = (0..cfg.trials)
        .into_par_iter()
        .filter_map(|i| run_trial(cfg, body, i))
        .collect();
    let failed = failures.len() as u64;
    let first_failure = failures.into_iter().min_by_key(|f| f.trial);
    Ok(SuiteReport {
        suite: cfg.suite.clone(),
        trials: cfg.trials,
        passed: cfg.trials - failed,
        failed,
        seed: cfg.seed,
        first_failure,
        ms: start.elapsed().as_millis() as u64,
    })
}

/// Random polytope for `cfg`, seeded by trial index 0.
pub fn gen_polytope(cfg: &TrialConfig, constraints: &[PolytopeConstraint]) -> Result<Polyhedron> {
    cfg.gen(0).polytope(cfg.dim, constraints)
}

/// Random function of the given class for `cfg`, seeded by trial index 0.
pub fn gen_plfunc(cfg: &TrialConfig, class: FunctionClass) -> Result<PLConvexFunction> {
    cfg.gen(0).plfunc(cfg.dim, class)
}

/// Random invertible map for `cfg` whose denominator is positive on `domain`.
pub fn gen_flmap(cfg: &TrialConfig, domain: &Polyhedron, affine: bool) -> Result<ProjectiveMap> {
    cfg.gen(0).flmap(cfg.dim, Some(domain), affine)
}
