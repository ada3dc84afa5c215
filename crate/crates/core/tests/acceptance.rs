//! Acceptance gate: every criterion runs at exact equality under its time
//! limit and prints one PASS/FAIL line. The process fails if any criterion
//! fails.

use std::time::{Duration, Instant};

use window_duality::exact::{int, rat};
use window_duality::polyhedra::Polyhedron;
use window_duality::verify::{oracle_a_pointwise, run_suite, TrialConfig};
use window_duality::{Extended, PLConvexFunction, QVector};

const SEED: u64 = 42;

struct Outcome {
    ok: bool,
    detail: String,
}

fn suites(runs: &[(&str, usize, u64)]) -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for &(suite, dim, trials) in runs {
        match run_suite(&TrialConfig::new(suite, dim, trials, SEED)) {
            Ok(r) => {
                ok &= r.all_passed();
                detail.push(format!("{suite}[n={dim}] {}/{}", r.passed, r.trials));
                if let Some(f) = r.first_failure {
                    detail.push(format!("first failure at trial {}: {}", f.trial, f.message));
                }
            }
            Err(e) => {
                ok = false;
                detail.push(format!("{suite}[n={dim}] error: {e}"));
            }
        }
    }
    Outcome { ok, detail: detail.join(", ") }
}

fn a_fixed_values() -> Outcome {
    let v = |xs: &[i64]| QVector::from_ints(xs);
    let abs = PLConvexFunction::from_pieces(&Polyhedron::universe(1), &[(v(&[1]), int(0)), (v(&[-1]), int(0))])
        .expect("|x|");
    let mut ok = abs.a_transform().map(|a| a.same_function(&abs)).unwrap_or(false);
    for n in 1..=3 {
        let zero = PLConvexFunction::from_pieces(&Polyhedron::universe(n), &[(QVector::zeros(n), int(0))]).expect("0");
        let origin = PLConvexFunction::indicator(&Polyhedron::point(QVector::zeros(n)));
        ok &= zero.a_transform().map(|a| a.same_function(&origin)).unwrap_or(false);
        ok &= origin.a_transform().map(|a| a.same_function(&zero)).unwrap_or(false);
        ok &= oracle_a_pointwise(&origin, &QVector::unit(n, 0)) == Extended::Finite(int(0));
    }
    ok &= oracle_a_pointwise(&abs, &QVector(vec![rat(1, 2)])) == Extended::Finite(rat(1, 2));
    Outcome { ok, detail: "A(|x|)=|x|, A(1_{0})=0, A(0)=1_{0}".into() }
}

fn combine(parts: Vec<Outcome>) -> Outcome {
    Outcome {
        ok: parts.iter().all(|o| o.ok),
        detail: parts.into_iter().map(|o| o.detail).collect::<Vec<_>>().join("; "),
    }
}

fn main() {
    type Check = Box<dyn Fn() -> Outcome>;
    let criteria: Vec<(&str, u64, Check)> = vec![
        ("1 polar-lens identity", 20, Box::new(|| suites(&[("polar-lens", 1, 100), ("polar-lens", 2, 100), ("polar-lens", 3, 100)]))),
        ("2 composition and inverse laws", 10, Box::new(|| suites(&[("composition", 2, 500), ("composition", 1, 100), ("composition", 3, 100), ("composition", 4, 100)]))),
        ("3 interval preservation", 10, Box::new(|| suites(&[("interval-preservation", 2, 500), ("interval-preservation", 1, 100), ("interval-preservation", 3, 100)]))),
        (
            "4 transitivity and uniqueness",
            15,
            Box::new(|| suites(&[("transitivity-uniqueness", 2, 200), ("transitivity-uniqueness", 3, 200)])),
        ),
        ("5 canonical form", 10, Box::new(|| suites(&[("canonical-form", 2, 200), ("canonical-form", 1, 50), ("canonical-form", 3, 50), ("canonical-form", 4, 50)]))),
        ("6 cross-ratio", 5, Box::new(|| suites(&[("cross-ratio", 1, 500)]))),
        (
            "7 Legendre involution and order reversal",
            30,
            Box::new(|| suites(&[("legendre-involution", 1, 200), ("legendre-involution", 2, 200)])),
        ),
        (
            "8 J identities and extremal exchange",
            30,
            Box::new(|| suites(&[("j-involution", 1, 200), ("j-involution", 2, 200), ("extremal-exchange", 1, 50), ("extremal-exchange", 2, 50), ("extremal-exchange", 3, 50)])),
        ),
        (
            "9 A duality",
            30,
            Box::new(|| combine(vec![suites(&[("a-duality", 1, 200), ("a-duality", 2, 200)]), a_fixed_values()])),
        ),
        (
            "10 Cvx(K) admissible transforms",
            30,
            Box::new(|| suites(&[("cvx-admissible", 1, 20), ("cvx-admissible", 2, 20)])),
        ),
        ("11 Cvx0 classification and 1-D table", 20, Box::new(|| suites(&[("cvx0-table", 1, 400)]))),
        ("12 gallery regressions", 5, Box::new(|| suites(&[("gallery", 2, 20), ("gallery", 3, 20)]))),
    ];

    let mut failures = 0;
    for (name, limit, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let pass = outcome.ok && in_time;
        failures += usize::from(!pass);
        println!(
            "{} criterion {name}: {} ({:.2}s of {limit}s){}",
            if pass { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            if in_time { "" } else { " over time limit" },
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
