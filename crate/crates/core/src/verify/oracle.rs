//! Brute-force pointwise oracles for `J` and `A`.
//!
//! Both work directly on the facets and generators of `epi(f)` and share no
//! code with the epigraph-image path in `plfunc`.

use num_traits::{Signed, Zero};

use crate::exact::{Extended, QVector, Rational};
use crate::plfunc::PLConvexFunction;

/// `inf{r > 0 : f(x/r) <= 1/r}`.
///
/// Substituting `(x/r, 1/r)` into a facet `<a, z> + alpha u <= b` and
/// multiplying by `r > 0` gives the linear condition `<a, x> + alpha <= b r`,
/// so the feasible radii form an interval whose lower end is the answer.
pub fn oracle_j_pointwise(f: &PLConvexFunction, x: &QVector) -> Extended {
    let n = f.dim();
    assert_eq!(x.dim(), n, "evaluation point dimension");
    let epi = f.epigraph();
    if epi.is_empty() {
        return Extended::PosInfinity;
    }
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for (a, b) in &epi.hrep().ineqs {
        let lhs: Rational = a.iter().take(n).zip(x.iter()).map(|(p, q)| p * q).sum::<Rational>() + &a[n];
        if b.is_zero() {
            if lhs.is_positive() {
                return Extended::PosInfinity;
            }
            continue;
        }
        let bound = lhs / b;
        if b.is_positive() {
            if lo.as_ref().is_none_or(|l| bound > *l) {
                lo = Some(bound);
            }
        } else if hi.as_ref().is_none_or(|h| bound < *h) {
            hi = Some(bound);
        }
    }
    let lo = lo.filter(|l| l.is_positive()).unwrap_or_else(Rational::zero);
    match hi {
        Some(h) if h < lo || (lo.is_zero() && !h.is_positive()) => Extended::PosInfinity,
        _ => Extended::Finite(lo),
    }
}

/// `sup{(<x, y> - 1)/u : (y, u) in epi f, u > 0}`, with `sup ∅ = 0`.
///
/// A linear-fractional objective over a polyhedron is extremal on its
/// generators: vertices with `u > 0` contribute their value, rays with
/// `r_u > 0` their limit slope, and the face `{u = 0}` gives `+inf` as soon
/// as the numerator is positive anywhere on it.
pub fn oracle_a_pointwise(f: &PLConvexFunction, x: &QVector) -> Extended {
    let n = f.dim();
    assert_eq!(x.dim(), n, "evaluation point dimension");
    let epi = f.epigraph();
    if epi.is_empty() {
        return Extended::Finite(Rational::zero());
    }
    let v = epi.vrep();
    let xy = |p: &QVector| -> Rational { p.iter().take(n).zip(x.iter()).map(|(a, b)| a * b).sum() };
    let mut best = Rational::zero();
    for p in &v.vertices {
        let num = xy(p) - Rational::from_integer(1.into());
        if p[n].is_zero() {
            if num.is_positive() {
                return Extended::PosInfinity;
            }
        } else {
            best = best.max(num / &p[n]);
        }
    }
    for r in &v.rays {
        let num = xy(r);
        if r[n].is_zero() {
            if num.is_positive() {
                return Extended::PosInfinity;
            }
        } else {
            best = best.max(num / &r[n]);
        }
    }
    Extended::Finite(best)
}
