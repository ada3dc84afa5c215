//! Bodies of the named suites. Each body runs one trial and reports the first
//! violated identity.

use num_traits::{One, Signed, Zero};
use serde_json::json;

use super::gen::{FunctionClass, Gen, PolytopeConstraint};
use super::oracle::{oracle_a_pointwise, oracle_j_pointwise};
use super::{Body, Input, Trial, TrialFailure};
use crate::exact::{int, rat, Extended, QMatrix, QVector, Rational};
use crate::json;
use crate::orderiso::{
    classify_cvx0, jtype_example_orthant, jtype_example_slab, table_1d, FiberKind, InducedTransform, Interval1d,
    TransformKind, VerdictStatus,
};
use crate::plfunc::PLConvexFunction;
use crate::polyhedra::Polyhedron;
use crate::projective::{cross_ratio, ProjectiveMap};

type Out = std::result::Result<(), TrialFailure>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(TrialFailure(format!($($arg)+)));
        }
    };
}

pub(super) fn body(name: &str) -> Body {
    match name {
        "interval-preservation" => interval_preservation,
        "composition" => composition,
        "polar-lens" => polar_lens,
        "canonical-form" => canonical_form,
        "transitivity-uniqueness" => transitivity_uniqueness,
        "cross-ratio" => cross_ratio_suite,
        "legendre-involution" => legendre_involution,
        "j-involution" => j_involution,
        "a-duality" => a_duality,
        "cvx-admissible" => cvx_admissible,
        "cvx0-table" => cvx0_table,
        "extremal-exchange" => extremal_exchange,
        "gallery" => gallery,
        _ => unreachable!("suite names are checked by the caller"),
    }
}

fn e1(n: usize) -> QVector {
    QVector::unit(n, 0)
}

/// A random point of `p`: a convex combination of the vertices plus a
/// nonnegative combination of the rays.
fn point_in(gen: &mut Gen, p: &Polyhedron) -> QVector {
    let v = p.vrep();
    let w = gen.barycentric(v.vertices.len());
    let mut x = QVector::zeros(p.dim());
    for (wi, vi) in w.iter().zip(&v.vertices) {
        x = &x + &vi.scale(wi);
    }
    for r in &v.rays {
        let s = gen.rational_in(&int(0), &int(2));
        x = &x + &r.scale(&s);
    }
    x
}

/// Sample points for pointwise comparisons: half uniform, half on rays from
/// the origin through window generators.
fn sample_points(gen: &mut Gen, window: &Polyhedron, count: usize) -> Vec<QVector> {
    let n = window.dim();
    let v = window.vrep();
    let dirs: Vec<QVector> = v.vertices.iter().chain(v.rays.iter()).filter(|d| !d.is_zero()).cloned().collect();
    (0..count)
        .map(|i| {
            if i % 2 == 0 || dirs.is_empty() {
                gen.vector(n)
            } else {
                let d = &dirs[gen.below(dirs.len())];
                d.scale(&gen.rational_in(&int(0), &int(3)))
            }
        })
        .collect()
}

fn interval_preservation(t: &mut Trial) -> Out {
    let n = t.dim;
    let p = t.gen.vector(n);
    let q = &p + &t.gen.nonzero_vector(n);
    let seg = Polyhedron::polytope(vec![p.clone(), q.clone()])?;
    let f = t.gen.flmap(n, Some(&seg), false)?;
    t.record("segment", Input::Poly(seg));
    t.record("map", Input::Map(f.clone()));

    let fp = f.apply(&p)?;
    let dir = &f.apply(&q)? - &fp;
    ensure!(!dir.is_zero(), "distinct endpoints collapsed");
    let k = (0..n).find(|&i| !dir[i].is_zero()).expect("nonzero direction");
    let mut ts: Vec<Rational> = (0..5).map(|_| t.gen.rational_in(&int(0), &int(1))).collect();
    ts.sort();
    let mut prev = Rational::zero();
    for s in &ts {
        let x = &p + &(&q - &p).scale(s);
        let off = &f.apply(&x)? - &fp;
        let m = QMatrix::from_rows(vec![dir.0.clone(), off.0.clone()])?;
        ensure!(m.rank() == 1, "image of {x} is not on the image line");
        let u = &off[k] / &dir[k];
        ensure!(!u.is_negative() && u <= Rational::one(), "image of {x} leaves the image segment (parameter {u})");
        ensure!(u >= prev, "order along the segment not preserved at parameter {s}");
        prev = u;
    }
    Ok(())
}

fn composition(t: &mut Trial) -> Out {
    let n = t.dim;
    let affine = t.gen.coin(1, 4);
    let f = t.gen.flmap(n, None, affine)?;
    let g = t.gen.flmap(n, None, false)?;
    t.record("f", Input::Map(f.clone()));
    t.record("g", Input::Map(g.clone()));

    let fg = f.compose(&g)?;
    let product = f.matrix().try_mul(g.matrix())?;
    ensure!(fg.matrix().proportional_to(&product), "matrix of f∘g is not proportional to the product");
    let inv = f.inverse();
    ensure!(inv.matrix().proportional_to(&f.matrix().inverse()?), "matrix of the inverse map");
    ensure!(f.compose(&inv)? == ProjectiveMap::identity(n), "f∘f⁻¹ is not the identity");

    let mut checked = 0;
    while checked < 10 {
        let x = t.gen.vector(n);
        if g.denominator(&x).is_zero() {
            continue;
        }
        let gx = g.apply(&x)?;
        if f.denominator(&gx).is_zero() {
            continue;
        }
        ensure!(fg.apply(&x)? == f.apply(&gx)?, "(f∘g)({x}) differs from f(g({x}))");
        if !f.denominator(&x).is_zero() {
            ensure!(inv.apply(&f.apply(&x)?)? == x, "f⁻¹(f({x})) differs from {x}");
        }
        checked += 1;
    }
    Ok(())
}

fn polar_lens(t: &mut Trial) -> Out {
    let n = t.dim;
    let zero = if t.index.is_multiple_of(2) {
        PolytopeConstraint::ContainsZeroInterior
    } else {
        PolytopeConstraint::WindowForCvx0
    };
    let k = t.gen.polytope(n, &[PolytopeConstraint::InsideHalfspace(e1(n), rat(1, 2)), zero])?;
    t.record("K", Input::Poly(k.clone()));
    let lhs = k.projective_image(&ProjectiveMap::f0(n))?;
    let rhs = k.polar()?.negate().translate(&e1(n))?.polar()?;
    ensure!(lhs.set_equal(&rhs), "F0(K) = {lhs:?} but (e1 - K°)° = {rhs:?}");
    Ok(())
}

fn canonical_form(t: &mut Trial) -> Out {
    let n = t.dim;
    let f = t.gen.flmap(n, None, false)?;
    let x0 = t.gen.domain_point(&f);
    t.record("map", Input::Map(f.clone()));
    t.record("x0", Input::Json(json::vector(&x0)));
    let cf = f.canonical_form(&x0)?;
    let f0 = ProjectiveMap::f0(n);
    let mut checked = 0;
    while checked < 10 {
        let x = t.gen.vector(n);
        if x[0] == Rational::one() {
            continue;
        }
        let z = &cf.c.mul_vec(&x) + &x0;
        let lhs = cf.b.mul_vec(&(&f.apply(&z)? - &cf.y0));
        ensure!(lhs == f0.apply(&x)?, "B(F(Cx + x0) - y0) differs from F0(x) at {x}");
        checked += 1;
    }
    Ok(())
}

fn transitivity_uniqueness(t: &mut Trial) -> Out {
    let n = t.dim;
    let xs: Vec<QVector> = loop {
        let xs: Vec<QVector> = (0..=n).map(|_| t.gen.vector(n)).collect();
        let edges = QMatrix::from_rows(xs[1..].iter().map(|x| (x - &xs[0]).0).collect())?;
        if edges.rank() == n {
            break xs;
        }
    };
    let w = t.gen.barycentric(n + 1);
    let y = xs.iter().zip(&w).fold(QVector::zeros(n), |acc, (x, wi)| &acc + &x.scale(wi));
    let p = QVector(t.gen.barycentric(n + 1)[1..].to_vec());
    t.record("x", Input::Json(json!(xs.iter().map(json::vector).collect::<Vec<_>>())));
    t.record("y", Input::Json(json::vector(&y)));
    t.record("p", Input::Json(json::vector(&p)));

    let h = ProjectiveMap::from_simplex_data(&xs, &y, &p)?;
    ensure!(h.apply(&xs[0])?.is_zero(), "x0 does not map to 0");
    for (i, x) in xs.iter().enumerate().skip(1) {
        ensure!(h.apply(x)? == QVector::unit(n, i - 1), "x{i} does not map to e{i}");
    }
    ensure!(h.apply(&y)? == p, "y does not map to p");

    let simplex = Polyhedron::polytope(xs.clone())?;
    let g = t.gen.flmap(n, Some(&simplex), false)?;
    t.record("g", Input::Map(g.clone()));
    let gx = xs.iter().map(|x| g.apply(x)).collect::<crate::Result<Vec<_>>>()?;
    let h2 = ProjectiveMap::from_simplex_data(&gx, &g.apply(&y)?, &p)?;
    let rebuilt = h2.inverse().compose(&h)?;
    ensure!(rebuilt.agrees_up_to_scalar(&g), "reconstruction from n+2 values is not proportional to the map");
    Ok(())
}

fn cross_ratio_suite(t: &mut Trial) -> Out {
    let affine = t.gen.coin(1, 5);
    let f = t.gen.flmap(1, None, affine)?;
    t.record("map", Input::Map(f.clone()));
    let mut pts: Vec<Rational> = Vec::with_capacity(4);
    while pts.len() < 4 {
        let x = t.gen.rational();
        if !pts.contains(&x) && !f.denominator(&QVector(vec![x.clone()])).is_zero() {
            pts.push(x);
        }
    }
    t.record("points", Input::Json(json!(pts.iter().map(json::rational).collect::<Vec<_>>())));
    let [a, b, c, d] = [&pts[0], &pts[1], &pts[2], &pts[3]];
    let cr = cross_ratio(a, b, c, d)?;
    let img: Vec<Rational> = pts.iter().map(|x| f.apply(&QVector(vec![x.clone()])).map(|y| y[0].clone())).collect::<crate::Result<_>>()?;
    ensure!(cross_ratio(&img[0], &img[1], &img[2], &img[3])? == cr, "cross-ratio not preserved");
    ensure!(cross_ratio(b, a, c, d)? == cr.recip(), "[A,B,c,d] = [B,A,c,d]^-1 fails");
    ensure!(cross_ratio(a, b, d, c)? == cr.recip(), "[a,b,C,D] = [a,b,D,C]^-1 fails");
    ensure!(cross_ratio(a, c, b, d)? == Rational::one() - &cr, "[a,B,C,d] = 1 - [a,C,B,d] fails");
    Ok(())
}

fn legendre_involution(t: &mut Trial) -> Out {
    let n = t.dim;
    let f = t.gen.plfunc(n, FunctionClass::Cvx)?;
    t.record("f", Input::Func(f.clone()));
    let lf = f.legendre()?;
    ensure!(lf.legendre()?.same_function(&f), "LLf differs from f");

    let verts = f.epigraph().vrep().vertices.clone();
    for y in sample_points(&mut t.gen, &Polyhedron::universe(n), 5) {
        let brute = verts.iter().map(|p| p.iter().zip(y.iter()).map(|(a, b)| a * b).sum::<Rational>() - &p[n]).max();
        let brute = Extended::Finite(brute.expect("bounded windows have vertices"));
        ensure!(lf.evaluate(&y) == brute, "Lf({y}) differs from the vertex maximum");
    }

    let h = t.gen.plfunc_on(f.window(), FunctionClass::Cvx)?;
    t.record("h", Input::Func(h.clone()));
    let g = PLConvexFunction::sup_of(&[f.clone(), h])?;
    ensure!(g.legendre()?.is_leq(&lf), "f <= g but Lg <= Lf fails");
    Ok(())
}

fn j_involution(t: &mut Trial) -> Out {
    let n = t.dim;
    let f = t.gen.plfunc(n, FunctionClass::Cvx0)?;
    t.record("f", Input::Func(f.clone()));
    let jf = f.j_transform()?;
    ensure!(jf.in_cvx0(), "Jf is not geometric");
    ensure!(jf.j_transform()?.same_function(&f), "JJf differs from f");
    for x in sample_points(&mut t.gen, &f.window().conic_hull(), 20) {
        let (got, want) = (jf.evaluate(&x), oracle_j_pointwise(&f, &x));
        ensure!(got == want, "Jf({x}) = {got} but the oracle gives {want}");
    }
    Ok(())
}

fn a_duality(t: &mut Trial) -> Out {
    let n = t.dim;
    let f = t.gen.plfunc(n, FunctionClass::Cvx0)?;
    t.record("f", Input::Func(f.clone()));
    let af = f.a_transform()?;
    ensure!(af.a_transform()?.same_function(&f), "AAf differs from f");
    let lj = f.j_transform()?.legendre()?;
    let jl = f.legendre()?.j_transform()?;
    ensure!(lj.same_function(&jl), "LJf differs from JLf");
    for x in sample_points(&mut t.gen, af.window(), 20) {
        let (got, want) = (af.evaluate(&x), oracle_a_pointwise(&f, &x));
        ensure!(got == want, "Af({x}) = {got} but the oracle gives {want}");
    }
    let h = t.gen.plfunc_on(f.window(), FunctionClass::Cvx0)?;
    t.record("h", Input::Func(h.clone()));
    let g = PLConvexFunction::sup_of(&[f, h])?;
    ensure!(g.a_transform()?.is_leq(&af), "f <= g but Ag <= Af fails");
    Ok(())
}

/// `[A 0 u; v' a b; v 0 d]` from a random base map positive on `k1`, times
/// a random nonzero scalar.
fn random_cvx_matrix(gen: &mut Gen, k1: &Polyhedron) -> crate::Result<QMatrix> {
    let n = k1.dim();
    let affine = gen.coin(1, 3);
    let base = gen.flmap(n, Some(k1), affine)?;
    let bm = base.matrix();
    let mut m = QMatrix::zeros(n + 2, n + 2);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = bm[(i, j)].clone();
        }
        m[(i, n + 1)] = bm[(i, n)].clone();
        m[(n, i)] = gen.rational();
        m[(n + 1, i)] = bm[(n, i)].clone();
    }
    m[(n, n)] = gen.positive();
    m[(n, n + 1)] = gen.rational();
    m[(n + 1, n + 1)] = bm[(n, n)].clone();
    let s = loop {
        let s = gen.rational();
        if !s.is_zero() {
            break s;
        }
    };
    Ok(m.scale(&s))
}

fn cvx_admissible(t: &mut Trial) -> Out {
    let n = t.dim;
    let k1 = t.gen.polytope(n, &[])?;
    let m = random_cvx_matrix(&mut t.gen, &k1)?;
    t.record("K1", Input::Poly(k1.clone()));
    t.record("matrix", Input::Json(json::matrix(&m)));
    let tr = InducedTransform::new(TransformKind::Cvx, &m, &k1)?;
    let back = tr.inverse();

    let mut fs = Vec::new();
    for _ in 0..10 {
        fs.push(t.gen.plfunc_on(&k1, FunctionClass::Cvx)?);
    }
    for i in 0..3 {
        fs.push(PLConvexFunction::sup_of(&[fs[i].clone(), fs[i + 1].clone()])?);
        fs.push(PLConvexFunction::inf_hat(&[fs[i].clone(), fs[i + 5].clone()])?);
    }
    let tfs = fs.iter().map(|f| tr.apply(f)).collect::<crate::Result<Vec<_>>>()?;
    for (i, (f, tf)) in fs.iter().zip(&tfs).enumerate() {
        ensure!(back.apply(tf)?.same_function(f), "T⁻¹Tf differs from f for function {i}");
    }
    for i in 0..fs.len() {
        for j in 0..fs.len() {
            if i != j {
                ensure!(
                    fs[i].is_leq(&fs[j]) == tfs[i].is_leq(&tfs[j]),
                    "order between functions {i} and {j} not preserved"
                );
            }
        }
    }

    let x = point_in(&mut t.gen, &k1);
    let c = t.gen.rational();
    let (bx, by) = tr.apply_point(&x, &c)?;
    let delta = tr.apply(&PLConvexFunction::delta(&k1, &x, c)?)?;
    ensure!(
        delta.same_function(&PLConvexFunction::delta(&tr.target_window, &bx, by)?),
        "image of a delta is not a delta"
    );

    // Fiber formula from the normalized blocks [A 0 u; v' 1 b; v 0 d].
    let nm = tr.map.matrix();
    let head = |row: usize| QVector(nm.row(row)[..n].to_vec());
    let base = tr.base_map()?;
    for f in &fs[..3] {
        let x = point_in(&mut t.gen, &k1);
        let Extended::Finite(fx) = f.evaluate(&x) else {
            return Err(TrialFailure(format!("f is infinite at window point {x}")));
        };
        let num = &nm[(n, n)] * fx + head(n).dot(&x) + &nm[(n, n + 1)];
        let den = head(n + 1).dot(&x) + &nm[(n + 1, n + 1)];
        let got = tr.apply(f)?.evaluate(&base.apply(&x)?);
        ensure!(got == Extended::Finite(num / den), "fiber formula fails at {x}");
    }

    let pair = [fs[0].clone(), fs[1].clone()];
    let tpair = [tfs[0].clone(), tfs[1].clone()];
    ensure!(
        tr.apply(&PLConvexFunction::sup_of(&pair)?)?.same_function(&PLConvexFunction::sup_of(&tpair)?),
        "T does not preserve sup"
    );
    ensure!(
        tr.apply(&PLConvexFunction::inf_hat(&pair)?)?.same_function(&PLConvexFunction::inf_hat(&tpair)?),
        "T does not preserve inf-hat"
    );

    // (Tf)(x) = (1 - x1) f(x/(1 - x1)) for (x, y) -> (x, y)/(1 + x1).
    let k = t.gen.polytope(n, &[PolytopeConstraint::InsideHalfspace(e1(n).scale(&int(-1)), rat(1, 2))])?;
    t.record("K_closed_form", Input::Poly(k.clone()));
    let mut mm = QMatrix::identity(n + 2);
    mm[(n + 1, 0)] = Rational::one();
    let tc = InducedTransform::new(TransformKind::Cvx, &mm, &k)?;
    let f = t.gen.plfunc_on(&k, FunctionClass::Cvx)?;
    t.record("f_closed_form", Input::Func(f.clone()));
    let tf = tc.apply(&f)?;
    let mut checked = 0;
    while checked < 20 {
        let x = if checked % 2 == 0 { tc.base_map()?.apply(&point_in(&mut t.gen, &k))? } else { t.gen.vector(n) };
        let s = Rational::one() - &x[0];
        if !s.is_positive() {
            continue;
        }
        let want = match f.evaluate(&x.scale(&s.recip())) {
            Extended::Finite(v) => Extended::Finite(v * &s),
            other => other,
        };
        ensure!(tf.evaluate(&x) == want, "closed form fails at {x}");
        checked += 1;
    }
    Ok(())
}

fn table_row(gen: &mut Gen, row: usize) -> (Interval1d, Interval1d, FiberKind) {
    let mut interval = |bounded: bool| if bounded { Interval1d::Bounded(gen.positive()) } else { Interval1d::HalfLine };
    let i1 = interval(row & 4 == 0);
    let i2 = interval(row & 2 == 0);
    let kind = if row & 1 == 0 { FiberKind::I } else { FiberKind::J };
    (i1, i2, kind)
}

/// A point `z > 0` of the closure of `i`.
fn point_of(gen: &mut Gen, i: &Interval1d) -> Rational {
    match i {
        Interval1d::Bounded(x) => gen.rational_open(&int(0), x),
        Interval1d::HalfLine => gen.positive(),
    }
}

fn is_indicator(g: &PLConvexFunction) -> crate::Result<bool> {
    if g.is_plus_infinity() {
        return Ok(false);
    }
    let dom = g.epigraph().project(g.dim())?;
    Ok(g.same_function(&PLConvexFunction::indicator(&dom)))
}

/// Whether `g = c x` on the one-dimensional `window`, for some `c >= 0`.
fn is_linear_on(g: &PLConvexFunction, window: &Polyhedron) -> crate::Result<bool> {
    let w = window.vrep().vertices.iter().map(|v| v[0].clone()).max().filter(|w| w.is_positive()).unwrap_or_else(Rational::one);
    let Extended::Finite(gw) = g.evaluate(&QVector(vec![w.clone()])) else {
        return Ok(false);
    };
    let lin = PLConvexFunction::from_pieces(window, &[(QVector(vec![gw / w]), Rational::zero())])?;
    Ok(g.same_function(&lin))
}

fn cvx0_table(t: &mut Trial) -> Out {
    let row = (t.index % 8) as usize;
    let (i1, i2, kind) = table_row(&mut t.gen, row);
    let (a, b) = (t.gen.positive(), t.gen.positive());
    t.record("row", Input::Json(json!({"i1": format!("{i1:?}"), "i2": format!("{i2:?}"), "kind": format!("{kind:?}"), "a": json::rational(&a), "b": json::rational(&b)})));
    let tr = table_1d(&i1, &i2, kind, &a, &b)?;
    let verdict = classify_cvx0(tr.map.matrix(), &i1.closure());
    let want = match kind {
        FiberKind::I => VerdictStatus::Cvx0IType,
        FiberKind::J => VerdictStatus::Cvx0JType,
    };
    ensure!(verdict.status == want, "classified as {} ({})", verdict.status, verdict.reason);
    let target = verdict.target_window.expect("admissible");
    ensure!(target.set_equal(&i2.closure()), "target window {target:?}");

    let z = point_of(&mut t.gen, &i1);
    let c = t.gen.positive();
    let ind = PLConvexFunction::indicator_segment(&QVector(vec![z]))?;
    let lin = PLConvexFunction::from_pieces(&i1.closure(), &[(QVector(vec![c]), Rational::zero())])?;
    let (ti, tl) = (tr.apply(&ind)?, tr.apply(&lin)?);
    let t2 = i2.closure();
    match kind {
        FiberKind::I => {
            ensure!(is_indicator(&ti)?, "I-type sends an indicator outside the indicators");
            ensure!(is_linear_on(&tl, &t2)?, "I-type sends a linear function outside the linear ones");
        }
        FiberKind::J => {
            ensure!(is_linear_on(&ti, &t2)?, "J-type sends an indicator to a non-linear function");
            ensure!(is_indicator(&tl)?, "J-type sends a linear function to a non-indicator");
        }
    }

    if row == 0 {
        let bb = t.gen.positive();
        for n in 1..=3 {
            let orth = classify_cvx0(&jtype_example_orthant(n, &bb), &Polyhedron::orthant(n));
            ensure!(orth.status == VerdictStatus::Cvx0JType, "orthant example in dim {n}: {}", orth.reason);
            ensure!(
                orth.target_window.is_some_and(|w| w.set_equal(&Polyhedron::standard_simplex(n))),
                "orthant example target in dim {n}"
            );
            let slab = classify_cvx0(&jtype_example_slab(n), &Polyhedron::slab(n));
            ensure!(slab.status == VerdictStatus::Cvx0JType, "slab example in dim {n}: {}", slab.reason);
            ensure!(slab.target_window.is_some_and(|w| w.set_equal(&Polyhedron::slab(n))), "slab example target in dim {n}");
        }
        for n in 1..=2 {
            let k = t.gen.polytope(n, &[PolytopeConstraint::ContainsZeroInterior])?;
            let v = classify_cvx0(&jtype_example_orthant(n, &bb), &k);
            ensure!(v.status == VerdictStatus::Rejected, "J-type over a window with interior origin was accepted");
        }
    }
    Ok(())
}

fn extremal_exchange(t: &mut Trial) -> Out {
    let n = t.dim;
    let z = t.gen.nonzero_vector(n);
    let (c, h) = (t.gen.positive(), t.gen.positive());
    t.record("z", Input::Json(json::vector(&z)));
    t.record("c", Input::Json(json::rational(&c)));
    t.record("h", Input::Json(json::rational(&h)));

    let ind = PLConvexFunction::indicator_segment(&z)?;
    let lin = PLConvexFunction::linear_ray(&z, Rational::one())?;
    ensure!(ind.j_transform()?.same_function(&lin), "J(1_[0,z]) differs from the linear function with value 1 at z");
    let lc = PLConvexFunction::linear_ray(&z, c.clone())?;
    let seg = PLConvexFunction::indicator_segment(&z.scale(&c.recip()))?;
    ensure!(lc.j_transform()?.same_function(&seg), "J(l_c) differs from 1_[0,z/c]");
    let tri = PLConvexFunction::triangle(&z, h.clone())?;
    let want = PLConvexFunction::triangle(&z.scale(&h.recip()), h.recip())?;
    ensure!(tri.j_transform()?.same_function(&want), "J(triangle(z,h)) differs from triangle(z/h,1/h)");

    if n == 1 {
        let zz = &z[0];
        ensure!(
            ind.j_transform()?.evaluate(&QVector(vec![zz.clone()])) == Extended::Finite(Rational::one()),
            "J(1_[0,z]) is not l_(1/z)"
        );
        let row = t.gen.below(8);
        let (i1, i2, kind) = table_row(&mut t.gen, row);
        let (a, b) = (t.gen.positive(), t.gen.positive());
        let tr = table_1d(&i1, &i2, kind, &a, &b)?;
        let zp = point_of(&mut t.gen, &i1);
        t.record("table", Input::Map(tr.map.clone()));
        t.record("zp", Input::Json(json::rational(&zp)));
        let (px, py) = tr.apply_point(&QVector(vec![zp.clone()]), &h)?;
        let image = tr.apply(&PLConvexFunction::triangle(&QVector(vec![zp]), h.clone())?)?;
        ensure!(
            image.same_function(&PLConvexFunction::triangle(&px, py)?),
            "table map does not send a triangle to a triangle"
        );
    }
    Ok(())
}

fn gallery(t: &mut Trial) -> Out {
    let n = t.dim;
    let ball = ProjectiveMap::f_ball(n, &rat(3, 5))?;
    let mut p = QVector::zeros(n);
    p[0] = rat(3, 5);
    p[1] = rat(4, 5);
    let mut q = QVector::zeros(n);
    q[0] = rat(15, 17);
    q[1] = rat(8, 17);
    ensure!(ball.apply(&p)? == q, "f_ball(3/5) sends (3/5, 4/5) to {}", ball.apply(&p)?);

    let s = t.gen.rational_open(&int(0), &int(1));
    let lam = int(2) * &s / (Rational::one() + &s * &s);
    let random_ball = ProjectiveMap::f_ball(n, &lam)?;
    t.record("lambda", Input::Json(json::rational(&lam)));
    ensure!(random_ball.apply(&QVector::zeros(n))? == e1(n).scale(&lam), "f_ball does not send 0 to lambda e1");
    for i in 0..20 {
        let u = t.gen.unit_vector(n);
        let f = if i % 2 == 0 { &ball } else { &random_ball };
        let fu = f.apply(&u)?;
        ensure!(fu.dot(&fu) == Rational::one(), "unit vector {u} leaves the sphere");
    }

    let alpha = if t.index == 0 { Rational::one() } else { t.gen.positive() };
    t.record("alpha", Input::Json(json::rational(&alpha)));
    let trap = ProjectiveMap::f_trapezoid(&alpha)?;
    let verts = vec![
        QVector::from_ints(&[0, 0]),
        QVector::from_ints(&[1, 0]),
        QVector(vec![int(1), &alpha + Rational::one()]),
        QVector::from_ints(&[0, 1]),
    ];
    for i in 0..4 {
        ensure!(trap.apply(&verts[i])? == verts[(i + 1) % 4], "vertex {} is not cycled", verts[i]);
    }
    let k = Polyhedron::polytope(verts)?;
    ensure!(k.projective_image(&trap)?.set_equal(&k), "trapezoid is not mapped onto itself");
    Ok(())
}
