//! Values stated in the source material, checked exactly.

use window_duality::exact::{int, rat, QMatrix};
use window_duality::orderiso::{
    classify_cvx0, f_z, induce, jtype_example_orthant, jtype_example_slab, jtype_window_check, table_1d, FiberKind,
    Interval1d, TransformKind,
};
use window_duality::projective::cross_ratio;
use window_duality::{Hyperplane, PLConvexFunction, Polyhedron, ProjectiveMap, QVector, Rational, VerdictStatus};

fn v(xs: &[i64]) -> QVector {
    QVector::from_ints(xs)
}

#[test]
fn f0_is_an_involution() {
    for n in 1..=4 {
        let f0 = ProjectiveMap::f0(n);
        assert_eq!(f0.inverse(), f0);
        assert_eq!(f0.compose(&f0).unwrap(), ProjectiveMap::identity(n));
    }
}

#[test]
fn trapezoid_map_is_not_affine() {
    assert!(!ProjectiveMap::f_trapezoid(&int(1)).unwrap().is_affine());
}

#[test]
fn f0_defining_hyperplane() {
    let h = ProjectiveMap::f0(2).defining_hyperplane().unwrap();
    assert!(h.same_set(&Hyperplane::new(v(&[1, 0]), int(1)).unwrap()));
}

#[test]
fn image_boundary_ignores_translation_and_constant() {
    let a = QMatrix::from_ints(&[&[2, 1], &[0, 3]]);
    let c = v(&[1, -2]);
    let f = ProjectiveMap::from_parts(&a, &v(&[0, 0]), &c, int(5)).unwrap();
    let g = ProjectiveMap::from_parts(&a, &v(&[7, -1]), &c, int(-3)).unwrap();
    assert!(f.image_boundary().unwrap().same_set(&g.image_boundary().unwrap()));
}

#[test]
fn cross_ratio_swap_of_first_pair() {
    assert_eq!(cross_ratio(&int(1), &int(0), &int(2), &int(3)).unwrap(), rat(3, 4));
}

#[test]
fn ball_map_sends_origin_to_lambda_e1() {
    let g = ProjectiveMap::f_ball(2, &rat(3, 5)).unwrap();
    assert_eq!(g.apply(&v(&[0, 0])).unwrap(), QVector(vec![rat(3, 5), int(0)]));
    assert_eq!(g.apply(&QVector(vec![rat(3, 5), rat(4, 5)])).unwrap(), QVector(vec![rat(15, 17), rat(8, 17)]));
}

#[test]
fn trapezoid_vertices_cycle() {
    let f = ProjectiveMap::f_trapezoid(&int(1)).unwrap();
    let cycle = [v(&[0, 0]), v(&[1, 0]), v(&[1, 2]), v(&[0, 1])];
    for i in 0..4 {
        assert_eq!(f.apply(&cycle[i]).unwrap(), cycle[(i + 1) % 4]);
    }
    let k = Polyhedron::polytope(cycle.to_vec()).unwrap();
    assert!(k.projective_image(&f).unwrap().set_equal(&k));
}

#[test]
fn triangle_is_max_of_indicator_and_linear() {
    let z = v(&[2]);
    let sup = PLConvexFunction::sup_of(&[
        PLConvexFunction::linear_ray(&v(&[1]), int(1)).unwrap(),
        PLConvexFunction::indicator_segment(&z).unwrap(),
    ])
    .unwrap();
    assert!(sup.same_function(&PLConvexFunction::triangle(&z, int(2)).unwrap()));
    let z2 = v(&[2, 0]);
    let parents = [
        PLConvexFunction::indicator_segment(&z2).unwrap(),
        PLConvexFunction::linear_ray(&z2, int(2)).unwrap(),
    ];
    assert!(PLConvexFunction::sup_of(&parents).unwrap().same_function(&PLConvexFunction::triangle(&z2, int(2)).unwrap()));
}

#[test]
fn function_is_hull_of_its_deltas() {
    let w = Polyhedron::interval(int(-1), int(2));
    let f = PLConvexFunction::from_pieces(&w, &[(v(&[1]), int(0)), (v(&[-2]), int(1))]).unwrap();
    let deltas: Vec<PLConvexFunction> = f
        .epigraph()
        .vrep()
        .vertices
        .iter()
        .map(|p| PLConvexFunction::delta(&w, &QVector(vec![p[0].clone()]), p[1].clone()).unwrap())
        .collect();
    assert!(PLConvexFunction::inf_hat(&deltas).unwrap().same_function(&f));
}

#[test]
fn indicator_and_linear_are_incomparable() {
    let l1 = PLConvexFunction::linear_ray(&v(&[1]), int(1)).unwrap();
    let ind = PLConvexFunction::indicator_segment(&v(&[2])).unwrap();
    assert!(!l1.is_leq(&ind));
    assert!(!ind.is_leq(&l1));
}

#[test]
fn indicator_is_the_minimum_of_cvx0() {
    let k = Polyhedron::interval(int(-1), int(3));
    let ind = PLConvexFunction::indicator(&k);
    let f = PLConvexFunction::from_pieces(&k, &[(v(&[0]), int(0)), (v(&[2]), int(-1)), (v(&[-1]), int(0))]).unwrap();
    assert!(f.in_cvx0());
    assert!(ind.is_leq(&f));
    let top = PLConvexFunction::indicator(&Polyhedron::point(v(&[0])));
    assert!(f.is_leq(&top));
}

#[test]
fn j_fixes_origin_indicator() {
    for n in 1..=3 {
        let origin = PLConvexFunction::indicator(&Polyhedron::point(QVector::zeros(n)));
        assert!(origin.j_transform().unwrap().same_function(&origin));
    }
}

#[test]
fn epigraph_inversion_induces_j() {
    let f = PLConvexFunction::from_pieces(
        &Polyhedron::universe(2),
        &[(v(&[0, 0]), int(0)), (v(&[1, 1]), int(-1)), (v(&[-2, 0]), int(-1))],
    )
    .unwrap();
    let m = ProjectiveMap::epigraph_inversion(2);
    let induced = induce(TransformKind::Cvx0, m.matrix(), &Polyhedron::universe(2), &f).unwrap();
    assert!(induced.same_function(&f.j_transform().unwrap()));
}

#[test]
fn table_last_rows() {
    let j = table_1d(&Interval1d::HalfLine, &Interval1d::HalfLine, FiberKind::J, &int(1), &int(1)).unwrap();
    assert_eq!(j.map, ProjectiveMap::epigraph_inversion(1));
    let i = table_1d(&Interval1d::HalfLine, &Interval1d::HalfLine, FiberKind::I, &int(2), &int(3)).unwrap();
    assert_eq!(i.map.apply(&v(&[1, 1])).unwrap(), v(&[2, 6]));
    assert_eq!(i.map.apply(&QVector(vec![rat(1, 2), int(5)])).unwrap(), QVector(vec![int(1), int(30)]));
}

#[test]
fn table_entries_match_closed_formulas() {
    let (x1, x2, a, b) = (rat(3, 2), rat(5, 4), rat(2, 3), rat(7, 5));
    let (x, y) = (rat(1, 3), rat(2, 7));
    let one = int(1);
    let bi = Interval1d::Bounded(x1.clone());
    let bo = Interval1d::Bounded(x2.clone());
    let h = Interval1d::HalfLine;
    let cases: Vec<(Interval1d, Interval1d, FiberKind, (Rational, Rational))> = vec![
        (bi.clone(), bo.clone(), FiberKind::I, {
            let s = &x2 / (&x * (&one - &a) + &x1 * &a);
            (&s * &x, &s * &b * &y)
        }),
        (bi.clone(), bo.clone(), FiberKind::J, {
            let s = &b * &x2 / (&b * &x + &y);
            (&s * &x, &s * &a * (&x1 - &x))
        }),
        (bi.clone(), h.clone(), FiberKind::I, {
            let s = &a / (&x1 - &x);
            (&s * &x, &s * &b * &y)
        }),
        (bi.clone(), h.clone(), FiberKind::J, {
            let s = &b / &y;
            (&s * &x, &s * &a * (&x1 - &x))
        }),
        (h.clone(), bo.clone(), FiberKind::I, {
            let s = &a * &x2 / (&a * &x + &one);
            (&s * &x, &s * &b * &y)
        }),
        (h.clone(), bo.clone(), FiberKind::J, {
            let s = &b * &x2 / (&b * &x + &y);
            (&s * &x, &s * &a)
        }),
        (h.clone(), h.clone(), FiberKind::I, (&a * &x, &a * &b * &y)),
        (h.clone(), h.clone(), FiberKind::J, {
            let s = &b / &y;
            (&s * &x, &s * &a)
        }),
    ];
    for (i1, i2, kind, (ex, ey)) in cases {
        let t = table_1d(&i1, &i2, kind, &a, &b).unwrap();
        let (px, py) = t.apply_point(&QVector(vec![x.clone()]), &y).unwrap();
        assert_eq!((px[0].clone(), py), (ex, ey), "{i1:?} {i2:?} {kind:?}");
    }
}

#[test]
fn fz_keeps_the_vertical_fiber() {
    let t = f_z(&int(1)).unwrap();
    for y in [rat(1, 3), int(1), int(5)] {
        assert_eq!(t.apply_point(&v(&[0]), &y).unwrap(), (v(&[0]), y.clone()));
    }
}

#[test]
fn jtype_window_shapes() {
    for n in 1..=3 {
        assert!(jtype_window_check(&Polyhedron::orthant(n)));
        assert!(jtype_window_check(&Polyhedron::slab(n)));
    }
    assert!(!jtype_window_check(&Polyhedron::boxed(&v(&[-1, -1]), &v(&[1, 1])).unwrap()));
}

#[test]
fn jtype_examples_classify() {
    for n in 1..=4 {
        let orth = classify_cvx0(&jtype_example_orthant(n, &rat(5, 2)), &Polyhedron::orthant(n));
        assert_eq!(orth.status, VerdictStatus::Cvx0JType);
        assert!(orth.target_window.unwrap().set_equal(&Polyhedron::standard_simplex(n)));
        let slab = classify_cvx0(&jtype_example_slab(n), &Polyhedron::slab(n));
        assert_eq!(slab.status, VerdictStatus::Cvx0JType);
        assert!(slab.target_window.unwrap().set_equal(&Polyhedron::slab(n)));
    }
}

#[test]
fn jtype_with_interior_origin_is_rejected() {
    let sq = Polyhedron::boxed(&v(&[-1, -1]), &v(&[1, 1])).unwrap();
    let verdict = classify_cvx0(&jtype_example_orthant(2, &int(1)), &sq);
    assert_eq!(verdict.status, VerdictStatus::Rejected);
    assert_eq!(verdict.reason, "remark-interior-origin");
}
