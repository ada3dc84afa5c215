//! Property tests for the algebraic invariants of every module.

use proptest::prelude::*;
use window_duality::exact::{parse_rational, rat, QMatrix};
use window_duality::json;
use window_duality::projective::cross_ratio;
use window_duality::verify::{run_suite, TrialConfig};
use window_duality::{Extended, PLConvexFunction, Polyhedron, ProjectiveMap, QVector, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec(rational(), n).prop_map(QVector)
}

fn matrix(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(prop::collection::vec(rational(), n), n).prop_map(|rows| QMatrix::from_rows(rows).unwrap())
}

fn invertible(n: usize) -> impl Strategy<Value = QMatrix> {
    matrix(n).prop_filter("singular", |m| !num_traits::Zero::is_zero(&m.det().unwrap()))
}

fn points(n: usize) -> impl Strategy<Value = Vec<QVector>> {
    prop::collection::vec(vector(n), 1..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_display_round_trips(x in rational()) {
        prop_assert_eq!(parse_rational(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn inverse_is_two_sided(m in invertible(3)) {
        let inv = m.inverse().unwrap();
        prop_assert_eq!(&m * &inv, QMatrix::identity(3));
        prop_assert_eq!(&inv * &m, QMatrix::identity(3));
    }

    #[test]
    fn det_is_multiplicative(a in matrix(3), b in matrix(3)) {
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn solve_round_trips(m in invertible(3), x in vector(3)) {
        let rhs = m.mul_vec(&x);
        prop_assert_eq!(m.solve(&rhs).unwrap(), x);
    }

    #[test]
    fn rank_plus_nullity(m in matrix(4)) {
        prop_assert_eq!(m.rank() + m.nullspace().len(), 4);
        for v in m.nullspace() {
            prop_assert!(m.mul_vec(&v).is_zero());
        }
    }

    #[test]
    fn map_inverse_round_trips(m in invertible(3), x in vector(2)) {
        let f = ProjectiveMap::new(m).unwrap();
        prop_assume!(!num_traits::Zero::is_zero(&f.denominator(&x)));
        let y = f.apply(&x).unwrap();
        prop_assert_eq!(f.inverse().apply(&y).unwrap(), x);
    }

    #[test]
    fn composition_is_pointwise(a in invertible(3), b in invertible(3), x in vector(2)) {
        let (f, g) = (ProjectiveMap::new(a).unwrap(), ProjectiveMap::new(b).unwrap());
        prop_assume!(!num_traits::Zero::is_zero(&g.denominator(&x)));
        let gx = g.apply(&x).unwrap();
        prop_assume!(!num_traits::Zero::is_zero(&f.denominator(&gx)));
        prop_assert_eq!(f.compose(&g).unwrap().apply(&x).unwrap(), f.apply(&gx).unwrap());
    }

    #[test]
    fn cross_ratio_invariant(m in invertible(2), pts in prop::collection::btree_set(-30i64..30, 4)) {
        let f = ProjectiveMap::new(m).unwrap();
        let p: Vec<Rational> = pts.into_iter().map(|k| rat(k, 3)).collect();
        prop_assume!(p.iter().all(|x| !num_traits::Zero::is_zero(&f.denominator(&QVector(vec![x.clone()])))));
        let img: Vec<Rational> = p.iter().map(|x| f.apply(&QVector(vec![x.clone()])).unwrap()[0].clone()).collect();
        prop_assert_eq!(
            cross_ratio(&p[0], &p[1], &p[2], &p[3]).unwrap(),
            cross_ratio(&img[0], &img[1], &img[2], &img[3]).unwrap()
        );
    }

    #[test]
    fn representations_agree(pts in points(2)) {
        let p = Polyhedron::polytope(pts.clone()).unwrap();
        let h = Polyhedron::from_hrep(2, p.hrep().ineqs.clone()).unwrap();
        prop_assert!(h.set_equal(&p));
        prop_assert!(h.canonical_equal(&p));
        for x in &pts {
            prop_assert!(h.contains_point(x));
        }
    }

    #[test]
    fn polar_is_an_involution_around_zero(pts in points(2)) {
        let mut pts = pts;
        for v in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
            pts.push(QVector::from_ints(&v));
        }
        let p = Polyhedron::polytope(pts).unwrap();
        prop_assert!(p.polar().unwrap().polar().unwrap().set_equal(&p));
    }

    #[test]
    fn hull_and_intersection_bracket(a in points(2), b in points(2)) {
        let (p, q) = (Polyhedron::polytope(a).unwrap(), Polyhedron::polytope(b).unwrap());
        let join = p.convex_hull_join(&q).unwrap();
        let meet = p.intersect(&q).unwrap();
        prop_assert!(p.is_subset(&join) && q.is_subset(&join));
        prop_assert!(meet.is_subset(&p) && meet.is_subset(&q));
    }

    #[test]
    fn pieces_evaluate_to_their_max(
        pieces in prop::collection::vec((vector(2), rational()), 1..4),
        x in vector(2),
    ) {
        let w = Polyhedron::boxed(&QVector::from_ints(&[-5, -5]), &QVector::from_ints(&[5, 5])).unwrap();
        let f = PLConvexFunction::from_pieces(&w, &pieces).unwrap();
        let want = pieces.iter().map(|(a, b)| a.dot(&x) + b).max().unwrap();
        let inside = x.iter().all(|c| num_traits::Signed::abs(c) <= rat(5, 1));
        let got = f.evaluate(&x);
        if inside {
            prop_assert_eq!(got, Extended::Finite(want));
        } else {
            prop_assert_eq!(got, Extended::PosInfinity);
        }
    }

    #[test]
    fn json_round_trips(m in invertible(3), pts in points(2), pieces in prop::collection::vec((vector(2), rational()), 0..3)) {
        let f = ProjectiveMap::new(m).unwrap();
        prop_assert_eq!(json::parse_map(&json::map(&f)).unwrap(), f);
        let p = Polyhedron::polytope(pts).unwrap();
        prop_assert!(json::parse_polyhedron(&json::polyhedron(&p)).unwrap().set_equal(&p));
        let w = Polyhedron::standard_simplex(2);
        let g = PLConvexFunction::from_pieces(&w, &pieces).unwrap();
        prop_assert!(json::parse_function(&json::function(&g)).unwrap().same_function(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn suites_are_deterministic(seed in any::<u64>()) {
        let cfg = TrialConfig::new("j-involution", 1, 6, seed);
        let (mut a, mut b) = (run_suite(&cfg).unwrap(), run_suite(&cfg).unwrap());
        a.ms = 0;
        b.ms = 0;
        prop_assert_eq!(a, b);
    }
}
