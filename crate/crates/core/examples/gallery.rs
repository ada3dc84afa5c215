//! Named maps: a ball-preserving map with a prescribed fixed point and the
//! trapezoid map whose orbit cycles the vertices.

use num_traits::One;
use window_duality::exact::rat;
use window_duality::{Polyhedron, ProjectiveMap, QVector, Rational};

fn main() -> window_duality::Result<()> {
    let lam = rat(3, 5);
    let f = ProjectiveMap::f_ball(2, &lam)?;
    for u in [QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1]), QVector(vec![rat(3, 5), rat(-4, 5)])] {
        let y = f.apply(&u)?;
        println!("{u} -> {y} (norm² {})", y.dot(&y));
        assert!(y.dot(&y).is_one());
    }

    let t = ProjectiveMap::f_trapezoid(&Rational::one())?;
    let trapezoid = Polyhedron::polytope(vec![
        QVector::from_ints(&[0, 0]),
        QVector::from_ints(&[1, 0]),
        QVector::from_ints(&[0, 1]),
        QVector::from_ints(&[1, 2]),
    ])?;
    let mut v = QVector::from_ints(&[0, 0]);
    for _ in 0..4 {
        let next = t.apply(&v)?;
        println!("{v} -> {next}");
        v = next;
    }
    println!("trapezoid mapped onto itself: {}", trapezoid.projective_image(&t)?.set_equal(&trapezoid));
    Ok(())
}
