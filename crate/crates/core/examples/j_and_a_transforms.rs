//! The two order-reversing involutions on nonnegative convex functions
//! vanishing at the origin, checked against brute-force pointwise oracles.

use window_duality::exact::{int, rat};
use window_duality::verify::{oracle_a_pointwise, oracle_j_pointwise};
use window_duality::{PLConvexFunction, Polyhedron, QVector};

fn main() -> window_duality::Result<()> {
    // max(0, 2x - 1) on [0, 2].
    let f = PLConvexFunction::from_pieces(&Polyhedron::interval(int(0), int(2)), &[(QVector::from_ints(&[0]), int(0)), (QVector::from_ints(&[2]), int(-1))])?;
    let j = f.j_transform()?;
    let a = f.a_transform()?;
    println!("{:>6} {:>8} {:>8} {:>8}", "x", "f", "Jf", "Af");
    for k in 0..=8 {
        let x = QVector(vec![rat(k, 4)]);
        assert_eq!(j.evaluate(&x), oracle_j_pointwise(&f, &x));
        assert_eq!(a.evaluate(&x), oracle_a_pointwise(&f, &x));
        println!("{:>6} {:>8} {:>8} {:>8}", x[0].to_string(), f.evaluate(&x).to_string(), j.evaluate(&x).to_string(), a.evaluate(&x).to_string());
    }
    println!("JJf = f: {}", j.j_transform()?.same_function(&f));
    println!("AAf = f: {}", a.a_transform()?.same_function(&f));

    let seg = PLConvexFunction::indicator_segment(&QVector::from_ints(&[3]))?;
    let ray = PLConvexFunction::linear_ray(&QVector::from_ints(&[3]), int(1))?;
    println!("J exchanges 1_[0,z] and the linear ray: {}", seg.j_transform()?.same_function(&ray));
    Ok(())
}
