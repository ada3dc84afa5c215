//! Piecewise-linear convex functions and the Legendre transform.

use window_duality::exact::{int, rat};
use window_duality::{PLConvexFunction, Polyhedron, QVector};

fn main() -> window_duality::Result<()> {
    // max(-x, x/2 - 1) on [-2, 4].
    let f = PLConvexFunction::from_pieces(
        &Polyhedron::interval(int(-2), int(4)),
        &[(QVector::from_ints(&[-1]), int(0)), (QVector(vec![rat(1, 2)]), int(-1))],
    )?;
    let g = f.legendre()?;
    for k in -4..=4 {
        let y = QVector(vec![rat(k, 2)]);
        println!("f*({y}) = {}", g.evaluate(&y));
    }
    println!("f** = f: {}", g.legendre()?.same_function(&f));

    let abs = PLConvexFunction::from_pieces(&Polyhedron::universe(1), &[(QVector::from_ints(&[1]), int(0)), (QVector::from_ints(&[-1]), int(0))])?;
    let conj = abs.legendre()?;
    println!("|x|* is the indicator of [-1, 1]: {}", conj.same_function(&PLConvexFunction::indicator(&Polyhedron::interval(int(-1), int(1)))));
    Ok(())
}
