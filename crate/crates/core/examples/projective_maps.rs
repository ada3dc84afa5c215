//! Building, applying, composing and inverting linear-fractional maps.

use window_duality::exact::{rat, QMatrix};
use window_duality::{ProjectiveMap, QVector};

fn main() -> window_duality::Result<()> {
    let f0 = ProjectiveMap::f0(2);
    let x = QVector::from_ints(&[3, 1]);
    println!("F0({x}) = {}", f0.apply(&x)?);
    println!("F0 is an involution: {}", f0.compose(&f0)? == ProjectiveMap::identity(2));
    if let Some(h) = f0.defining_hyperplane() {
        println!("defining hyperplane of F0: <{}, x> = {}", h.normal, h.offset);
    }

    let a = QMatrix::from_ints(&[&[2, 1], &[0, 1]]);
    let f = ProjectiveMap::from_parts(&a, &QVector::from_ints(&[1, -1]), &QVector::from_ints(&[1, 1]), rat(3, 1))?;
    let g = f.inverse();
    let y = f.apply(&x)?;
    println!("f({x}) = {y}, f^-1(f(x)) = {}", g.apply(&y)?);
    println!("matrices agree up to scalar: {}", f.scaled(&rat(-5, 2)) == f);

    match f0.apply(&QVector::from_ints(&[1, 0])) {
        Ok(_) => unreachable!(),
        Err(e) => println!("F0 at a point of its defining hyperplane: {e}"),
    }
    Ok(())
}
