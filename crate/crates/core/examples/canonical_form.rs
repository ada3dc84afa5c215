//! Reducing a non-affine map to F0 by affine changes of coordinates, and the
//! unique map sending a simplex plus one point to another.

use window_duality::exact::{rat, QMatrix};
use window_duality::{ProjectiveMap, QVector};

fn main() -> window_duality::Result<()> {
    let a = QMatrix::from_ints(&[&[1, 2], &[0, 3]]);
    let f = ProjectiveMap::from_parts(&a, &QVector::from_ints(&[0, 1]), &QVector::from_ints(&[1, 0]), rat(2, 1))?;
    let x0 = QVector::from_ints(&[1, 1]);
    let cf = f.canonical_form(&x0)?;
    println!("B =\n{}\nC =\n{}\ny0 = {}", cf.b, cf.c, cf.y0);
    let x = QVector(vec![rat(1, 3), rat(2, 1)]);
    let lhs = cf.b.mul_vec(&(&f.apply(&(&cf.c.mul_vec(&x) + &x0))? - &cf.y0));
    println!("B(f(Cx + x0) - y0) = {lhs}, F0(x) = {}", ProjectiveMap::f0(2).apply(&x)?);

    let xs = [QVector::from_ints(&[0, 0]), QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])];
    let g = ProjectiveMap::from_simplex_data(&xs, &QVector(vec![rat(1, 4), rat(1, 4)]), &QVector(vec![rat(1, 3), rat(1, 2)]))?;
    for v in &xs {
        println!("{v} -> {}", g.apply(v)?);
    }
    Ok(())
}
