//! Exact rational linear algebra: determinants, inverses, solves and kernels.

use window_duality::exact::{parse_rational, rat, QMatrix};
use window_duality::QVector;

fn main() -> window_duality::Result<()> {
    let m = QMatrix::from_rows(vec![
        vec![rat(1, 2), rat(1, 3), rat(0, 1)],
        vec![rat(2, 1), rat(-1, 1), rat(1, 1)],
        vec![rat(0, 1), rat(5, 7), rat(3, 1)],
    ])?;
    println!("M =\n{m}");
    println!("det M = {}", m.det()?);
    let inv = m.inverse()?;
    println!("M^-1 =\n{inv}");
    assert_eq!(&m * &inv, QMatrix::identity(3));

    let b = QVector(vec![parse_rational("1/10")?, parse_rational("-3")?, parse_rational("7/2")?]);
    let x = m.solve(&b)?;
    println!("solution of M x = {b}: {x}");

    let singular = QMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("rank {} with kernel {:?}", singular.rank(), singular.nullspace().iter().map(|v| v.to_string()).collect::<Vec<_>>());
    Ok(())
}
