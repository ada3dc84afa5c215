//! Cross ratios on the line are invariant under every linear-fractional map.

use window_duality::exact::{int, rat, QMatrix};
use window_duality::projective::cross_ratio;
use window_duality::{ProjectiveMap, QVector};

fn main() -> window_duality::Result<()> {
    let pts = [int(1), int(0), int(2), int(3)];
    println!("cr(1, 0, 2, 3) = {}", cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3])?);
    let f = ProjectiveMap::new(QMatrix::from_ints(&[&[2, 1], &[1, 5]]))?;
    let img: Vec<_> = pts
        .iter()
        .map(|p| f.apply(&QVector(vec![p.clone()])).map(|y| y[0].clone()))
        .collect::<Result<_, _>>()?;
    println!("images {:?}", img.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("cr of images = {}", cross_ratio(&img[0], &img[1], &img[2], &img[3])?);
    println!("degenerate: {:?}", cross_ratio(&rat(1, 2), &rat(1, 2), &int(0), &int(1)).is_err());
    Ok(())
}
