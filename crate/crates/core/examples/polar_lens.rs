//! Polarity and its interaction with projective images: the polar of the
//! image under F0 matches the image of the polar under the dual map.

use window_duality::exact::rat;
use window_duality::{Polyhedron, ProjectiveMap, QVector};

fn main() -> window_duality::Result<()> {
    let k = Polyhedron::polytope(vec![
        QVector::from_ints(&[-1, -1]),
        QVector::from_ints(&[2, -1]),
        QVector(vec![rat(1, 2), rat(3, 2)]),
    ])?;
    let polar = k.polar()?;
    println!("polar vertices: {:?}", polar.vrep().vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    println!("double polar equals K: {}", polar.polar()?.set_equal(&k));

    let f0 = ProjectiveMap::f0(2);
    let window = Polyhedron::polytope(vec![
        QVector(vec![rat(-1, 2), rat(0, 1)]),
        QVector(vec![rat(1, 2), rat(1, 1)]),
        QVector(vec![rat(1, 2), rat(-1, 1)]),
    ])?;
    let image = window.projective_image(&f0)?;
    println!("F0 image vertices: {:?}", image.vrep().vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    println!("F0 maps the image back: {}", image.projective_image(&f0)?.set_equal(&window));
    Ok(())
}
