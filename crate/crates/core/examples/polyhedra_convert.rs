//! Vertex and facet descriptions, and the lattice operations on polyhedra.

use window_duality::exact::rat;
use window_duality::{Polyhedron, QVector};

fn show(name: &str, p: &Polyhedron) {
    let v = p.vrep();
    println!("{name}: vertices {:?}, rays {:?}", v.vertices.iter().map(|x| x.to_string()).collect::<Vec<_>>(), v.rays.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    for (a, b) in &p.hrep().ineqs {
        println!("  {a} . x <= {b}");
    }
}

fn main() -> window_duality::Result<()> {
    let square = Polyhedron::polytope(vec![
        QVector::from_ints(&[0, 0]),
        QVector::from_ints(&[2, 0]),
        QVector::from_ints(&[2, 2]),
        QVector::from_ints(&[0, 2]),
        QVector::from_ints(&[1, 1]),
    ])?;
    show("square", &square);

    let wedge = Polyhedron::from_hrep(2, vec![(QVector::from_ints(&[-1, 0]), rat(0, 1)), (QVector::from_ints(&[1, -1]), rat(0, 1))])?;
    show("wedge", &wedge);
    show("square ∩ wedge", &square.intersect(&wedge)?);
    show("hull(square ∪ point)", &square.convex_hull_join(&Polyhedron::point(QVector::from_ints(&[3, 3])))?);
    println!("support of square in (1, 1): {}", square.support_value(&QVector::from_ints(&[1, 1])));
    Ok(())
}
