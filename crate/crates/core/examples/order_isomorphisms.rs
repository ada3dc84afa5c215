//! Classifying block matrices as order isomorphisms between function classes
//! and applying the induced transforms, including the one-dimensional table.

use window_duality::exact::{int, rat};
use window_duality::orderiso::{classify_cvx0, f_z, jtype_example_orthant, jtype_example_slab, table_1d, FiberKind, Interval1d};
use window_duality::{PLConvexFunction, Polyhedron, QVector};

fn main() -> window_duality::Result<()> {
    for (name, m, k) in [
        ("orthant", jtype_example_orthant(2, &int(1)), Polyhedron::orthant(2)),
        ("slab", jtype_example_slab(2), Polyhedron::slab(2)),
    ] {
        let verdict = classify_cvx0(&m, &k);
        let target = verdict.target_window.as_ref().map(|w| w.vrep().vertices.len());
        println!("{name}: {} ({}), target window with {target:?} vertices", verdict.status, verdict.reason);
    }

    let windows = [Interval1d::Bounded(int(1)), Interval1d::HalfLine];
    for i1 in &windows {
        for i2 in &windows {
            for kind in [FiberKind::I, FiberKind::J] {
                let t = table_1d(i1, i2, kind, &int(2), &int(3))?;
                println!("{} -> {} {kind:?}:\n{}", label(i1), label(i2), t.map.matrix());
            }
        }
    }

    let t = f_z(&int(2))?;
    let f = PLConvexFunction::from_pieces(&Polyhedron::interval(int(0), int(2)), &[(QVector::from_ints(&[0]), int(0)), (QVector::from_ints(&[1]), rat(-1, 2))])?;
    let g = t.apply(&f)?;
    for k in 0..=4 {
        let x = QVector(vec![rat(k, 2)]);
        println!("f({}) = {}, (f_z f)({}) = {}", x, f.evaluate(&x), x, g.evaluate(&x));
    }
    Ok(())
}

fn label(i: &Interval1d) -> String {
    match i {
        Interval1d::Bounded(x) => format!("[0, {x})"),
        Interval1d::HalfLine => "[0, inf)".into(),
    }
}
