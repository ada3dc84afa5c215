//! Convex polyhedra in Q^n with lazily synchronized H- and V-representations.
//!
//! A polyhedron is kept as the homogenized cone `{(x, t) : t >= 0, x/t in P}`
//! internally; conversion in either direction is one double-description run.
//! Both memoized representations are minimal and canonical: generators and
//! inequalities are primitive, deduplicated and sorted, and a line `l` in the
//! lineality space is stored as the ray pair `l, -l`.

mod dd;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{int, primitive, primitive_integer, to_rational_vec, Extended, QMatrix, QVector, Rational};
use crate::projective::ProjectiveMap;
use crate::{Error, Result};

/// `{x : <a_i, x> <= b_i for all i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    pub ineqs: Vec<(QVector, Rational)>,
}

/// `conv(vertices) + cone(rays)`; no vertices means the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub dim: usize,
    pub vertices: Vec<QVector>,
    pub rays: Vec<QVector>,
}

enum Source {
    H,
    V,
}

pub struct Polyhedron {
    dim: usize,
    source: Source,
    raw_h: Option<HRep>,
    raw_v: Option<VRep>,
    hrep: OnceLock<HRep>,
    vrep: OnceLock<VRep>,
}

impl Clone for Polyhedron {
    fn clone(&self) -> Self {
        let out = Polyhedron {
            dim: self.dim,
            source: match self.source {
                Source::H => Source::H,
                Source::V => Source::V,
            },
            raw_h: self.raw_h.clone(),
            raw_v: self.raw_v.clone(),
            hrep: OnceLock::new(),
            vrep: OnceLock::new(),
        };
        if let Some(h) = self.hrep.get() {
            let _ = out.hrep.set(h.clone());
        }
        if let Some(v) = self.vrep.get() {
            let _ = out.vrep.set(v.clone());
        }
        out
    }
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.vrep();
        if v.vertices.is_empty() {
            return write!(f, "Polyhedron(dim={}, empty)", self.dim);
        }
        write!(f, "Polyhedron(dim={}, vertices=[", self.dim)?;
        for (i, x) in v.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "], rays=[")?;
        for (i, x) in v.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "])")
    }
}

fn int_vec(v: &[BigInt]) -> QVector {
    to_rational_vec(v)
}

fn rat_of(x: &BigInt) -> Rational {
    Rational::from_integer(x.clone())
}

impl Polyhedron {
    pub fn from_hrep(dim: usize, ineqs: Vec<(QVector, Rational)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("polyhedron dimension must be positive".into()));
        }
        if let Some((a, _)) = ineqs.iter().find(|(a, _)| a.dim() != dim) {
            return Err(Error::Shape(format!("inequality of dim {} in Q^{dim}", a.dim())));
        }
        Ok(Polyhedron {
            dim,
            source: Source::H,
            raw_h: Some(HRep { dim, ineqs }),
            raw_v: None,
            hrep: OnceLock::new(),
            vrep: OnceLock::new(),
        })
    }

    pub fn from_vrep(dim: usize, vertices: Vec<QVector>, rays: Vec<QVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("polyhedron dimension must be positive".into()));
        }
        if vertices.iter().chain(&rays).any(|v| v.dim() != dim) {
            return Err(Error::Shape(format!("generator dimension differs from {dim}")));
        }
        if vertices.is_empty() && !rays.is_empty() {
            return Err(Error::Precondition("rays without a vertex".into()));
        }
        let rays = rays.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(Polyhedron {
            dim,
            source: Source::V,
            raw_h: None,
            raw_v: Some(VRep { dim, vertices, rays }),
            hrep: OnceLock::new(),
            vrep: OnceLock::new(),
        })
    }

    pub fn empty(dim: usize) -> Self {
        Self::from_vrep(dim, vec![], vec![]).expect("valid empty")
    }

    pub fn universe(dim: usize) -> Self {
        Self::from_hrep(dim, vec![]).expect("valid universe")
    }

    pub fn point(x: QVector) -> Self {
        Self::from_vrep(x.dim(), vec![x], vec![]).expect("valid point")
    }

    pub fn polytope(vertices: Vec<QVector>) -> Result<Self> {
        let dim = vertices.first().map(QVector::dim).ok_or_else(|| Error::Shape("no vertices".into()))?;
        Self::from_vrep(dim, vertices, vec![])
    }

    /// `[lo, hi]` in Q^1.
    pub fn interval(lo: Rational, hi: Rational) -> Self {
        Self::polytope(vec![QVector(vec![lo]), QVector(vec![hi])]).expect("1-d interval")
    }

    /// The box `prod [lo_i, hi_i]`.
    pub fn boxed(lo: &QVector, hi: &QVector) -> Result<Self> {
        let n = lo.dim();
        if hi.dim() != n {
            return Err(Error::Shape("box corner dims differ".into()));
        }
        let mut ineqs = Vec::with_capacity(2 * n);
        for i in 0..n {
            ineqs.push((QVector::unit(n, i), hi[i].clone()));
            ineqs.push((-&QVector::unit(n, i), -lo[i].clone()));
        }
        Self::from_hrep(n, ineqs)
    }

    /// `{x : x_i >= 0}`.
    pub fn orthant(n: usize) -> Self {
        let rays = (0..n).map(|i| QVector::unit(n, i)).collect();
        Self::from_vrep(n, vec![QVector::zeros(n)], rays).expect("orthant")
    }

    /// `conv{0, e_1, ..., e_n}`.
    pub fn standard_simplex(n: usize) -> Self {
        let mut vs = vec![QVector::zeros(n)];
        vs.extend((0..n).map(|i| QVector::unit(n, i)));
        Self::from_vrep(n, vs, vec![]).expect("simplex")
    }

    /// `{x : 0 <= x_1 <= 1}` in Q^n.
    pub fn slab(n: usize) -> Self {
        let e1 = QVector::unit(n, 0);
        Self::from_hrep(n, vec![(-&e1, Rational::zero()), (e1, Rational::one())]).expect("slab")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn compute_vrep_from_h(&self, h: &HRep) -> VRep {
        let n = self.dim;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(h.ineqs.len() + 1);
        let mut t_row = vec![BigInt::zero(); n + 1];
        t_row[n] = BigInt::one();
        rows.push(t_row);
        for (a, b) in &h.ineqs {
            let mut r: Vec<Rational> = a.iter().map(|x| -x).collect();
            r.push(b.clone());
            rows.push(primitive_integer(&r));
        }
        let cone = dd::canonicalize(dd::generators(n + 1, &rows));
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for g in &cone.rays {
            let t = &g[n];
            if t.is_positive() {
                let t = rat_of(t);
                vertices.push(QVector(g[..n].iter().map(|x| rat_of(x) / &t).collect()));
            } else {
                rays.push(int_vec(&g[..n]));
            }
        }
        if vertices.is_empty() {
            return VRep { dim: n, vertices: vec![], rays: vec![] };
        }
        for l in &cone.lines {
            debug_assert!(l[n].is_zero());
            let v = int_vec(&l[..n]);
            rays.push(-&v);
            rays.push(v);
        }
        vertices.sort_by(|a, b| a.0.cmp(&b.0));
        rays.sort_by(|a, b| a.0.cmp(&b.0));
        rays.dedup();
        VRep { dim: n, vertices, rays }
    }

    fn compute_hrep_from_v(&self, v: &VRep) -> HRep {
        let n = self.dim;
        if v.vertices.is_empty() {
            return HRep { dim: n, ineqs: vec![(QVector::zeros(n), int(-1))] };
        }
        let rows: Vec<Vec<BigInt>> = v
            .vertices
            .iter()
            .map(|x| primitive_integer(&x.extended(Rational::one())))
            .chain(v.rays.iter().map(|r| primitive_integer(&r.extended(Rational::zero()))))
            .collect();
        let cone = dd::canonicalize(dd::generators(n + 1, &rows));
        // The face t >= 0 of the homogenized cone is not a facet of the set.
        let mut e_t = vec![BigInt::zero(); n + 1];
        e_t[n] = BigInt::one();
        let at_infinity = primitive(dd::project_out(&e_t, &cone.lines));
        let mut ineqs = Vec::new();
        for h in &cone.rays {
            if *h == at_infinity {
                continue;
            }
            ineqs.push((QVector(h[..n].iter().map(|x| -rat_of(x)).collect()), rat_of(&h[n])));
        }
        for l in &cone.lines {
            let a = QVector(l[..n].iter().map(|x| -rat_of(x)).collect());
            let b = rat_of(&l[n]);
            ineqs.push((-&a, -b.clone()));
            ineqs.push((a, b));
        }
        ineqs.sort_by(|x, y| (&x.0 .0, &x.1).cmp(&(&y.0 .0, &y.1)));
        HRep { dim: n, ineqs }
    }

    /// Minimal canonical V-representation.
    pub fn vrep(&self) -> &VRep {
        self.vrep.get_or_init(|| match self.source {
            Source::H => self.compute_vrep_from_h(self.raw_h.as_ref().expect("H source")),
            Source::V => self.compute_vrep_from_h(self.hrep()),
        })
    }

    /// Minimal canonical H-representation. Equalities appear as two opposite
    /// inequalities; the empty set is `{0 <= -1}`.
    pub fn hrep(&self) -> &HRep {
        self.hrep.get_or_init(|| match self.source {
            Source::V => self.compute_hrep_from_v(self.raw_v.as_ref().expect("V source")),
            Source::H => self.compute_hrep_from_v(self.vrep()),
        })
    }

    pub fn to_vrep(&self) -> VRep {
        self.vrep().clone()
    }

    pub fn to_hrep(&self) -> HRep {
        self.hrep().clone()
    }

    /// Generators as given (un-minimized) when available; cheaper for joins
    /// and images, which minimize anyway.
    fn generators(&self) -> (&[QVector], &[QVector]) {
        match (&self.source, &self.raw_v) {
            (Source::V, Some(v)) => (&v.vertices, &v.rays),
            _ => {
                let v = self.vrep();
                (&v.vertices, &v.rays)
            }
        }
    }

    fn inequalities(&self) -> &[(QVector, Rational)] {
        match (&self.source, &self.raw_h) {
            (Source::H, Some(h)) => &h.ineqs,
            _ => &self.hrep().ineqs,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vrep().vertices.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.vrep().rays.is_empty()
    }

    pub fn contains_point(&self, x: &QVector) -> bool {
        assert_eq!(x.dim(), self.dim, "point dimension");
        self.inequalities().iter().all(|(a, b)| a.dot(x) <= *b)
    }

    /// True iff 0 lies in the topological interior.
    pub fn contains_origin_interior(&self) -> bool {
        !self.is_empty() && self.hrep().ineqs.iter().all(|(_, b)| b.is_positive())
    }

    pub fn is_subset(&self, other: &Polyhedron) -> bool {
        assert_eq!(self.dim, other.dim, "subset test across dimensions");
        let (vs, rs) = self.generators();
        if vs.is_empty() {
            return true;
        }
        let h = other.inequalities();
        vs.iter().all(|v| h.iter().all(|(a, b)| a.dot(v) <= *b))
            && rs.iter().all(|r| h.iter().all(|(a, _)| !a.dot(r).is_positive()))
    }

    /// Mutual containment; the canonical V-representations must then agree.
    pub fn set_equal(&self, other: &Polyhedron) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let eq = self.is_subset(other) && other.is_subset(self);
        debug_assert_eq!(eq, self.vrep() == other.vrep(), "equality paths disagree");
        eq
    }

    /// Comparison of the canonical V-representations alone.
    pub fn canonical_equal(&self, other: &Polyhedron) -> bool {
        self.dim == other.dim && self.vrep() == other.vrep()
    }

    /// `{y : <x, y> <= 1 for all x in self}`.
    pub fn polar(&self) -> Result<Polyhedron> {
        if !self.contains_point(&QVector::zeros(self.dim)) {
            return Err(Error::Precondition("polar needs 0 in the set".into()));
        }
        let v = self.vrep();
        let ineqs = v
            .vertices
            .iter()
            .map(|x| (x.clone(), Rational::one()))
            .chain(v.rays.iter().map(|r| (r.clone(), Rational::zero())))
            .collect();
        Polyhedron::from_hrep(self.dim, ineqs)
    }

    /// Closure of `f(self minus the defining hyperplane)`.
    ///
    /// The map is rescaled by `-1` when every generator has nonpositive
    /// denominator. Generators with zero denominator become rays; mixed
    /// strict signs are a domain violation.
    pub fn projective_image(&self, f: &ProjectiveMap) -> Result<Polyhedron> {
        if f.dim() != self.dim {
            return Err(Error::Shape(format!("map of dim {} on polyhedron of dim {}", f.dim(), self.dim)));
        }
        let n = self.dim;
        if self.is_empty() {
            return Ok(Polyhedron::empty(n));
        }
        let (vs, rs) = self.generators();
        let homog: Vec<QVector> = vs
            .iter()
            .map(|v| f.apply_homogeneous(&v.extended(Rational::one())))
            .chain(rs.iter().map(|r| f.apply_homogeneous(&r.extended(Rational::zero()))))
            .collect();
        let has_pos = homog.iter().any(|h| h[n].is_positive());
        let has_neg = homog.iter().any(|h| h[n].is_negative());
        let sign = match (has_pos, has_neg) {
            (true, true) => {
                return Err(Error::DomainViolation("polyhedron crosses the defining hyperplane".into()))
            }
            (false, false) => {
                return Err(Error::DomainViolation("polyhedron lies in the defining hyperplane".into()))
            }
            (true, false) => Rational::one(),
            (false, true) => int(-1),
        };
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for h in homog {
            let t = &h[n] * &sign;
            if t.is_positive() {
                vertices.push(QVector(h[..n].iter().map(|x| x * &sign / &t).collect()));
            } else {
                rays.push(QVector(h[..n].iter().map(|x| x * &sign).collect()));
            }
        }
        Polyhedron::from_vrep(n, vertices, rays)
    }

    /// Closed convex hull of the union.
    pub fn convex_hull_join(&self, other: &Polyhedron) -> Result<Polyhedron> {
        self.same_dim(other)?;
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let (v1, r1) = self.generators();
        let (v2, r2) = other.generators();
        Polyhedron::from_vrep(
            self.dim,
            v1.iter().chain(v2).cloned().collect(),
            r1.iter().chain(r2).cloned().collect(),
        )
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        self.same_dim(other)?;
        let ineqs = self.inequalities().iter().chain(other.inequalities()).cloned().collect();
        Polyhedron::from_hrep(self.dim, ineqs)
    }

    fn same_dim(&self, other: &Polyhedron) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Shape(format!("dims {} and {}", self.dim, other.dim)));
        }
        Ok(())
    }

    /// `sup <dir, x>` over the set; `-inf` when empty.
    pub fn support_value(&self, dir: &QVector) -> Extended {
        let v = self.vrep();
        if v.vertices.is_empty() {
            return Extended::NegInfinity;
        }
        if v.rays.iter().any(|r| dir.dot(r).is_positive()) {
            return Extended::PosInfinity;
        }
        let best = v.vertices.iter().map(|x| dir.dot(x)).max().expect("nonempty");
        Extended::Finite(best)
    }

    /// Image under `x -> M x + t` for any `m x n` matrix `M`.
    pub fn affine_image(&self, m: &QMatrix, t: &QVector) -> Result<Polyhedron> {
        if m.cols() != self.dim || t.dim() != m.rows() {
            return Err(Error::Shape("affine image shape".into()));
        }
        if self.is_empty() {
            return Ok(Polyhedron::empty(m.rows()));
        }
        let (vs, rs) = self.generators();
        Polyhedron::from_vrep(
            m.rows(),
            vs.iter().map(|v| &m.mul_vec(v) + t).collect(),
            rs.iter().map(|r| m.mul_vec(r)).collect(),
        )
    }

    pub fn translate(&self, t: &QVector) -> Result<Polyhedron> {
        self.affine_image(&QMatrix::identity(self.dim), t)
    }

    pub fn negate(&self) -> Polyhedron {
        self.affine_image(&QMatrix::identity(self.dim).scale(&int(-1)), &QVector::zeros(self.dim))
            .expect("square image")
    }

    /// Projection onto the first `k` coordinates.
    pub fn project(&self, k: usize) -> Result<Polyhedron> {
        if k == 0 || k > self.dim {
            return Err(Error::Shape(format!("cannot project Q^{} onto Q^{k}", self.dim)));
        }
        self.affine_image(&QMatrix::identity(self.dim).submatrix(0, k, 0, self.dim), &QVector::zeros(k))
    }

    /// `self x [0, inf)` in Q^{n+1}.
    pub fn cylinder_up(&self) -> Polyhedron {
        self.lift(false)
    }

    /// `self x Q` in Q^{n+1}.
    pub fn cylinder(&self) -> Polyhedron {
        self.lift(true)
    }

    fn lift(&self, both: bool) -> Polyhedron {
        let n = self.dim;
        let ineqs: Vec<(QVector, Rational)> = self
            .inequalities()
            .iter()
            .map(|(a, b)| (a.extended(Rational::zero()), b.clone()))
            .chain((!both).then(|| (-&QVector::unit(n + 1, n), Rational::zero())))
            .collect();
        Polyhedron::from_hrep(n + 1, ineqs).expect("lifted")
    }

    /// `cone(self)`, the smallest cone containing the set.
    pub fn conic_hull(&self) -> Polyhedron {
        if self.is_empty() {
            return Polyhedron::point(QVector::zeros(self.dim));
        }
        let (vs, rs) = self.generators();
        Polyhedron::from_vrep(self.dim, vec![QVector::zeros(self.dim)], vs.iter().chain(rs).cloned().collect())
            .expect("cone")
    }

    /// Dimension of the affine hull; `None` for the empty set.
    pub fn affine_dim(&self) -> Option<usize> {
        let v = self.vrep();
        let base = v.vertices.first()?;
        let rows: Vec<Vec<Rational>> = v.vertices[1..]
            .iter()
            .map(|x| (x - base).0)
            .chain(v.rays.iter().map(|r| r.0.clone()))
            .collect();
        if rows.is_empty() {
            return Some(0);
        }
        Some(QMatrix::from_rows(rows).expect("rows").rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn v(xs: &[i64]) -> QVector {
        QVector::from_ints(xs)
    }

    fn square() -> Polyhedron {
        Polyhedron::polytope(vec![v(&[1, 1]), v(&[1, -1]), v(&[-1, 1]), v(&[-1, -1])]).unwrap()
    }

    fn cross() -> Polyhedron {
        Polyhedron::polytope(vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])]).unwrap()
    }

    #[test]
    fn square_to_hrep() {
        let h = square().to_hrep();
        assert_eq!(
            h.ineqs,
            vec![(v(&[-1, 0]), int(1)), (v(&[0, -1]), int(1)), (v(&[0, 1]), int(1)), (v(&[1, 0]), int(1))]
        );
    }

    #[test]
    fn orthant_from_hrep() {
        let p = Polyhedron::from_hrep(2, vec![(v(&[-1, 0]), int(0)), (v(&[0, -1]), int(0))]).unwrap();
        let vr = p.to_vrep();
        assert_eq!(vr.vertices, vec![v(&[0, 0])]);
        assert_eq!(vr.rays, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn simplex_round_trip() {
        let s = Polyhedron::standard_simplex(2);
        let back = Polyhedron::from_hrep(2, s.to_hrep().ineqs).unwrap();
        assert_eq!(back.to_vrep().vertices, vec![v(&[0, 0]), v(&[0, 1]), v(&[1, 0])]);
        assert!(back.set_equal(&s));
    }

    #[test]
    fn redundant_vertices_dropped() {
        let p = Polyhedron::polytope(vec![v(&[0, 0]), v(&[2, 0]), v(&[1, 0]), v(&[0, 2]), v(&[1, 1]), v(&[0, 0])])
            .unwrap();
        assert_eq!(p.to_vrep().vertices, vec![v(&[0, 0]), v(&[0, 2]), v(&[2, 0])]);
    }

    #[test]
    fn lines_and_equalities() {
        let half = Polyhedron::from_hrep(2, vec![(v(&[1, 0]), int(1))]).unwrap();
        let vr = half.to_vrep();
        assert_eq!(vr.vertices, vec![v(&[1, 0])]);
        assert_eq!(vr.rays, vec![v(&[-1, 0]), v(&[0, -1]), v(&[0, 1])]);
        let line = Polyhedron::from_vrep(2, vec![v(&[0, 1])], vec![v(&[1, 0]), v(&[-1, 0])]).unwrap();
        let h = line.to_hrep();
        assert_eq!(h.ineqs.len(), 2);
        assert!(line.contains_point(&v(&[7, 1])));
        assert!(!line.contains_point(&v(&[7, 2])));
    }

    #[test]
    fn empty_from_hrep() {
        let p = Polyhedron::from_hrep(1, vec![(v(&[1]), int(0)), (v(&[-1]), int(-1))]).unwrap();
        assert!(p.is_empty());
        assert!(p.set_equal(&Polyhedron::empty(1)));
        assert_eq!(p.to_hrep().ineqs, vec![(v(&[0]), int(-1))]);
    }

    #[test]
    fn polar_examples() {
        assert!(square().polar().unwrap().set_equal(&cross()));
        let seg = Polyhedron::interval(int(-1), rat(1, 2));
        assert!(seg.polar().unwrap().set_equal(&Polyhedron::interval(int(-1), int(2))));
        let origin = Polyhedron::point(v(&[0, 0]));
        assert!(origin.polar().unwrap().set_equal(&Polyhedron::universe(2)));
        let off = Polyhedron::interval(int(1), int(2));
        assert!(matches!(off.polar(), Err(Error::Precondition(_))));
    }

    #[test]
    fn bipolar_unbounded() {
        let p = Polyhedron::from_vrep(2, vec![v(&[-1, -1]), v(&[1, -1])], vec![v(&[0, 1])]).unwrap();
        assert!(p.polar().unwrap().polar().unwrap().set_equal(&p));
    }

    #[test]
    fn projective_image_examples() {
        let f0 = ProjectiveMap::f0(1);
        let seg = Polyhedron::interval(int(-1), rat(1, 2));
        assert!(seg.projective_image(&f0).unwrap().set_equal(&seg));

        let f0 = ProjectiveMap::f0(2);
        let tri = Polyhedron::standard_simplex(2);
        let img = tri.projective_image(&f0).unwrap();
        let expect = Polyhedron::from_vrep(2, vec![v(&[0, 0]), v(&[0, -1])], vec![v(&[-1, 0])]).unwrap();
        assert!(img.set_equal(&expect));

        let t = ProjectiveMap::translation(&v(&[2, -3]));
        assert!(square().projective_image(&t).unwrap().set_equal(&square().translate(&v(&[2, -3])).unwrap()));

        let crossing = Polyhedron::interval(int(0), int(2));
        assert!(matches!(
            crossing.projective_image(&ProjectiveMap::f0(1)),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn join_examples() {
        let a = Polyhedron::point(v(&[0, 0]));
        let b = Polyhedron::point(v(&[1, 1]));
        let seg = Polyhedron::polytope(vec![v(&[0, 0]), v(&[1, 1])]).unwrap();
        assert!(a.convex_hull_join(&b).unwrap().set_equal(&seg));
        assert!(square().convex_hull_join(&square()).unwrap().set_equal(&square()));
        let j = Polyhedron::orthant(2).convex_hull_join(&Polyhedron::point(v(&[-1, 0]))).unwrap();
        let vr = j.to_vrep();
        assert_eq!(vr.vertices, vec![v(&[-1, 0])]);
        assert_eq!(vr.rays, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn intersect_examples() {
        let a = Polyhedron::interval(int(0), int(2));
        let b = Polyhedron::interval(int(1), int(3));
        assert!(a.intersect(&b).unwrap().set_equal(&Polyhedron::interval(int(1), int(2))));
        assert!(a.intersect(&a).unwrap().set_equal(&a));
        let far = Polyhedron::boxed(&v(&[5, 5]), &v(&[6, 6])).unwrap();
        assert!(square().intersect(&far).unwrap().is_empty());
    }

    #[test]
    fn containment_examples() {
        assert!(cross().is_subset(&square()));
        assert!(!square().is_subset(&cross()));
        let rot = QMatrix::from_ints(&[&[0, -1], &[1, 0]]);
        let rotated = square().affine_image(&rot, &v(&[0, 0])).unwrap();
        assert!(rotated.set_equal(&square()));
        let unit = Polyhedron::boxed(&v(&[0, 0]), &v(&[1, 1])).unwrap();
        assert!(!unit.contains_point(&v(&[2, 0])));
        assert!(unit.contains_point(&v(&[1, 0])));
    }

    #[test]
    fn support_examples() {
        assert_eq!(square().support_value(&v(&[1, 1])), Extended::Finite(int(2)));
        assert_eq!(Polyhedron::orthant(2).support_value(&v(&[1, 0])), Extended::PosInfinity);
        let seg = Polyhedron::interval(int(-1), int(2));
        assert_eq!(seg.support_value(&v(&[-1])), Extended::Finite(int(1)));
        assert_eq!(Polyhedron::empty(1).support_value(&v(&[1])), Extended::NegInfinity);
    }

    #[test]
    fn interior_origin() {
        assert!(square().contains_origin_interior());
        assert!(!Polyhedron::orthant(2).contains_origin_interior());
        assert!(Polyhedron::universe(2).contains_origin_interior());
    }

    #[test]
    fn cylinders_and_projection() {
        let k = Polyhedron::interval(int(0), int(1));
        let c = k.cylinder_up();
        assert!(c.contains_point(&v(&[1, 5])));
        assert!(!c.contains_point(&v(&[1, -5])));
        assert!(k.cylinder().contains_point(&v(&[1, -5])));
        assert!(c.project(1).unwrap().set_equal(&k));
        assert_eq!(square().affine_dim(), Some(2));
        assert_eq!(Polyhedron::point(v(&[1, 2])).affine_dim(), Some(0));
    }
}
