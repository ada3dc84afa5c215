//! Piecewise-linear convex functions stored as closed epigraphs.
//!
//! A function on Q^n is the pair `(window, epi)` with `epi ⊆ Q^{n+1}` closed
//! under adding `(0, t)` for `t >= 0` and containing no downward vertical
//! direction. The window is the class domain `K`: the function is `+inf`
//! outside it, and `proj(epi) ⊆ K`. An empty epigraph is the constant `+inf`.

use num_traits::{One, Signed, Zero};

use crate::exact::{Extended, QVector, Rational};
use crate::polyhedra::Polyhedron;
use crate::projective::ProjectiveMap;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct PLConvexFunction {
    dim: usize,
    window: Polyhedron,
    epi: Polyhedron,
}

impl PLConvexFunction {
    /// `max_i <a_i, x> + b_i` on `window`; no pieces gives the indicator.
    pub fn from_pieces(window: &Polyhedron, pieces: &[(QVector, Rational)]) -> Result<Self> {
        let n = window.dim();
        if let Some((a, _)) = pieces.iter().find(|(a, _)| a.dim() != n) {
            return Err(Error::Shape(format!("piece of dim {} on window of dim {n}", a.dim())));
        }
        let up = QVector::unit(n + 1, n);
        let mut ineqs: Vec<(QVector, Rational)> = window
            .hrep()
            .ineqs
            .iter()
            .map(|(a, b)| (a.extended(Rational::zero()), b.clone()))
            .collect();
        if pieces.is_empty() {
            ineqs.push((-&up, Rational::zero()));
        }
        for (a, b) in pieces {
            ineqs.push((a.extended(-Rational::one()), -b.clone()));
        }
        Ok(PLConvexFunction { dim: n, window: window.clone(), epi: Polyhedron::from_hrep(n + 1, ineqs)? })
    }

    /// Validates upward closure, finiteness from below and `proj(epi) ⊆ window`.
    pub fn from_epigraph(window: &Polyhedron, epi: Polyhedron) -> Result<Self> {
        let n = window.dim();
        if epi.dim() != n + 1 {
            return Err(Error::Shape(format!("epigraph of dim {} for window of dim {n}", epi.dim())));
        }
        if !epi.is_empty() {
            let h = &epi.hrep().ineqs;
            if h.iter().any(|(a, _)| a[n].is_positive()) {
                return Err(Error::Precondition("epigraph is not closed upward".into()));
            }
            if h.iter().all(|(a, _)| a[n].is_zero()) {
                return Err(Error::Precondition("function takes the value -inf".into()));
            }
            if !epi.project(n)?.is_subset(window) {
                return Err(Error::Precondition("epigraph leaves the window".into()));
            }
        }
        Ok(PLConvexFunction { dim: n, window: window.clone(), epi })
    }

    fn from_parts_unchecked(window: Polyhedron, epi: Polyhedron) -> Self {
        debug_assert_eq!(window.dim() + 1, epi.dim());
        PLConvexFunction { dim: window.dim(), window, epi }
    }

    pub fn plus_infinity(window: &Polyhedron) -> Self {
        Self::from_parts_unchecked(window.clone(), Polyhedron::empty(window.dim() + 1))
    }

    /// `1_K`: zero on `K`, `+inf` elsewhere.
    pub fn indicator(k: &Polyhedron) -> Self {
        Self::from_pieces(k, &[]).expect("indicator of a polyhedron")
    }

    /// `c` at `x`, `+inf` elsewhere.
    pub fn delta(window: &Polyhedron, x: &QVector, c: Rational) -> Result<Self> {
        if !window.contains_point(x) {
            return Err(Error::Precondition("delta point outside the window".into()));
        }
        let n = x.dim();
        let epi = Polyhedron::from_vrep(n + 1, vec![x.extended(c)], vec![QVector::unit(n + 1, n)])?;
        Ok(Self::from_parts_unchecked(window.clone(), epi))
    }

    /// `1_[0,z]` on the segment from 0 to `z`.
    pub fn indicator_segment(z: &QVector) -> Result<Self> {
        if z.is_zero() {
            return Err(Error::Precondition("segment endpoint must be nonzero".into()));
        }
        Ok(Self::indicator(&Polyhedron::polytope(vec![QVector::zeros(z.dim()), z.clone()])?))
    }

    /// `t z -> c t` for `t >= 0`, `+inf` off the ray.
    pub fn linear_ray(z: &QVector, c: Rational) -> Result<Self> {
        if z.is_zero() || c.is_negative() {
            return Err(Error::Precondition("linear ray needs z != 0 and c >= 0".into()));
        }
        let n = z.dim();
        let o = QVector::zeros(n + 1);
        let window = Polyhedron::from_vrep(n, vec![QVector::zeros(n)], vec![z.clone()])?;
        let epi = Polyhedron::from_vrep(n + 1, vec![o], vec![z.extended(c), QVector::unit(n + 1, n)])?;
        Ok(Self::from_parts_unchecked(window, epi))
    }

    /// The triangle function: linear from 0 at the origin to height `h` at
    /// `z`, `+inf` beyond. Equals `sup{1_[0,z], linear_ray(z, h)}`.
    pub fn triangle(z: &QVector, h: Rational) -> Result<Self> {
        if z.is_zero() || h.is_negative() {
            return Err(Error::Precondition("triangle needs z != 0 and h >= 0".into()));
        }
        let n = z.dim();
        let window = Polyhedron::polytope(vec![QVector::zeros(n), z.clone()])?;
        let epi = Polyhedron::from_vrep(
            n + 1,
            vec![QVector::zeros(n + 1), z.extended(h)],
            vec![QVector::unit(n + 1, n)],
        )?;
        Ok(Self::from_parts_unchecked(window, epi))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn window(&self) -> &Polyhedron {
        &self.window
    }

    pub fn epigraph(&self) -> &Polyhedron {
        &self.epi
    }

    pub fn with_window(&self, window: &Polyhedron) -> Result<Self> {
        Self::from_epigraph(window, self.epi.clone())
    }

    pub fn is_plus_infinity(&self) -> bool {
        self.epi.is_empty()
    }

    /// `min{u : (x, u) in epi}`.
    pub fn evaluate(&self, x: &QVector) -> Extended {
        assert_eq!(x.dim(), self.dim, "evaluation point dimension");
        if self.epi.is_empty() {
            return Extended::PosInfinity;
        }
        let n = self.dim;
        let mut best: Option<Rational> = None;
        for (a, b) in &self.epi.hrep().ineqs {
            let ax: Rational = a.iter().take(n).zip(x.iter()).map(|(p, q)| p * q).sum();
            let alpha = &a[n];
            if alpha.is_zero() {
                if ax > *b {
                    return Extended::PosInfinity;
                }
            } else {
                let lower = (b - ax) / alpha;
                if best.as_ref().is_none_or(|cur| lower > *cur) {
                    best = Some(lower);
                }
            }
        }
        Extended::Finite(best.expect("epigraph bounded below"))
    }

    /// Same function, i.e. equal epigraphs.
    pub fn same_function(&self, other: &Self) -> bool {
        self.epi.set_equal(&other.epi)
    }

    fn check_dims(fs: &[Self]) -> Result<usize> {
        let n = fs.first().ok_or_else(|| Error::Shape("empty family".into()))?.dim;
        if fs.iter().any(|f| f.dim != n) {
            return Err(Error::Shape("family with mixed dimensions".into()));
        }
        Ok(n)
    }

    /// Pointwise supremum; epigraph is the intersection.
    pub fn sup_of(fs: &[Self]) -> Result<Self> {
        Self::check_dims(fs)?;
        let mut epi = fs[0].epi.clone();
        let mut window = fs[0].window.clone();
        for f in &fs[1..] {
            epi = epi.intersect(&f.epi)?;
            window = window.intersect(&f.window)?;
        }
        Ok(Self::from_parts_unchecked(window, epi))
    }

    /// Largest closed convex minorant; epigraph is the closed convex hull.
    pub fn inf_hat(fs: &[Self]) -> Result<Self> {
        Self::check_dims(fs)?;
        let mut epi = fs[0].epi.clone();
        let mut window = fs[0].window.clone();
        for f in &fs[1..] {
            epi = epi.convex_hull_join(&f.epi)?;
            window = window.convex_hull_join(&f.window)?;
        }
        Ok(Self::from_parts_unchecked(window, epi))
    }

    /// `self <= g` pointwise, i.e. `epi(g) ⊆ epi(self)`.
    pub fn is_leq(&self, g: &Self) -> bool {
        g.epi.is_subset(&self.epi)
    }

    /// `y -> sup_x <x, y> - f(x)`, built from the epigraph generators.
    pub fn legendre(&self) -> Result<Self> {
        if self.is_plus_infinity() {
            return Err(Error::PlusInfinity);
        }
        let n = self.dim;
        let v = self.epi.vrep();
        let pieces: Vec<(QVector, Rational)> = v
            .vertices
            .iter()
            .map(|p| (QVector(p[..n].to_vec()), -p[n].clone()))
            .collect();
        let ineqs: Vec<(QVector, Rational)> = v
            .rays
            .iter()
            .filter(|r| !r[..n].iter().all(Zero::is_zero))
            .map(|r| (QVector(r[..n].to_vec()), r[n].clone()))
            .collect();
        let window = Polyhedron::from_hrep(n, ineqs)?;
        if window.is_empty() {
            return Ok(Self::plus_infinity(&window));
        }
        Self::from_pieces(&window, &pieces)
    }

    /// `f >= 0` and `f(0) = 0`, with 0 in the window.
    pub fn in_cvx0(&self) -> bool {
        let origin = QVector::zeros(self.dim);
        if !self.window.contains_point(&origin) || self.evaluate(&origin) != Extended::Finite(Rational::zero()) {
            return false;
        }
        let v = self.epi.vrep();
        v.vertices.iter().all(|p| !p[self.dim].is_negative()) && v.rays.iter().all(|r| !r[self.dim].is_negative())
    }

    /// `(Jf)(x) = inf{r > 0 : f(x/r) <= 1/r}`, computed as the image of the
    /// epigraph under `(x, y) -> (x/y, 1/y)`. The window becomes `cone(K)`.
    pub fn j_transform(&self) -> Result<Self> {
        if !self.in_cvx0() {
            return Err(Error::NotGeometric("J needs f >= 0 with f(0) = 0".into()));
        }
        let epi = self.epi.projective_image(&ProjectiveMap::epigraph_inversion(self.dim))?;
        Ok(Self::from_parts_unchecked(self.window.conic_hull(), epi))
    }

    /// `A = L ∘ J`.
    pub fn a_transform(&self) -> Result<Self> {
        self.j_transform()?.legendre()
    }
}
