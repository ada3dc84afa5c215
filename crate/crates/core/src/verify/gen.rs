//! Seeded random generators for rationals, polytopes, functions and maps.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{int, rat, QMatrix, QVector, Rational};
use crate::plfunc::PLConvexFunction;
use crate::polyhedra::Polyhedron;
use crate::projective::ProjectiveMap;
use crate::{Error, Result};

const RETRIES: usize = 200;

/// Limits on generated data. Coordinates are `p/q` with `1 <= q <= max_den`
/// and `|p/q| <= magnitude`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeBounds {
    pub max_vertices: usize,
    pub max_pieces: usize,
    pub magnitude: i64,
    pub max_den: i64,
}

impl Default for SizeBounds {
    fn default() -> Self {
        SizeBounds { max_vertices: 7, max_pieces: 4, magnitude: 4, max_den: 8 }
    }
}

/// Extra requirements on a generated polytope.
#[derive(Clone, Debug)]
pub enum PolytopeConstraint {
    ContainsZeroInterior,
    InsideHalfspace(QVector, Rational),
    WindowForCvx0,
}

/// Class of a generated function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctionClass {
    Cvx,
    Cvx0,
}

pub struct Gen {
    rng: ChaCha8Rng,
    pub bounds: SizeBounds,
}

impl Gen {
    pub fn new(rng: ChaCha8Rng, bounds: SizeBounds) -> Self {
        Gen { rng, bounds }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self, p_num: u32, p_den: u32) -> bool {
        self.rng.gen_ratio(p_num, p_den)
    }

    pub fn small_int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Uniform over `p/q` with `|p/q| <= magnitude`.
    pub fn rational(&mut self) -> Rational {
        let q = self.rng.gen_range(1..=self.bounds.max_den);
        let m = self.bounds.magnitude * q;
        rat(self.rng.gen_range(-m..=m), q)
    }

    /// A rational in `[lo, hi]` on a grid of spacing `(hi - lo)/(q * k)`.
    pub fn rational_in(&mut self, lo: &Rational, hi: &Rational) -> Rational {
        let q = self.rng.gen_range(1..=self.bounds.max_den);
        let k = q * 4;
        let t = rat(self.rng.gen_range(0..=k), k);
        lo + (hi - lo) * t
    }

    /// A rational in `(0, hi)` strictly.
    pub fn rational_open(&mut self, lo: &Rational, hi: &Rational) -> Rational {
        let q = self.rng.gen_range(2..=self.bounds.max_den.max(2));
        let t = rat(self.rng.gen_range(1..q), q);
        lo + (hi - lo) * t
    }

    pub fn positive(&mut self) -> Rational {
        let q = self.rng.gen_range(1..=self.bounds.max_den);
        rat(self.rng.gen_range(1..=self.bounds.magnitude * q), q)
    }

    pub fn vector(&mut self, n: usize) -> QVector {
        QVector((0..n).map(|_| self.rational()).collect())
    }

    pub fn nonzero_vector(&mut self, n: usize) -> QVector {
        loop {
            let v = self.vector(n);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> QMatrix {
        let mut m = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self.rational();
            }
        }
        m
    }

    pub fn invertible(&mut self, n: usize) -> QMatrix {
        loop {
            let m = self.matrix(n, n);
            if !m.det().expect("square").is_zero() {
                return m;
            }
        }
    }

    /// Strictly positive weights summing to one.
    pub fn barycentric(&mut self, k: usize) -> Vec<Rational> {
        let w: Vec<i64> = (0..k).map(|_| self.rng.gen_range(1..=self.bounds.max_den)).collect();
        let s: i64 = w.iter().sum();
        w.into_iter().map(|x| rat(x, s)).collect()
    }

    /// Random polytope from a hull of random points, full-dimensional.
    pub fn polytope(&mut self, n: usize, constraints: &[PolytopeConstraint]) -> Result<Polyhedron> {
        for _ in 0..RETRIES {
            let k = self.range(n + 1, self.bounds.max_vertices.max(n + 1));
            let mut pts: Vec<QVector> = Vec::with_capacity(k + 2 * n + 1);
            for _ in 0..k {
                pts.push(self.vector(n));
            }
            for c in constraints {
                match c {
                    PolytopeConstraint::ContainsZeroInterior => {
                        let eps = rat(1, self.small_int(2, 6));
                        for i in 0..n {
                            pts.push(QVector::unit(n, i).scale(&eps));
                            pts.push(QVector::unit(n, i).scale(&-eps.clone()));
                        }
                    }
                    PolytopeConstraint::WindowForCvx0 => pts.push(QVector::zeros(n)),
                    PolytopeConstraint::InsideHalfspace(..) => {}
                }
            }
            for c in constraints {
                if let PolytopeConstraint::InsideHalfspace(a, b) = c {
                    pts.retain(|p| a.dot(p) <= *b);
                }
            }
            if pts.is_empty() {
                continue;
            }
            let p = Polyhedron::polytope(pts)?;
            if p.affine_dim() != Some(n) {
                continue;
            }
            let ok = constraints.iter().all(|c| match c {
                PolytopeConstraint::ContainsZeroInterior => p.contains_origin_interior(),
                PolytopeConstraint::WindowForCvx0 => p.contains_point(&QVector::zeros(n)),
                PolytopeConstraint::InsideHalfspace(..) => true,
            });
            if ok {
                return Ok(p);
            }
        }
        Err(Error::Generation("polytope constraints not met within the retry budget".into()))
    }

    /// Random function of the given class. `Cvx0` functions use pieces
    /// `<a_i, x> + b_i` with `b_i <= 0` plus the zero piece on a window
    /// containing 0, so `f >= 0` and `f(0) = 0`.
    pub fn plfunc(&mut self, n: usize, class: FunctionClass) -> Result<PLConvexFunction> {
        let window = match class {
            FunctionClass::Cvx => self.polytope(n, &[])?,
            FunctionClass::Cvx0 => match self.below(6) {
                0 => Polyhedron::orthant(n),
                1 => self.polytope(n, &[PolytopeConstraint::WindowForCvx0])?,
                _ => self.polytope(n, &[PolytopeConstraint::ContainsZeroInterior])?,
            },
        };
        self.plfunc_on(&window, class)
    }

    pub fn plfunc_on(&mut self, window: &Polyhedron, class: FunctionClass) -> Result<PLConvexFunction> {
        let n = window.dim();
        let k = self.range(0, self.bounds.max_pieces);
        let mut pieces = Vec::with_capacity(k + 1);
        for _ in 0..k {
            let a = self.vector(n);
            let b = match class {
                FunctionClass::Cvx => self.rational(),
                FunctionClass::Cvx0 => -self.rational().abs(),
            };
            pieces.push((a, b));
        }
        if class == FunctionClass::Cvx0 && k > 0 {
            pieces.push((QVector::zeros(n), Rational::zero()));
        }
        PLConvexFunction::from_pieces(window, &pieces)
    }

    /// Random invertible map whose denominator is positive on every vertex of
    /// `domain` and nonnegative on its rays.
    pub fn flmap(&mut self, n: usize, domain: Option<&Polyhedron>, affine: bool) -> Result<ProjectiveMap> {
        for _ in 0..RETRIES {
            let a = self.matrix(n, n);
            let b = self.vector(n);
            let c = if affine { QVector::zeros(n) } else { self.nonzero_vector(n) };
            let d = match domain {
                None => self.rational(),
                Some(p) => {
                    let v = p.vrep();
                    if v.rays.iter().any(|r| c.dot(r).is_negative()) {
                        continue;
                    }
                    let worst = v.vertices.iter().map(|x| -c.dot(x)).max().unwrap_or_else(Rational::zero);
                    worst + self.positive()
                }
            };
            let d = if affine { Rational::one() } else { d };
            if let Ok(f) = ProjectiveMap::from_parts(&a, &b, &c, d) {
                return Ok(f);
            }
        }
        Err(Error::Generation("no invertible map within the retry budget".into()))
    }

    /// A point `x` with `f` defined at `x` (denominator nonzero).
    pub fn domain_point(&mut self, f: &ProjectiveMap) -> QVector {
        loop {
            let x = self.vector(f.dim());
            if !f.denominator(&x).is_zero() {
                return x;
            }
        }
    }

    /// A rational point on the unit sphere in Q^n, by inverse stereographic
    /// projection of a random point of Q^{n-1}.
    pub fn unit_vector(&mut self, n: usize) -> QVector {
        let p = self.vector(n - 1);
        let s = p.dot(&p);
        let den = &s + Rational::one();
        let mut out: Vec<Rational> = p.iter().map(|x| int(2) * x / &den).collect();
        out.push((s - Rational::one()) / den);
        QVector(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn gen(seed: u64) -> Gen {
        Gen::new(ChaCha8Rng::seed_from_u64(seed), SizeBounds::default())
    }

    #[test]
    fn zero_interior_polytopes() {
        let mut g = gen(1);
        for _ in 0..20 {
            let p = g.polytope(2, &[PolytopeConstraint::ContainsZeroInterior]).unwrap();
            assert!(p.contains_origin_interior());
        }
    }

    #[test]
    fn halfspace_polytopes() {
        let mut g = gen(2);
        let h = PolytopeConstraint::InsideHalfspace(QVector::from_ints(&[1]), rat(1, 2));
        for _ in 0..20 {
            let p = g.polytope(1, std::slice::from_ref(&h)).unwrap();
            assert!(p.vrep().vertices.iter().all(|v| v[0] <= rat(1, 2)));
        }
    }

    #[test]
    fn deterministic() {
        let a = gen(9).polytope(2, &[PolytopeConstraint::ContainsZeroInterior]).unwrap();
        let b = gen(9).polytope(2, &[PolytopeConstraint::ContainsZeroInterior]).unwrap();
        assert!(a.canonical_equal(&b));
        let f = gen(5).flmap(3, None, false).unwrap();
        let g2 = gen(5).flmap(3, None, false).unwrap();
        assert_eq!(f.matrix(), g2.matrix());
    }

    #[test]
    fn cvx0_functions_are_geometric() {
        let mut g = gen(3);
        for _ in 0..30 {
            assert!(g.plfunc(2, FunctionClass::Cvx0).unwrap().in_cvx0());
        }
    }

    #[test]
    fn zero_pieces_give_indicator() {
        let mut g = Gen::new(ChaCha8Rng::seed_from_u64(4), SizeBounds { max_pieces: 0, ..SizeBounds::default() });
        let f = g.plfunc(2, FunctionClass::Cvx).unwrap();
        assert!(f.same_function(&PLConvexFunction::indicator(f.window())));
    }

    #[test]
    fn maps_positive_on_domain() {
        let mut g = gen(6);
        for _ in 0..20 {
            let k = g.polytope(2, &[]).unwrap();
            let f = g.flmap(2, Some(&k), false).unwrap();
            assert!(!f.is_affine());
            assert!(k.vrep().vertices.iter().all(|v| f.denominator(v).is_positive()));
        }
        let aff = g.flmap(2, None, true).unwrap();
        assert!(aff.is_affine());
    }

    #[test]
    fn sphere_points() {
        let mut g = gen(7);
        for n in 2..=3 {
            let u = g.unit_vector(n);
            assert_eq!(u.dot(&u), Rational::one());
        }
    }
}
