//! Fractional-linear maps `x -> (Ax + b)/(<c,x> + d)`.
//!
//! A map on Q^n is stored as its `(n+1)x(n+1)` homogeneous matrix
//! `[[A, b], [c^T, d]]`. The matrix is only defined up to a nonzero scalar, so
//! it is kept un-normalized and equality of maps is proportionality.

use num_traits::{One, Signed, Zero};

use crate::exact::{int, rational_sqrt, QMatrix, QVector, Rational};
use crate::{Error, Result};

/// The affine hyperplane `{x : <normal, x> = offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: QVector,
    pub offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: QVector, offset: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::Precondition("hyperplane normal must be nonzero".into()));
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn contains(&self, x: &QVector) -> bool {
        self.normal.dot(x) == self.offset
    }

    /// Same point set, i.e. `(normal, offset)` proportional.
    pub fn same_set(&self, other: &Hyperplane) -> bool {
        if self.normal.dim() != other.normal.dim() {
            return false;
        }
        let mut a = self.normal.0.clone();
        a.push(self.offset.clone());
        let mut b = other.normal.0.clone();
        b.push(other.offset.clone());
        let k = a.iter().position(|x| !x.is_zero()).expect("nonzero normal");
        if b[k].is_zero() {
            return false;
        }
        let lambda = &a[k] / &b[k];
        a.iter().zip(&b).all(|(x, y)| *x == &lambda * y)
    }
}

#[derive(Clone, Debug)]
pub struct ProjectiveMap {
    dim: usize,
    mat: QMatrix,
}

/// Output of [`ProjectiveMap::canonical_form`]:
/// `b * (f(c * x + x0) - y0) = F0(x)` for every `x` in the domain of `F0`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub b: QMatrix,
    pub c: QMatrix,
    pub y0: QVector,
}

impl PartialEq for ProjectiveMap {
    fn eq(&self, other: &Self) -> bool {
        self.agrees_up_to_scalar(other)
    }
}

impl ProjectiveMap {
    /// Wraps an invertible `(n+1)x(n+1)` matrix, `n >= 1`.
    pub fn new(mat: QMatrix) -> Result<Self> {
        if !mat.is_square() || mat.rows() < 2 {
            return Err(Error::Shape(format!(
                "projective matrix must be square of size >= 2, got {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
        if mat.det()?.is_zero() {
            return Err(Error::Singular);
        }
        Ok(ProjectiveMap { dim: mat.rows() - 1, mat })
    }

    pub fn from_parts(a: &QMatrix, b: &QVector, c: &QVector, d: Rational) -> Result<Self> {
        let n = a.rows();
        if a.cols() != n || b.dim() != n || c.dim() != n {
            return Err(Error::Shape("inconsistent block sizes".into()));
        }
        let mut m = QMatrix::zeros(n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = a[(i, j)].clone();
            }
            m[(i, n)] = b[i].clone();
            m[(n, i)] = c[i].clone();
        }
        m[(n, n)] = d;
        Self::new(m)
    }

    pub fn identity(n: usize) -> Self {
        ProjectiveMap { dim: n, mat: QMatrix::identity(n + 1) }
    }

    pub fn translation(v: &QVector) -> Self {
        let n = v.dim();
        let mut m = QMatrix::identity(n + 1);
        for i in 0..n {
            m[(i, n)] = v[i].clone();
        }
        ProjectiveMap { dim: n, mat: m }
    }

    pub fn linear(a: &QMatrix) -> Result<Self> {
        let n = a.rows();
        Self::from_parts(a, &QVector::zeros(n), &QVector::zeros(n), Rational::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.mat
    }

    /// Upper-left `n x n` block.
    pub fn linear_part(&self) -> QMatrix {
        self.mat.submatrix(0, self.dim, 0, self.dim)
    }

    pub fn translation_part(&self) -> QVector {
        QVector((0..self.dim).map(|i| self.mat[(i, self.dim)].clone()).collect())
    }

    /// The row `c` of the denominator `<c,x> + d`.
    pub fn denominator_row(&self) -> QVector {
        QVector(self.mat.row(self.dim)[..self.dim].to_vec())
    }

    pub fn denominator_constant(&self) -> &Rational {
        &self.mat[(self.dim, self.dim)]
    }

    fn check_dim(&self, x: &QVector) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::Shape(format!("point of dim {} for map of dim {}", x.dim(), self.dim)));
        }
        Ok(())
    }

    /// Last homogeneous coordinate of `A^(x, 1)`.
    pub fn denominator(&self, x: &QVector) -> Rational {
        let row = self.mat.row(self.dim);
        row[..self.dim].iter().zip(x.iter()).map(|(c, xi)| c * xi).sum::<Rational>() + &row[self.dim]
    }

    pub fn apply(&self, x: &QVector) -> Result<QVector> {
        self.check_dim(x)?;
        let h = self.apply_homogeneous(&x.extended(Rational::one()));
        let den = h[self.dim].clone();
        if den.is_zero() {
            return Err(Error::OnDefiningHyperplane);
        }
        Ok(QVector(h[..self.dim].iter().map(|v| v / &den).collect()))
    }

    /// Plain matrix action on homogeneous coordinates.
    pub fn apply_homogeneous(&self, z: &[Rational]) -> QVector {
        self.mat.mul_vec(z)
    }

    /// `self ∘ g`, with matrix `A_self * A_g`.
    pub fn compose(&self, g: &ProjectiveMap) -> Result<Self> {
        if self.dim != g.dim {
            return Err(Error::Shape(format!("compose dims {} and {}", self.dim, g.dim)));
        }
        Ok(ProjectiveMap { dim: self.dim, mat: &self.mat * &g.mat })
    }

    pub fn inverse(&self) -> Self {
        let inv = self.mat.inverse().expect("projective matrix is invertible by construction");
        ProjectiveMap { dim: self.dim, mat: inv }
    }

    pub fn is_affine(&self) -> bool {
        self.denominator_row().is_zero()
    }

    /// `{x : <c,x> + d = 0}`; `None` for affine maps.
    pub fn defining_hyperplane(&self) -> Option<Hyperplane> {
        let c = self.denominator_row();
        if c.is_zero() {
            return None;
        }
        Some(Hyperplane { normal: c, offset: -self.denominator_constant().clone() })
    }

    /// Boundary of the image half-space, computed as the defining hyperplane
    /// of the inverse map. It depends only on `A` and `c`.
    pub fn image_boundary(&self) -> Option<Hyperplane> {
        if self.is_affine() {
            return None;
        }
        self.inverse().defining_hyperplane()
    }

    pub fn agrees_up_to_scalar(&self, g: &ProjectiveMap) -> bool {
        self.dim == g.dim && self.mat.proportional_to(&g.mat)
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        assert!(!s.is_zero(), "scaling by zero");
        ProjectiveMap { dim: self.dim, mat: self.mat.scale(s) }
    }

    /// Rescales so the denominator is positive at `x`.
    pub fn sign_normalized_at(&self, x: &QVector) -> Result<Self> {
        self.check_dim(x)?;
        let den = self.denominator(x);
        if den.is_zero() {
            return Err(Error::OnDefiningHyperplane);
        }
        Ok(if den.is_negative() { self.scaled(&int(-1)) } else { self.clone() })
    }

    /// Constructs `B, C, y0` with `B(f(Cx + x0) - y0) = x/(x_1 - 1)`.
    ///
    /// Follows the constructive route: translate so that `x0 -> 0 -> 0`,
    /// normalize `d = -1` (then `b = 0`), pick `C` with `C^T c = e_1`, and set
    /// `B = (A'C)^{-1}`.
    pub fn canonical_form(&self, x0: &QVector) -> Result<CanonicalForm> {
        self.check_dim(x0)?;
        if self.is_affine() {
            return Err(Error::NotCanonicalizable);
        }
        let n = self.dim;
        let y0 = self.apply(x0)?;
        let g = ProjectiveMap::translation(&-&y0)
            .compose(self)?
            .compose(&ProjectiveMap::translation(x0))?;
        let d = g.denominator_constant().clone();
        let g = g.scaled(&(-d.recip()));
        debug_assert!(g.translation_part().is_zero());
        let a_prime = g.linear_part();
        let c = g.denominator_row();
        let c_mat = basis_with_dual_first(&c);
        let b = (&a_prime * &c_mat).inverse()?;
        debug_assert_eq!(c_mat.rows(), n);
        Ok(CanonicalForm { b, c: c_mat, y0 })
    }

    /// The map sending `x[0] -> 0`, `x[i] -> e_i` and `y -> p`.
    ///
    /// `y` must lie strictly inside the simplex `conv(x)` and `p` strictly
    /// inside the standard simplex. The whole simplex lies in the domain of
    /// the result.
    pub fn from_simplex_data(x: &[QVector], y: &QVector, p: &QVector) -> Result<Self> {
        let n = y.dim();
        if n == 0 || x.len() != n + 1 || p.dim() != n || x.iter().any(|v| v.dim() != n) {
            return Err(Error::Shape("need n+1 simplex vertices in Q^n".into()));
        }
        // Affine part: x0 -> 0, xi -> e_i.
        let mut edges = QMatrix::zeros(n, n);
        for j in 0..n {
            let e = &x[j + 1] - &x[0];
            for i in 0..n {
                edges[(i, j)] = e[i].clone();
            }
        }
        let to_standard = edges
            .inverse()
            .map_err(|_| Error::DegenerateSimplex("vertices are affinely dependent".into()))?;
        let shift = to_standard.mul_vec(&x[0]);
        let affine = ProjectiveMap::from_parts(&to_standard, &-&shift, &QVector::zeros(n), Rational::one())?;
        let z = affine.apply(y)?;
        strictly_inside_standard_simplex(&z)
            .then_some(())
            .ok_or_else(|| Error::Precondition("y is not strictly inside conv(x)".into()))?;
        strictly_inside_standard_simplex(p)
            .then_some(())
            .ok_or_else(|| Error::Precondition("p is not strictly inside the standard simplex".into()))?;

        let sum_p: Rational = p.iter().sum();
        let sum_z: Rational = z.iter().sum();
        let d = (Rational::one() - sum_p) / (Rational::one() - sum_z);
        let diag: Vec<Rational> = p.iter().zip(z.iter()).map(|(pi, zi)| pi / zi).collect();
        let c = QVector(diag.iter().map(|a| a - &d).collect());
        let lens = ProjectiveMap::from_parts(&QMatrix::diagonal(&diag), &QVector::zeros(n), &c, d)?;
        lens.compose(&affine)
    }

    /// `F0(x) = x/(x_1 - 1)`, the canonical non-affine map on Q^n.
    pub fn f0(n: usize) -> Self {
        assert!(n >= 1);
        let mut m = QMatrix::identity(n + 1);
        m[(n, 0)] = Rational::one();
        m[(n, n)] = int(-1);
        ProjectiveMap { dim: n, mat: m }
    }

    /// `(x, y) -> (x/y, 1/y)` on Q^{n+1}: swaps the last two homogeneous
    /// coordinates. For `n = 1` this is the 3x3 matrix `[[1,0,0],[0,0,1],[0,1,0]]`.
    pub fn epigraph_inversion(n: usize) -> Self {
        let m = n + 2;
        let mut mat = QMatrix::zeros(m, m);
        for i in 0..n {
            mat[(i, i)] = Rational::one();
        }
        mat[(n, n + 1)] = Rational::one();
        mat[(n + 1, n)] = Rational::one();
        ProjectiveMap { dim: n + 1, mat }
    }

    /// A map of the unit ball onto itself sending `0` to `lam * e_1`:
    /// `x -> (a x_1 + 1, c x_2, ..., c x_n)/(x_1 + a)` with `a = 1/lam` and
    /// `c = sqrt(a^2 - 1)`, which must be rational.
    pub fn f_ball(n: usize, lam: &Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("dimension must be positive".into()));
        }
        if !lam.is_positive() || *lam >= Rational::one() {
            return Err(Error::Precondition("ball parameter must satisfy 0 < lam < 1".into()));
        }
        let a = lam.recip();
        let c = if n > 1 {
            rational_sqrt(&(&a * &a - Rational::one()))
                .ok_or_else(|| Error::IrrationalParameter(format!("(1/{lam})^2 - 1 is not a rational square")))?
        } else {
            Rational::one()
        };
        let mut diag = vec![c; n];
        diag[0] = a.clone();
        let mut e1 = QVector::zeros(n);
        e1[0] = Rational::one();
        Self::from_parts(&QMatrix::diagonal(&diag), &e1, &e1, a)
    }

    /// Non-affine map cycling the vertices `(0,0) -> (1,0) -> (1,1+alpha) ->
    /// (0,1)` of a trapezoid:
    /// `(x, y) -> (alpha x - y + 1, (alpha+1)^2 x)/(alpha x + alpha y + 1)`.
    pub fn f_trapezoid(alpha: &Rational) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::Precondition("trapezoid parameter must be positive".into()));
        }
        let one = Rational::one();
        let s = (alpha + &one) * (alpha + &one);
        let z = Rational::zero();
        Self::new(QMatrix::from_rows(vec![
            vec![alpha.clone(), -one.clone(), one.clone()],
            vec![s, z.clone(), z],
            vec![alpha.clone(), alpha.clone(), one],
        ])?)
    }
}

fn strictly_inside_standard_simplex(z: &QVector) -> bool {
    z.iter().all(Signed::is_positive) && z.iter().sum::<Rational>() < Rational::one()
}

/// Invertible `C` whose first column is `c/|c|^2` and remaining columns span
/// `c^⊥`, so that `C^T c = e_1`.
fn basis_with_dual_first(c: &QVector) -> QMatrix {
    let n = c.dim();
    let norm2 = c.dot(c);
    let row = QMatrix::from_rows(vec![c.0.clone()]).expect("nonempty row");
    let perp = row.nullspace();
    debug_assert_eq!(perp.len(), n - 1);
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, 0)] = &c[i] / &norm2;
    }
    for (j, v) in perp.iter().enumerate() {
        for i in 0..n {
            m[(i, j + 1)] = v[i].clone();
        }
    }
    m
}

/// `[a, b, c, d] = ((c - a)/(c - b)) / ((d - a)/(d - b))`.
pub fn cross_ratio(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<Rational> {
    let pts = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(Error::DegenerateCrossRatio);
            }
        }
    }
    Ok(((c - a) / (c - b)) / ((d - a) / (d - b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn v(xs: &[i64]) -> QVector {
        QVector::from_ints(xs)
    }

    fn q(xs: &[(i64, i64)]) -> QVector {
        QVector(xs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn apply_examples() {
        let f0 = ProjectiveMap::f0(2);
        assert_eq!(f0.apply(&v(&[2, 0])).unwrap(), v(&[2, 0]));
        assert_eq!(f0.apply(&v(&[3, 1])).unwrap(), q(&[(3, 2), (1, 2)]));
        let inv = ProjectiveMap::epigraph_inversion(1);
        assert_eq!(inv.apply(&v(&[2, 4])).unwrap(), q(&[(1, 2), (1, 4)]));
        assert_eq!(f0.apply(&v(&[1, 5])), Err(Error::OnDefiningHyperplane));
    }

    #[test]
    fn denominator_examples() {
        let f0 = ProjectiveMap::f0(1);
        assert_eq!(f0.denominator(&v(&[3])), int(2));
        assert_eq!(f0.denominator(&v(&[1])), int(0));
        let t = ProjectiveMap::translation(&v(&[4]));
        assert_eq!(t.denominator(&v(&[17])), int(1));
    }

    #[test]
    fn compose_examples() {
        let f0 = ProjectiveMap::f0(1);
        assert_eq!(f0.matrix(), &QMatrix::from_ints(&[&[1, 0], &[1, -1]]));
        let sq = f0.compose(&f0).unwrap();
        assert_eq!(sq.matrix(), &QMatrix::identity(2));
        let f = ProjectiveMap::f_trapezoid(&int(1)).unwrap();
        assert!(f.compose(&ProjectiveMap::identity(2)).unwrap().agrees_up_to_scalar(&f));
        let tv = ProjectiveMap::translation(&v(&[1, -2]));
        let tmv = ProjectiveMap::translation(&v(&[-1, 2]));
        assert!(tv.compose(&tmv).unwrap().agrees_up_to_scalar(&ProjectiveMap::identity(2)));
        assert!(f0.compose(&ProjectiveMap::identity(2)).is_err());
    }

    #[test]
    fn inverse_examples() {
        let f0 = ProjectiveMap::f0(3);
        assert!(f0.inverse().agrees_up_to_scalar(&f0));
        let a = QMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let lin = ProjectiveMap::linear(&a).unwrap();
        let expect = ProjectiveMap::linear(&a.inverse().unwrap()).unwrap();
        assert!(lin.inverse().agrees_up_to_scalar(&expect));
        let j = ProjectiveMap::epigraph_inversion(1);
        let sq = j.compose(&j).unwrap();
        assert!(sq.agrees_up_to_scalar(&ProjectiveMap::identity(2)));
        assert!(j.inverse().agrees_up_to_scalar(&j));
    }

    #[test]
    fn affine_detection() {
        assert!(!ProjectiveMap::f0(2).is_affine());
        let two = QMatrix::diagonal(&[int(2), int(2)]);
        let g = ProjectiveMap::from_parts(&two, &v(&[1, 3]), &v(&[0, 0]), int(1)).unwrap();
        assert!(g.is_affine());
        assert!(!ProjectiveMap::f_trapezoid(&int(1)).unwrap().is_affine());
    }

    #[test]
    fn hyperplanes() {
        let h = ProjectiveMap::f0(2).defining_hyperplane().unwrap();
        assert!(h.same_set(&Hyperplane::new(v(&[1, 0]), int(1)).unwrap()));
        assert!(ProjectiveMap::translation(&v(&[1, 1])).defining_hyperplane().is_none());
        let j = ProjectiveMap::epigraph_inversion(1);
        assert!(j.defining_hyperplane().unwrap().same_set(&Hyperplane::new(v(&[0, 1]), int(0)).unwrap()));

        let ib = ProjectiveMap::f0(2).image_boundary().unwrap();
        assert!(ib.same_set(&Hyperplane::new(v(&[1, 0]), int(1)).unwrap()));
        let jb = j.image_boundary().unwrap();
        assert!(jb.same_set(&Hyperplane::new(v(&[0, 1]), int(0)).unwrap()));
        assert!(ProjectiveMap::identity(2).image_boundary().is_none());
    }

    #[test]
    fn image_boundary_ignores_b_and_d() {
        let a = QMatrix::from_ints(&[&[2, 1], &[0, 1]]);
        let c = v(&[1, -1]);
        let f = ProjectiveMap::from_parts(&a, &v(&[0, 0]), &c, int(3)).unwrap();
        let g = ProjectiveMap::from_parts(&a, &v(&[5, -7]), &c, int(-2)).unwrap();
        assert!(f.image_boundary().unwrap().same_set(&g.image_boundary().unwrap()));
        // {Ax : <c,x> = 1} contains A x for x = (1, 0) and x = (2, 1).
        let hb = f.image_boundary().unwrap();
        assert!(hb.contains(&a.mul_vec(&v(&[1, 0]))));
        assert!(hb.contains(&a.mul_vec(&v(&[2, 1]))));
    }

    #[test]
    fn canonical_form_already_canonical() {
        let cf = ProjectiveMap::f0(2).canonical_form(&v(&[0, 0])).unwrap();
        assert_eq!(cf.b, QMatrix::identity(2));
        assert_eq!(cf.c, QMatrix::identity(2));
        assert_eq!(cf.y0, v(&[0, 0]));
    }

    #[test]
    fn canonical_form_scaled() {
        let two = QMatrix::diagonal(&[int(2), int(2)]);
        let f = ProjectiveMap::from_parts(&two, &v(&[0, 0]), &v(&[1, 0]), int(-1)).unwrap();
        let cf = f.canonical_form(&v(&[0, 0])).unwrap();
        assert_eq!(cf.c, QMatrix::identity(2));
        assert_eq!(cf.b, QMatrix::diagonal(&[rat(1, 2), rat(1, 2)]));
        let f0 = ProjectiveMap::f0(2);
        for x in [v(&[3, 1]), v(&[-2, 5]), v(&[7, -4])] {
            let y = f.apply(&(&cf.c.mul_vec(&x) + &QVector::zeros(2))).unwrap();
            assert_eq!(cf.b.mul_vec(&(&y - &cf.y0)), f0.apply(&x).unwrap());
        }
    }

    #[test]
    fn canonical_form_rejects_affine() {
        let t = ProjectiveMap::translation(&v(&[1, 2]));
        assert_eq!(t.canonical_form(&v(&[0, 0])).unwrap_err(), Error::NotCanonicalizable);
    }

    #[test]
    fn simplex_data_worked_example() {
        let x = [v(&[0, 0]), v(&[1, 0]), v(&[0, 1])];
        let y = q(&[(1, 2), (1, 4)]);
        let p = q(&[(1, 3), (1, 3)]);
        let f = ProjectiveMap::from_simplex_data(&x, &y, &p).unwrap();
        let expect = ProjectiveMap::from_parts(
            &QMatrix::diagonal(&[rat(2, 3), rat(4, 3)]),
            &v(&[0, 0]),
            &q(&[(-2, 3), (0, 1)]),
            rat(4, 3),
        )
        .unwrap();
        assert!(f.agrees_up_to_scalar(&expect));
        assert_eq!(f.apply(&x[1]).unwrap(), v(&[1, 0]));
        assert_eq!(f.apply(&x[2]).unwrap(), v(&[0, 1]));
        assert_eq!(f.apply(&x[0]).unwrap(), v(&[0, 0]));
        assert_eq!(f.apply(&y).unwrap(), p);
    }

    #[test]
    fn simplex_data_identity_and_errors() {
        let x = [v(&[0, 0]), v(&[1, 0]), v(&[0, 1])];
        let p = q(&[(1, 5), (2, 5)]);
        let f = ProjectiveMap::from_simplex_data(&x, &p, &p).unwrap();
        assert!(f.agrees_up_to_scalar(&ProjectiveMap::identity(2)));
        let flat = [v(&[0, 0]), v(&[1, 1]), v(&[2, 2])];
        assert!(matches!(
            ProjectiveMap::from_simplex_data(&flat, &p, &p),
            Err(Error::DegenerateSimplex(_))
        ));
        let outside = q(&[(1, 1), (1, 2)]);
        assert!(matches!(
            ProjectiveMap::from_simplex_data(&x, &outside, &p),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            ProjectiveMap::from_simplex_data(&x, &p, &outside),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn agreement() {
        let f = ProjectiveMap::f_trapezoid(&rat(2, 3)).unwrap();
        assert!(f.agrees_up_to_scalar(&f.scaled(&int(3))));
        assert!(!ProjectiveMap::f0(2).agrees_up_to_scalar(&ProjectiveMap::identity(2)));
    }

    #[test]
    fn cross_ratio_examples() {
        assert_eq!(cross_ratio(&int(0), &int(1), &int(2), &int(3)).unwrap(), rat(4, 3));
        assert_eq!(cross_ratio(&int(1), &int(0), &int(2), &int(3)).unwrap(), rat(3, 4));
        let f = ProjectiveMap::new(QMatrix::from_ints(&[&[1, 0], &[1, -1]])).unwrap();
        let img: Vec<Rational> = [2, 3, 4, 5]
            .iter()
            .map(|&t| f.apply(&v(&[t])).unwrap()[0].clone())
            .collect();
        assert_eq!(cross_ratio(&img[0], &img[1], &img[2], &img[3]).unwrap(), rat(4, 3));
        assert_eq!(cross_ratio(&int(2), &int(3), &int(4), &int(5)).unwrap(), rat(4, 3));
        assert_eq!(
            cross_ratio(&int(1), &int(1), &int(2), &int(3)),
            Err(Error::DegenerateCrossRatio)
        );
    }

    #[test]
    fn ball_gallery() {
        let g = ProjectiveMap::f_ball(2, &rat(3, 5)).unwrap();
        assert_eq!(g.apply(&q(&[(3, 5), (4, 5)])).unwrap(), q(&[(15, 17), (8, 17)]));
        assert_eq!(g.apply(&v(&[0, 0])).unwrap(), q(&[(3, 5), (0, 1)]));
        assert!(matches!(
            ProjectiveMap::f_ball(2, &rat(1, 2)),
            Err(Error::IrrationalParameter(_))
        ));
        assert!(ProjectiveMap::f_ball(2, &int(1)).is_err());
    }

    #[test]
    fn trapezoid_orbit() {
        let f = ProjectiveMap::f_trapezoid(&int(1)).unwrap();
        let orbit = [v(&[0, 0]), v(&[1, 0]), v(&[1, 2]), v(&[0, 1])];
        for i in 0..4 {
            assert_eq!(f.apply(&orbit[i]).unwrap(), orbit[(i + 1) % 4]);
        }
    }
}
