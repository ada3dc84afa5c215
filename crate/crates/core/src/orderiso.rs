//! Matrices inducing order isomorphisms of `Cvx(K1)` and `Cvx0(K1)`.
//!
//! A candidate is an `(n+2)x(n+2)` matrix acting on `(x, y)` in
//! `Q^n x Q`, where `y` is the epigraph coordinate. Block names follow
//! the shapes
//!
//! ```text
//! Cvx:   [ A  u' u ]        Cvx0:  [ A  v' u' ]
//!        [ v' a  b ]               [ v  a  b  ]
//!        [ v  c  d ]               [ u  c  d  ]
//! ```
//!
//! The transform is `epi(Tf) = F(epi f)` for the map `F` of the matrix.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{int, QMatrix, QVector, Rational};
use crate::plfunc::PLConvexFunction;
use crate::polyhedra::Polyhedron;
use crate::projective::ProjectiveMap;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Rejected,
    CvxAdmissible,
    Cvx0IType,
    Cvx0JType,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Rejected => "rejected",
            VerdictStatus::CvxAdmissible => "cvx_admissible",
            VerdictStatus::Cvx0IType => "cvx0_I_type",
            VerdictStatus::Cvx0JType => "cvx0_J_type",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Self::Rejected, Self::CvxAdmissible, Self::Cvx0IType, Self::Cvx0JType]
            .into_iter()
            .find(|v| v.as_str() == s)
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `target_window` is present iff the status is not `Rejected`.
#[derive(Clone, Debug)]
pub struct AdmissibilityVerdict {
    pub status: VerdictStatus,
    pub reason: String,
    pub target_window: Option<Polyhedron>,
    /// The candidate rescaled to the normal form used for the verdict.
    pub normalized: Option<QMatrix>,
}

impl AdmissibilityVerdict {
    fn reject(reason: &str) -> Self {
        AdmissibilityVerdict { status: VerdictStatus::Rejected, reason: reason.into(), target_window: None, normalized: None }
    }

    fn accept(status: VerdictStatus, reason: &str, target: Polyhedron, m: QMatrix) -> Self {
        AdmissibilityVerdict { status, reason: reason.into(), target_window: Some(target), normalized: Some(m) }
    }

    pub fn is_admissible(&self) -> bool {
        self.status != VerdictStatus::Rejected
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformKind {
    Cvx,
    Cvx0,
}

impl TransformKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TransformKind::Cvx => "cvx",
            TransformKind::Cvx0 => "cvx0",
        }
    }
}

/// An epigraph map between function classes on two windows.
#[derive(Clone, Debug)]
pub struct InducedTransform {
    pub kind: TransformKind,
    pub map: ProjectiveMap,
    pub source_window: Polyhedron,
    pub target_window: Polyhedron,
}

impl InducedTransform {
    /// Classifies `mat` and wraps it when admissible.
    pub fn new(kind: TransformKind, mat: &QMatrix, k1: &Polyhedron) -> Result<Self> {
        let verdict = match kind {
            TransformKind::Cvx => classify_cvx(mat, k1),
            TransformKind::Cvx0 => classify_cvx0(mat, k1),
        };
        if !verdict.is_admissible() {
            return Err(Error::Precondition(format!("matrix rejected: {}", verdict.reason)));
        }
        Ok(InducedTransform {
            kind,
            map: ProjectiveMap::new(verdict.normalized.expect("admissible verdicts carry the matrix"))?,
            source_window: k1.clone(),
            target_window: verdict.target_window.expect("admissible verdicts carry the window"),
        })
    }

    fn source_cylinder(&self) -> Polyhedron {
        match self.kind {
            TransformKind::Cvx => self.source_window.cylinder(),
            TransformKind::Cvx0 => self.source_window.cylinder_up(),
        }
    }

    /// `Tf` with `epi(Tf) = F(epi f)`.
    pub fn apply(&self, f: &PLConvexFunction) -> Result<PLConvexFunction> {
        let n = self.source_window.dim();
        if f.dim() != n {
            return Err(Error::Shape(format!("function of dim {} for windows of dim {n}", f.dim())));
        }
        if !f.epigraph().is_subset(&self.source_cylinder()) {
            return Err(Error::Precondition("function is not in the source class".into()));
        }
        if self.kind == TransformKind::Cvx0 && !f.in_cvx0() {
            return Err(Error::NotGeometric("source class is Cvx0".into()));
        }
        if f.is_plus_infinity() {
            return Ok(PLConvexFunction::plus_infinity(&self.target_window));
        }
        let epi = f.epigraph().projective_image(&self.map)?;
        PLConvexFunction::from_epigraph(&self.target_window, epi)
    }

    pub fn inverse(&self) -> Self {
        InducedTransform {
            kind: self.kind,
            map: self.map.inverse(),
            source_window: self.target_window.clone(),
            target_window: self.source_window.clone(),
        }
    }

    /// The map on the windows, i.e. the matrix without the fiber row and
    /// column. Fiber-inverting transforms have a singular window block and
    /// give `Error::Singular`.
    pub fn base_map(&self) -> Result<ProjectiveMap> {
        let n = self.source_window.dim();
        ProjectiveMap::new(self.map.matrix().minor(n, n))
    }

    /// `F(x1, y)` split into the base point and the fiber value.
    pub fn apply_point(&self, x1: &QVector, y: &Rational) -> Result<(QVector, Rational)> {
        let p = self.map.apply(&x1.extended(y.clone()))?;
        let n = x1.dim();
        Ok((QVector(p[..n].to_vec()), p[n].clone()))
    }
}

struct Blocks {
    n: usize,
    m: QMatrix,
}

impl Blocks {
    fn row_head(&self, i: usize) -> QVector {
        QVector(self.m.row(i)[..self.n].to_vec())
    }

    fn col_head(&self, j: usize) -> QVector {
        QVector((0..self.n).map(|i| self.m[(i, j)].clone()).collect())
    }

    fn at(&self, i: usize, j: usize) -> &Rational {
        &self.m[(i, j)]
    }
}

fn check_shape(mat: &QMatrix, k1: &Polyhedron) -> std::result::Result<Blocks, AdmissibilityVerdict> {
    let n = k1.dim();
    if !mat.is_square() || mat.rows() != n + 2 {
        return Err(AdmissibilityVerdict::reject("shape-mismatch"));
    }
    if mat.det().map(|d| d.is_zero()).unwrap_or(true) {
        return Err(AdmissibilityVerdict::reject("singular"));
    }
    if k1.is_empty() {
        return Err(AdmissibilityVerdict::reject("empty-window"));
    }
    Ok(Blocks { n, m: mat.clone() })
}

/// Minimum of `<w, x> + s` over the vertices, and whether every ray has
/// `<w, r> >= 0`.
fn affine_bounds(k: &Polyhedron, w: &QVector, s: &Rational) -> (Rational, bool) {
    let v = k.vrep();
    let min = v.vertices.iter().map(|x| w.dot(x) + s).min().expect("nonempty window");
    let rays_ok = v.rays.iter().all(|r| !w.dot(r).is_negative());
    (min, rays_ok)
}

/// Conditions for `Cvx(K1) -> Cvx(K2)`: `c = 0`, `u' = 0`, the base
/// denominator positive on `K1`, and `a > 0`, normalized to `a = 1`.
pub fn classify_cvx(mat: &QMatrix, k1: &Polyhedron) -> AdmissibilityVerdict {
    let bl = match check_shape(mat, k1) {
        Ok(b) => b,
        Err(v) => return v,
    };
    let n = bl.n;
    if !bl.at(n + 1, n).is_zero() {
        return AdmissibilityVerdict::reject("cylinder-crosses-hyperplane");
    }
    if !bl.col_head(n).is_zero() {
        return AdmissibilityVerdict::reject("fiber-not-preserved");
    }
    let mut m = bl.m.clone();
    let v = bl.row_head(n + 1);
    let d = bl.at(n + 1, n + 1).clone();
    let (min, rays_ok) = affine_bounds(k1, &v, &d);
    let (min, rays_ok) = if min.is_negative() {
        m = m.scale(&int(-1));
        affine_bounds(k1, &-&v, &-d)
    } else {
        (min, rays_ok)
    };
    if !min.is_positive() || !rays_ok {
        return AdmissibilityVerdict::reject("window-meets-hyperplane");
    }
    let a = m[(n, n)].clone();
    if !a.is_positive() {
        return AdmissibilityVerdict::reject("fiber-orientation");
    }
    let m = m.scale(&a.recip());
    let base = match ProjectiveMap::new(m.minor(n, n)) {
        Ok(b) => b,
        Err(_) => return AdmissibilityVerdict::reject("singular"),
    };
    match k1.projective_image(&base) {
        Ok(k2) => AdmissibilityVerdict::accept(VerdictStatus::CvxAdmissible, "ok", k2, m),
        Err(_) => AdmissibilityVerdict::reject("window-meets-hyperplane"),
    }
}

/// Conditions for `Cvx0(K1) -> Cvx0(K2)`.
///
/// I-type: `v' = u' = 0`, `b = c = 0`, `a = 1`, `d > 0`, `v = 0`, and the
/// denominator `<u,x> + d` nonnegative on `K1` (zero only on boundary faces
/// of closed windows).
///
/// J-type: `v' = u' = 0`, `a = d = 0`, `c = 1`, `b > 0`, `K1 ⊆ {<u,x> >= 0}`
/// and `K1 = cone(K1) ∩ {<-v,x> <= b}` with recession directions in `v^⊥`.
///
/// Both require the image of `K1 x [0, inf)` to be a cylinder; its base is
/// the target window.
pub fn classify_cvx0(mat: &QMatrix, k1: &Polyhedron) -> AdmissibilityVerdict {
    let bl = match check_shape(mat, k1) {
        Ok(b) => b,
        Err(v) => return v,
    };
    let n = bl.n;
    if !k1.contains_point(&QVector::zeros(n)) {
        return AdmissibilityVerdict::reject("origin-outside-window");
    }
    if !bl.col_head(n).is_zero() || !bl.col_head(n + 1).is_zero() {
        return AdmissibilityVerdict::reject("fiber-not-preserved");
    }
    let (a, b, c, d) = (bl.at(n, n), bl.at(n, n + 1), bl.at(n + 1, n), bl.at(n + 1, n + 1));
    let (status, m) = if b.is_zero() && c.is_zero() {
        let m = bl.m.scale(&a.recip());
        let d = m[(n + 1, n + 1)].clone();
        if !d.is_positive() {
            return AdmissibilityVerdict::reject("fiber-orientation");
        }
        if !bl.row_head(n).is_zero() {
            return AdmissibilityVerdict::reject("fiber-shift");
        }
        let u = QVector(m.row(n + 1)[..n].to_vec());
        let (min, rays_ok) = affine_bounds(k1, &u, &d);
        if min.is_negative() || !rays_ok {
            return AdmissibilityVerdict::reject("window-meets-hyperplane");
        }
        (VerdictStatus::Cvx0IType, m)
    } else if a.is_zero() && d.is_zero() {
        let m = bl.m.scale(&c.recip());
        let b = m[(n, n + 1)].clone();
        if !b.is_positive() {
            return AdmissibilityVerdict::reject("fiber-orientation");
        }
        if k1.contains_origin_interior() && !k1.hrep().ineqs.is_empty() {
            return AdmissibilityVerdict::reject("remark-interior-origin");
        }
        let v = QVector(m.row(n)[..n].to_vec());
        let u = QVector(m.row(n + 1)[..n].to_vec());
        let (min, rays_ok) = affine_bounds(k1, &u, &Rational::zero());
        if min.is_negative() || !rays_ok {
            return AdmissibilityVerdict::reject("window-meets-hyperplane");
        }
        let (min, rays_ok) = affine_bounds(k1, &v, &b);
        if min.is_negative() || !rays_ok {
            return AdmissibilityVerdict::reject("fiber-endpoint");
        }
        if k1.vrep().rays.iter().any(|r| !v.dot(r).is_zero()) {
            return AdmissibilityVerdict::reject("unbounded-direction-off-kernel");
        }
        let truncated = Polyhedron::from_hrep(n, vec![(-&v, b)])
            .and_then(|h| k1.conic_hull().intersect(&h))
            .map(|t| t.set_equal(k1))
            .unwrap_or(false);
        if !truncated {
            return AdmissibilityVerdict::reject("not-truncated-cone");
        }
        (VerdictStatus::Cvx0JType, m)
    } else {
        return AdmissibilityVerdict::reject("block-pattern");
    };
    let Ok(map) = ProjectiveMap::new(m.clone()) else {
        return AdmissibilityVerdict::reject("singular");
    };
    let Ok(image) = k1.cylinder_up().projective_image(&map) else {
        return AdmissibilityVerdict::reject("window-meets-hyperplane");
    };
    let k2 = image.project(n).expect("projection to the base");
    if !image.set_equal(&k2.cylinder_up()) {
        return AdmissibilityVerdict::reject("image-not-cylinder");
    }
    AdmissibilityVerdict::accept(status, "ok", k2, m)
}

/// Classifies, then applies: `epi(Tf) = F(epi f)`.
pub fn induce(kind: TransformKind, mat: &QMatrix, k1: &Polyhedron, f: &PLConvexFunction) -> Result<PLConvexFunction> {
    InducedTransform::new(kind, mat, k1)?.apply(f)
}

/// A one-dimensional window `[0, x)` (stored as its closure) or `[0, inf)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Interval1d {
    Bounded(Rational),
    HalfLine,
}

impl Interval1d {
    pub fn closure(&self) -> Polyhedron {
        match self {
            Interval1d::Bounded(x) => Polyhedron::interval(Rational::zero(), x.clone()),
            Interval1d::HalfLine => Polyhedron::orthant(1),
        }
    }
}

/// Fiber behavior of a `Cvx0` transform: fibers kept (`I`) or inverted (`J`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberKind {
    I,
    J,
}

/// The two-parameter families of order isomorphisms
/// `Cvx0(I1) -> Cvx0(I2)` in dimension one, `a, b > 0`.
pub fn table_1d(i1: &Interval1d, i2: &Interval1d, kind: FiberKind, a: &Rational, b: &Rational) -> Result<InducedTransform> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Precondition("table parameters must be positive".into()));
    }
    for i in [i1, i2] {
        if let Interval1d::Bounded(x) = i {
            if !x.is_positive() {
                return Err(Error::Precondition("interval endpoint must be positive".into()));
            }
        }
    }
    let o = Rational::zero();
    let l = Rational::one();
    let ab = a * b;
    let rows: [[Rational; 3]; 3] = match (i1, i2, kind) {
        (Interval1d::Bounded(x1), Interval1d::Bounded(x2), FiberKind::I) => [
            [x2.clone(), o.clone(), o.clone()],
            [o.clone(), x2 * b, o.clone()],
            [&l - a, o.clone(), x1 * a],
        ],
        (Interval1d::Bounded(x1), Interval1d::Bounded(x2), FiberKind::J) => [
            [b * x2, o.clone(), o.clone()],
            [-(&ab * x2), o.clone(), &ab * x1 * x2],
            [b.clone(), l, o],
        ],
        (Interval1d::Bounded(x1), Interval1d::HalfLine, FiberKind::I) => [
            [a.clone(), o.clone(), o.clone()],
            [o.clone(), ab, o.clone()],
            [-l, o, x1.clone()],
        ],
        (Interval1d::Bounded(x1), Interval1d::HalfLine, FiberKind::J) => [
            [b.clone(), o.clone(), o.clone()],
            [-ab.clone(), o.clone(), &ab * x1],
            [o.clone(), l, o],
        ],
        (Interval1d::HalfLine, Interval1d::Bounded(x2), FiberKind::I) => [
            [a * x2, o.clone(), o.clone()],
            [o.clone(), &ab * x2, o.clone()],
            [a.clone(), o, l],
        ],
        (Interval1d::HalfLine, Interval1d::Bounded(x2), FiberKind::J) => [
            [b * x2, o.clone(), o.clone()],
            [o.clone(), o.clone(), &ab * x2],
            [b.clone(), l, o],
        ],
        (Interval1d::HalfLine, Interval1d::HalfLine, FiberKind::I) => [
            [a.clone(), o.clone(), o.clone()],
            [o.clone(), ab, o.clone()],
            [o.clone(), o, l],
        ],
        (Interval1d::HalfLine, Interval1d::HalfLine, FiberKind::J) => [
            [b.clone(), o.clone(), o.clone()],
            [o.clone(), o.clone(), ab],
            [o.clone(), l, o],
        ],
    };
    let map = ProjectiveMap::new(QMatrix::from_rows(rows.into_iter().map(Vec::from).collect())?)?;
    Ok(InducedTransform {
        kind: TransformKind::Cvx0,
        map,
        source_window: i1.closure(),
        target_window: i2.closure(),
    })
}

/// `F_z(x, y) = (x, y)/(z - x)`, from `Cvx0([0, z))` onto `Cvx0([0, inf))`.
pub fn f_z(z: &Rational) -> Result<InducedTransform> {
    if !z.is_positive() {
        return Err(Error::Precondition("z must be positive".into()));
    }
    let m = QMatrix::from_rows(vec![
        vec![int(1), int(0), int(0)],
        vec![int(0), int(1), int(0)],
        vec![int(-1), int(0), z.clone()],
    ])?;
    Ok(InducedTransform {
        kind: TransformKind::Cvx0,
        map: ProjectiveMap::new(m)?,
        source_window: Polyhedron::interval(Rational::zero(), z.clone()),
        target_window: Polyhedron::orthant(1),
    })
}

/// Whether `K` (with `0 ∈ K`) is a cone cut by at most one half-space
/// `{<w, x> <= b}`, `b > 0`, whose recession directions all lie in `w^⊥`.
pub fn jtype_window_check(k: &Polyhedron) -> bool {
    if k.is_empty() || !k.contains_point(&QVector::zeros(k.dim())) {
        return false;
    }
    let cuts: Vec<&(QVector, Rational)> = k.hrep().ineqs.iter().filter(|(_, b)| b.is_positive()).collect();
    match cuts.as_slice() {
        [] => true,
        [(w, _)] => k.vrep().rays.iter().all(|r| w.dot(r).is_zero()),
        _ => false,
    }
}

/// J-type matrix taking `Cvx0` of the orthant to `Cvx0` of the simplex
/// `conv{0, e_1, ..., e_n}`: `(x, y) -> (x, b)/(<1, x> + y)`.
pub fn jtype_example_orthant(n: usize, b: &Rational) -> QMatrix {
    let mut m = QMatrix::zeros(n + 2, n + 2);
    for i in 0..n {
        m[(i, i)] = Rational::one();
        m[(n + 1, i)] = Rational::one();
    }
    m[(n, n + 1)] = b.clone();
    m[(n + 1, n)] = Rational::one();
    m
}

/// J-type matrix on the slab `{0 <= x_1 <= 1}`:
/// `(x, y) -> (x, 1 - x_1)/(x_1 + y)`.
pub fn jtype_example_slab(n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n + 2, n + 2);
    for i in 0..n {
        m[(i, i)] = Rational::one();
    }
    m[(n, 0)] = int(-1);
    m[(n, n + 1)] = Rational::one();
    m[(n + 1, 0)] = Rational::one();
    m[(n + 1, n)] = Rational::one();
    m
}
