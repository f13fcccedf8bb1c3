//! Lorentzian linear algebra in signature `(1,3)`.
//!
//! Points of the projective model are classes of nonzero vectors; a vector
//! `x` is a proper (hyperbolic) point when `<x,x> < 0`, an ideal point when
//! `<x,x> = 0` and an ultra-ideal point when `<x,x> > 0`. Planes are given by
//! forms `u`, and `x` lies on `u` iff `<x,u> = 0`; the same bilinear form is
//! used for point/point, point/form and form/form pairings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Matrix4, Vector4};

use crate::error::{Error, Result};

/// Relative tolerance under which `<x,x>` counts as zero.
pub const IDEAL_TOL: f64 = 1e-9;

/// Whether a coordinate vector stands for a point or for a plane form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Point,
    Form,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    Proper,
    Ideal,
    UltraIdeal,
}

/// Four projective coordinates `(x0, x1, x2, x3)` with a point/form flag.
#[derive(Clone, Copy, PartialEq)]
pub struct LorentzVector {
    coords: [f64; 4],
    role: Role,
}

impl LorentzVector {
    pub const fn point(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self {
            coords: [x0, x1, x2, x3],
            role: Role::Point,
        }
    }

    pub const fn form(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self {
            coords: [x0, x1, x2, x3],
            role: Role::Form,
        }
    }

    pub const fn new(coords: [f64; 4], role: Role) -> Self {
        Self { coords, role }
    }

    /// The model centre `(1,0,0,0)`.
    pub const fn origin() -> Self {
        Self::point(1.0, 0.0, 0.0, 0.0)
    }

    pub fn coords(&self) -> [f64; 4] {
        self.coords
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn is_point(&self) -> bool {
        self.role == Role::Point
    }

    pub fn as_point(self) -> Self {
        Self::new(self.coords, Role::Point)
    }

    pub fn as_form(self) -> Self {
        Self::new(self.coords, Role::Form)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    /// Squared Euclidean norm of the coordinate vector.
    pub fn euclidean_norm_sq(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum()
    }

    /// `<x,x>`.
    pub fn self_product(&self) -> f64 {
        bilinear_form(self, self)
    }

    /// Representative with `x0 = 1`; vectors with `x0 ≈ 0` (relative to the
    /// other coordinates) are returned unchanged.
    pub fn normalized(self) -> Self {
        let x0 = self.coords[0];
        if x0.abs() <= 1e-14 * self.euclidean_norm_sq().sqrt() || x0 == 0.0 {
            return self;
        }
        self * (1.0 / x0)
    }

    /// Affine Beltrami–Cayley–Klein coordinates `(x, y, z)`, when `x0 ≠ 0`.
    pub fn klein(&self) -> Option<[f64; 3]> {
        let [x0, x1, x2, x3] = self.coords;
        if x0 == 0.0 {
            return None;
        }
        Some([x1 / x0, x2 / x0, x3 / x0])
    }

    pub fn to_vector(&self) -> Vector4<f64> {
        Vector4::from(self.coords)
    }

    pub fn from_vector(v: &Vector4<f64>, role: Role) -> Self {
        Self::new([v[0], v[1], v[2], v[3]], role)
    }

    /// Classification with the default ideal tolerance.
    pub fn class(&self) -> Result<PointClass> {
        classify(self, IDEAL_TOL)
    }
}

impl fmt::Debug for LorentzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coords;
        let tag = match self.role {
            Role::Point => "pt",
            Role::Form => "form",
        };
        write!(f, "{tag}({a:.10}, {b:.10}, {c:.10}, {d:.10})")
    }
}

impl Add for LorentzVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.coords;
        for (a, b) in c.iter_mut().zip(rhs.coords) {
            *a += b;
        }
        Self::new(c, self.role)
    }
}

impl Sub for LorentzVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LorentzVector {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

impl Mul<f64> for LorentzVector {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.coords.map(|c| c * k), self.role)
    }
}

impl Mul<LorentzVector> for f64 {
    type Output = LorentzVector;
    fn mul(self, v: LorentzVector) -> LorentzVector {
        v * self
    }
}

/// `<x,y> = -x0 y0 + x1 y1 + x2 y2 + x3 y3`.
pub fn bilinear_form(x: &LorentzVector, y: &LorentzVector) -> f64 {
    let (a, b) = (x.coords, y.coords);
    -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

/// Sign of `<x,x>`, with `|<x,x>| <= tol * |x|^2` counted as ideal.
pub fn classify(x: &LorentzVector, tol: f64) -> Result<PointClass> {
    if x.is_zero() {
        return Err(Error::InvalidInput("zero vector has no class".into()));
    }
    let q = x.self_product();
    Ok(if q.abs() <= tol * x.euclidean_norm_sq() {
        PointClass::Ideal
    } else if q < 0.0 {
        PointClass::Proper
    } else {
        PointClass::UltraIdeal
    })
}

/// Unit representative on the upper sheet `<x,x> = -1, x0 > 0`.
fn hyperboloid_rep(x: &LorentzVector) -> Result<LorentzVector> {
    match classify(x, IDEAL_TOL)? {
        PointClass::Proper => {}
        other => {
            return Err(Error::Domain(format!(
                "distance needs proper points, got {other:?} {x:?}"
            )))
        }
    }
    let scale = (-x.self_product()).sqrt();
    let sign = if x.coords[0] < 0.0 { -1.0 } else { 1.0 };
    Ok(*x * (sign / scale))
}

/// Hyperbolic distance of two proper points (curvature −1).
///
/// Evaluated as `2 asinh(|x̂ - ŷ|_L / 2)` on hyperboloid representatives,
/// which equals `arccosh(-<x,y> / sqrt(<x,x><y,y>))` without the loss of
/// precision near zero distance.
pub fn point_distance(x: &LorentzVector, y: &LorentzVector) -> Result<f64> {
    let (xh, yh) = (hyperboloid_rep(x)?, hyperboloid_rep(y)?);
    let diff = xh - yh;
    let chord_sq = diff.self_product();
    if chord_sq < -1e-12 * diff.euclidean_norm_sq().max(1.0) {
        return Err(Error::NumericalDomain(format!(
            "cosh argument below 1 (chord^2 = {chord_sq:e})"
        )));
    }
    Ok(2.0 * (chord_sq.max(0.0).sqrt() / 2.0).asinh())
}

/// Polar plane of a point: the form with the same coordinates.
pub fn polar_plane(x: &LorentzVector) -> LorentzVector {
    x.as_form()
}

/// Foot of the perpendicular from `a` to the plane `u`:
/// `a - (<a,u>/<u,u>) u`, returned as a normalized point.
pub fn perpendicular_foot(a: &LorentzVector, u: &LorentzVector) -> Result<LorentzVector> {
    let uu = u.self_product();
    if uu.abs() <= 1e-14 * u.euclidean_norm_sq() {
        return Err(Error::DegeneratePlane(uu));
    }
    let foot = *a - *u * (bilinear_form(a, u) / uu);
    Ok(foot.as_point().normalized())
}

/// A linear map of `R^4` preserving the bilinear form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzIsometry {
    m: Matrix4<f64>,
}

fn signature() -> Matrix4<f64> {
    Matrix4::from_diagonal(&Vector4::new(-1.0, 1.0, 1.0, 1.0))
}

impl LorentzIsometry {
    pub fn identity() -> Self {
        Self {
            m: Matrix4::identity(),
        }
    }

    /// Wraps `m` after checking `M^T J M = J`.
    pub fn from_matrix(m: Matrix4<f64>) -> Result<Self> {
        let iso = Self { m };
        let defect = iso.form_defect();
        let scale = m.norm_squared().max(1.0);
        if defect > 1e-12 * scale {
            return Err(Error::InvalidInput(format!(
                "matrix does not preserve the form (defect {defect:e})"
            )));
        }
        Ok(iso)
    }

    /// Largest entry of `M^T J M - J`.
    pub fn form_defect(&self) -> f64 {
        let j = signature();
        (self.m.transpose() * j * self.m - j).abs().max()
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.m
    }

    pub fn apply(&self, v: &LorentzVector) -> LorentzVector {
        LorentzVector::from_vector(&(self.m * v.to_vector()), v.role())
    }

    /// `J M^T J`.
    pub fn inverse(&self) -> Self {
        let j = signature();
        Self {
            m: j * self.m.transpose() * j,
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            m: self.m * other.m,
        }
    }

    /// Boost with the given rapidity along spatial axis `axis ∈ {1,2,3}`.
    pub fn boost(axis: usize, rapidity: f64) -> Self {
        assert!((1..=3).contains(&axis), "spatial axis must be 1, 2 or 3");
        let mut m = Matrix4::identity();
        let (c, s) = (rapidity.cosh(), rapidity.sinh());
        m[(0, 0)] = c;
        m[(axis, axis)] = c;
        m[(0, axis)] = s;
        m[(axis, 0)] = s;
        Self { m }
    }

    /// Rotation by `angle` in the spatial coordinate plane `(i, j)`.
    pub fn rotation(i: usize, j: usize, angle: f64) -> Self {
        assert!(i != j && (1..=3).contains(&i) && (1..=3).contains(&j));
        let mut m = Matrix4::identity();
        let (c, s) = (angle.cos(), angle.sin());
        m[(i, i)] = c;
        m[(j, j)] = c;
        m[(i, j)] = -s;
        m[(j, i)] = s;
        Self { m }
    }
}

/// Isometry carrying the ideal point `v` to `(1,0,0,1)`.
///
/// Built by Lorentzian Gram–Schmidt: the first proper vector of `frame`
/// (or `(1,0,0,0)` if there is none) becomes the model centre, the spatial
/// direction of `v` becomes the third axis, and the next two frame vectors
/// with a non-degenerate residual fix the remaining axes. The result is a
/// deterministic function of `(v, frame)`.
pub fn ideal_to_canonical(v: &LorentzVector, frame: &[LorentzVector]) -> Result<LorentzIsometry> {
    if classify(v, IDEAL_TOL)? != PointClass::Ideal {
        return Err(Error::Domain(format!("{v:?} is not an ideal point")));
    }
    let seed = frame
        .iter()
        .position(|w| matches!(classify(w, IDEAL_TOL), Ok(PointClass::Proper)));
    let centre = seed.map_or_else(LorentzVector::origin, |i| frame[i].as_point());
    let mut e0 = centre * (1.0 / (-centre.self_product()).sqrt());
    if e0.coords[0] < 0.0 {
        e0 = -e0;
    }
    let ve0 = bilinear_form(v, &e0);
    if ve0 == 0.0 {
        return Err(Error::Domain(
            "ideal point orthogonal to the time axis".into(),
        ));
    }
    // v = -<v,e0> (e0 + e3) with this choice of e3.
    let e3 = (*v + e0 * ve0) * (-1.0 / ve0);

    let mut axes: Vec<LorentzVector> = Vec::with_capacity(2);
    for (k, w) in frame.iter().enumerate() {
        if Some(k) == seed || axes.len() == 2 {
            continue;
        }
        let mut res = *w + e0 * bilinear_form(w, &e0) - e3 * bilinear_form(w, &e3);
        for a in &axes {
            res = res - *a * bilinear_form(&res, a);
        }
        let n2 = res.self_product();
        if n2 > 1e-16 * w.euclidean_norm_sq() && n2 > 0.0 {
            axes.push(res * (1.0 / n2.sqrt()));
        }
    }
    if axes.len() < 2 {
        return Err(Error::Rank(format!(
            "only {} spatial axes recovered from {} frame vectors",
            axes.len(),
            frame.len()
        )));
    }

    let rows = [-(e0.as_point()), axes[0], axes[1], e3];
    let mut m = Matrix4::zeros();
    for (r, e) in rows.iter().enumerate() {
        // Row r computes <x, e> for e = -e0, e1, e2, e3.
        let c = e.coords();
        m[(r, 0)] = -c[0];
        m[(r, 1)] = c[1];
        m[(r, 2)] = c[2];
        m[(r, 3)] = c[3];
    }
    LorentzIsometry::from_matrix(m)
}
