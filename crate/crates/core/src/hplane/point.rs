//! Points and isometries of the hyperboloid model.
//!
//! Points live on the upper sheet `x0^2 - x1^2 - x2^2 = 1`, and isometries
//! are the 3x3 matrices preserving the form `diag(1, -1, -1)` and the sheet.

use crate::error::{GeomError, Result};
use nalgebra::{Matrix3, Vector3};
use std::ops::Mul;

/// Tolerance on the hyperboloid equation, relative to `x0^2`.
pub const SHEET_TOL: f64 = 1e-10;
/// Pairings below one by at most this much are rounded to distance zero.
pub const PAIRING_CLAMP: f64 = 1e-9;

/// Minkowski pairing `u0 v0 - u1 v1 - u2 v2`.
#[inline]
pub fn mink(u: &Vector3<f64>, v: &Vector3<f64>) -> f64 {
    u[0] * v[0] - u[1] * v[1] - u[2] * v[2]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPoint(pub(crate) Vector3<f64>);

impl HPoint {
    pub fn new(x0: f64, x1: f64, x2: f64) -> Result<Self> {
        let v = Vector3::new(x0, x1, x2);
        let q = mink(&v, &v);
        if !(x0 > 0.0) || (q - 1.0).abs() > SHEET_TOL * x0 * x0 {
            return Err(GeomError::OffSheet { pairing: q });
        }
        Ok(HPoint(v))
    }

    pub fn origin() -> Self {
        HPoint(Vector3::new(1.0, 0.0, 0.0))
    }

    /// Projects a future timelike vector onto the sheet.
    pub(crate) fn normalize(v: Vector3<f64>) -> Self {
        let q = mink(&v, &v);
        debug_assert!(q > 0.0 && v[0] > 0.0, "not future timelike: {v:?}");
        HPoint(v / q.sqrt())
    }

    /// Point at distance `r` from the origin in direction `theta`.
    pub fn polar(r: f64, theta: f64) -> Self {
        let s = r.sinh();
        HPoint(Vector3::new(r.cosh(), s * theta.cos(), s * theta.sin()))
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn vector(&self) -> &Vector3<f64> {
        &self.0
    }

    #[inline]
    pub fn pairing(&self, other: &HPoint) -> f64 {
        mink(&self.0, &other.0)
    }

    /// Hyperbolic distance; fails when rounding pushed the pairing well below one.
    pub fn dist(&self, other: &HPoint) -> Result<f64> {
        let t = self.pairing(other);
        if t < 1.0 - PAIRING_CLAMP {
            return Err(GeomError::OffSheet { pairing: t });
        }
        Ok(self.dist_fast(other))
    }

    /// Distance without the sanity check, for inner loops.
    #[inline]
    pub(crate) fn dist_fast(&self, other: &HPoint) -> f64 {
        let t = self.pairing(other);
        if t > 1.5 {
            return crate::hyptrig::arccosh(t);
        }
        // near points: the chord avoids cancellation in `t - 1`
        let w = self.0 - other.0;
        let chord2 = (-mink(&w, &w)).max(0.0);
        2.0 * (chord2.sqrt() / 2.0).asinh()
    }

    /// Poincare disk coordinates.
    pub fn poincare(&self) -> [f64; 2] {
        let d = 1.0 + self.0[0];
        [self.0[1] / d, self.0[2] / d]
    }

    /// Distance from the origin.
    pub fn radius(&self) -> f64 {
        crate::hyptrig::arccosh(self.0[0].max(1.0))
    }

    /// Point at parameter `t` in `[0, 1]` along the geodesic segment to `other`.
    pub fn lerp(&self, other: &HPoint, t: f64) -> HPoint {
        let d = self.dist_fast(other);
        if d < 1e-12 {
            return HPoint::normalize(self.0 * (1.0 - t) + other.0 * t);
        }
        let s = d.sinh();
        HPoint::normalize((self.0 * ((1.0 - t) * d).sinh() + other.0 * (t * d).sinh()) / s)
    }

    pub fn midpoint(&self, other: &HPoint) -> HPoint {
        HPoint::normalize(self.0 + other.0)
    }

    /// Unit tangent at `self` pointing toward `other`.
    pub fn direction_to(&self, other: &HPoint) -> Vector3<f64> {
        let c = self.pairing(other);
        let v = other.0 - self.0 * c;
        let n = (-mink(&v, &v)).sqrt();
        v / n
    }
}

/// Unit spacelike normal to the tangent `t` at `p`, on the left of `t`.
pub fn left_normal(p: &HPoint, t: &Vector3<f64>) -> Vector3<f64> {
    let c = p.0.cross(t);
    let mut n = Vector3::new(c[0], -c[1], -c[2]);
    n /= (-mink(&n, &n)).sqrt();
    if Matrix3::from_columns(&[p.0, *t, n]).determinant() < 0.0 {
        n = -n;
    }
    n
}

/// A Minkowski-form preserving map of the upper sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry(pub(crate) Matrix3<f64>);

fn form() -> Matrix3<f64> {
    Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, -1.0))
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry(Matrix3::identity())
    }

    /// Checks the form and sheet conditions.
    pub fn new(m: Matrix3<f64>) -> Result<Self> {
        let iso = Isometry(m);
        let r = iso.form_residual();
        if r > SHEET_TOL * m.norm_squared().max(1.0) || m[(0, 0)] <= 0.0 {
            return Err(GeomError::Inconsistent { residual: r });
        }
        Ok(iso)
    }

    /// Translation by `t` along the `x1` axis.
    pub fn boost(t: f64) -> Self {
        let (c, s) = (t.cosh(), t.sinh());
        Isometry(Matrix3::new(c, s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0))
    }

    /// Rotation by `theta` about the origin.
    pub fn rotation(theta: f64) -> Self {
        let (c, s) = (theta.cos(), theta.sin());
        Isometry(Matrix3::new(1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c))
    }

    /// Reflection in the geodesic through the origin along `x1`.
    pub fn reflection() -> Self {
        Isometry(Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0)))
    }

    /// The frame whose columns are a point, a unit tangent and a unit normal.
    pub(crate) fn frame(p: &HPoint, t: &Vector3<f64>, n: &Vector3<f64>) -> Self {
        Isometry(Matrix3::from_columns(&[p.0, *t, *n]))
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    /// `|M^T J M - J|` (Frobenius).
    pub fn form_residual(&self) -> f64 {
        let j = form();
        (self.0.transpose() * j * self.0 - j).norm()
    }

    pub fn inverse(&self) -> Self {
        let j = form();
        Isometry(j * self.0.transpose() * j)
    }

    pub fn apply(&self, p: &HPoint) -> HPoint {
        HPoint(self.0 * p.0)
    }

    pub fn point(&self) -> HPoint {
        HPoint(self.0.column(0).into_owned())
    }

    pub(crate) fn heading(&self) -> Vector3<f64> {
        self.0.column(1).into_owned()
    }

    pub(crate) fn normal(&self) -> Vector3<f64> {
        self.0.column(2).into_owned()
    }
}

impl Mul for Isometry {
    type Output = Isometry;
    fn mul(self, rhs: Isometry) -> Isometry {
        let out = Isometry(self.0 * rhs.0);
        debug_assert!(
            out.form_residual() <= SHEET_TOL * out.0.norm_squared().max(1.0),
            "composition drifted off the isometry group"
        );
        out
    }
}
