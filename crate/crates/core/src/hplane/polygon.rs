//! Explicit polygons: right-angled hexagons, the truncated half-pants with
//! one or two cusps, and the right-angled pentagon of the one-holed square.
//!
//! Polygons are traced by a turtle that walks a side and turns left by a
//! right angle, so every region is positively oriented (interior on the left).

use super::point::{left_normal, mink, HPoint, Isometry};
use crate::error::{GeomError, Result};
use crate::hyptrig::{arccosh, collar_width, hexagon_opposite};
use crate::pants::CuffTriple;
use nalgebra::Vector3;
use std::f64::consts::FRAC_PI_2;

/// Closure tolerance for traced polygons.
pub const CLOSURE_TOL: f64 = 1e-9;

/// Horoball `{x : <x, ideal> < level}` centred at a null vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Horoball {
    pub(crate) ideal: Vector3<f64>,
    pub(crate) level: f64,
}

impl Horoball {
    #[inline]
    pub fn pairing(&self, p: &HPoint) -> f64 {
        mink(p.vector(), &self.ideal)
    }

    /// Strictly inside, with a relative margin.
    pub fn contains(&self, p: &HPoint) -> bool {
        self.pairing(p) < self.level * (1.0 - 1e-9)
    }

    /// Minimum of the pairing along the geodesic segment `p q`. The pairing
    /// is a convex combination of `sinh` terms along the segment, so the
    /// minimum is at an endpoint or at the unique critical point.
    pub fn segment_min(&self, p: &HPoint, q: &HPoint) -> f64 {
        let (fp, fq) = (self.pairing(p), self.pairing(q));
        let d = p.dist_fast(q);
        let mut best = fp.min(fq);
        if d > 1e-12 {
            let t = (fp * d.cosh() - fq) / (fp * d.sinh());
            if t.abs() < 1.0 {
                let s = t.atanh();
                if s > 0.0 && s < d {
                    best = best.min(((d - s).sinh() * fp + s.sinh() * fq) / d.sinh());
                }
            }
        }
        best
    }

    pub fn segment_clear(&self, p: &HPoint, q: &HPoint) -> bool {
        self.segment_min(p, q) >= self.level * (1.0 - 1e-9)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SideKind {
    Geodesic,
    /// Arc of the boundary horocycle of the given horoball.
    Horocyclic(Horoball),
}

/// A compact region: a convex geodesic polygon with horoball bites removed.
/// Side `i` runs from corner `i` to corner `i + 1`.
#[derive(Debug, Clone)]
pub struct Region {
    corners: Vec<HPoint>,
    sides: Vec<SideKind>,
}

impl Region {
    pub fn new(corners: Vec<HPoint>, sides: Vec<SideKind>) -> Result<Self> {
        if corners.len() < 3 || corners.len() != sides.len() {
            return Err(GeomError::domain("region", "need at least three corners, one side each"));
        }
        Ok(Region { corners, sides })
    }

    pub fn geodesic(corners: Vec<HPoint>) -> Result<Self> {
        let n = corners.len();
        Region::new(corners, vec![SideKind::Geodesic; n])
    }

    pub fn corners(&self) -> &[HPoint] {
        &self.corners
    }

    pub fn sides(&self) -> &[SideKind] {
        &self.sides
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    fn ends(&self, i: usize) -> (&HPoint, &HPoint) {
        (&self.corners[i], &self.corners[(i + 1) % self.len()])
    }

    pub fn horoballs(&self) -> impl Iterator<Item = &Horoball> {
        self.sides.iter().filter_map(|s| match s {
            SideKind::Horocyclic(h) => Some(h),
            SideKind::Geodesic => None,
        })
    }

    pub fn side_length(&self, i: usize) -> f64 {
        let (a, b) = self.ends(i);
        let d = a.dist_fast(b);
        match self.sides[i] {
            SideKind::Geodesic => d,
            SideKind::Horocyclic(_) => 2.0 * (d / 2.0).sinh(),
        }
    }

    pub fn perimeter(&self) -> f64 {
        (0..self.len()).map(|i| self.side_length(i)).sum()
    }

    /// Point at fraction `t` of side `i`, by arc length.
    pub fn point_on_side(&self, i: usize, t: f64) -> HPoint {
        let (a, b) = self.ends(i);
        match self.sides[i] {
            SideKind::Geodesic => a.lerp(b, t),
            SideKind::Horocyclic(h) => {
                let lam = self.side_length(i);
                let k = 1.0 / (2.0 * h.level);
                let u = (b.vector() - a.vector() - h.ideal * (lam * lam * k)) / lam;
                let s = t * lam;
                HPoint::normalize(a.vector() + u * s + h.ideal * (s * s * k))
            }
        }
    }

    /// Frame at one end of geodesic side `i`: the corner, the unit tangent
    /// pointing along the side, and the inward unit normal.
    pub fn side_frame(&self, i: usize, at_end: bool) -> Isometry {
        let (a, b) = self.ends(i);
        let (p, q) = if at_end { (b, a) } else { (a, b) };
        let t = p.direction_to(q);
        let mut n = left_normal(p, &t);
        if at_end {
            // walking backwards swaps left and right
            n = -n;
        }
        Isometry::frame(p, &t, &n)
    }

    /// Unit normal of the geodesic through side `i` (or its chord), with
    /// `<x, n> < 0` on the interior side.
    pub(crate) fn chord_normal(&self, i: usize) -> Vector3<f64> {
        let (a, b) = self.ends(i);
        left_normal(a, &a.direction_to(b))
    }

    pub fn centroid(&self) -> HPoint {
        let s = self.corners.iter().fold(Vector3::zeros(), |acc, p| acc + p.vector());
        HPoint::normalize(s)
    }

    /// Whether `p` lies in the region, up to `tol` in the side pairings.
    pub fn contains(&self, p: &HPoint, tol: f64) -> bool {
        (0..self.len()).all(|i| mink(p.vector(), &self.chord_normal(i)) <= tol)
            && self.horoballs().all(|h| h.pairing(p) >= h.level * (1.0 - tol))
    }

    /// Whether the geodesic segment `p q` avoids every removed horoball.
    pub fn segment_clear(&self, p: &HPoint, q: &HPoint) -> bool {
        self.horoballs().all(|h| h.segment_clear(p, q))
    }

    /// Interior angle at corner `i`, between the sides meeting there.
    pub fn corner_angle(&self, i: usize) -> f64 {
        let n = self.len();
        let p = &self.corners[i];
        let u = p.direction_to(&self.corners[(i + 1) % n]);
        let v = p.direction_to(&self.corners[(i + n - 1) % n]);
        (-mink(&u, &v)).clamp(-1.0, 1.0).acos()
    }
}

/// Walks geodesic sides with left turns.
struct Turtle {
    frame: Isometry,
    trail: Vec<HPoint>,
}

impl Turtle {
    fn new() -> Self {
        Turtle {
            frame: Isometry::identity(),
            trail: vec![HPoint::origin()],
        }
    }

    fn forward(&mut self, s: f64) {
        self.frame = self.frame * Isometry::boost(s);
        self.trail.push(self.frame.point());
    }

    fn left(&mut self) {
        self.frame = self.frame * Isometry::rotation(FRAC_PI_2);
    }

    /// Traces a closed right-angled polygon and checks that it closes.
    fn closed_polygon(sides: &[f64]) -> Result<Vec<HPoint>> {
        let mut t = Turtle::new();
        for &s in sides {
            t.forward(s);
            t.left();
        }
        let residual = (t.frame.matrix() - nalgebra::Matrix3::identity()).norm();
        if !(residual <= CLOSURE_TOL * t.frame.matrix().norm()) {
            return Err(GeomError::Inconsistent { residual });
        }
        t.trail.pop();
        Ok(t.trail)
    }
}

/// Corners of the right-angled hexagon with alternating sides `a, b, c`.
/// Side order is `a, w_c, b, w_a, c, w_b`, where `w_k` is opposite `k`.
pub fn build_right_hexagon(a: f64, b: f64, c: f64) -> Result<[HPoint; 6]> {
    if !(a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(GeomError::domain("right hexagon", format!("sides must be positive: {a}, {b}, {c}")));
    }
    let sides = [
        a,
        hexagon_opposite(a, b, c)?,
        b,
        hexagon_opposite(b, c, a)?,
        c,
        hexagon_opposite(c, a, b)?,
    ];
    let pts = Turtle::closed_polygon(&sides)?;
    Ok([pts[0], pts[1], pts[2], pts[3], pts[4], pts[5]])
}

/// Right-angled pentagon with adjacent sides `b, b` at corner 0, used four
/// times in the one-holed square. Sides: `b, a, c, a, b`, with side 2 on the
/// hole, `cosh c = sinh^2 b` and `tanh a = 1 / sinh b`.
pub fn square_pentagon(b: f64) -> Result<Region> {
    let sb = b.sinh();
    if !(sb > 1.0) || !b.is_finite() {
        return Err(GeomError::domain("square pentagon", format!("need sinh b > 1, got b = {b}")));
    }
    let a = (1.0 / sb).atanh();
    let c = arccosh(sb * sb);
    Region::geodesic(Turtle::closed_polygon(&[b, a, c, a, b])?)
}

/// Horoball at `ideal` whose horocycle cuts an arc of length one between two
/// geodesics ending there. `arc_at` gives the two arc endpoints at a level.
fn unit_horoball(
    ideal: Vector3<f64>,
    arc_at: impl Fn(f64) -> (HPoint, HPoint),
) -> Result<(Horoball, HPoint, HPoint)> {
    // Horocyclic arcs between geodesics sharing the ideal point scale
    // linearly with the level.
    let (p, q) = arc_at(1.0);
    let lam = 2.0 * (p.dist_fast(&q) / 2.0).sinh();
    let level = 1.0 / lam;
    let (p, q) = arc_at(level);
    let check = 2.0 * (p.dist_fast(&q) / 2.0).sinh();
    if (check - 1.0).abs() > 1e-9 {
        return Err(GeomError::Inconsistent { residual: (check - 1.0).abs() });
    }
    Ok((Horoball { ideal, level }, p, q))
}

/// Point on the ray from `start` with unit tangent `dir`, at pairing `level`
/// with the ray's own endpoint `ideal`.
fn ray_point_at_level(start: &HPoint, dir: &Vector3<f64>, ideal: &Vector3<f64>, level: f64) -> HPoint {
    // pairing decays like k e^{-s} along the ray
    let k = mink(start.vector(), ideal);
    let s = (k / level).ln();
    HPoint::normalize(start.vector() * s.cosh() + dir * s.sinh())
}

/// One half of a pants, ready to be doubled along its seams.
#[derive(Debug, Clone)]
pub struct HalfPants {
    pub region: Region,
    /// Side holding half of each cuff of the triple (`None` for cusps).
    pub cuff_sides: [Option<usize>; 3],
    pub seam_sides: Vec<usize>,
    pub horocycle_sides: Vec<usize>,
}

/// Builds the half-pants polygon for any triple with at most two cusps.
pub fn half_pants(cuffs: &CuffTriple) -> Result<HalfPants> {
    let c = cuffs.cuffs();
    let nonzero: Vec<usize> = (0..3).filter(|&k| c[k] > 0.0).collect();
    let mut cuff_sides = [None; 3];
    match cuffs.cusp_count() {
        0 => {
            let corners = build_right_hexagon(c[0] / 2.0, c[1] / 2.0, c[2] / 2.0)?;
            cuff_sides = [Some(0), Some(2), Some(4)];
            Ok(HalfPants {
                region: Region::geodesic(corners.to_vec())?,
                cuff_sides,
                seam_sides: vec![1, 3, 5],
                horocycle_sides: vec![],
            })
        }
        1 => {
            let (l1, l2) = (c[nonzero[0]], c[nonzero[1]]);
            let z = collar_width(l1)? + collar_width(l2)?;
            let mut t = Turtle::new();
            t.forward(l1 / 2.0);
            t.left();
            t.forward(z);
            t.left();
            t.forward(l2 / 2.0);
            t.left();
            let v = t.trail.clone();
            let v3 = v[3];
            let h3 = t.frame.heading();
            let ideal = v3.vector() + h3;
            let e2 = Vector3::new(0.0, 0.0, 1.0);
            let other = v[0].vector() + e2;
            let parallel = mink(&ideal, &other) / (ideal[0] * other[0]);
            if parallel.abs() > 1e-9 {
                return Err(GeomError::Inconsistent { residual: parallel.abs() });
            }
            let (ball, e3, e0) = unit_horoball(ideal, |lvl| {
                (
                    ray_point_at_level(&v3, &h3, &ideal, lvl),
                    ray_point_at_level(&v[0], &e2, &ideal, lvl),
                )
            })?;
            if v3.dist_fast(&e3) <= 0.0 || !(ball.pairing(&v3) > ball.level) || !(ball.pairing(&v[0]) > ball.level) {
                return Err(GeomError::Inconsistent { residual: 0.0 });
            }
            use SideKind::*;
            let region = Region::new(
                vec![v[0], v[1], v[2], v3, e3, e0],
                vec![Geodesic, Geodesic, Geodesic, Geodesic, Horocyclic(ball), Geodesic],
            )?;
            cuff_sides[nonzero[0]] = Some(0);
            cuff_sides[nonzero[1]] = Some(2);
            Ok(HalfPants {
                region,
                cuff_sides,
                seam_sides: vec![1, 3, 5],
                horocycle_sides: vec![4],
            })
        }
        2 => {
            let l1 = c[nonzero[0]];
            let mut t = Turtle::new();
            t.forward(l1 / 2.0);
            t.left();
            let (v0, v1) = (t.trail[0], t.trail[1]);
            let h1 = t.frame.heading();
            let e2 = Vector3::new(0.0, 0.0, 1.0);
            let xi1 = v1.vector() + h1;
            let xi0 = v0.vector() + e2;
            let m = mink(&xi0, &xi1);
            // point on the geodesic between the ideal points, at pairing
            // `lvl` with `near`
            let on_line = |near: Vector3<f64>, far: Vector3<f64>, lvl: f64| {
                HPoint::normalize(far * (lvl / m) + near * (1.0 / (2.0 * lvl)))
            };
            let (b1, e1, f1) = unit_horoball(xi1, |lvl| {
                (ray_point_at_level(&v1, &h1, &xi1, lvl), on_line(xi1, xi0, lvl))
            })?;
            let (b0, f0, e0) = unit_horoball(xi0, |lvl| {
                (on_line(xi0, xi1, lvl), ray_point_at_level(&v0, &e2, &xi0, lvl))
            })?;
            if !(b1.pairing(&v1) > b1.level && b0.pairing(&v0) > b0.level) {
                return Err(GeomError::Inconsistent { residual: 0.0 });
            }
            use SideKind::*;
            let region = Region::new(
                vec![v0, v1, e1, f1, f0, e0],
                vec![Geodesic, Geodesic, Horocyclic(b1), Geodesic, Horocyclic(b0), Geodesic],
            )?;
            cuff_sides[nonzero[0]] = Some(0);
            Ok(HalfPants {
                region,
                cuff_sides,
                seam_sides: vec![1, 3, 5],
                horocycle_sides: vec![2, 4],
            })
        }
        n => Err(GeomError::domain("half pants", format!("cusp count {n}"))),
    }
}
