//! Scalar hyperbolic trigonometry.
//!
//! The collar function and closed-form solvers for the three polygon families
//! used by the pants and grid constructions: right-angled hexagons,
//! right-angled pentagons, and their degenerate Lambert-quadrilateral limit.

use crate::error::{GeomError, Result};
use serde::{Deserialize, Serialize};

/// Relative tolerance used to decide that `sinh b1 * sinh b2` equals one.
pub const PENTAGON_DEGENERACY_TOL: f64 = 1e-12;

/// A nonnegative hyperbolic length. Zero is reserved for cusps.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Length(f64);

impl Length {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value >= 0.0 {
            Ok(Length(value))
        } else {
            Err(GeomError::domain("length", format!("{value} is not a finite nonnegative real")))
        }
    }

    /// A strictly positive length (no cusp allowed).
    pub fn positive(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Length(value))
        } else {
            Err(GeomError::domain("length", format!("{value} is not a finite positive real")))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_cusp(self) -> bool {
        self.0 == 0.0
    }
}

impl TryFrom<f64> for Length {
    type Error = GeomError;
    fn try_from(value: f64) -> Result<Self> {
        Length::new(value)
    }
}

impl From<Length> for f64 {
    fn from(l: Length) -> f64 {
        l.0
    }
}

/// `arccosh` in log form; accurate for large arguments.
pub fn arccosh(t: f64) -> f64 {
    debug_assert!(t >= 1.0 - 1e-12, "arccosh argument {t} below 1");
    let t = t.max(1.0);
    if t > 1e8 {
        // sqrt(t^2 - 1) = t to double precision; avoid squaring.
        t.ln() + std::f64::consts::LN_2 - 0.25 / (t * t)
    } else if t < 1.5 {
        // 2 asinh(sqrt((t-1)/2)) keeps precision near 1.
        2.0 * ((t - 1.0) / 2.0).sqrt().asinh()
    } else {
        (t + (t * t - 1.0).sqrt()).ln()
    }
}

/// The collar half-width of a closed geodesic of length `l`:
/// `arcsinh(1 / sinh(l/2))`.
pub fn collar_width(l: f64) -> Result<f64> {
    if !(l.is_finite() && l > 0.0) {
        return Err(GeomError::domain("collar width", format!("cuff length {l} must be positive")));
    }
    Ok((1.0 / (l / 2.0).sinh()).asinh())
}

/// Side of a right-angled hexagon opposite `c`, where `a`, `b`, `c` are
/// alternating sides.
pub fn hexagon_opposite(a: f64, b: f64, c: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(GeomError::domain(
            "hexagon side",
            format!("adjacent alternating sides must be positive, got a={a}, b={b}"),
        ));
    }
    if !(c >= 0.0 && c.is_finite()) {
        return Err(GeomError::domain("hexagon side", format!("c={c} must be nonnegative")));
    }
    let cosh_w = (c.cosh() + a.cosh() * b.cosh()) / (a.sinh() * b.sinh());
    Ok(arccosh(cosh_w))
}

/// Outcome of solving a right-angled pentagon from two adjacent sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PentagonSide {
    /// The side opposite the common vertex.
    Side(f64),
    /// `sinh b1 sinh b2 = 1`: the pentagon is an ideal Lambert quadrilateral.
    Degenerate,
}

impl PentagonSide {
    pub fn side(self) -> Option<f64> {
        match self {
            PentagonSide::Side(c) => Some(c),
            PentagonSide::Degenerate => None,
        }
    }
}

/// Side opposite the vertex shared by adjacent sides `b1`, `b2` of a
/// right-angled pentagon: `cosh c = sinh b1 sinh b2`.
pub fn pentagon_opposite(b1: f64, b2: f64) -> Result<PentagonSide> {
    if !(b1 > 0.0 && b2 > 0.0) || !b1.is_finite() || !b2.is_finite() {
        return Err(GeomError::domain(
            "pentagon side",
            format!("adjacent sides must be positive, got {b1}, {b2}"),
        ));
    }
    let p = b1.sinh() * b2.sinh();
    if (p - 1.0).abs() <= PENTAGON_DEGENERACY_TOL {
        Ok(PentagonSide::Degenerate)
    } else if p < 1.0 {
        Err(GeomError::NoSuchPentagon(b1, b2))
    } else {
        Ok(PentagonSide::Side(arccosh(p)))
    }
}

/// Side length `b` of the one-holed square whose hole has length `target_cuff`.
///
/// The hole is made of four pentagon sides, so `cosh(target_cuff/4) = sinh^2 b`.
pub fn square_side_for_cuff(target_cuff: f64) -> Result<f64> {
    if !(target_cuff.is_finite() && target_cuff > 0.0) {
        return Err(GeomError::domain("square side", format!("target cuff {target_cuff} must be positive")));
    }
    Ok((target_cuff / 4.0).cosh().sqrt().asinh())
}

/// Side of the regular right-angled hexagon, found as the fixed point of
/// `s -> hexagon_opposite(s, s, s)` by bisection.
pub fn regular_hexagon_side() -> f64 {
    let f = |s: f64| hexagon_opposite(s, s, s).expect("positive sides") - s;
    let (mut lo, mut hi) = (0.5_f64, 3.0_f64);
    debug_assert!(f(lo) > 0.0 && f(hi) < 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    const ASINH1: f64 = 0.881_373_587_019_543_f64;

    #[test]
    fn collar_width_examples() {
        assert!((collar_width(2.0 * ASINH1).unwrap() - ASINH1).abs() < 1e-14);
        let l = 2.0 * 2.0_f64.asinh();
        assert!((collar_width(l).unwrap() - 0.5_f64.asinh()).abs() < 1e-14);
        // mpmath, 30 digits
        assert!((collar_width(1.0).unwrap() - 1.406_829_113_747_295).abs() < 1e-14);
        assert!(collar_width(0.0).is_err());
        assert!(collar_width(-1.0).is_err());
    }

    #[test]
    fn collar_width_decreasing_and_blows_up() {
        let mut prev = f64::INFINITY;
        for k in 1..400 {
            let v = collar_width(k as f64 * 0.05).unwrap();
            assert!(v < prev);
            prev = v;
        }
        assert!(collar_width(1e-8).unwrap() > 15.0);
    }

    #[test]
    fn hexagon_examples() {
        let s = 2.0_f64.acosh();
        assert!((hexagon_opposite(s, s, s).unwrap() - s).abs() < 1e-12);
        assert!((hexagon_opposite(ASINH1, ASINH1, 0.0).unwrap() - 3.0_f64.acosh()).abs() < 1e-12);
        assert!((hexagon_opposite(ASINH1, ASINH1, s).unwrap() - 4.0_f64.acosh()).abs() < 1e-12);
        assert!(hexagon_opposite(0.0, 1.0, 1.0).is_err());
        assert!(hexagon_opposite(1.0, -1.0, 1.0).is_err());
    }

    #[test]
    fn hexagon_symmetric_and_monotone_in_c() {
        for &(a, b) in &[(0.3, 1.7), (1.0, 2.0), (2.5, 0.4)] {
            let w1 = hexagon_opposite(a, b, 1.1).unwrap();
            let w2 = hexagon_opposite(b, a, 1.1).unwrap();
            assert!((w1 - w2).abs() < 1e-14);
            let mut prev = 0.0;
            for k in 0..50 {
                let w = hexagon_opposite(a, b, k as f64 * 0.1).unwrap();
                assert!(w > prev);
                prev = w;
            }
        }
    }

    #[test]
    fn pentagon_examples() {
        assert_eq!(pentagon_opposite(ASINH1, ASINH1).unwrap(), PentagonSide::Degenerate);
        let b = 2.0_f64.sqrt().asinh();
        let c = pentagon_opposite(b, b).unwrap().side().unwrap();
        assert!((c - 2.0_f64.acosh()).abs() < 1e-12);
        assert!(matches!(pentagon_opposite(0.5, 0.5), Err(GeomError::NoSuchPentagon(..))));
    }

    #[test]
    fn square_side_examples() {
        let cuff = 2.0 * ASINH1;
        let b = square_side_for_cuff(cuff).unwrap();
        // mpmath, 30 digits
        assert!((b - 0.915_035_911_172_414_9).abs() < 1e-14);
        let c = pentagon_opposite(b, b).unwrap().side().unwrap();
        assert!((c - 0.5 * ASINH1).abs() < 1e-12);
        let b2 = square_side_for_cuff(4.0 * 2.0_f64.acosh()).unwrap();
        assert!((b2 - 2.0_f64.sqrt().asinh()).abs() < 1e-12);
        assert!(square_side_for_cuff(0.0).is_err());
    }

    #[test]
    fn regular_hexagon_fixed_point() {
        let s = regular_hexagon_side();
        assert!((s.cosh() - 2.0).abs() < 1e-12);
        assert!((hexagon_opposite(s, s, s).unwrap() - s).abs() < 1e-9);
    }

    #[test]
    fn arccosh_matches_std() {
        for &t in &[1.0, 1.0 + 1e-10, 1.2, 1.5, 2.0, 10.0, 1e7, 1e9, 1e200] {
            let ours = arccosh(t);
            let reference = if t < 1e150 { t.acosh() } else { t.ln() + std::f64::consts::LN_2 };
            assert!((ours - reference).abs() <= 1e-12 * reference.max(1e-6), "t={t}");
        }
    }

    #[test]
    fn length_rejects_negative() {
        assert!(Length::new(-0.1).is_err());
        assert!(Length::new(f64::NAN).is_err());
        assert!(Length::new(0.0).unwrap().is_cusp());
        assert!(Length::positive(0.0).is_err());
    }
}
