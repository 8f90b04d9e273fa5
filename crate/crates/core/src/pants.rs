//! Pair-of-pants geometry and the analytic diameter bounds.
//!
//! A pants with cuffs `l1, l2, l3` is the double of a right-angled hexagon
//! with alternating sides `l1/2, l2/2, l3/2`. With one or two cusps the
//! hexagon degenerates to a pentagon or quadrilateral with ideal vertices,
//! and the thick part is obtained by cutting off the area-2 horoball
//! neighbourhood of each cusp. Each half of that horocycle has length one.
//!
//! The bounds below carry explicit constants. For two cusps the truncated
//! bound is `L/2 + eta(l) + 3/2`.

use crate::error::{GeomError, Result};
use crate::hyptrig::{collar_width, hexagon_opposite, Length};
use serde::{Deserialize, Serialize};

/// Half-length of the horocyclic boundary in each half of a truncated pants.
pub const HOROCYCLE_HALF_LENGTH: f64 = 1.0;

/// The three boundary lengths of a pair of pants; zero marks a cusp.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CuffTriple {
    cuffs: [Length; 3],
    cusp_count: u8,
}

impl CuffTriple {
    pub fn new(l1: f64, l2: f64, l3: f64) -> Result<Self> {
        let cuffs = [Length::new(l1)?, Length::new(l2)?, Length::new(l3)?];
        let cusp_count = cuffs.iter().filter(|c| c.is_cusp()).count() as u8;
        if cusp_count > 2 {
            return Err(GeomError::domain(
                "cuff triple",
                "the three-cusped pants is not supported",
            ));
        }
        Ok(CuffTriple { cuffs, cusp_count })
    }

    pub fn cuffs(&self) -> [f64; 3] {
        self.cuffs.map(Length::value)
    }

    pub fn cusp_count(&self) -> u8 {
        self.cusp_count
    }

    /// Nonzero cuff lengths, in order.
    pub fn geodesic_cuffs(&self) -> Vec<f64> {
        self.cuffs().into_iter().filter(|&c| c > 0.0).collect()
    }

    /// Smallest and largest geodesic cuff.
    pub fn cuff_range(&self) -> (f64, f64) {
        let g = self.geodesic_cuffs();
        let lo = g.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = g.iter().copied().fold(0.0, f64::max);
        (lo, hi)
    }
}

/// A pants with at least one cusp, with its cusp neighbourhoods removed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedPants {
    base: CuffTriple,
    horocycle_half_length: f64,
}

impl TruncatedPants {
    pub fn new(base: CuffTriple) -> Result<Self> {
        if base.cusp_count() == 0 {
            return Err(GeomError::domain("truncated pants", "needs at least one cusp"));
        }
        Ok(TruncatedPants {
            base,
            horocycle_half_length: HOROCYCLE_HALF_LENGTH,
        })
    }

    pub fn base(&self) -> &CuffTriple {
        &self.base
    }

    pub fn horocycle_half_length(&self) -> f64 {
        self.horocycle_half_length
    }
}

/// Lower and upper cuff bounds `0 < l < L`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiamBoundParams {
    lower: f64,
    upper: f64,
}

impl DiamBoundParams {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !(lower.is_finite() && upper.is_finite() && lower > 0.0 && lower < upper) {
            return Err(GeomError::domain(
                "cuff bounds",
                format!("need 0 < l < L, got l={lower}, L={upper}"),
            ));
        }
        Ok(DiamBoundParams { lower, upper })
    }

    /// Tightest admissible bounds around the geodesic cuffs of a pants. When
    /// all cuffs are equal, `L` exceeds `l` by a relative `1e-12`.
    pub fn enclosing(cuffs: &CuffTriple) -> Result<Self> {
        let (lo, hi) = cuffs.cuff_range();
        DiamBoundParams::new(lo, hi.max(lo * (1.0 + 1e-12)))
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }
}

/// Seams of the half-pants hexagon: entry `k` is the side opposite the
/// half-cuff `l_k / 2`.
pub fn seam_lengths(cuffs: &CuffTriple) -> Result<[f64; 3]> {
    if cuffs.cusp_count() > 0 {
        return Err(GeomError::domain("seam lengths", "cusped pants: use truncated_seams"));
    }
    let h = cuffs.cuffs().map(|c| c / 2.0);
    Ok([
        hexagon_opposite(h[1], h[2], h[0])?,
        hexagon_opposite(h[2], h[0], h[1])?,
        hexagon_opposite(h[0], h[1], h[2])?,
    ])
}

/// Side data of the truncated half-pants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TruncatedSeams {
    /// `z` joins the two geodesic cuffs; `x`, `y` run from a cuff to the
    /// horocycle and are only bounded.
    OneCusp { z: f64, x_upper: f64, y_upper: f64 },
    /// `x` runs from the cuff to either horocycle; `z` joins the horocycles.
    TwoCusp { x: f64, z_upper: f64 },
}

pub fn truncated_seams(p: &TruncatedPants) -> Result<TruncatedSeams> {
    let g = p.base().geodesic_cuffs();
    match p.base().cusp_count() {
        1 => {
            let (l1, l2) = (g[0], g[1]);
            let z = collar_width(l1)? + collar_width(l2)?;
            let (l, big_l) = p.base().cuff_range();
            let bound = big_l / 2.0 + (2.0 / (l / 2.0).sinh()).ln();
            Ok(TruncatedSeams::OneCusp {
                z,
                x_upper: bound,
                y_upper: bound,
            })
        }
        2 => {
            let l1 = g[0];
            Ok(TruncatedSeams::TwoCusp {
                x: collar_width(l1)?,
                z_upper: l1 / 2.0 + 1.0,
            })
        }
        n => Err(GeomError::domain("truncated seams", format!("cusp count {n} not in {{1,2}}"))),
    }
}

/// `K_1(l) = log(2 / sinh^2(l/2)) + log(cosh^2(l/2) + 1) + log 2`.
pub fn seam_constant(l: f64) -> f64 {
    let (s, c) = ((l / 2.0).sinh(), (l / 2.0).cosh());
    (2.0 / (s * s)).ln() + (c * c + 1.0).ln() + std::f64::consts::LN_2
}

/// Additive constant of the thick-pants diameter bound, `3/2 K_1(l) + 2`.
pub fn thick_constant(l: f64) -> f64 {
    1.5 * seam_constant(l) + 2.0
}

/// Upper bound `3L/2 + K(l)` on the diameter of any pants with cuffs in `[l, L]`.
pub fn diameter_bound_thick(params: &DiamBoundParams) -> f64 {
    1.5 * params.upper() + thick_constant(params.lower())
}

/// Additive constant of the truncated bound for the given cusp count.
pub fn truncated_constant(l: f64, cusp_count: u8) -> Result<f64> {
    let eta = collar_width(l)?;
    match cusp_count {
        1 => Ok(eta + (3.0 / (l / 2.0).sinh()).ln() + 2.5),
        2 => Ok(eta + 1.5),
        n => Err(GeomError::domain("truncated bound", format!("cusp count {n} not in {{1,2}}"))),
    }
}

/// Diameter bound for the thick part of a cusped pants:
/// `L + K(l)` with one cusp, `L/2 + K(l)` with two.
pub fn diameter_bound_truncated(params: &DiamBoundParams, cusp_count: u8) -> Result<f64> {
    let k = truncated_constant(params.lower(), cusp_count)?;
    Ok(match cusp_count {
        1 => params.upper() + k,
        _ => params.upper() / 2.0 + k,
    })
}

/// Diameter bound for a pants with these cuffs: the thick bound without
/// cusps, the truncated bound otherwise.
pub fn diameter_bound(cuffs: &CuffTriple) -> Result<f64> {
    let params = DiamBoundParams::enclosing(cuffs)?;
    match cuffs.cusp_count() {
        0 => Ok(diameter_bound_thick(&params)),
        n => diameter_bound_truncated(&params, n),
    }
}

/// Upper bound on the perimeter of the one-cusp truncated hexagon.
pub fn hexagon_perimeter_bound_one_cusp(params: &DiamBoundParams) -> f64 {
    let l = params.lower();
    let eta = collar_width(l).expect("l > 0 by construction");
    2.0 * params.upper() + 2.0 * eta + 2.0 * (2.0 / (l / 2.0).sinh()).ln() + 1.0
}

/// Smallest possible maximal cuff of a pants whose (truncated) diameter is
/// at least `diam`: `(2/3)(diam - K(l))`, clamped at zero.
pub fn cuff_bound_from_diameter(diam: f64, params: &DiamBoundParams) -> Result<f64> {
    if !(diam >= 0.0) {
        return Err(GeomError::domain("diameter", format!("{diam} must be nonnegative")));
    }
    Ok((2.0 / 3.0 * (diam - thick_constant(params.lower()))).max(0.0))
}
