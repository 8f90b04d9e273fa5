//! The grid surface of one-holed squares, gluing schemes on its boundary
//! labels, and the cuff-length lower bounds they imply.
//!
//! Squares are indexed by `(i, j)` in the integer lattice; square `(i, j)`
//! occupies `[2ib, 2(i+1)b] x [2jb, 2(j+1)b]` in the flat picture and its
//! hole carries the label `(i, j)`.

use crate::error::{GeomError, Result};
use crate::hplane::assemblies::shortest_odd_loop;
use crate::hyptrig::{pentagon_opposite, PentagonSide};
use crate::pants::thick_constant;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label {
    pub i: i64,
    pub j: i64,
}

impl Label {
    pub const fn new(i: i64, j: i64) -> Self {
        Label { i, j }
    }

    /// L1 offset between two labels.
    pub fn offset(self, other: Label) -> u64 {
        self.i.abs_diff(other.i) + self.j.abs_diff(other.j)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

impl FromStr for Label {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || GeomError::Config(format!("bad label {s:?}, expected i,j"));
        let (i, j) = s.split_once(',').ok_or_else(bad)?;
        Ok(Label::new(i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
    }
}

/// Inclusive rectangle of labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[i64; 4]", into = "[i64; 4]")]
pub struct Window {
    pub imin: i64,
    pub imax: i64,
    pub jmin: i64,
    pub jmax: i64,
}

impl Window {
    pub fn new(imin: i64, imax: i64, jmin: i64, jmax: i64) -> Result<Self> {
        if imin > imax || jmin > jmax {
            return Err(GeomError::Config(format!("empty window [{imin}, {imax}, {jmin}, {jmax}]")));
        }
        Ok(Window { imin, imax, jmin, jmax })
    }

    /// The square `[-r, r]^2`.
    pub fn centered(r: i64) -> Self {
        Window { imin: -r, imax: r, jmin: -r, jmax: r }
    }

    pub fn contains(&self, l: Label) -> bool {
        (self.imin..=self.imax).contains(&l.i) && (self.jmin..=self.jmax).contains(&l.j)
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        (self.jmin..=self.jmax).flat_map(move |j| (self.imin..=self.imax).map(move |i| Label::new(i, j)))
    }
}

impl TryFrom<[i64; 4]> for Window {
    type Error = GeomError;
    fn try_from(w: [i64; 4]) -> Result<Self> {
        Window::new(w[0], w[1], w[2], w[3])
    }
}

impl From<Window> for [i64; 4] {
    fn from(w: Window) -> Self {
        [w.imin, w.imax, w.jmin, w.jmax]
    }
}

/// Cuff of each hole of the grid built from `b`: four times the pentagon
/// side opposite the square corner. `None` for the cusped grid.
pub fn hole_cuff(b: f64) -> Result<Option<f64>> {
    Ok(match pentagon_opposite(b, b)? {
        PentagonSide::Side(c) => Some(4.0 * c),
        PentagonSide::Degenerate => None,
    })
}

/// A finite window of the grid surface.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSurface {
    b: f64,
    window: Window,
}

impl GridSurface {
    pub fn new(b: f64, window: Window) -> Result<Self> {
        match hole_cuff(b) {
            Ok(Some(_)) => Ok(GridSurface { b, window }),
            _ => Err(GeomError::domain("grid surface", format!("need sinh b > 1, got b = {b}"))),
        }
    }

    /// The grid with `sinh b = 1`, whose holes are cusps.
    pub fn cusped(window: Window) -> Self {
        GridSurface { b: 1.0_f64.asinh(), window }
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// Hole cuff length; `None` when the holes are cusps.
    pub fn hole_cuff(&self) -> Option<f64> {
        hole_cuff(self.b).ok().flatten()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.window.labels()
    }
}

/// The `m x m` block of squares, with its outer boundary split into four
/// segments by the block's corners.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadSurface {
    pub m: u32,
    pub b: f64,
    /// Positions of the marked corners along the outer boundary, by arc length.
    pub marked: [f64; 4],
    pub width: f64,
}

impl QuadSurface {
    pub fn outer_boundary_length(&self) -> f64 {
        8.0 * self.m as f64 * self.b
    }

    pub fn hole_count(&self) -> u64 {
        (self.m as u64).pow(2)
    }

    pub fn hole_cuff(&self) -> f64 {
        hole_cuff(self.b).ok().flatten().unwrap_or(0.0)
    }
}

/// The `m x m` block. Opposite boundary segments are joined by the straight
/// horizontal or vertical paths of length `2mb`.
pub fn build_square_grid(b: f64, m: u32) -> Result<QuadSurface> {
    GridSurface::new(b, Window::new(0, 0, 0, 0)?)?;
    if m == 0 {
        return Err(GeomError::domain("square grid", "m must be at least 1"));
    }
    let side = 2.0 * m as f64 * b;
    Ok(QuadSurface {
        m,
        b,
        marked: [0.0, side, 2.0 * side, 3.0 * side],
        width: side,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndKind {
    Nonplanar,
    BoundaryAccumulated,
    CuspPants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemeKind {
    None,
    Qch,
    Reflection,
    Mixed,
    EndModification(EndKind),
}

impl SchemeKind {
    pub fn name(self) -> &'static str {
        match self {
            SchemeKind::None => "none",
            SchemeKind::Qch => "qch",
            SchemeKind::Reflection => "reflection",
            SchemeKind::Mixed => "mixed",
            SchemeKind::EndModification(EndKind::Nonplanar) => "nonplanar",
            SchemeKind::EndModification(EndKind::BoundaryAccumulated) => "boundary_accumulated",
            SchemeKind::EndModification(EndKind::CuspPants) => "cusp_pants",
        }
    }
}

impl FromStr for SchemeKind {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "none" => SchemeKind::None,
            "qch" => SchemeKind::Qch,
            "reflection" => SchemeKind::Reflection,
            "mixed" => SchemeKind::Mixed,
            "nonplanar" => SchemeKind::EndModification(EndKind::Nonplanar),
            "boundary_accumulated" => SchemeKind::EndModification(EndKind::BoundaryAccumulated),
            "cusp_pants" => SchemeKind::EndModification(EndKind::CuspPants),
            _ => return Err(GeomError::Config(format!("unknown scheme {s:?}"))),
        })
    }
}

/// A two-cusped pants attached along a hole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Attachment {
    pub label: Label,
    /// Length of the attaching cuff, equal to the hole cuff.
    pub boundary_length: f64,
}

/// Global bound on label offsets of paired holes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GluingBound {
    Bounded(u64),
    Unbounded,
}

/// An involutive partial pairing of hole labels, given by a rule, with an
/// optional twist per pair (default 0).
#[derive(Debug, Clone, PartialEq)]
pub struct GluingScheme {
    kind: SchemeKind,
    twists: BTreeMap<(Label, Label), f64>,
}

impl GluingScheme {
    pub fn new(kind: SchemeKind) -> Self {
        GluingScheme { kind, twists: BTreeMap::new() }
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    /// Label glued to `l`, if any.
    pub fn partner(&self, l: Label) -> Option<Label> {
        let adjacent = |l: Label| Some(Label::new(if l.i.rem_euclid(2) == 0 { l.i + 1 } else { l.i - 1 }, l.j));
        match self.kind {
            SchemeKind::None => None,
            SchemeKind::Qch => adjacent(l),
            // the reflection x -> -x maps square i to square -1 - i
            SchemeKind::Reflection => Some(Label::new(-1 - l.i, l.j)),
            SchemeKind::Mixed if l.j < 0 => (l.i != 0).then_some(Label::new(-l.i, l.j)),
            SchemeKind::Mixed => adjacent(l),
            SchemeKind::EndModification(EndKind::Nonplanar) if l.j > 0 => adjacent(l),
            SchemeKind::EndModification(_) => None,
        }
    }

    /// Two-cusped pants attached at `l`, for the cusp-pants modification.
    pub fn attachment(&self, l: Label, b: f64) -> Option<Attachment> {
        match self.kind {
            SchemeKind::EndModification(EndKind::CuspPants) if l.j > 0 => Some(Attachment {
                label: l,
                boundary_length: hole_cuff(b).ok().flatten()?,
            }),
            _ => None,
        }
    }

    /// Pairs with both labels in the window, smaller label first.
    pub fn pairs_in(&self, w: &Window) -> Vec<(Label, Label)> {
        w.labels()
            .filter_map(|l| self.partner(l).filter(|p| l < *p && w.contains(*p)).map(|p| (l, p)))
            .collect()
    }

    /// Largest offset among pairs inside the window.
    pub fn max_offset_in(&self, w: &Window) -> u64 {
        self.pairs_in(w).iter().map(|(a, b)| a.offset(*b)).max().unwrap_or(0)
    }

    /// Whether pairing twice is the identity on the window, with no label
    /// paired to itself.
    pub fn is_involution_on(&self, w: &Window) -> bool {
        w.labels().all(|l| match self.partner(l) {
            Some(p) => p != l && self.partner(p) == Some(l),
            None => true,
        })
    }

    pub fn set_twist(&mut self, a: Label, b: Label, twist: f64) -> Result<()> {
        if self.partner(a) != Some(b) {
            return Err(GeomError::Config(format!("{a} and {b} are not glued by the {} scheme", self.kind.name())));
        }
        if !twist.is_finite() {
            return Err(GeomError::Config(format!("twist for {a}->{b} is not finite")));
        }
        self.twists.insert((a.min(b), a.max(b)), twist);
        Ok(())
    }

    pub fn twist(&self, a: Label, b: Label) -> f64 {
        self.twists.get(&(a.min(b), a.max(b))).copied().unwrap_or(0.0)
    }

    pub fn twists(&self) -> &BTreeMap<(Label, Label), f64> {
        &self.twists
    }
}

pub fn scheme_qch() -> GluingScheme {
    GluingScheme::new(SchemeKind::Qch)
}

pub fn scheme_reflection() -> GluingScheme {
    GluingScheme::new(SchemeKind::Reflection)
}

pub fn scheme_mixed() -> GluingScheme {
    GluingScheme::new(SchemeKind::Mixed)
}

pub fn scheme_end_modification(kind: EndKind) -> GluingScheme {
    GluingScheme::new(SchemeKind::EndModification(kind))
}

/// Global offset bound, read off the rule.
pub fn gluing_bound(scheme: &GluingScheme) -> GluingBound {
    match scheme.kind {
        SchemeKind::None => GluingBound::Bounded(0),
        SchemeKind::Qch => GluingBound::Bounded(1),
        SchemeKind::Reflection | SchemeKind::Mixed => GluingBound::Unbounded,
        SchemeKind::EndModification(EndKind::Nonplanar) => GluingBound::Bounded(1),
        SchemeKind::EndModification(_) => GluingBound::Bounded(0),
    }
}

/// Cuff lower bounds for the grid without gluings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NoGluingBound {
    /// `2mb - K(sys)`, clamped at 0.
    pub curve: f64,
    /// `(2/3)(2mb - K(sys))`, clamped at 0; the conservative form.
    pub cuff: f64,
}

pub fn cuff_lower_bound_no_gluing(m: u32, b: f64, sys: f64) -> Result<NoGluingBound> {
    if m == 0 || !(sys > 0.0) || !(b > 0.0) {
        return Err(GeomError::domain("no-gluing bound", format!("m = {m}, b = {b}, sys = {sys}")));
    }
    let excess = 2.0 * m as f64 * b - thick_constant(sys);
    Ok(NoGluingBound {
        curve: excess.max(0.0),
        cuff: (2.0 / 3.0 * excess).max(0.0),
    })
}

/// `min{8(m-1)b, (2/3)(2d(m/J - 2) - K(sys))}`, asserted for `m > 2J + 2`.
pub fn cuff_lower_bound_bounded_gluing(m: u32, b: f64, j: u32, d: f64, sys: f64) -> Result<f64> {
    if j == 0 {
        return Err(GeomError::domain("bounded-gluing bound", "J must be at least 1"));
    }
    if m <= 2 * j + 2 {
        return Err(GeomError::domain("bounded-gluing bound", format!("need m > 2J + 2, got m = {m}, J = {j}")));
    }
    if !(d > 0.0 && sys > 0.0 && b > 0.0) {
        return Err(GeomError::domain("bounded-gluing bound", format!("b = {b}, d = {d}, sys = {sys}")));
    }
    let (m, jf) = (m as f64, j as f64);
    let width_term = 2.0 / 3.0 * (2.0 * d * (m / jf - 2.0) - thick_constant(sys));
    Ok((8.0 * (m - 1.0) * b).min(width_term))
}

/// Length bound for the geodesic homotopic to the outer boundary of the
/// `m x m` block.
pub fn outer_geodesic_lower_bound(m: u32, b: f64) -> Result<f64> {
    if m < 2 {
        return Err(GeomError::domain("outer geodesic bound", "m must be at least 2"));
    }
    let bound = 8.0 * (m as f64 - 1.0) * b;
    debug_assert!(bound > 2.0 * m as f64 * b);
    Ok(bound)
}

/// The hole cuff, used as the systole of the grid surface.
pub fn systole_estimate(b: f64) -> Result<f64> {
    hole_cuff(b)?.ok_or_else(|| GeomError::domain("systole", "cusped grid has no positive systole from holes"))
}

/// Mesh cross-check of [`systole_estimate`]: the shortest loop around a
/// hole found in a 3 x 3 window at resolution `h`.
pub fn systole_cross_check(b: f64, h: f64) -> Result<f64> {
    shortest_odd_loop(b, h)
}

/// The gluing-scheme config document.
///
/// ```json
/// {"b": 1.0, "scheme": "qch", "window": [-3, 3, -3, 3],
///  "twists": {"0,0->1,0": 0.25}}
/// ```
///
/// `scheme` is one of `none`, `qch`, `reflection`, `mixed`, `nonplanar`,
/// `boundary_accumulated`, `cusp_pants`. `window` is `[imin, imax, jmin,
/// jmax]`, inclusive. Each twist key names a glued pair `i,j->i',j'`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeConfig {
    pub b: f64,
    pub scheme: String,
    pub window: Window,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub twists: BTreeMap<String, f64>,
}

/// A validated config.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeSetup {
    pub surface: GridSurface,
    pub scheme: GluingScheme,
}

fn parse_pair(key: &str) -> Result<(Label, Label)> {
    let (a, b) = key
        .split_once("->")
        .ok_or_else(|| GeomError::Config(format!("bad twist key {key:?}, expected i,j->i',j'")))?;
    Ok((a.parse()?, b.parse()?))
}

impl SchemeConfig {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| GeomError::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<SchemeSetup> {
        let surface = GridSurface::new(self.b, self.window)?;
        let mut scheme = GluingScheme::new(self.scheme.parse()?);
        for (key, &t) in &self.twists {
            let (a, b) = parse_pair(key)?;
            if !self.window.contains(a) || !self.window.contains(b) {
                return Err(GeomError::Config(format!("twist {key} lies outside the window")));
            }
            scheme.set_twist(a, b, t)?;
        }
        Ok(SchemeSetup { surface, scheme })
    }

    /// Canonical form: the scheme name as parsed and each twist keyed by its
    /// pair with the smaller label first.
    pub fn canonical(&self) -> Result<String> {
        let setup = self.validate()?;
        let canon = SchemeConfig {
            b: self.b,
            scheme: setup.scheme.kind().name().to_string(),
            window: self.window,
            twists: setup.scheme.twists().iter().map(|((a, b), t)| (format!("{a}->{b}"), *t)).collect(),
        };
        serde_json::to_string(&canon).map_err(|e| GeomError::Config(e.to_string()))
    }
}
