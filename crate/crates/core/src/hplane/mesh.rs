//! Sampling of polygons into geometric graphs and assembly of glued copies.
//!
//! A [`Patch`] is one region sampled at resolution `h`: boundary samples at
//! spacing at most `h/2`, interior samples thinned to separation `0.6 h`, so
//! every point of the region lies within `0.9 h` of a sample. Samples closer
//! than the connection radius are joined by chords that avoid the removed
//! horoballs; consecutive samples on a horocyclic side are joined by the arc.
//!
//! Copies of patches are glued side to side. Samples on glued sides are
//! identified, and short geodesics crossing a glued side are added as
//! unfolded edges. Every edge weight is the length of an actual path, so graph
//! distances dominate surface distances.

use super::paths::Graph;
use super::point::{mink, HPoint, Isometry};
use super::polygon::{Region, SideKind};
use crate::error::{GeomError, Result};
use rstar::primitives::GeomWithData;
use rstar::RTree;
use serde::Serialize;
use std::io::Write;

/// Boundary sample spacing, in units of `h`.
pub const BOUNDARY_SPACING: f64 = 0.5;
/// Minimum separation of interior samples, in units of `h`.
pub const SEPARATION: f64 = 0.6;
/// Maximum edge of the candidate triangulation, in units of `h`.
const CANDIDATE_EDGE: f64 = 0.3;
/// Covering radius of the samples, in units of `h`.
pub const COVER: f64 = SEPARATION + CANDIDATE_EDGE;

/// Chords up to this length are edges. The ratio to `h` grows as `h`
/// shrinks, which makes graph distances converge to surface distances.
pub fn connection_radius(h: f64) -> f64 {
    (2.0 * h).max((0.4 * h).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeKind {
    /// Geodesic segment inside one copy; weight is the chart distance.
    Chord,
    /// Arc of a horocyclic boundary side.
    Horocyclic,
    /// Geodesic crossing a glued side.
    Unfolded,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Edge {
    pub a: u32,
    pub b: u32,
    pub weight: f64,
    pub kind: EdgeKind,
}

type Entry = GeomWithData<[f64; 2], u32>;

/// Spatial index in Poincare coordinates about a chosen centre.
struct PointIndex {
    center: Isometry,
    tree: RTree<Entry>,
}

impl PointIndex {
    fn new(region: &Region) -> Self {
        let c = region.centroid();
        let t = c.direction_to(&region.corners()[0]);
        let n = super::point::left_normal(&c, &t);
        PointIndex {
            center: Isometry::frame(&c, &t, &n).inverse(),
            tree: RTree::new(),
        }
    }

    fn key(&self, p: &HPoint) -> [f64; 2] {
        self.center.apply(p).poincare()
    }

    fn insert(&mut self, p: &HPoint, id: u32) {
        self.tree.insert(Entry::new(self.key(p), id));
    }

    /// Superset of the indexed points within hyperbolic distance `rho`.
    fn near<'a>(&'a self, p: &HPoint, rho: f64) -> impl Iterator<Item = u32> + 'a {
        let k = self.key(p);
        let rp = self.center.apply(p).radius();
        // Euclidean image of the hyperbolic ball lies in this disk
        let r = rho * rho.exp() / (1.0 + rp.cosh());
        self.tree.locate_within_distance(k, r * r).map(|e| e.data)
    }
}

/// One sampled region.
#[derive(Debug, Clone)]
pub struct Patch {
    region: Region,
    points: Vec<HPoint>,
    side_samples: Vec<Vec<u32>>,
    boundary_count: usize,
    edges: Vec<Edge>,
    h: f64,
}

impl Patch {
    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn points(&self) -> &[HPoint] {
        &self.points
    }

    /// Samples along side `i`, from corner `i` to corner `i + 1` inclusive.
    pub fn side_samples(&self, i: usize) -> &[u32] {
        &self.side_samples[i]
    }

    /// Boundary samples come first in `points`.
    pub fn boundary_count(&self) -> usize {
        self.boundary_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn resolution(&self) -> f64 {
        self.h
    }

    pub fn cover_radius(&self) -> f64 {
        COVER * self.h
    }
}

/// Samples the region at resolution `h`.
pub fn mesh_polygon(region: &Region, h: f64) -> Result<Patch> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(GeomError::domain("mesh resolution", format!("h = {h}")));
    }
    let n = region.len();
    let mut points: Vec<HPoint> = region.corners().to_vec();
    let mut side_samples = Vec::with_capacity(n);
    for i in 0..n {
        let pieces = ((region.side_length(i) / (BOUNDARY_SPACING * h)) - 1e-9).ceil().max(1.0) as usize;
        let mut ids = vec![i as u32];
        for k in 1..pieces {
            ids.push(points.len() as u32);
            points.push(region.point_on_side(i, k as f64 / pieces as f64));
        }
        ids.push(((i + 1) % n) as u32);
        side_samples.push(ids);
    }
    let boundary_count = points.len();

    let mut index = PointIndex::new(region);
    for (i, p) in points.iter().enumerate() {
        index.insert(p, i as u32);
    }
    let delta = SEPARATION * h;
    let balls: Vec<_> = region.horoballs().copied().collect();
    let c = region.centroid();
    for i in 0..n {
        let (a, b) = (region.corners()[i], region.corners()[(i + 1) % n]);
        for q in triangle_lattice(&c, &a, &b, CANDIDATE_EDGE * h) {
            if balls.iter().any(|hb| hb.pairing(&q) <= hb.level * (1.0 + 1e-9)) {
                continue;
            }
            let crowded = index.near(&q, delta).any(|j| points[j as usize].dist_fast(&q) < delta);
            if !crowded {
                index.insert(&q, points.len() as u32);
                points.push(q);
            }
        }
    }

    let r = connection_radius(h);
    let cosh_r = r.cosh();
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for j in index.near(p, r) {
            if (j as usize) <= i {
                continue;
            }
            let q = &points[j as usize];
            if p.pairing(q) <= cosh_r && region.segment_clear(p, q) {
                edges.push(Edge { a: i as u32, b: j, weight: p.dist_fast(q), kind: EdgeKind::Chord });
            }
        }
    }
    for (i, side) in region.sides().iter().enumerate() {
        if let SideKind::Horocyclic(_) = side {
            let ids = &side_samples[i];
            let step = region.side_length(i) / (ids.len() - 1) as f64;
            for w in ids.windows(2) {
                edges.push(Edge { a: w[0], b: w[1], weight: step, kind: EdgeKind::Horocyclic });
            }
        }
    }
    let patch = Patch { region: region.clone(), points, side_samples, boundary_count, edges, h };
    let g = Graph::from_edges(patch.points.len(), patch.edges.iter().map(|e| (e.a, e.b, e.weight)));
    match g.component_count() {
        1 => Ok(patch),
        k => Err(GeomError::Disconnected { components: k }),
    }
}

/// Points of a Klein-model lattice on the geodesic triangle `a b c`, fine
/// enough that neighbouring lattice points are within `edge` of each other.
fn triangle_lattice(a: &HPoint, b: &HPoint, c: &HPoint, edge: f64) -> Vec<HPoint> {
    let longest = a.dist_fast(b).max(b.dist_fast(c)).max(c.dist_fast(a));
    let mut n = ((longest / edge).ceil() as usize).max(1);
    loop {
        let at = |i: usize, j: usize| {
            let k = n - i - j;
            HPoint::normalize(a.vector() * i as f64 + b.vector() * j as f64 + c.vector() * k as f64)
        };
        let mut pts = Vec::with_capacity((n + 1) * (n + 2) / 2);
        let mut worst = 0.0f64;
        for i in 0..=n {
            for j in 0..=(n - i) {
                let p = at(i, j);
                if i + j < n {
                    worst = worst.max(p.dist_fast(&at(i + 1, j))).max(p.dist_fast(&at(i, j + 1)));
                }
                if j > 0 && i < n {
                    worst = worst.max(p.dist_fast(&at(i + 1, j - 1)));
                }
                pts.push(p);
            }
        }
        if worst <= edge {
            return pts;
        }
        n = (n as f64 * (worst / edge) * 1.05).ceil() as usize;
    }
}

/// A side of one copy in an assembly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SideRef {
    pub copy: usize,
    pub side: usize,
}

/// Identification of two sides; `reversed` glues the start of one side to
/// the end of the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Gluing {
    pub a: SideRef,
    pub b: SideRef,
    pub reversed: bool,
}

impl Gluing {
    /// Same side of two mirror copies.
    pub fn mirror(copy_a: usize, copy_b: usize, side: usize) -> Self {
        Gluing {
            a: SideRef { copy: copy_a, side },
            b: SideRef { copy: copy_b, side },
            reversed: false,
        }
    }
}

/// A glued surface sampled as a graph.
#[derive(Debug, Clone)]
pub struct PolygonMesh {
    patches: Vec<Patch>,
    copies: Vec<usize>,
    gluings: Vec<Gluing>,
    /// Global vertex id of each local sample, per copy.
    local_to_global: Vec<Vec<u32>>,
    /// Representative (copy, local sample) of each global vertex.
    representative: Vec<(u32, u32)>,
    /// First (copy, side) containing the vertex, if it is on a side.
    tags: Vec<Option<(u32, u16)>>,
    edges: Vec<Edge>,
    graph: Graph,
    h: f64,
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let up = self.0[self.0[x as usize] as usize];
            self.0[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi as usize] = lo;
        }
    }
}

/// Samples within `r` of the geodesic through side `i`, excluding the
/// samples of that side.
fn side_band(patch: &Patch, i: usize, r: f64) -> Vec<u32> {
    let n = patch.region.chord_normal(i);
    let on_side: std::collections::HashSet<u32> = patch.side_samples[i].iter().copied().collect();
    let s = r.sinh();
    (0..patch.points.len() as u32)
        .filter(|k| !on_side.contains(k) && mink(patch.points[*k as usize].vector(), &n).abs() <= s)
        .collect()
}

/// Map from the chart of copy `b` to the chart of copy `a` across a gluing.
fn gluing_map(pa: &Patch, pb: &Patch, g: &Gluing) -> Isometry {
    let fa = pa.region.side_frame(g.a.side, false);
    let flipped = Isometry::frame(&fa.point(), &fa.heading(), &-fa.normal());
    let fb = pb.region.side_frame(g.b.side, g.reversed);
    flipped * fb.inverse()
}

impl PolygonMesh {
    /// Glues copies of the patches. `copies[k]` is the patch of copy `k`.
    pub fn assemble(patches: Vec<Patch>, copies: Vec<usize>, gluings: Vec<Gluing>) -> Result<Self> {
        let h = patches
            .first()
            .map(|p| p.h)
            .ok_or_else(|| GeomError::Config("assembly needs a patch".into()))?;
        if patches.iter().any(|p| p.h != h) {
            return Err(GeomError::Config("patches sampled at different resolutions".into()));
        }
        if let Some(&bad) = copies.iter().find(|&&c| c >= patches.len()) {
            return Err(GeomError::Config(format!("copy refers to missing patch {bad}")));
        }
        let mut base = Vec::with_capacity(copies.len() + 1);
        let mut total = 0u32;
        for &c in &copies {
            base.push(total);
            total += patches[c].points.len() as u32;
        }
        let mut uf = UnionFind((0..total).collect());
        for g in &gluings {
            for s in [g.a, g.b] {
                if s.copy >= copies.len() || s.side >= patches[copies[s.copy]].region.len() {
                    return Err(GeomError::Config(format!("gluing refers to missing side {s:?}")));
                }
            }
            let (pa, pb) = (&patches[copies[g.a.copy]], &patches[copies[g.b.copy]]);
            let (sa, sb) = (&pa.side_samples[g.a.side], &pb.side_samples[g.b.side]);
            let (la, lb) = (pa.region.side_length(g.a.side), pb.region.side_length(g.b.side));
            if sa.len() != sb.len() || (la - lb).abs() > 1e-9 * la.max(1.0) {
                return Err(GeomError::Config(format!("glued sides differ in length: {la} vs {lb}")));
            }
            let m = sa.len() - 1;
            for k in 0..=m {
                let kb = if g.reversed { m - k } else { k };
                uf.union(base[g.a.copy] + sa[k], base[g.b.copy] + sb[kb]);
            }
        }

        let mut global_of_root = vec![u32::MAX; total as usize];
        let mut representative = Vec::new();
        let mut local_to_global = Vec::with_capacity(copies.len());
        for (ci, &c) in copies.iter().enumerate() {
            let mut map = Vec::with_capacity(patches[c].points.len());
            for k in 0..patches[c].points.len() as u32 {
                let root = uf.find(base[ci] + k) as usize;
                if global_of_root[root] == u32::MAX {
                    global_of_root[root] = representative.len() as u32;
                    representative.push((ci as u32, k));
                }
                map.push(global_of_root[root]);
            }
            local_to_global.push(map);
        }
        let nv = representative.len();
        let mut tags = vec![None; nv];
        for (ci, &c) in copies.iter().enumerate() {
            for (s, ids) in patches[c].side_samples.iter().enumerate() {
                for &k in ids {
                    let t = &mut tags[local_to_global[ci][k as usize] as usize];
                    if t.is_none() {
                        *t = Some((ci as u32, s as u16));
                    }
                }
            }
        }

        let mut edges = Vec::new();
        for (ci, &c) in copies.iter().enumerate() {
            let map = &local_to_global[ci];
            edges.extend(patches[c].edges.iter().filter_map(|e| {
                let (a, b) = (map[e.a as usize], map[e.b as usize]);
                (a != b).then_some(Edge { a, b, ..*e })
            }));
        }
        let r = connection_radius(h);
        let cosh_r = r.cosh();
        for g in &gluings {
            let (pa, pb) = (&patches[copies[g.a.copy]], &patches[copies[g.b.copy]]);
            let t = gluing_map(pa, pb, g);
            let t_inv = t.inverse();
            let n = pa.region.chord_normal(g.a.side);
            let ends = (
                pa.region.corners()[g.a.side],
                pa.region.corners()[(g.a.side + 1) % pa.region.len()],
            );
            let len = pa.region.side_length(g.a.side);
            let band_a = side_band(pa, g.a.side, r);
            let band_b: Vec<(u32, HPoint)> = side_band(pb, g.b.side, r)
                .into_iter()
                .map(|k| (k, t.apply(&pb.points[k as usize])))
                .collect();
            for &ka in &band_a {
                let p = &pa.points[ka as usize];
                let fp = mink(p.vector(), &n);
                for (kb, q) in &band_b {
                    if p.pairing(q) > cosh_r {
                        continue;
                    }
                    let fq = mink(q.vector(), &n);
                    if !(fp < 0.0 && fq > 0.0) {
                        continue;
                    }
                    let x = HPoint::normalize(p.vector() * fq - q.vector() * fp);
                    if ends.0.dist_fast(&x) + x.dist_fast(&ends.1) > len + 1e-9 {
                        continue;
                    }
                    let qb = &pb.points[*kb as usize];
                    if pa.region.segment_clear(p, &x) && pb.region.segment_clear(qb, &t_inv.apply(&x)) {
                        edges.push(Edge {
                            a: local_to_global[g.a.copy][ka as usize],
                            b: local_to_global[g.b.copy][*kb as usize],
                            weight: p.dist_fast(q),
                            kind: EdgeKind::Unfolded,
                        });
                    }
                }
            }
        }
        let graph = Graph::from_edges(nv, edges.iter().map(|e| (e.a, e.b, e.weight)));
        match graph.component_count() {
            1 => {}
            k => return Err(GeomError::Disconnected { components: k }),
        }
        Ok(PolygonMesh { patches, copies, gluings, local_to_global, representative, tags, edges, graph, h })
    }

    /// A single patch as a mesh.
    pub fn single(patch: Patch) -> Result<Self> {
        PolygonMesh::assemble(vec![patch], vec![0], vec![])
    }

    pub fn resolution(&self) -> f64 {
        self.h
    }

    pub fn cover_radius(&self) -> f64 {
        COVER * self.h
    }

    pub fn vertex_count(&self) -> usize {
        self.representative.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn patches(&self) -> &[Patch] {
        &self.patches
    }

    pub fn copy_count(&self) -> usize {
        self.copies.len()
    }

    pub fn patch_of_copy(&self, copy: usize) -> usize {
        self.copies[copy]
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    /// Global vertex ids of the samples of one copy.
    pub fn copy_vertices(&self, copy: usize) -> &[u32] {
        &self.local_to_global[copy]
    }

    /// Global vertex ids along a side of a copy.
    pub fn side_vertices(&self, copy: usize, side: usize) -> Vec<u32> {
        let patch = &self.patches[self.copies[copy]];
        patch.side_samples[side]
            .iter()
            .map(|&k| self.local_to_global[copy][k as usize])
            .collect()
    }

    /// Position of a vertex in the chart of its representative copy.
    pub fn position(&self, v: u32) -> (usize, HPoint) {
        let (c, k) = self.representative[v as usize];
        (c as usize, self.patches[self.copies[c as usize]].points[k as usize])
    }

    /// Boundary tag: the first (copy, side) whose samples include the vertex.
    pub fn tag(&self, v: u32) -> Option<(usize, usize)> {
        self.tags[v as usize].map(|(c, s)| (c as usize, s as usize))
    }

    /// True when every copy is the same patch and every gluing identifies a
    /// side with the same side of another copy, so that the surface folds
    /// onto one patch by a distance non-increasing map.
    pub fn is_foldable(&self) -> bool {
        self.copies.iter().all(|&c| c == self.copies[0])
            && self.gluings.iter().all(|g| g.a.side == g.b.side && !g.reversed)
    }

    /// Writes one record per line: `v id x0 x1 x2 copy` and `e a b weight kind`.
    pub fn dump(&self, mut out: impl Write) -> std::io::Result<()> {
        for v in 0..self.vertex_count() as u32 {
            let (c, p) = self.position(v);
            let [x0, x1, x2] = p.coords();
            writeln!(out, "v {v} {x0:.17e} {x1:.17e} {x2:.17e} {c}")?;
        }
        for e in &self.edges {
            writeln!(out, "e {} {} {:.17e} {:?}", e.a, e.b, e.weight, e.kind)?;
        }
        Ok(())
    }
}

/// Diameter bounds from a mesh.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiameterEstimate {
    /// Largest chart distance between samples of one patch; a true lower
    /// bound when the surface folds onto that patch, `None` otherwise.
    pub lower: Option<f64>,
    /// Graph diameter (up to the sweep slack).
    pub upper: f64,
    /// `upper` plus twice the covering radius: bounds the true diameter.
    pub certified_upper: f64,
    pub cover: f64,
    pub vertices: usize,
    pub edges: usize,
    pub sweeps: usize,
}

/// Diameter estimate; the graph diameter is resolved to `0.01 h`.
pub fn estimate_diameter(mesh: &PolygonMesh) -> DiameterEstimate {
    let d = mesh.graph.diameter(0.01 * mesh.h);
    let lower = mesh.is_foldable().then(|| {
        let patch = &mesh.patches[mesh.copies[0]];
        let bd = &patch.points[..patch.boundary_count];
        let mut best = 0.0f64;
        for (i, p) in bd.iter().enumerate() {
            for q in &bd[i + 1..] {
                best = best.max(p.pairing(q));
            }
        }
        crate::hyptrig::arccosh(best.max(1.0))
    });
    let cover = mesh.cover_radius();
    DiameterEstimate {
        lower,
        upper: d.bound,
        certified_upper: d.bound + 2.0 * cover,
        cover,
        vertices: mesh.vertex_count(),
        edges: mesh.graph.edge_count(),
        sweeps: d.sweeps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hplane::polygon::{build_right_hexagon, half_pants};
    use crate::pants::CuffTriple;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn regular_hexagon() -> Region {
        let s = 2.0_f64.acosh();
        Region::geodesic(build_right_hexagon(s, s, s).unwrap().to_vec()).unwrap()
    }

    /// Random points of the region, by rejection from its bounding disk.
    fn random_points(region: &Region, count: usize, seed: u64) -> Vec<HPoint> {
        let c = region.centroid();
        let radius = region.corners().iter().map(|p| p.dist_fast(&c)).fold(0.0, f64::max);
        let t = c.direction_to(&region.corners()[0]);
        let frame = Isometry::frame(&c, &t, &super::super::point::left_normal(&c, &t));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        while out.len() < count {
            let p = frame.apply(&HPoint::polar(rng.gen_range(0.0..radius), rng.gen_range(0.0..std::f64::consts::TAU)));
            if region.contains(&p, 0.0) {
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn hexagon_mesh_covers_and_is_exact() {
        let region = regular_hexagon();
        let patch = mesh_polygon(&region, 0.1).unwrap();
        let pts = patch.points();
        for q in random_points(&region, 2000, 1) {
            let gap = pts.iter().map(|p| p.dist_fast(&q)).fold(f64::INFINITY, f64::min);
            assert!(gap <= patch.cover_radius(), "gap {gap}");
        }
        for e in patch.edges() {
            let d = pts[e.a as usize].dist(&pts[e.b as usize]).unwrap();
            assert!((d - e.weight).abs() < 1e-10);
        }
        for (i, p) in pts.iter().enumerate().skip(patch.boundary_count()) {
            for q in &pts[i + 1..] {
                assert!(p.dist_fast(q) >= SEPARATION * 0.1 - 1e-12);
            }
        }
    }

    #[test]
    fn tiny_triangle_mesh() {
        let a = HPoint::origin();
        let b = HPoint::polar(1e-3, 0.0);
        let c = HPoint::polar(1e-3, 1.0);
        let patch = mesh_polygon(&Region::geodesic(vec![a, b, c]).unwrap(), 0.5).unwrap();
        assert!(patch.points().len() >= 3);
    }

    #[test]
    fn single_hexagon_upper_exceeds_longest_side() {
        let mesh = PolygonMesh::single(mesh_polygon(&regular_hexagon(), 0.2).unwrap()).unwrap();
        let est = estimate_diameter(&mesh);
        let lower = est.lower.unwrap();
        assert!(est.upper >= 2.0_f64.acosh());
        assert!(lower <= est.upper + 1e-12);
        // the diameter of a convex polygon is attained at two corners
        let c = mesh.patches()[0].region().corners();
        let exact = (0..6).flat_map(|i| (0..6).map(move |j| (i, j))).map(|(i, j)| c[i].dist_fast(&c[j])).fold(0.0, f64::max);
        assert!((lower - exact).abs() < 1e-12);
        assert!(est.upper >= exact - 1e-12 && est.upper < exact * 1.05);
    }

    #[test]
    fn mirror_double_shares_seams() {
        let hp = half_pants(&CuffTriple::new(2.0, 2.5, 3.0).unwrap()).unwrap();
        let patch = mesh_polygon(&hp.region, 0.2).unwrap();
        let nloc = patch.points().len();
        let seam_samples: usize = hp.seam_sides.iter().map(|&s| patch.side_samples(s).len()).sum();
        let mesh = PolygonMesh::assemble(
            vec![patch],
            vec![0, 0],
            hp.seam_sides.iter().map(|&s| Gluing::mirror(0, 1, s)).collect(),
        )
        .unwrap();
        assert_eq!(mesh.vertex_count(), 2 * nloc - seam_samples);
        assert!(mesh.is_foldable());
        assert!(mesh.edges().iter().any(|e| e.kind == EdgeKind::Unfolded));
        // unfolded edges are real paths: their weight is at least the
        // folded chart distance
        for e in mesh.edges().iter().filter(|e| e.kind == EdgeKind::Unfolded) {
            let (ca, p) = mesh.position(e.a);
            let (cb, q) = mesh.position(e.b);
            assert_ne!(ca, cb);
            assert!(e.weight + 1e-12 >= p.dist_fast(&q));
        }
    }

    #[test]
    fn mismatched_gluing_rejected() {
        let hp = half_pants(&CuffTriple::new(2.0, 2.5, 3.0).unwrap()).unwrap();
        let patch = mesh_polygon(&hp.region, 0.3).unwrap();
        let err = PolygonMesh::assemble(
            vec![patch],
            vec![0, 0],
            vec![Gluing { a: SideRef { copy: 0, side: 0 }, b: SideRef { copy: 1, side: 2 }, reversed: false }],
        );
        assert!(matches!(err, Err(GeomError::Config(_))));
    }

    #[test]
    fn dump_lists_every_record() {
        let mesh = PolygonMesh::single(mesh_polygon(&regular_hexagon(), 0.5).unwrap()).unwrap();
        let mut buf = Vec::new();
        mesh.dump(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), mesh.vertex_count() + mesh.edges().len());
        assert!(text.lines().next().unwrap().starts_with("v 0 "));
    }
}
