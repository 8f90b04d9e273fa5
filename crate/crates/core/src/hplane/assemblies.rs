//! Concrete glued surfaces: pants (thick or truncated), two pants sharing a
//! cuff, and windows of the one-holed-square grid.

use super::mesh::{mesh_polygon, Gluing, PolygonMesh, SideRef, BOUNDARY_SPACING};
use super::paths::Graph;
use super::polygon::{half_pants, square_pentagon, HalfPants};
use crate::error::{GeomError, Result};
use crate::pants::CuffTriple;
use serde::Serialize;

/// Default mesh resolution.
pub const DEFAULT_RESOLUTION: f64 = 0.05;

/// The pants (or its truncation, for cusps) as two mirror half-pants glued
/// along the seams. Copy 0 is the half-pants as built, copy 1 its mirror.
pub fn pants_mesh(cuffs: &CuffTriple, h: f64) -> Result<PolygonMesh> {
    let hp = half_pants(cuffs)?;
    let patch = mesh_polygon(&hp.region, h)?;
    let gluings = hp.seam_sides.iter().map(|&s| Gluing::mirror(0, 1, s)).collect();
    PolygonMesh::assemble(vec![patch], vec![0, 0], gluings)
}

/// Two pants glued along one cuff each, with zero twist. Copies 0 and 1
/// form the first pants, copies 2 and 3 the second.
pub fn glued_pants_mesh(p: &CuffTriple, p_cuff: usize, q: &CuffTriple, q_cuff: usize, h: f64) -> Result<PolygonMesh> {
    let (hp, hq) = (half_pants(p)?, half_pants(q)?);
    let side = |half: &HalfPants, k: usize| {
        half.cuff_sides
            .get(k)
            .copied()
            .flatten()
            .ok_or_else(|| GeomError::Config(format!("cuff {k} is not a geodesic cuff")))
    };
    let (sp, sq) = (side(&hp, p_cuff)?, side(&hq, q_cuff)?);
    let (lp, lq) = (p.cuffs()[p_cuff], q.cuffs()[q_cuff]);
    if (lp - lq).abs() > 1e-12 * lp.max(1.0) {
        return Err(GeomError::Config(format!("cuff lengths differ: {lp} vs {lq}")));
    }
    let mut gluings: Vec<Gluing> = hp.seam_sides.iter().map(|&s| Gluing::mirror(0, 1, s)).collect();
    gluings.extend(hq.seam_sides.iter().map(|&s| Gluing::mirror(2, 3, s)));
    for (a, b) in [(0, 2), (1, 3)] {
        gluings.push(Gluing {
            a: SideRef { copy: a, side: sp },
            b: SideRef { copy: b, side: sq },
            reversed: true,
        });
    }
    let patches = vec![mesh_polygon(&hp.region, h)?, mesh_polygon(&hq.region, h)?];
    PolygonMesh::assemble(patches, vec![0, 0, 1, 1], gluings)
}

/// Sides of the square pentagon: corner of the square to the midpoint of a
/// horizontal edge, that midpoint to the hole, the quarter hole, the hole to
/// the midpoint of a vertical edge, and back to the corner.
pub mod pentagon_side {
    pub const HORIZONTAL_EDGE: usize = 0;
    pub const VERTICAL_SPOKE: usize = 1;
    pub const HOLE: usize = 2;
    pub const HORIZONTAL_SPOKE: usize = 3;
    pub const VERTICAL_EDGE: usize = 4;
}

/// A rectangle of one-holed squares, each cut into four pentagons. Holes are
/// left as geodesic boundary.
#[derive(Debug, Clone)]
pub struct GridMesh {
    pub mesh: PolygonMesh,
    pub nx: usize,
    pub ny: usize,
}

impl GridMesh {
    /// Copy index of quadrant `(qx, qy)` of square `(i, j)`.
    pub fn copy(&self, i: usize, j: usize, qx: usize, qy: usize) -> usize {
        grid_copy(self.nx, i, j, qx, qy)
    }

    /// Vertices on the hole of square `(i, j)`.
    pub fn hole_vertices(&self, i: usize, j: usize) -> Vec<u32> {
        let mut out: Vec<u32> = (0..4)
            .flat_map(|q| self.mesh.side_vertices(self.copy(i, j, q & 1, q >> 1), pentagon_side::HOLE))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn grid_copy(nx: usize, i: usize, j: usize, qx: usize, qy: usize) -> usize {
    (((j * nx) + i) * 2 + qy) * 2 + qx
}

/// Meshes an `nx` by `ny` window of the grid surface built from `b`.
pub fn grid_mesh(b: f64, nx: usize, ny: usize, h: f64) -> Result<GridMesh> {
    use pentagon_side::*;
    if nx == 0 || ny == 0 {
        return Err(GeomError::domain("grid window", format!("{nx} x {ny}")));
    }
    let patch = mesh_polygon(&square_pentagon(b)?, h)?;
    let c = |i, j, qx, qy| grid_copy(nx, i, j, qx, qy);
    let mut gluings = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            for q in 0..2 {
                gluings.push(Gluing::mirror(c(i, j, 0, q), c(i, j, 1, q), VERTICAL_SPOKE));
                gluings.push(Gluing::mirror(c(i, j, q, 0), c(i, j, q, 1), HORIZONTAL_SPOKE));
                if i + 1 < nx {
                    gluings.push(Gluing::mirror(c(i, j, 1, q), c(i + 1, j, 0, q), VERTICAL_EDGE));
                }
                if j + 1 < ny {
                    gluings.push(Gluing::mirror(c(i, j, q, 1), c(i, j + 1, q, 0), HORIZONTAL_EDGE));
                }
            }
        }
    }
    let mesh = PolygonMesh::assemble(vec![patch], vec![0; 4 * nx * ny], gluings)?;
    Ok(GridMesh { mesh, nx, ny })
}

/// Distance between the holes of two adjacent squares.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Separation {
    /// Graph distance between the two holes; an upper estimate.
    pub estimate: f64,
    /// Lower bound: a path between the holes crosses the shared edge, and
    /// each half is at least the folded chart distance from the hole to
    /// that edge, less the boundary sampling gap.
    pub lower: f64,
    pub resolution: f64,
}

/// Minimum distance between boundary components of the grid surface,
/// estimated on two adjacent squares.
pub fn boundary_separation(b: f64, h: f64) -> Result<Separation> {
    use pentagon_side::*;
    let grid = grid_mesh(b, 2, 1, h)?;
    let g = grid.mesh.graph();
    let mut dist = Vec::new();
    g.dijkstra_into(&grid.hole_vertices(0, 0), &mut dist);
    let estimate = grid
        .hole_vertices(1, 0)
        .iter()
        .map(|&v| dist[v as usize])
        .fold(f64::INFINITY, f64::min);
    let patch = &grid.mesh.patches()[0];
    let pts = patch.points();
    let mut chart = f64::INFINITY;
    for &p in patch.side_samples(HOLE) {
        for &q in patch.side_samples(VERTICAL_EDGE) {
            chart = chart.min(pts[p as usize].dist_fast(&pts[q as usize]));
        }
    }
    // every side point is within half a spacing of a sample
    let gap = BOUNDARY_SPACING * h;
    Ok(Separation {
        estimate,
        lower: (2.0 * (chart - gap)).max(0.0),
        resolution: h,
    })
}

/// Shortest loop around the centre hole of a 3 by 3 window, among loops
/// that cross a cut from that hole down to the window edge an odd number of
/// times. The cut runs along the vertical spokes of the centre column below
/// the centre hole, through the hole of square (1, 0).
pub fn shortest_odd_loop(b: f64, h: f64) -> Result<f64> {
    use pentagon_side::*;
    let grid = grid_mesh(b, 3, 3, h)?;
    let mesh = &grid.mesh;
    let n = mesh.vertex_count();
    let cut_quadrants = [(1, 1, 0), (1, 0, 1), (1, 0, 0)];
    let mut on_cut = vec![false; n];
    let mut right = vec![false; n];
    let mut left = vec![false; n];
    for &(i, j, qy) in &cut_quadrants {
        for v in mesh.side_vertices(grid.copy(i, j, 0, qy), VERTICAL_SPOKE) {
            on_cut[v as usize] = true;
        }
    }
    for &(i, j, qy) in &cut_quadrants {
        for &v in mesh.copy_vertices(grid.copy(i, j, 1, qy)) {
            right[v as usize] = !on_cut[v as usize];
        }
        for &v in mesh.copy_vertices(grid.copy(i, j, 0, qy)) {
            left[v as usize] = !on_cut[v as usize];
        }
    }
    let mut doubled = Vec::with_capacity(2 * mesh.edges().len());
    for e in mesh.edges() {
        let (a, b) = (e.a as usize, e.b as usize);
        if (right[a] && left[b]) || (left[a] && right[b]) {
            // crosses the cut away from its samples; dropped so that every
            // crossing passes through a cut vertex
            continue;
        }
        let flip = (on_cut[a] && right[b]) || (on_cut[b] && right[a]);
        let (a, b) = (e.a, e.b);
        let m = n as u32;
        if flip {
            doubled.push((a, b + m, e.weight));
            doubled.push((a + m, b, e.weight));
        } else {
            doubled.push((a, b, e.weight));
            doubled.push((a + m, b + m, e.weight));
        }
    }
    let cover = Graph::from_edges(2 * n, doubled.iter().copied());
    let mut best = f64::INFINITY;
    let mut dist = Vec::new();
    for v in (0..n).filter(|&v| on_cut[v]) {
        cover.dijkstra_into(&[v as u32], &mut dist);
        best = best.min(dist[v + n]);
    }
    Ok(best)
}
