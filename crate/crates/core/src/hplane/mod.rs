//! Hyperboloid model of the hyperbolic plane and discretised surfaces.

pub mod assemblies;
pub mod mesh;
pub mod paths;
pub mod point;
pub mod polygon;

pub use mesh::{estimate_diameter, mesh_polygon, DiameterEstimate, Edge, EdgeKind, Gluing, Patch, PolygonMesh, SideRef};
pub use paths::Graph;
pub use point::{mink, HPoint, Isometry};
pub use polygon::{build_right_hexagon, half_pants, square_pentagon, HalfPants, Horoball, Region, SideKind};
pub use assemblies::{boundary_separation, glued_pants_mesh, grid_mesh, pants_mesh, shortest_odd_loop, GridMesh, Separation, DEFAULT_RESOLUTION};
