//! Explicit hyperbolic geometry for pants decompositions: pants diameters,
//! truncated pants with cusps, discretised hyperbolic polygons, and the
//! one-holed square grid surfaces.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod hplane;
pub mod hyptrig;
pub mod pants;
pub mod quadlemma;
pub mod surfaces;

pub use error::{GeomError, Result};
