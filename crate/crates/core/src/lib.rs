//! Grid-graph Hamiltonicity toolkit.
//!
//! Classifies square, triangular, and hexagonal grid graphs into the
//! published subclasses (thin, polygonal, solid), solves Hamiltonicity in
//! polynomial time on thin polygonal grids, hosts an exact desk-scale
//! Hamiltonicity oracle and a Tree-Residue Vertex-Breaking engine, and
//! compiles the two hardness reductions (6-regular breakable planar TRVB
//! into hexagonal thin grids, planar monotone rectilinear 3SAT into square
//! polygonal grids) as instance compilers.

pub mod error;
pub mod gadget;
pub mod gen;
pub mod grid_graph;
pub mod ham;
pub mod io_formats;
pub mod lattice;
pub mod reduce_hex;
pub mod reduce_sq;
pub mod thin_poly;
pub mod trvb;

pub use error::{Error, Result};
