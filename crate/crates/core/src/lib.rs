//! Exact spanning-tree counts, multiplier functions, random-walk escape
//! probabilities and boundary-size bounds for grid graphs, plus a districting
//! analyzer relating cut edges to spanning tree scores.

pub mod bounds;
pub mod constants;
pub mod districting;
pub mod error;
pub mod format;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod randwalk;
pub mod shapes;
pub mod treecount;

pub use error::{Error, Result};
pub use lattice::{Cell, Edge, GridGraph, SimplicityReport, Vertex};
pub use treecount::{multiplier, multiplier_profile, prefix_graphs, tau, MultiplierProfile, TreeCount};
