//! Deterministic constructors for the graph families.

pub mod basic;
mod cubic;
mod dou;
mod factors;
mod t3333;

pub use basic::{basic, Family};
pub use cubic::{cube_multigraph, cubic_build, cubic_demo_specs, cubic_mutations, quad_expand, CubicBuildSpec};
pub use dou::{dou_h, dou_j, DouHSpec};
pub use factors::{odd_prism_factor, quad_factor, stacked_cube_factor};
pub use t3333::{t3333_build, T3333Final, T3333Move, T3333Script};
