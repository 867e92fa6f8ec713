//! Kronecker covers and Cartesian prisms of planar graphs.

pub mod canon;
pub mod error;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod planar;
pub mod products;
pub mod recognition;

pub use canon::{Certificate, Limits};
pub use error::{Error, Result, SpecClause};
pub use graph::{Graph, Multigraph};
