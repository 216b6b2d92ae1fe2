//! Depth and depth-stability computations for powers of edge ideals.

pub mod assoc;
pub mod config;
pub mod depth;
pub mod error;
pub mod graph;
pub mod monomial;
pub mod simplicial;
pub mod stability;

pub use config::{Caps, OracleConfig};
pub use error::{Error, Result};
