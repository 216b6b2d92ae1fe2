use serde::{Deserialize, Serialize};

use crate::simplicial::Field;

/// Size limits shared by the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Vertex count allowed for cycle enumeration and independent-set search.
    pub max_graph_vertices: usize,
    /// Ambient variable count allowed for the depth and Ass scans.
    pub max_vars: usize,
    /// Cells allowed in a degree box (Takayama scan, Betti scan, Ass scan).
    pub max_box_cells: usize,
    /// Faces allowed when expanding a facet list.
    pub max_faces: usize,
    /// Largest power the oracles will form.
    pub max_power: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_graph_vertices: 16,
            max_vars: 10,
            max_box_cells: 2_000_000,
            max_faces: 1 << 20,
            max_power: 64,
        }
    }
}

impl Caps {
    /// Fails with [`crate::Error::TooLarge`] when `got > cap`.
    pub fn check(what: &'static str, got: usize, cap: usize) -> crate::Result<()> {
        if got > cap {
            Err(crate::Error::TooLarge { what, got, cap })
        } else {
            Ok(())
        }
    }
}

/// Knobs for the depth oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub caps: Caps,
    pub field: Field,
    /// Worker threads for the degree scan; 0 uses the rayon default.
    pub threads: usize,
    /// Decide depth one of connected bipartite powers through the facet filter.
    pub bipartite_fast_path: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            caps: Caps::default(),
            field: Field::Rationals,
            threads: 1,
            bipartite_fast_path: false,
        }
    }
}
