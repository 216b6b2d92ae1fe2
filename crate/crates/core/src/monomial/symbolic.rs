use super::Monomial;
use crate::config::Caps;
use crate::graph::{minimal_vertex_covers, Graph};
use crate::Result;

/// Membership in `I(G)^(n) = ⋂_C P_C^n` over the minimal vertex covers `C`,
/// without expanding the intersection.
#[derive(Debug, Clone)]
pub struct SymbolicPower {
    covers: Vec<Vec<usize>>,
    n: u64,
}

impl SymbolicPower {
    pub fn new(g: &Graph, n: usize, caps: &Caps) -> Result<SymbolicPower> {
        Ok(SymbolicPower {
            covers: minimal_vertex_covers(g, caps)?,
            n: n as u64,
        })
    }

    /// True iff `Σ_{i∈C} m_i >= n` for every minimal cover `C`.
    pub fn contains(&self, m: &Monomial) -> bool {
        let e = m.exponents();
        self.covers
            .iter()
            .all(|c| c.iter().map(|&i| u64::from(e[i])).sum::<u64>() >= self.n)
    }
}
