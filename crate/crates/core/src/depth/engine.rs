use serde::{Deserialize, Serialize};

use super::scan::{scan_with_cache, HomologyCache};
use super::{complement_weight, DegreeVector, DepthCertificate, ScanBox};
use crate::config::{Caps, OracleConfig};
use crate::error::Result;
use crate::graph::{maximal_independent_sets, Graph};
use crate::monomial::{MonomialIdeal, PowerCache};

/// Depths of `R/I(G)^n` for one graph, sharing powers and homology between calls.
#[derive(Debug)]
pub struct DepthEngine {
    graph: Graph,
    powers: PowerCache,
    cache: HomologyCache,
    config: OracleConfig,
}

/// `depth R/I(G)^n` for `n = 1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthSequence {
    pub depths: Vec<usize>,
    /// Number of bipartite components.
    pub s: usize,
    /// First power whose depth equals `s`.
    pub first_at_s: Option<usize>,
}

impl DepthEngine {
    pub fn new(graph: &Graph, config: OracleConfig) -> Self {
        DepthEngine {
            graph: graph.clone(),
            powers: PowerCache::new(MonomialIdeal::edge_ideal(graph)),
            cache: HomologyCache::new(config.field),
            config,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    pub fn power(&self, n: usize) -> Result<std::sync::Arc<MonomialIdeal>> {
        Caps::check("power", n, self.config.caps.max_power)?;
        self.powers.get(n.max(1))
    }

    pub fn depth_power(&self, n: usize) -> Result<DepthCertificate> {
        let ideal = self.power(n)?;
        if self.config.bipartite_fast_path && self.graph.is_connected() && self.graph.is_bipartite() {
            if let Some(cert) = self.disconnected_degree(n, &ideal)? {
                return Ok(cert);
            }
        }
        scan_with_cache(&ideal, &self.config, &self.cache)
    }

    /// Looks for `α ∈ [0, n−1]^r` whose facet filter keeps exactly the two
    /// sides of the bipartition; such an `α` gives depth one.
    fn disconnected_degree(&self, n: usize, ideal: &MonomialIdeal) -> Result<Option<DepthCertificate>> {
        let r = self.graph.vertex_count();
        let mis = maximal_independent_sets(&self.graph, &self.config.caps)?;
        let parts = &self.graph.decompose().components[0];
        let Some(bp) = &parts.bipartition else { return Ok(None) };
        let scan_box = ScanBox::from_rho(&ideal.lcm_exponents());
        Caps::check("scan box cells", scan_box.cells(), self.config.caps.max_box_cells)?;
        let mut alpha = vec![0i64; r];
        let top = n as i64 - 1;
        loop {
            let kept: Vec<&Vec<usize>> = mis.iter().filter(|f| complement_weight(f, &alpha) <= top).collect();
            if kept.len() == 2 && kept.iter().all(|f| **f == bp.x || **f == bp.y) {
                return Ok(Some(DepthCertificate {
                    depth: 1,
                    witness_i: 1,
                    witness_alpha: DegreeVector(alpha),
                    homology_dim: 1,
                    scan_box,
                }));
            }
            let mut j = r;
            loop {
                if j == 0 {
                    return Ok(None);
                }
                j -= 1;
                alpha[j] += 1;
                if alpha[j] <= top {
                    break;
                }
                alpha[j] = 0;
            }
        }
    }

    pub fn depth_sequence(&self, n_max: usize) -> Result<DepthSequence> {
        let s = self.graph.decompose().s();
        let mut depths = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            depths.push(self.depth_power(n)?.depth);
        }
        let first_at_s = depths.iter().position(|&d| d == s).map(|i| i + 1);
        Ok(DepthSequence { depths, s, first_at_s })
    }
}

pub fn depth_power(g: &Graph, n: usize, config: &OracleConfig) -> Result<DepthCertificate> {
    DepthEngine::new(g, *config).depth_power(n)
}

pub fn depth_sequence(g: &Graph, n_max: usize, config: &OracleConfig) -> Result<DepthSequence> {
    DepthEngine::new(g, *config).depth_sequence(n_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(r: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=r).map(|i| (i, i % r + 1)).collect();
        Graph::new(r, &edges).unwrap()
    }

    #[test]
    fn small_sequences() {
        let cfg = OracleConfig::default();
        assert_eq!(depth_sequence(&cycle(3), 2, &cfg).unwrap().depths, vec![1, 0]);
        let c4 = depth_sequence(&cycle(4), 3, &cfg).unwrap();
        assert_eq!((c4.depths, c4.first_at_s), (vec![1, 1, 1], Some(1)));
        let edge = Graph::new(2, &[(1, 2)]).unwrap();
        assert_eq!(depth_sequence(&edge, 3, &cfg).unwrap().depths, vec![1, 1, 1]);
    }

    #[test]
    fn hexagon_third_power() {
        assert_eq!(depth_power(&cycle(6), 3, &OracleConfig::default()).unwrap().depth, 2);
    }

    #[test]
    fn fast_path_agrees() {
        let fast = OracleConfig { bipartite_fast_path: true, ..OracleConfig::default() };
        let p5 = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        for n in 1..=4 {
            assert_eq!(
                depth_power(&p5, n, &fast).unwrap().depth,
                depth_power(&p5, n, &OracleConfig::default()).unwrap().depth
            );
        }
    }
}
