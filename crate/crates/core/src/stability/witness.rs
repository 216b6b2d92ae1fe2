use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::depth::{bipartite_power_complex, complement_weight, takayama_complex, DegreeVector};
use crate::error::{Error, Result};
use crate::graph::{cycle_profile, CycleClass, Graph};
use crate::monomial::MonomialIdeal;
use crate::simplicial::SimplicialComplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Mu,
    UnicyclicBipartite,
}

/// A degree `α` and power `n` with `Δ_α(I(G)^n) = ⟨X,Y⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessAlpha {
    pub kind: WitnessKind,
    /// Vertex carrying each entry of `alpha`.
    pub vertices: Vec<usize>,
    pub alpha: DegreeVector,
    pub n: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl WitnessAlpha {
    /// Renames local vertex `i` to `map[i]`.
    pub fn relabel(&mut self, map: &[usize]) {
        let f = |v: &mut usize| *v = map[*v];
        self.vertices.iter_mut().for_each(f);
        self.x.iter_mut().for_each(f);
        self.y.iter_mut().for_each(f);
    }

    /// The expected complex `⟨X,Y⟩` over the witness vertices.
    pub fn expected(&self) -> SimplicialComplex {
        let mut u = self.vertices.clone();
        u.sort_unstable();
        SimplicialComplex::from_facets(&u, &[self.x.clone(), self.y.clone()]).expect("sides lie in the vertex set")
    }
}

fn sides(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let dec = g.decompose();
    if dec.p() != 1 {
        return None;
    }
    let bp = dec.components.into_iter().next()?.bipartition?;
    Some((bp.x, bp.y))
}

fn check_weights(alpha: &[i64], n: usize, x: &[usize], y: &[usize]) -> Result<()> {
    let (wx, wy) = (complement_weight(x, alpha), complement_weight(y, alpha));
    if wx != n as i64 - 1 || wy != n as i64 - 1 {
        return Err(Error::WitnessCheckFailed(format!(
            "complement weights {wx} and {wy}, expected {}",
            n - 1
        )));
    }
    Ok(())
}

/// `α = μ(G)` at `n = ε − ε₀ + 1`.
pub fn mu_witness(g: &Graph, caps: &Caps) -> Result<WitnessAlpha> {
    let (x, y) = sides(g).ok_or(Error::NotConnectedBipartite)?;
    let r = g.vertex_count();
    let alpha: Vec<i64> = g.non_leaf_degrees().into_iter().map(|d| d as i64).collect();
    let n = g.edge_count() - g.leaf_edge_count() + 1;
    let w = WitnessAlpha {
        kind: WitnessKind::Mu,
        vertices: (0..r).collect(),
        alpha: DegreeVector(alpha),
        n,
        x,
        y,
    };
    check_weights(w.alpha.entries(), n, &w.x, &w.y)?;
    let got = bipartite_power_complex(g, &w.alpha, n, caps)?;
    if got != w.expected() {
        return Err(Error::WitnessCheckFailed(format!("facet filter gives {got}")));
    }
    Ok(w)
}

/// `α = μ − 1` on the cycle and `μ` elsewhere, at `n = υ − ε₀ − k + 1`,
/// checked against a direct evaluation of `Δ_α(I(G)^n)`.
pub fn unicyclic_bipartite_witness(g: &Graph, caps: &Caps) -> Result<WitnessAlpha> {
    let (x, y) = sides(g).ok_or(Error::NotUnicyclicBipartite)?;
    let profile = cycle_profile(g, caps)?;
    if profile.class != CycleClass::Unicyclic {
        return Err(Error::NotUnicyclicBipartite);
    }
    let cycle = profile.unique_cycle.expect("unicyclic profile has its cycle");
    let k = cycle.len() / 2;
    let r = g.vertex_count();
    let mut alpha: Vec<i64> = g.non_leaf_degrees().into_iter().map(|d| d as i64).collect();
    for &v in &cycle {
        alpha[v] -= 1;
    }
    let n = r - g.leaf_edge_count() + 1 - k;
    let w = WitnessAlpha {
        kind: WitnessKind::UnicyclicBipartite,
        vertices: (0..r).collect(),
        alpha: DegreeVector(alpha),
        n,
        x,
        y,
    };
    check_weights(w.alpha.entries(), n, &w.x, &w.y)?;
    let power = MonomialIdeal::edge_ideal(g).power(n)?;
    let got = takayama_complex(&power, &w.alpha, caps)?;
    if got != w.expected() {
        return Err(Error::WitnessCheckFailed(format!("Δ_α(I^{n}) = {got}")));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(r: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(r, edges).unwrap()
    }

    #[test]
    fn mu_examples() {
        let caps = Caps::default();
        let e = mu_witness(&graph(2, &[(1, 2)]), &caps).unwrap();
        assert_eq!((e.alpha.entries(), e.n), (&[0, 0][..], 1));
        let p4 = mu_witness(&graph(4, &[(1, 2), (2, 3), (3, 4)]), &caps).unwrap();
        assert_eq!((p4.alpha.entries(), p4.n), (&[0, 1, 1, 0][..], 2));
        assert_eq!(p4.expected().facets(), &[vec![0, 2], vec![1, 3]]);
        let c6 = graph(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]);
        let w = mu_witness(&c6, &caps).unwrap();
        assert_eq!((w.alpha.entries(), w.n), (&[2, 2, 2, 2, 2, 2][..], 7));
        assert_eq!(mu_witness(&graph(3, &[(1, 2), (2, 3), (1, 3)]), &caps), Err(Error::NotConnectedBipartite));
    }

    #[test]
    fn unicyclic_examples() {
        let caps = Caps::default();
        let c6 = graph(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]);
        let w = unicyclic_bipartite_witness(&c6, &caps).unwrap();
        assert_eq!((w.alpha.entries(), w.n), (&[1; 6][..], 4));
        let pendant = graph(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7)]);
        assert_eq!(unicyclic_bipartite_witness(&pendant, &caps).unwrap().n, 4);
        let c4 = graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(unicyclic_bipartite_witness(&c4, &caps).unwrap().n, 3);
        let path = graph(3, &[(1, 2), (2, 3)]);
        assert_eq!(unicyclic_bipartite_witness(&path, &caps), Err(Error::NotUnicyclicBipartite));
    }
}
