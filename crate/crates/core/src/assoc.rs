//! Associated primes of powers of unicyclic nonbipartite edge ideals.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::graph::{cycle_profile, minimal_vertex_covers, Graph};
use crate::monomial::{Monomial, MonomialIdeal};

/// One reachable `(R_n, B_n, d_n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CmsState {
    pub n: usize,
    pub red: Vec<usize>,
    pub blue: Vec<usize>,
    pub d: Monomial,
}

/// Sorted, deduplicated prime supports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AssSet {
    pub primes: Vec<Vec<usize>>,
}

impl AssSet {
    pub fn contains(&self, support: &[usize]) -> bool {
        self.primes.binary_search_by(|p| p.as_slice().cmp(support)).is_ok()
    }

    pub fn contains_maximal(&self, r: usize) -> bool {
        let all: Vec<usize> = (0..r).collect();
        self.contains(&all)
    }
}

/// The odd cycle of a connected unicyclic nonbipartite graph.
fn odd_cycle(g: &Graph, caps: &Caps) -> Result<Vec<usize>> {
    if !g.is_connected() || g.edge_count() != g.vertex_count() {
        return Err(Error::NotUnicyclicNonbipartite);
    }
    let profile = cycle_profile(g, caps)?;
    match profile.unique_cycle {
        Some(c) if c.len() % 2 == 1 => Ok(c),
        _ => Err(Error::NotUnicyclicNonbipartite),
    }
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn blue_of(masks: &[u64], red: u64) -> u64 {
    members(red).into_iter().fold(0, |b, v| b | masks[v]) & !red
}

/// Every state reachable at level `n`, starting from the cycle at level `k`.
pub fn cms_states(g: &Graph, n: usize, caps: &Caps) -> Result<Vec<CmsState>> {
    let cycle = odd_cycle(g, caps)?;
    let r = g.vertex_count();
    let k = cycle.len().div_ceil(2);
    if n < k {
        return Err(Error::LevelBelowK { n, k });
    }
    Caps::check("state level", n, r + 2)?;
    let masks = g.neighbor_masks();
    let red = mask_of(&cycle);
    let mut level: BTreeSet<(u64, u64, Monomial)> = BTreeSet::new();
    level.insert((red, blue_of(&masks, red), Monomial::squarefree(r, &cycle)));
    let edges = g.edges();
    for _ in k..n {
        let mut next = BTreeSet::new();
        for (red, blue, d) in &level {
            for &(a, b) in &edges {
                for (i, j) in [(a, b), (b, a)] {
                    if red >> i & 1 == 0 || (red | blue) >> j & 1 == 0 {
                        continue;
                    }
                    let (nr, nb) = if red >> j & 1 == 1 {
                        (*red, *blue)
                    } else {
                        let nr = red | 1 << j;
                        (nr, (blue | masks[j]) & !nr)
                    };
                    let nd = d.checked_mul(&Monomial::squarefree(r, &[i, j]))?;
                    next.insert((nr, nb, nd));
                }
            }
        }
        Caps::check("states", next.len(), caps.max_box_cells)?;
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|(red, blue, d)| CmsState { n, red: members(red), blue: members(blue), d })
        .collect())
}

/// Minimal primes together with the primes built from the level-`n` states.
pub fn ass_formula(g: &Graph, n: usize, caps: &Caps) -> Result<AssSet> {
    let cycle = odd_cycle(g, caps)?;
    let k = cycle.len().div_ceil(2);
    let r = g.vertex_count();
    let mut primes: BTreeSet<Vec<usize>> = minimal_vertex_covers(g, caps)?.into_iter().collect();
    if n >= k {
        let supports: BTreeSet<u64> = cms_states(g, n, caps)?
            .into_iter()
            .map(|s| mask_of(&s.red) | mask_of(&s.blue))
            .collect();
        for s in supports {
            for v in minimal_completions(g, s, caps)? {
                primes.insert(members(s | v));
            }
        }
    }
    debug_assert!(primes.iter().all(|p| p.iter().all(|&v| v < r)));
    Ok(AssSet { primes: primes.into_iter().collect() })
}

/// Minimal vertex sets `V` for which `s ∪ V` covers `g`.
fn minimal_completions(g: &Graph, s: u64, caps: &Caps) -> Result<Vec<u64>> {
    let open: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| (s >> u | s >> v) & 1 == 0)
        .collect();
    if open.is_empty() {
        return Ok(vec![0]);
    }
    let verts: Vec<usize> = open.iter().flat_map(|&(u, v)| [u, v]).collect::<BTreeSet<_>>().into_iter().collect();
    let local = |v: usize| verts.binary_search(&v).expect("endpoint listed");
    let sub_edges: Vec<(usize, usize)> = open.iter().map(|&(u, v)| (local(u), local(v))).collect();
    let sub = Graph::from_edges0(verts.len(), &sub_edges)?;
    Ok(minimal_vertex_covers(&sub, caps)?
        .into_iter()
        .map(|c| c.into_iter().fold(0, |m, i| m | 1 << verts[i]))
        .collect())
}

/// A monomial `f` of degree `2n − 1` with `I(G)^n : f = 𝔪`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialWitness {
    pub n: usize,
    pub f: Monomial,
    pub state: CmsState,
}

/// `f = d_n` from a level-`n` state with `R_n ∪ B_n = V(G)`, at
/// `n = υ − ε₀ − k + 1`.
pub fn witness_monomial(g: &Graph, caps: &Caps) -> Result<MonomialWitness> {
    let cycle = odd_cycle(g, caps)?;
    let n = g.vertex_count() - g.leaf_edge_count() + 1 - cycle.len().div_ceil(2);
    witness_monomial_at(g, n, caps)
}

/// As [`witness_monomial`] at a chosen level.
pub fn witness_monomial_at(g: &Graph, n: usize, caps: &Caps) -> Result<MonomialWitness> {
    let r = g.vertex_count();
    let state = cms_states(g, n, caps)?
        .into_iter()
        .find(|s| s.red.len() + s.blue.len() == r)
        .ok_or(Error::NoFullState)?;
    let f = state.d.clone();
    check_colon(&MonomialIdeal::edge_ideal(g).power(n)?, &f)?;
    Ok(MonomialWitness { n, f, state })
}

fn check_colon(power: &MonomialIdeal, f: &Monomial) -> Result<()> {
    let r = power.nvars();
    if power.contains(f) {
        return Err(Error::WitnessCheckFailed(format!("{f} already lies in the power")));
    }
    for i in 0..r {
        if !power.contains(&f.checked_mul(&Monomial::var(r, i))?) {
            return Err(Error::WitnessCheckFailed(format!("{f} * x{} is not in the power", i + 1)));
        }
    }
    Ok(())
}

/// Depth-zero certificate for a connected nonbipartite graph, from a
/// unicyclic spanning subgraph through a longest odd cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthZeroWitness {
    /// `υ(G) − ε₀(G) − k + 1`.
    pub bound: usize,
    /// `υ(H) − ε₀(H) − k + 1`; `I(G)^n : f = 𝔪` holds here.
    pub certified_n: usize,
    pub f: Monomial,
    pub cycle: Vec<usize>,
    pub spanning_edges: Vec<(usize, usize)>,
}

pub fn nonbipartite_depth_zero_bound(g: &Graph, caps: &Caps) -> Result<DepthZeroWitness> {
    if !g.is_connected() || g.is_bipartite() {
        return Err(Error::NotConnectedNonbipartite);
    }
    let profile = cycle_profile(g, caps)?;
    let cycle = profile.longest_odd.clone().expect("nonbipartite graphs have odd cycles");
    let k = cycle.len().div_ceil(2);
    let on_cycle = |u: usize, v: usize| {
        let l = cycle.len();
        (0..l).any(|t| {
            let (a, b) = (cycle[t], cycle[(t + 1) % l]);
            (a, b) == (u, v) || (b, a) == (u, v)
        })
    };
    let mut h = g.clone();
    while h.edge_count() > h.vertex_count() {
        let candidates: Vec<(usize, usize)> = h
            .edges()
            .into_iter()
            .filter(|&(u, v)| !on_cycle(u, v))
            .filter(|&(u, v)| h.without_edge(u, v).is_ok_and(|x| x.is_connected()))
            .collect();
        let pick = candidates
            .iter()
            .copied()
            .find(|&(u, v)| h.degree(u) >= 3 && h.degree(v) >= 3)
            .or_else(|| candidates.first().copied())
            .ok_or_else(|| Error::Internal("no deletable edge off the odd cycle".into()))?;
        h = h.without_edge(pick.0, pick.1)?;
    }
    let r = g.vertex_count();
    let certified_n = r - h.leaf_edge_count() + 1 - k;
    let witness = witness_monomial_at(&h, certified_n, caps)?;
    check_colon(&MonomialIdeal::edge_ideal(g).power(certified_n)?, &witness.f)?;
    Ok(DepthZeroWitness {
        bound: r - g.leaf_edge_count() + 1 - k,
        certified_n,
        f: witness.f,
        cycle,
        spanning_edges: h.edges(),
    })
}
