#![allow(dead_code)]

use std::collections::BTreeSet;

use dstab_core::graph::Graph;
use dstab_core::monomial::{Monomial, MonomialIdeal};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn graph(r: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(r, edges).unwrap()
}

pub fn cycle(r: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=r).map(|i| (i, i % r + 1)).collect();
    graph(r, &edges)
}

pub fn path(r: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..r).map(|i| (i, i + 1)).collect();
    graph(r, &edges)
}

pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (2..=leaves + 1).map(|i| (1, i)).collect();
    graph(leaves + 1, &edges)
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; r], &mut out);
    out
}

fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

/// Canonical code: the least edge bitmask over all relabelings.
fn canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| edges.iter().fold(0u64, |m, &(u, v)| m | 1 << pair_index(p[u], p[v])))
        .min()
        .unwrap()
}

fn decode(r: usize, code: u64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for b in 1..r {
        for a in 0..b {
            if code >> pair_index(a, b) & 1 == 1 {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// One representative per isomorphism class of connected graphs on `r`
/// vertices, `2 <= r <= 7`. Every connected graph has a vertex whose removal
/// keeps it connected, so extending the classes on `r - 1` vertices by a
/// new vertex with every nonempty neighborhood reaches all of them.
pub fn connected_graphs(r: usize, keep: &dyn Fn(&Graph) -> bool) -> Vec<Graph> {
    assert!((2..=7).contains(&r));
    let mut level: BTreeSet<u64> = BTreeSet::from([1]);
    for m in 3..=r {
        let perms = permutations(m);
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = decode(m - 1, code);
            for nb in 1u32..1 << (m - 1) {
                let mut edges = base.clone();
                edges.extend((0..m - 1).filter(|&v| nb >> v & 1 == 1).map(|v| (v, m - 1)));
                let g = Graph::from_edges0(m, &edges).unwrap();
                if m < r || keep(&g) {
                    next.insert(canonical(&edges, &perms));
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|c| Graph::from_edges0(r, &decode(r, c)).unwrap())
        .filter(|g| keep(g))
        .collect()
}

pub fn is_tree(g: &Graph) -> bool {
    g.is_connected() && g.edge_count() + 1 == g.vertex_count()
}

pub fn is_unicyclic(g: &Graph) -> bool {
    g.is_connected() && g.edge_count() == g.vertex_count()
}

/// Classes of connected graphs on `r` vertices with at most `r - 1 + extra`
/// edges, for `extra` 0 (trees) or 1 (trees and unicyclic graphs).
pub fn sparse_graphs(r: usize, max_extra_edges: usize) -> Vec<Graph> {
    assert!((2..=7).contains(&r));
    let mut level: BTreeSet<u64> = BTreeSet::from([1]);
    for m in 3..=r {
        let perms = permutations(m);
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = decode(m - 1, code);
            for nb in 1u32..1 << (m - 1) {
                if nb.count_ones() as usize > 1 + max_extra_edges {
                    continue;
                }
                let mut edges = base.clone();
                edges.extend((0..m - 1).filter(|&v| nb >> v & 1 == 1).map(|v| (v, m - 1)));
                if edges.len() + 1 > m + max_extra_edges {
                    continue;
                }
                next.insert(canonical(&edges, &perms));
            }
        }
        level = next;
    }
    level.into_iter().map(|c| Graph::from_edges0(r, &decode(r, c)).unwrap()).collect()
}

pub fn has_four_cycle(g: &Graph) -> bool {
    let r = g.vertex_count();
    (0..r).any(|a| {
        (a + 1..r).any(|b| {
            let common = (0..r).filter(|&v| g.has_edge(a, v) && g.has_edge(b, v)).count();
            common >= 2
        })
    })
}

/// Random graph on at most `max_r` vertices, isolated vertices dropped.
pub fn random_graph(rng: &mut impl Rng, max_r: usize, p: f64) -> Graph {
    loop {
        let r = rng.gen_range(2..=max_r);
        let mut edges = Vec::new();
        for u in 0..r {
            for v in u + 1..r {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        return compact(r, &edges);
    }
}

pub fn random_bipartite_graph(rng: &mut impl Rng, max_r: usize, p: f64) -> Graph {
    loop {
        let r = rng.gen_range(2..=max_r);
        let side: Vec<bool> = (0..r).map(|_| rng.gen_bool(0.5)).collect();
        let mut edges = Vec::new();
        for u in 0..r {
            for v in u + 1..r {
                if side[u] != side[v] && rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        return compact(r, &edges);
    }
}

fn compact(r: usize, edges: &[(usize, usize)]) -> Graph {
    let used: Vec<usize> = (0..r).filter(|&v| edges.iter().any(|&(a, b)| a == v || b == v)).collect();
    let idx = |v: usize| used.binary_search(&v).unwrap();
    let e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Graph::from_edges0(used.len(), &e).unwrap()
}

/// Random nonzero proper monomial ideal.
pub fn random_ideal(rng: &mut impl Rng, r: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=max_deg);
            let mut e = vec![0u32; r];
            for _ in 0..deg {
                e[rng.gen_range(0..r)] += 1;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::minimalize(r, gens).unwrap()
}

/// Every exponent vector in `0..=bound` per coordinate.
pub fn box_points(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}
