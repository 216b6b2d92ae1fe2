//! Finite simple graphs without isolated vertices.
//!
//! Vertices are `0..r` inside the library. Text and JSON I/O use the labels
//! `1..=r`; conversion happens only at the boundary ([`Graph::new`],
//! [`parse_graph`], and the report builders).

mod cycles;
mod independent;
pub(crate) mod io;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use cycles::{cycle_profile, simple_cycles, CycleClass, CycleProfile};
pub use independent::{maximal_independent_sets, minimal_vertex_covers};
pub use io::{parse_graph, render_graph};

/// Simple undirected graph on vertices `0..r`, immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from 1-based edge labels.
    ///
    /// Duplicate edges are merged. Loops, labels outside `1..=r`, and
    /// vertices without neighbors are rejected.
    pub fn new(r: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if r == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); r];
        for &(u, v) in edges {
            for label in [u, v] {
                if label == 0 || label > r {
                    return Err(Error::BadLabel { label, r });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        Self::from_adjacency(adj)
    }

    /// Builds a graph from 0-based edges.
    pub fn from_edges0(r: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let labelled: Vec<_> = edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect();
        Self::new(r, &labelled)
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Graph> {
        for (v, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            nbrs.dedup();
            if nbrs.is_empty() {
                return Err(Error::IsolatedVertex(v + 1));
            }
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Number of edges with at least one endpoint of degree one.
    pub fn leaf_edge_count(&self) -> usize {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| self.is_leaf(u) || self.is_leaf(v))
            .count()
    }

    /// Non-leaf edges incident with each vertex.
    pub fn non_leaf_degrees(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .map(|u| {
                self.adj[u]
                    .iter()
                    .filter(|&&v| !self.is_leaf(u) && !self.is_leaf(v))
                    .count()
            })
            .collect()
    }

    /// Leaves adjacent to `v`.
    pub fn leaf_neighbors(&self, v: usize) -> Vec<usize> {
        self.adj[v].iter().copied().filter(|&u| self.is_leaf(u)).collect()
    }

    /// Neighbor bitmask of every vertex. Requires `r <= 64`.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count() <= 64, "bitmask view needs at most 64 vertices");
        self.adj
            .iter()
            .map(|nbrs| nbrs.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Connected components and 2-colorings.
    pub fn decompose(&self) -> ComponentDecomposition {
        let r = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; r];
        let mut components = Vec::new();
        for start in 0..r {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut vertices = vec![start];
            let mut bipartite = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap_or(false);
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            vertices.push(v);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => bipartite = false,
                        Some(_) => {}
                    }
                }
            }
            vertices.sort_unstable();
            let bipartition = bipartite.then(|| {
                let (x, y): (Vec<usize>, Vec<usize>) =
                    vertices.iter().partition(|&&v| color[v] == color[start]);
                Bipartition { x, y }
            });
            components.push(Component {
                vertices,
                bipartition,
            });
        }
        ComponentDecomposition { components }
    }

    pub fn is_bipartite(&self) -> bool {
        self.decompose().components.iter().all(|c| c.bipartition.is_some())
    }

    /// Subgraph induced on `vertices` (sorted), relabelled to `0..m` in order.
    ///
    /// Fails with [`Error::IsolatedVertex`] if the induced graph has one.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| index[u] != usize::MAX)
                    .map(|&u| index[u])
                    .collect()
            })
            .collect();
        Self::from_adjacency(adj)
    }

    /// Same vertex set with the given 0-based edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Self::from_adjacency(adj)
    }

    /// Disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + shift).collect()),
        );
        Graph { adj }
    }

    /// Shortest-path distance from `v` to the nearest vertex of `cycle`.
    pub fn distance_to_cycle(&self, v: usize, cycle: &[usize]) -> Result<usize> {
        let dist = self.distances_from(v);
        cycle
            .iter()
            .filter_map(|&u| dist[u])
            .min()
            .ok_or(Error::Disconnected(v + 1))
    }
}

/// The two color classes of a bipartite component, `x` holding the smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub bipartition: Option<Bipartition>,
}

impl Component {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

/// Components in order of their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Component>,
}

impl ComponentDecomposition {
    /// Number of components.
    pub fn p(&self) -> usize {
        self.components.len()
    }

    /// Number of bipartite components.
    pub fn s(&self) -> usize {
        self.components.iter().filter(|c| c.is_bipartite()).count()
    }

    /// Number of nonbipartite components.
    pub fn t(&self) -> usize {
        self.p() - self.s()
    }
}

/// Converts 0-based vertices to the 1-based labels used for I/O.
pub fn labels(vertices: &[usize]) -> Vec<usize> {
    vertices.iter().map(|v| v + 1).collect()
}
