use serde::{Deserialize, Serialize};

use super::Graph;
use crate::config::Caps;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleClass {
    Tree,
    Unicyclic,
    General,
}

/// Cycle statistics of a graph (normally a single component).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleProfile {
    pub class: CycleClass,
    /// The only cycle, when the graph is unicyclic.
    pub unique_cycle: Option<Vec<usize>>,
    /// A longest even cycle.
    pub longest_even: Option<Vec<usize>>,
    /// A longest odd cycle.
    pub longest_odd: Option<Vec<usize>>,
}

impl CycleProfile {
    pub fn max_even_len(&self) -> Option<usize> {
        self.longest_even.as_ref().map(Vec::len)
    }

    pub fn max_odd_len(&self) -> Option<usize> {
        self.longest_odd.as_ref().map(Vec::len)
    }

    /// Half the longest cycle for bipartite graphs (1 for trees), and
    /// `(l + 1) / 2` for the longest odd cycle `l` otherwise.
    pub fn k(&self) -> usize {
        match (self.max_odd_len(), self.max_even_len()) {
            (Some(odd), _) => odd.div_ceil(2),
            (None, Some(even)) => even / 2,
            (None, None) => 1,
        }
    }
}

/// Classifies the graph by cycle rank and finds longest even and odd cycles.
///
/// Cycle rank `ε − υ + c` decides tree / unicyclic / general. The longest
/// cycles come from an exhaustive depth-first search rooted at the smallest
/// vertex of each cycle, pruned once no longer cycle can be reached.
pub fn cycle_profile(g: &Graph, caps: &Caps) -> Result<CycleProfile> {
    let r = g.vertex_count();
    Caps::check("vertex count", r, caps.max_graph_vertices.min(64))?;
    let components = g.decompose();
    let rank = g.edge_count() + components.p() - r;
    let class = match rank {
        0 => CycleClass::Tree,
        1 => CycleClass::Unicyclic,
        _ => CycleClass::General,
    };
    if rank == 0 {
        return Ok(CycleProfile {
            class,
            unique_cycle: None,
            longest_even: None,
            longest_odd: None,
        });
    }
    let can_be_odd = components.t() > 0;
    let mut search = LongestCycles {
        nbrs: g.neighbor_masks(),
        even: None,
        odd: None,
        even_target: r - r % 2,
        odd_target: if can_be_odd { r - (1 - r % 2) } else { 0 },
        path: Vec::with_capacity(r),
    };
    for start in 0..r {
        if search.done() {
            break;
        }
        search.path.push(start);
        search.extend(start, 1 << start);
        search.path.pop();
    }
    let (longest_even, longest_odd) = (search.even, search.odd);
    let unique_cycle = (class == CycleClass::Unicyclic)
        .then(|| longest_even.clone().or_else(|| longest_odd.clone()))
        .flatten();
    Ok(CycleProfile {
        class,
        unique_cycle,
        longest_even,
        longest_odd,
    })
}

struct LongestCycles {
    nbrs: Vec<u64>,
    even: Option<Vec<usize>>,
    odd: Option<Vec<usize>>,
    even_target: usize,
    odd_target: usize,
    path: Vec<usize>,
}

impl LongestCycles {
    fn best_even(&self) -> usize {
        self.even.as_ref().map_or(0, Vec::len)
    }

    fn best_odd(&self) -> usize {
        self.odd.as_ref().map_or(0, Vec::len)
    }

    fn done(&self) -> bool {
        self.best_even() >= self.even_target && self.best_odd() >= self.odd_target
    }

    fn extend(&mut self, start: usize, visited: u64) {
        let last = *self.path.last().unwrap_or(&start);
        let len = self.path.len();
        if len >= 3 && self.nbrs[last] & (1 << start) != 0 {
            let slot = if len.is_multiple_of(2) { &mut self.even } else { &mut self.odd };
            if slot.as_ref().map_or(0, Vec::len) < len {
                *slot = Some(self.path.clone());
            }
        }
        // vertices above `start` that are still free
        let above = !((1u64 << start) | ((1u64 << start) - 1));
        let free = above & !visited & mask_of(self.nbrs.len());
        let reach = len + free.count_ones() as usize;
        let even_gain = reach - reach % 2 > self.best_even();
        let odd_gain = self.odd_target > 0 && reach - (1 - reach % 2) > self.best_odd();
        if (!even_gain && !odd_gain) || self.done() {
            return;
        }
        let mut next = self.nbrs[last] & free;
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            self.path.push(v);
            self.extend(start, visited | (1 << v));
            self.path.pop();
            if self.done() {
                return;
            }
        }
    }
}

fn mask_of(r: usize) -> u64 {
    if r == 64 {
        u64::MAX
    } else {
        (1u64 << r) - 1
    }
}

/// Every simple cycle, each listed once: smallest vertex first, second vertex
/// smaller than the last.
pub fn simple_cycles(g: &Graph, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let r = g.vertex_count();
    Caps::check("vertex count", r, caps.max_graph_vertices.min(64))?;
    let nbrs = g.neighbor_masks();
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(r);
    fn walk(nbrs: &[u64], start: usize, visited: u64, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap_or(&start);
        if path.len() >= 3 && nbrs[last] & (1 << start) != 0 && path[1] < last {
            out.push(path.clone());
        }
        let mut next = nbrs[last] & !visited & !((1u64 << (start + 1)) - 1);
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(v);
            walk(nbrs, start, visited | (1 << v), path, out);
            path.pop();
        }
    }
    for start in 0..r {
        path.push(start);
        walk(&nbrs, start, 1 << start, &mut path, &mut out);
        path.pop();
    }
    out.sort();
    Ok(out)
}
