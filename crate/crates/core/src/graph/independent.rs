use super::Graph;
use crate::config::Caps;
use crate::Result;

/// All maximal independent sets (the facets of the independence complex),
/// each sorted, listed in lexicographic order.
///
/// Bron–Kerbosch with pivoting on the complement graph.
pub fn maximal_independent_sets(g: &Graph, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let r = g.vertex_count();
    Caps::check("vertex count", r, caps.max_graph_vertices.min(64))?;
    let all = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
    // non-neighbors, excluding the vertex itself
    let free: Vec<u64> = g
        .neighbor_masks()
        .iter()
        .enumerate()
        .map(|(v, &m)| all & !m & !(1 << v))
        .collect();
    let mut found = Vec::new();
    bron_kerbosch(&free, 0, all, 0, &mut found);
    let mut sets: Vec<Vec<usize>> = found.into_iter().map(bits).collect();
    sets.sort();
    Ok(sets)
}

fn bron_kerbosch(free: &[u64], current: u64, mut candidates: u64, mut excluded: u64, out: &mut Vec<u64>) {
    if candidates == 0 {
        if excluded == 0 {
            out.push(current);
        }
        return;
    }
    let pivot_pool = candidates | excluded;
    let pivot = (0..free.len())
        .filter(|&u| pivot_pool & (1 << u) != 0)
        .max_by_key(|&u| (candidates & free[u]).count_ones())
        .unwrap_or(0);
    let mut todo = candidates & !free[pivot];
    while todo != 0 {
        let v = todo.trailing_zeros() as usize;
        todo &= todo - 1;
        bron_kerbosch(free, current | (1 << v), candidates & free[v], excluded & free[v], out);
        candidates &= !(1 << v);
        excluded |= 1 << v;
    }
}

fn bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Minimal vertex covers: complements of the maximal independent sets,
/// listed in lexicographic order.
pub fn minimal_vertex_covers(g: &Graph, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let r = g.vertex_count();
    let mut covers: Vec<Vec<usize>> = maximal_independent_sets(g, caps)?
        .into_iter()
        .map(|set| (0..r).filter(|v| set.binary_search(v).is_err()).collect())
        .collect();
    covers.sort();
    Ok(covers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::labels;

    fn lab(sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        sets.iter().map(|s| labels(s)).collect()
    }

    #[test]
    fn small_examples() {
        let caps = Caps::default();
        let c4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(lab(maximal_independent_sets(&c4, &caps).unwrap()), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(lab(minimal_vertex_covers(&c4, &caps).unwrap()), vec![vec![1, 3], vec![2, 4]]);

        let c3 = Graph::new(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(lab(maximal_independent_sets(&c3, &caps).unwrap()), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(
            lab(minimal_vertex_covers(&c3, &caps).unwrap()),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );

        let p4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(
            lab(maximal_independent_sets(&p4, &caps).unwrap()),
            vec![vec![1, 3], vec![1, 4], vec![2, 4]]
        );

        let star = Graph::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(lab(minimal_vertex_covers(&star, &caps).unwrap()), vec![vec![1], vec![2, 3, 4]]);
    }
}
