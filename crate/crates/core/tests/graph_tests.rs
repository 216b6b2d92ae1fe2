mod common;

use common::*;
use dstab_core::error::Error;
use dstab_core::graph::{
    cycle_profile, maximal_independent_sets, minimal_vertex_covers, parse_graph, render_graph, simple_cycles,
    CycleClass, Graph,
};
use dstab_core::Caps;
use proptest::prelude::*;

fn independent(g: &Graph, mask: u64) -> bool {
    g.edges().iter().all(|&(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
}

fn mis_brute(g: &Graph) -> Vec<Vec<usize>> {
    let r = g.vertex_count();
    let mut out: Vec<Vec<usize>> = (0..1u64 << r)
        .filter(|&m| independent(g, m) && (0..r).all(|v| m >> v & 1 == 1 || !independent(g, m | 1 << v)))
        .map(|m| (0..r).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=8).prop_flat_map(|r| {
        proptest::collection::vec((0..r, 0..r), r..16).prop_filter_map("isolated vertex", move |pairs| {
            let edges: Vec<(usize, usize)> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edges0(r, &edges).ok()
        })
    })
}

proptest! {
    #[test]
    fn render_then_parse(g in arb_graph()) {
        prop_assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
    }

    #[test]
    fn independent_sets_and_covers(g in arb_graph()) {
        let caps = Caps::default();
        let mut mis = maximal_independent_sets(&g, &caps).unwrap();
        mis.sort();
        prop_assert_eq!(&mis, &mis_brute(&g));
        let mut covers = minimal_vertex_covers(&g, &caps).unwrap();
        covers.sort();
        let mut complements: Vec<Vec<usize>> = mis
            .iter()
            .map(|s| (0..g.vertex_count()).filter(|v| !s.contains(v)).collect())
            .collect();
        complements.sort();
        prop_assert_eq!(covers, complements);
    }

    #[test]
    fn components_partition_vertices(g in arb_graph()) {
        let dec = g.decompose();
        let mut all: Vec<usize> = dec.components.iter().flat_map(|c| c.vertices.clone()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.vertex_count()).collect::<Vec<_>>());
        prop_assert_eq!(dec.s() == dec.p(), g.is_bipartite());
        for c in &dec.components {
            if let Some(b) = &c.bipartition {
                for &(u, v) in &g.edges() {
                    if c.vertices.contains(&u) {
                        prop_assert!(b.x.contains(&u) != b.x.contains(&v));
                    }
                }
            }
        }
    }
}

#[test]
fn parse_formats() {
    let g = parse_graph("# square\nr=4\n1 2\n2 3  # inline\n3 4\n\n4 1\n").unwrap();
    assert_eq!(g.vertex_count(), 4);
    assert_eq!(g.edge_count(), 4);
    assert_eq!(parse_graph("1 2\n2 1\n").unwrap().edge_count(), 1);
    for bad in ["", "# nothing\n", "1\n", "1 2 3\n", "a b\n", "r=2\nr=3\n1 2\n", "1 1\n", "0 1\n", "r=2\n1 3\n", "r=3\n1 2\n"] {
        assert!(parse_graph(bad).is_err(), "{bad:?}");
    }
    match parse_graph("1 2\nx y\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn cycle_profiles() {
    let caps = Caps::default();
    let p = cycle_profile(&path(5), &caps).unwrap();
    assert_eq!((p.class, p.k()), (CycleClass::Tree, 1));
    let p = cycle_profile(&cycle(7), &caps).unwrap();
    assert_eq!((p.class, p.k(), p.max_odd_len()), (CycleClass::Unicyclic, 4, Some(7)));
    let theta = graph(5, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 3)]);
    let p = cycle_profile(&theta, &caps).unwrap();
    assert_eq!((p.class, p.max_even_len(), p.k()), (CycleClass::General, Some(4), 2));
    assert_eq!(simple_cycles(&theta, &caps).unwrap().len(), 3);
}

#[test]
fn leaf_counts() {
    let s = star(4);
    assert_eq!(s.leaf_edge_count(), 4);
    assert_eq!(path(2).leaf_edge_count(), 1);
    assert_eq!(cycle(5).leaf_edge_count(), 0);
    let g = graph(5, &[(1, 2), (2, 3), (3, 1), (3, 4), (3, 5)]);
    assert_eq!(g.leaf_edge_count(), 2);
    assert_eq!(g.leaf_neighbors(2), vec![3, 4]);
}
