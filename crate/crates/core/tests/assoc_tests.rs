mod common;

use common::*;
use dstab_core::assoc::{ass_formula, cms_states, nonbipartite_depth_zero_bound, witness_monomial};
use dstab_core::depth::depth_power;
use dstab_core::error::Error;
use dstab_core::graph::Graph;
use dstab_core::monomial::{associated_primes_bruteforce, MonomialIdeal};
use dstab_core::{Caps, OracleConfig};

fn caps() -> Caps {
    Caps::default()
}

fn unicyclic_odd(g: &Graph) -> bool {
    is_unicyclic(g) && !g.is_bipartite()
}

#[test]
fn states_are_well_formed() {
    for r in 3..=6 {
        for g in connected_graphs(r, &unicyclic_odd) {
            let k = dstab_core::graph::cycle_profile(&g, &caps()).unwrap().k();
            for n in k..=r + 1 {
                let states = cms_states(&g, n, &caps()).unwrap();
                assert!(!states.is_empty());
                for s in &states {
                    assert_eq!(s.n, n);
                    assert_eq!(s.d.degree() as usize, 2 * n - 1);
                    assert_eq!(s.d.support(), s.red, "{:?} n={n}", g.edges());
                    assert!(s.red.iter().all(|v| s.blue.binary_search(v).is_err()));
                    assert!(!MonomialIdeal::edge_ideal(&g).power(n).unwrap().contains(&s.d));
                }
            }
            assert!(matches!(cms_states(&g, k - 1, &caps()), Err(Error::LevelBelowK { .. })) || k == 1);
        }
    }
}

#[test]
fn triangle_levels() {
    let t = cycle(3);
    let two = cms_states(&t, 2, &caps()).unwrap();
    assert_eq!(two.len(), 1);
    assert_eq!(two[0].d.exponents(), &[1, 1, 1]);
    let three = cms_states(&t, 3, &caps()).unwrap();
    assert_eq!(three.len(), 3);
    assert!(three.iter().all(|s| s.d.degree() == 5));
}

#[test]
fn formula_matches_bruteforce_and_grows() {
    for r in 3..=6 {
        for g in connected_graphs(r, &unicyclic_odd) {
            let k = dstab_core::graph::cycle_profile(&g, &caps()).unwrap().k();
            let mut prev: Option<Vec<Vec<usize>>> = None;
            for n in k..=k + 3 {
                let f = ass_formula(&g, n, &caps()).unwrap();
                let power = MonomialIdeal::edge_ideal(&g).power(n).unwrap();
                assert_eq!(f.primes, associated_primes_bruteforce(&power, &caps()).unwrap(), "{:?} n={n}", g.edges());
                if let Some(p) = &prev {
                    assert!(p.iter().all(|q| f.contains(q)));
                }
                prev = Some(f.primes);
            }
        }
    }
}

#[test]
fn witness_level_is_first_depth_zero() {
    for r in 3..=6 {
        for g in connected_graphs(r, &unicyclic_odd) {
            let w = witness_monomial(&g, &caps()).unwrap();
            assert_eq!(w.f.degree() as usize, 2 * w.n - 1);
            let cfg = OracleConfig::default();
            assert_eq!(depth_power(&g, w.n, &cfg).unwrap().depth, 0);
            if w.n > 1 {
                assert!(depth_power(&g, w.n - 1, &cfg).unwrap().depth > 0, "{:?}", g.edges());
            }
        }
    }
}

#[test]
fn depth_zero_certificates() {
    let k4 = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    let house = graph(5, &[(1, 2), (2, 3), (3, 1), (2, 4), (3, 5), (4, 5)]);
    let cfg = OracleConfig::default();
    for (g, bound, certified) in [(k4, 3, 2), (house, 3, 3)] {
        let w = nonbipartite_depth_zero_bound(&g, &caps()).unwrap();
        assert_eq!((w.bound, w.certified_n), (bound, certified), "{:?}", g.edges());
        assert_eq!(depth_power(&g, w.certified_n, &cfg).unwrap().depth, 0);
        assert_eq!(w.spanning_edges.len(), g.vertex_count());
    }
    assert!(matches!(nonbipartite_depth_zero_bound(&cycle(4), &caps()), Err(Error::NotConnectedNonbipartite)));
}

#[test]
fn rejects_other_graphs() {
    assert!(matches!(cms_states(&cycle(4), 2, &caps()), Err(Error::NotUnicyclicNonbipartite)));
    assert!(matches!(ass_formula(&path(3), 2, &caps()), Err(Error::NotUnicyclicNonbipartite)));
    assert!(matches!(cms_states(&cycle(5), 2, &caps()), Err(Error::LevelBelowK { .. })));
}
