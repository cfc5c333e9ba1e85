use std::collections::BTreeSet;

use egr_core::constructions;
use egr_core::graph::{
    census_oracle, edge_girth_count, for_each_girth_cycle, girth, girth_profile_with, CensusOptions, Graph,
    GraphError,
};
use proptest::prelude::*;

fn random_graph() -> impl Strategy<Value = Graph> {
    (4u32..13).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::plain(n as usize, edges).unwrap())
    })
}

/// Connected circulant: jump 1 is always present.
fn circulant() -> impl Strategy<Value = Graph> {
    (7u32..24).prop_flat_map(|n| {
        proptest::collection::btree_set(2..=(n - 1) / 2, 0..3).prop_map(move |jumps| {
            let mut edges = BTreeSet::new();
            for j in std::iter::once(1).chain(jumps) {
                for v in 0..n {
                    let w = (v + j) % n;
                    edges.insert((v.min(w), v.max(w)));
                }
            }
            Graph::plain(n as usize, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn path_search_matches_oracle(g in random_graph()) {
        let len = match girth(&g) {
            Ok(len) => len,
            Err(GraphError::Acyclic) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        let oracle = census_oracle(&g, len, 600, CensusOptions::serial()).unwrap();
        let counts: Vec<u64> = g.edges().iter().map(|&e| edge_girth_count(&g, e, len).unwrap()).collect();
        prop_assert_eq!(&counts, &oracle.edge_counts);

        // every cycle has len edges
        prop_assert_eq!(counts.iter().sum::<u64>(), u64::from(len) * oracle.total_cycles);

        // each cycle through v uses two of its edges
        let mut through = vec![0u64; g.order()];
        for_each_girth_cycle(&g, len, |c| c.iter().for_each(|&v| through[v as usize] += 1));
        for v in 0..g.order() as u32 {
            let incident: u64 = g
                .neighbors(v)
                .iter()
                .map(|&w| counts[g.edge_id(v, w).unwrap()])
                .sum();
            prop_assert_eq!(incident, 2 * through[v as usize]);
        }
    }

    #[test]
    fn worker_count_is_invisible(g in circulant(), workers in 2usize..6) {
        let serial = girth_profile_with(&g, CensusOptions::serial()).unwrap();
        let parallel = girth_profile_with(&g, CensusOptions { workers: Some(workers) }).unwrap();
        prop_assert_eq!(serial, parallel);
    }
}

#[test]
fn constructions_are_deterministic_across_workers() {
    for (name, q) in [("amalgam1", 11), ("baer", 3), ("match-odd", 9)] {
        let c = constructions::build(name, &constructions::Params::q(q)).unwrap();
        let again = constructions::build(name, &constructions::Params::q(q)).unwrap();
        assert_eq!(c.graph.edges(), again.graph.edges(), "{name}");
        let serial = girth_profile_with(&c.graph, CensusOptions::serial()).unwrap();
        let parallel = girth_profile_with(&c.graph, CensusOptions { workers: Some(8) }).unwrap();
        assert_eq!(serial, parallel, "{name}");
    }
}
