use std::collections::BTreeSet;

use itline::eup::{
    check_conditions, exists_by_enumeration, find_witness, spacing_by_bipartitions, Variant,
};
use itline::format::{parse_edgelist, parse_graph6, to_edgelist, to_graph6};
use itline::graph::{MultiGraph, Subgraph};
use itline::hamilton::lift_trail_to_path;
use itline::harness::canonical_form;
use itline::indices::{
    bounds, direct_index_cross_check, hamiltonian_index, hamiltonian_path_index, CrossCheck,
    CrossCheckCaps,
};
use itline::linegraph::{find_claw, line_graph};
use itline::search::SearchOptions;
use itline::structure::{branches, find_dominating_trail};
use proptest::prelude::*;

fn opts() -> SearchOptions {
    SearchOptions::with_budget(50_000_000)
}

/// Connected loopless multigraphs: a random tree plus a few extra edges.
fn connected(max_order: usize, max_extra: usize, multi: bool) -> impl Strategy<Value = MultiGraph> {
    (2..=max_order)
        .prop_flat_map(move |n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            let extra = prop::collection::vec((0..n, 0..n), 0..=max_extra);
            (Just(n), parents, extra)
        })
        .prop_map(move |(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            for (u, v) in extra {
                let e = (u.min(v), u.max(v));
                if u != v && (multi || !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e)) {
                    edges.push(e);
                }
            }
            MultiGraph::new(n, edges).unwrap()
        })
}

fn relabel(g: &MultiGraph, perm: &[usize]) -> MultiGraph {
    MultiGraph::new(
        g.order(),
        g.edges().iter().map(|&(u, v)| (perm[u], perm[v])),
    )
    .unwrap()
}

fn with_permutation(g: MultiGraph) -> impl Strategy<Value = (MultiGraph, Vec<usize>)> {
    let n = g.order();
    (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

fn edge_pairs(g: &MultiGraph) -> Vec<(usize, usize)> {
    let mut v: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, w)| (u.min(w), u.max(w)))
        .collect();
    v.sort_unstable();
    v
}

/// Edge sequence of `g` that visits every edge once with consecutive edges adjacent.
fn is_line_path(g: &MultiGraph, seq: &[usize]) -> bool {
    let share = |a: usize, b: usize| {
        let (p, q) = g.edges()[a];
        let (r, s) = g.edges()[b];
        p == r || p == s || q == r || q == s
    };
    let distinct: BTreeSet<_> = seq.iter().collect();
    seq.len() == g.size()
        && distinct.len() == seq.len()
        && seq.windows(2).all(|w| share(w[0], w[1]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn degree_sum_is_twice_size(g in connected(9, 6, true)) {
        let total: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.size());
    }

    #[test]
    fn distances_form_a_metric(g in connected(8, 5, true)) {
        let d: Vec<Vec<usize>> = g.vertices().map(|v| g.distances_from(v).into_iter().map(Option::unwrap).collect()).collect();
        for a in g.vertices() {
            prop_assert_eq!(d[a][a], 0);
            for b in g.vertices() {
                prop_assert_eq!(d[a][b], d[b][a]);
                for c in g.vertices() {
                    prop_assert!(d[a][c] <= d[a][b] + d[b][c]);
                }
            }
        }
    }

    #[test]
    fn edgelist_round_trips(g in connected(9, 6, true)) {
        prop_assert_eq!(parse_edgelist(&to_edgelist(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_round_trips_simple_graphs(g in connected(9, 6, false)) {
        let back = parse_graph6(&to_graph6(&g).unwrap()).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(edge_pairs(&back), edge_pairs(&g));
    }

    #[test]
    fn line_graphs_are_claw_free_with_expected_size(g in connected(8, 5, true)) {
        let lg = line_graph(&g).unwrap().graph;
        prop_assert!(find_claw(&lg).is_none());
        prop_assert!(lg.is_simple());
        let adjacent_pairs = (0..g.size())
            .flat_map(|a| (a + 1..g.size()).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                let (p, q) = g.edges()[a];
                let (r, s) = g.edges()[b];
                p == r || p == s || q == r || q == s
            })
            .count();
        prop_assert_eq!(lg.size(), adjacent_pairs);
        if g.is_simple() {
            let formula: usize = g.vertices().map(|v| g.degree(v).unwrap()).map(|d| d * d.saturating_sub(1) / 2).sum();
            prop_assert_eq!(lg.size(), formula);
        }
    }

    #[test]
    fn open_branches_map_to_branches_of_the_line_graph(g in connected(8, 4, true)) {
        let lg = line_graph(&g).unwrap().graph;
        let images: BTreeSet<Vec<usize>> = branches(&lg)
            .into_iter()
            .flat_map(|b| {
                let mut r = b.vertices.clone();
                r.reverse();
                [b.vertices, r]
            })
            .collect();
        for b in branches(&g).into_iter().filter(|b| b.len() >= 2 && !b.is_closed) {
            prop_assert!(images.contains(&b.edges), "branch {:?}", b.vertices);
        }
    }

    #[test]
    fn dominating_trails_lift_to_hamiltonian_paths(g in connected(8, 4, true)) {
        prop_assume!(g.size() >= 3);
        if let Some(t) = find_dominating_trail(&g, false, &opts()).unwrap().found() {
            prop_assert!(t.dominates(&g));
            let path = lift_trail_to_path(&g, &t).unwrap();
            prop_assert!(is_line_path(&g, &path.vertices));
        }
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in connected(7, 5, true).prop_flat_map(with_permutation)) {
        let h = relabel(&g, &perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn spacing_agrees_with_bipartitions(
        g in connected(8, 4, true),
        mask in any::<u64>(),
        iso in any::<u16>(),
        k in 1usize..4,
    ) {
        let edges: Vec<usize> = (0..g.size()).filter(|&e| mask >> e & 1 == 1).collect();
        let covered: BTreeSet<usize> = edges.iter().flat_map(|&e| { let (u, v) = g.edges()[e]; [u, v] }).collect();
        let isolated: Vec<usize> = g.vertices().filter(|&v| iso >> v & 1 == 1 && !covered.contains(&v)).collect();
        let h = Subgraph::new(&g, edges, isolated).unwrap();
        let report = check_conditions(&g, &h, k, Variant::Eup).unwrap();
        prop_assert_eq!(report.spacing.passed(), spacing_by_bipartitions(&g, &h, k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn search_agrees_with_enumeration(g in connected(7, 4, true), k in 1usize..4) {
        prop_assume!(g.size() <= 12);
        for variant in [Variant::Eu, Variant::Eup] {
            let searched = find_witness(&g, k, variant, &opts()).unwrap();
            let exhaustive = exists_by_enumeration(&g, k, variant).unwrap();
            prop_assert_eq!(searched.decided(), Some(exhaustive.is_some()), "{} at k = {}", variant, k);
            if let Some(h) = searched.found() {
                prop_assert!(check_conditions(&g, &h, k, variant).unwrap().passes());
            }
        }
    }

    #[test]
    fn witnesses_are_monotone_and_eu_implies_eup(g in connected(8, 4, true), k in 1usize..4) {
        for variant in [Variant::Eu, Variant::Eup] {
            if let Some(h) = find_witness(&g, k, variant, &opts()).unwrap().found() {
                prop_assert!(check_conditions(&g, &h, k + 1, variant).unwrap().passes());
                prop_assert!(check_conditions(&g, &h, k, Variant::Eup).unwrap().passes());
            }
        }
    }

    #[test]
    fn indices_respect_bounds_and_direct_iteration(g in connected(6, 3, true)) {
        prop_assume!(g.size() >= 2);
        let hp = hamiltonian_path_index(&g, &opts()).unwrap();
        let b = bounds(&g, &opts()).unwrap();
        prop_assert!(hp.value <= b.min(), "h_p = {} exceeds {:?}", hp.value, b.values());
        if !g.is_path() {
            let h = hamiltonian_index(&g, &opts()).unwrap();
            prop_assert!(hp.value <= h.value);
        }
        let caps = CrossCheckCaps::default();
        let check = direct_index_cross_check(&g, &hp, &caps);
        prop_assert!(!check.is_mismatch(), "{:?}", check);
        let settled = matches!(check, CrossCheck::Confirmed | CrossCheck::CapExceeded { .. });
        prop_assert!(settled);
    }
}
