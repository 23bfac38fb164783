mod common;

use common::*;
use partial_vc::generate::{cycle_graph, grid};
use partial_vc::planar::{
    baker_max_partial_vc, baker_min_distinguishing, component_exact_solver, knapsack_combine,
};
use partial_vc::{compute_levels, neighborhood_hypergraph, Graph, LeveledPlanarGraph, VertexSet};

fn instances() -> Vec<(String, LeveledPlanarGraph)> {
    let mut out = Vec::new();
    for (r, c) in [(2, 3), (3, 3), (2, 6), (3, 5), (4, 4), (4, 5)] {
        let (g, lv) = grid(r, c);
        out.push((format!("grid {r}x{c}"), LeveledPlanarGraph::new(g, lv).unwrap()));
    }
    for n in [5, 8, 12] {
        let g = cycle_graph(n);
        let face: VertexSet = (0..n).collect();
        out.push((format!("cycle {n}"), compute_levels(&g, &face).unwrap()));
    }
    // Wheel: hub inside a 7-cycle.
    let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
    edges.extend((0..7).map(|i| (i, 7)));
    let wheel = Graph::from_edges(8, &edges).unwrap();
    out.push(("wheel 7".into(), compute_levels(&wheel, &(0..7).collect()).unwrap()));
    out
}

#[test]
fn max_scheme_guarantee_and_soundness() {
    for (name, lg) in instances() {
        let h = neighborhood_hypergraph(lg.graph());
        for k in 1..=4.min(h.n()) {
            let opt = brute_max(&h, k);
            for eps in [0.5, 1.0, 2.0] {
                let b = baker_max_partial_vc(&lg, k, eps).unwrap();
                assert_eq!(b.residues_tried, b.lambda + 1, "{name}");
                assert!(b.result.value >= b.dp_value, "{name}");
                assert_eq!(h.class_count(&b.result.witness), b.result.value, "{name}");
                assert_eq!(b.result.witness.len(), k);
                assert!(b.result.value as f64 * (1.0 + eps) >= opt as f64, "{name} k={k} eps={eps}");
                assert!(b.result.upper_bound >= opt);
            }
        }
    }
}

#[test]
fn min_scheme_guarantee_and_validity() {
    for (name, lg) in instances() {
        let h = neighborhood_hypergraph(lg.graph());
        if !h.is_twin_free() {
            continue;
        }
        let opt = brute_dt(&h);
        for eps in [1.0, 2.0] {
            let b = baker_min_distinguishing(&lg, eps).unwrap();
            assert_eq!(b.residues_tried, b.lambda, "{name}");
            let p = h.trace_profile(&b.result.witness).unwrap();
            assert_eq!(p.class_count, h.m(), "{name}");
            assert!(b.result.value as f64 <= (1.0 + eps) * opt as f64, "{name} eps={eps}");
        }
    }
}

/// Most classes with a nonempty trace over all `k`-subsets.
fn brute_nonempty(masks: &[u64], n: usize, k: usize) -> usize {
    k_subsets(n, k)
        .into_iter()
        .map(|c| {
            let empty = masks.iter().any(|e| e & c == 0);
            classes(masks, c) - usize::from(empty)
        })
        .max()
        .unwrap()
}

#[test]
fn component_tables_match_brute_force() {
    let (g, _) = grid(3, 3);
    let t = component_exact_solver(&g, 4).unwrap();
    let h = neighborhood_hypergraph(&g);
    let masks = edge_masks(&h);
    for (k, (v, w)) in t.best.iter().enumerate() {
        assert_eq!(*v, brute_nonempty(&masks, 9, k), "k={k}");
        assert_eq!(w.len(), k);
    }
    // Disjoint copies: nonempty classes add up.
    let (value, alloc) = knapsack_combine(&[t.clone(), t.clone()], 4);
    assert!(alloc.iter().sum::<usize>() <= 4);
    let best_split = (0..=4).map(|a| t.best[a].0 + t.best[4 - a].0).max().unwrap();
    assert_eq!(value, best_split);
}

#[test]
fn rejects_bad_levels_and_epsilon() {
    let (g, mut lv) = grid(2, 2);
    assert!(LeveledPlanarGraph::new(g.clone(), lv.clone()).is_ok());
    lv[0] = 3;
    assert!(LeveledPlanarGraph::new(g.clone(), lv).is_err());
    let (g2, lv2) = grid(2, 2);
    let lg = LeveledPlanarGraph::new(g2, lv2).unwrap();
    assert!(baker_max_partial_vc(&lg, 1, 0.0).is_err());
    assert!(baker_min_distinguishing(&lg, -1.0).is_err());
}
