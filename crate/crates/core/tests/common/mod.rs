//! Brute-force oracles written against plain bitmasks, sharing no code with
//! the library's search engine.

#![allow(dead_code)]

use std::collections::BTreeSet;

use partial_vc::{Graph, Hypergraph, VertexSet};
use proptest::prelude::*;

pub fn mask_of(s: &VertexSet) -> u64 {
    s.iter().fold(0, |acc, v| acc | 1 << v)
}

pub fn set_of(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn edge_masks(h: &Hypergraph) -> Vec<u64> {
    h.edges().iter().map(mask_of).collect()
}

/// Distinct traces `e & c`.
pub fn classes(edges: &[u64], c: u64) -> usize {
    let mut t: Vec<u64> = edges.iter().map(|e| e & c).collect();
    t.sort_unstable();
    t.dedup();
    t.len()
}

/// All `k`-subsets of `0..n` as masks, ascending (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let limit = 1u64 << n;
    let mut c = (1u64 << k) - 1;
    while c < limit {
        out.push(c);
        let low = c & c.wrapping_neg();
        let ripple = c + low;
        c = (((ripple ^ c) >> 2) / low) | ripple;
    }
    out
}

/// Most edges holding at least two vertices of a `k`-set.
pub fn brute_double_hit(edges: &[u64], n: usize, k: usize) -> usize {
    k_subsets(n, k)
        .into_iter()
        .map(|c| edges.iter().filter(|&&e| (e & c).count_ones() >= 2).count())
        .max()
        .unwrap_or(0)
}

/// Most edges of `g` touched by `k` vertices.
pub fn brute_partial_cover(g: &Graph, k: usize) -> usize {
    let edges = g.edges();
    k_subsets(g.n(), k)
        .into_iter()
        .map(|c| edges.iter().filter(|&&(u, v)| (c >> u | c >> v) & 1 == 1).count())
        .max()
        .unwrap_or(0)
}

pub fn brute_max(h: &Hypergraph, k: usize) -> usize {
    let edges = edge_masks(h);
    k_subsets(h.n(), k).into_iter().map(|c| classes(&edges, c)).max().unwrap_or(0)
}

pub fn brute_vcdim(h: &Hypergraph) -> usize {
    let edges = edge_masks(h);
    (0..=h.n())
        .rev()
        .find(|&d| k_subsets(h.n(), d).into_iter().any(|c| classes(&edges, c) == 1 << d))
        .unwrap_or(0)
}

/// Smallest `k` whose best `k`-set separates all distinct edges.
pub fn brute_dt(h: &Hypergraph) -> usize {
    let edges = edge_masks(h);
    let target = edges.iter().collect::<BTreeSet<_>>().len();
    (0..=h.n())
        .find(|&k| k_subsets(h.n(), k).into_iter().any(|c| classes(&edges, c) == target))
        .expect("the full vertex set separates distinct edges")
}

pub fn brute_clique(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .filter(|&s| {
            let vs: Vec<usize> = (0..g.n()).filter(|&v| s >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn hypergraph_from_masks(n: usize, masks: &[u64]) -> Hypergraph {
    Hypergraph::new(n, masks.iter().map(|&m| set_of(m)).collect()).unwrap()
}

/// Hypergraphs with `1..=max_n` vertices and `1..=max_m` edges.
pub fn arb_hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0u64..1 << n, 1..=max_m).prop_map(move |masks| hypergraph_from_masks(n, &masks))
    })
}

/// A hypergraph together with a vertex mask.
pub fn arb_with_set(max_n: usize, max_m: usize) -> impl Strategy<Value = (Hypergraph, u64)> {
    arb_hypergraph(max_n, max_m).prop_flat_map(|h| {
        let n = h.n();
        (Just(h), 0u64..1 << n)
    })
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}
