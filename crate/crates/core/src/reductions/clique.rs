//! Clique to VC dimension on neighborhood hypergraphs.

use super::{Instance, ReductionCertificate, ReductionKind, Variant};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Target vertex of copy `(u, i)`.
pub fn copy_vertex(k: usize, u: usize, i: usize) -> usize {
    u * k + i
}

/// Builds `G'` on `X ∪ F`: `X` holds copies `(u, i)` for `u ∈ V`, `i < k`
/// (index `u·k + i`); then one vertex per edge `uv` and pair `(i, j)`
/// adjacent to `(u, i)` and `(v, j)`, edges in sorted order, `i` major; then
/// one vertex per `L ⊆ [k]` with `|L| ≠ 2`, by increasing bit mask, adjacent
/// to every `(u, i)` with `i ∈ L`.
pub fn clique_to_vcdim(g: &Graph, k: usize, variant: Variant) -> Result<ReductionCertificate> {
    if k <= 3 {
        return Err(Error::input(format!("clique size must exceed 3, got {k}")));
    }
    if k >= 20 {
        return Err(Error::capacity(format!("2^{k} subset vertices are too many")));
    }
    let n = g.n();
    let x_count = n * k;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = x_count;
    let mut f_side = Vec::new();
    for (u, v) in g.edges() {
        for i in 0..k {
            for j in 0..k {
                edges.push((copy_vertex(k, u, i), next));
                edges.push((copy_vertex(k, v, j), next));
                f_side.push(next);
                next += 1;
            }
        }
    }
    for mask in 0u32..1 << k {
        if mask.count_ones() == 2 {
            continue;
        }
        for i in (0..k).filter(|i| mask >> i & 1 == 1) {
            for u in 0..n {
                edges.push((copy_vertex(k, u, i), next));
            }
        }
        f_side.push(next);
        next += 1;
    }
    if matches!(variant, Variant::Split | Variant::CoBipartite) {
        for a in 0..x_count {
            for b in a + 1..x_count {
                edges.push((a, b));
            }
        }
    }
    if variant == Variant::CoBipartite {
        for (ia, &a) in f_side.iter().enumerate() {
            for &b in &f_side[ia + 1..] {
                edges.push((a, b));
            }
        }
    }
    let target = Graph::from_edges(next, &edges)?;
    Ok(ReductionCertificate {
        kind: ReductionKind::CliqueToVcdim,
        variant: Some(variant),
        source: g.clone(),
        k,
        target: Instance::Graph(target),
        k_prime: k,
    })
}

/// Sends a clique `v_0, ..., v_{k-1}` (in the given order) to `{(v_i, i)}`.
pub fn forward_clique(k: usize, clique: &[usize]) -> VertexSet {
    clique.iter().enumerate().map(|(i, &v)| copy_vertex(k, v, i)).collect()
}
