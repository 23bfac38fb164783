//! Independent set to distinguishing transversal.

use super::{Instance, ReductionCertificate, ReductionKind};
use crate::error::Result;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Hypergraph on `x_v` (indices `0..n`) and `x_e` (`n + edge index`, edges
/// sorted) with edges `E_e = {x_u, x_v, x_e}` and `E'_e = {x_e}` for each edge
/// in order, then one empty edge.
pub fn is_to_disting_transversal(g: &Graph, s: usize) -> Result<ReductionCertificate> {
    let n = g.n();
    let gedges = g.edges();
    let mut edges = Vec::with_capacity(2 * gedges.len() + 1);
    for (idx, &(u, v)) in gedges.iter().enumerate() {
        let xe = n + idx;
        edges.push([u, v, xe].into_iter().collect::<VertexSet>());
        edges.push(VertexSet::singleton(xe));
    }
    edges.push(VertexSet::new());
    let h = Hypergraph::new(n + gedges.len(), edges)?;
    let k_prime = h.n().saturating_sub(s);
    Ok(ReductionCertificate {
        kind: ReductionKind::IsToDt,
        variant: None,
        source: g.clone(),
        k: s,
        target: Instance::Hypergraph(h),
        k_prime,
    })
}

/// Sends an independent set `I` to `X \ {x_v : v ∈ I}`.
pub fn forward_independent(cert: &ReductionCertificate, independent: &VertexSet) -> VertexSet {
    let h = cert.target_hypergraph();
    VertexSet::full(h.n()).difference(independent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let c = is_to_disting_transversal(&g, 1).unwrap();
        let h = c.target_hypergraph();
        assert_eq!((h.n(), h.m(), c.k_prime), (3, 3, 2));
        let set: VertexSet = [2, 0].into_iter().collect();
        assert_eq!(h.class_count(&set), 3);
        assert_eq!(forward_independent(&c, &VertexSet::singleton(1)), set);
    }

    #[test]
    fn edgeless() {
        let c = is_to_disting_transversal(&Graph::empty(4), 4).unwrap();
        let h = c.target_hypergraph();
        assert_eq!((h.m(), c.k_prime), (1, 0));
        assert_eq!(h.class_count(&VertexSet::new()), 1);
    }
}
