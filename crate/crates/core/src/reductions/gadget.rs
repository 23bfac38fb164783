//! Max partial vertex cover on cubic graphs to Max Partial VC Dimension on
//! graphs of maximum degree 7.

use super::{Instance, ReductionCertificate, ReductionKind};
use crate::error::{Error, Result};
use crate::exact::SearchConfig;
use crate::graph::Graph;
use crate::search::binomial;
use crate::vertex_set::VertexSet;

/// Vertices per gadget.
pub const GADGET_SIZE: usize = 12;

/// Neighbors among `f1..f4` (bits 0..3) of the eight auxiliary vertices,
/// at gadget offsets 4..11.
const AUX: [u8; 8] = [
    0b1000, // f4
    0b0110, // f2 f3
    0b0101, // f1 f3
    0b1010, // f2 f4
    0b1001, // f1 f4
    0b1101, // f1 f3 f4
    0b1011, // f1 f2 f4
    0b1111, // f1 f2 f3 f4
];

/// Target index of gadget `v`, offset `o` (`0..4` are `f1..f4`).
pub fn gadget_vertex(v: usize, o: usize) -> usize {
    v * GADGET_SIZE + o
}

/// One 12-vertex gadget per source vertex (`f1..f4` at offsets 0..3 joined
/// by the path `f1 f2 f3 f4`, auxiliaries at 4..11), then one subdividing
/// vertex per source edge in sorted order, adjacent to `f^r` of both ends,
/// where `r` is the rank of the edge in that end's sorted neighbor list.
pub fn mpvc_to_mpvcd(g: &Graph, k: usize) -> Result<ReductionCertificate> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(Error::input(format!(
            "source graph must be cubic; vertex {} has degree {}",
            v + 1,
            g.degree(v)
        )));
    }
    if k > g.n() {
        return Err(Error::input(format!("k={k} exceeds the vertex count {}", g.n())));
    }
    let n = g.n();
    let mut edges = Vec::new();
    for v in 0..n {
        for o in 0..3 {
            edges.push((gadget_vertex(v, o), gadget_vertex(v, o + 1)));
        }
        for (a, &mask) in AUX.iter().enumerate() {
            for f in (0..4).filter(|f| mask >> f & 1 == 1) {
                edges.push((gadget_vertex(v, f), gadget_vertex(v, 4 + a)));
            }
        }
    }
    let rank = |v: usize, u: usize| g.neighbors(v).iter().position(|&w| w == u).expect("adjacent");
    for (idx, (u, v)) in g.edges().into_iter().enumerate() {
        let mid = n * GADGET_SIZE + idx;
        edges.push((gadget_vertex(u, rank(u, v)), mid));
        edges.push((gadget_vertex(v, rank(v, u)), mid));
    }
    let target = Graph::from_edges(n * GADGET_SIZE + g.edge_count(), &edges)?;
    Ok(ReductionCertificate {
        kind: ReductionKind::MpvcToMpvcd,
        variant: None,
        source: g.clone(),
        k,
        target: Instance::Graph(target),
        k_prime: 4 * k,
    })
}

/// Edges of `g` with an endpoint in `s`.
pub fn partial_cover_value(g: &Graph, s: &VertexSet) -> usize {
    g.edges()
        .iter()
        .filter(|(u, v)| s.contains(*u) || s.contains(*v))
        .count()
}

/// Best partial vertex cover with `k` vertices, first in combination order.
pub fn max_partial_vertex_cover(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<(usize, VertexSet)> {
    let n = g.n();
    if k > n {
        return Err(Error::input(format!("k={k} exceeds the vertex count {n}")));
    }
    if binomial(n, k) > cfg.ceiling as u128 {
        return Err(Error::capacity(format!(
            "C({n}, {k}) cover candidates exceed the ceiling of {}",
            cfg.ceiling
        )));
    }
    let mut best = (0, (0..k).collect::<VertexSet>());
    let mut idx: Vec<usize> = (0..k).collect();
    best.0 = partial_cover_value(g, &best.1);
    loop {
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
        let s: VertexSet = idx.iter().copied().collect();
        let v = partial_cover_value(g, &s);
        if v > best.0 {
            best = (v, s);
        }
    }
    Ok(best)
}

/// `∪_{v ∈ S} {f1..f4 of v}`.
pub fn forward_cover(s: &VertexSet) -> VertexSet {
    s.iter().flat_map(|v| (0..4).map(move |o| gadget_vertex(v, o))).collect()
}

/// Maps a target solution back to `k` source vertices: gadgets ranked by how
/// many chosen vertices they hold (a subdividing vertex counts for its lower
/// end), then topped up greedily by coverage.
pub fn back_map(g: &Graph, k: usize, target_solution: &VertexSet) -> VertexSet {
    let n = g.n();
    let gedges = g.edges();
    let mut count = vec![0usize; n];
    for x in target_solution {
        if x < n * GADGET_SIZE {
            count[x / GADGET_SIZE] += 1;
        } else if let Some(&(u, _)) = gedges.get(x - n * GADGET_SIZE) {
            count[u] += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&v| count[v] > 0).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(count[v]), v));
    let mut s: VertexSet = order.into_iter().take(k).collect();
    while s.len() < k {
        let base = partial_cover_value(g, &s);
        let best = (0..n)
            .filter(|v| !s.contains(*v))
            .max_by_key(|&v| {
                let mut t = s.clone();
                t.insert(v);
                (partial_cover_value(g, &t) - base, std::cmp::Reverse(v))
            })
            .expect("k <= n");
        s.insert(best);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::complete_graph;
    use crate::graph::neighborhood_hypergraph;

    fn target(c: &ReductionCertificate) -> &Graph {
        match &c.target {
            Instance::Graph(g) => g,
            Instance::Hypergraph(_) => unreachable!(),
        }
    }

    #[test]
    fn k4_shape() {
        let c = mpvc_to_mpvcd(&complete_graph(4), 1).unwrap();
        let t = target(&c);
        assert_eq!(t.n(), 4 * 12 + 6);
        assert_eq!(t.max_degree(), 7);
        assert_eq!(c.k_prime, 4);
    }

    #[test]
    fn gadget_alone_gives_twelve_classes() {
        let c = mpvc_to_mpvcd(&complete_graph(4), 1).unwrap();
        let t = target(&c);
        let gadget: VertexSet = (0..12).collect();
        let (sub, _) = t.induced(&gadget);
        let h = neighborhood_hypergraph(&sub);
        let f: VertexSet = (0..4).collect();
        assert_eq!(h.class_count(&f), 12);
    }

    #[test]
    fn non_cubic_rejected() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(mpvc_to_mpvcd(&p, 1).is_err());
    }

    #[test]
    fn cover_oracle() {
        let k4 = complete_graph(4);
        let cfg = SearchConfig::default();
        assert_eq!(max_partial_vertex_cover(&k4, 1, &cfg).unwrap().0, 3);
        assert_eq!(max_partial_vertex_cover(&k4, 2, &cfg).unwrap().0, 5);
        assert_eq!(max_partial_vertex_cover(&k4, 0, &cfg).unwrap().0, 0);
    }

    #[test]
    fn forward_and_back() {
        let k4 = complete_graph(4);
        let s: VertexSet = [1].into_iter().collect();
        let c = forward_cover(&s);
        assert_eq!(c.len(), 4);
        assert_eq!(back_map(&k4, 1, &c), s);
    }
}
