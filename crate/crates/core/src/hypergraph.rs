//! The hypergraph type, traces, twin reduction and duality.

use std::collections::BTreeMap;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A vertex count plus an ordered list of hyperedges. Edge order is never
/// changed by any operation; duplicates are kept until [`Hypergraph::remove_twins`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    name: Option<String>,
}

/// The distinct traces `e ∩ C` of a candidate set `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceProfile {
    pub solution: VertexSet,
    /// Distinct traces, sorted.
    pub traces: Vec<VertexSet>,
    /// For each trace, the lowest edge index realizing it.
    pub representatives: Vec<usize>,
    /// For each edge, the index of its trace in `traces`.
    pub edge_class: Vec<usize>,
    pub class_count: usize,
}

/// Output of [`Hypergraph::remove_twins`]: the reduced hypergraph plus maps
/// from its vertex and edge indices back to the original ones.
#[derive(Clone, Debug)]
pub struct TwinReduction {
    pub hypergraph: Hypergraph,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

impl TwinReduction {
    /// Lifts a reduced vertex set to original indices.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.vertex_map[v]).collect()
    }

    /// Projects an original vertex set onto the surviving vertices.
    pub fn project(&self, set: &VertexSet) -> VertexSet {
        self.vertex_map
            .iter()
            .enumerate()
            .filter(|(_, &orig)| set.contains(orig))
            .map(|(i, _)| i)
            .collect()
    }
}

impl Hypergraph {
    /// Builds a hypergraph from 0-based edges.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capacity(format!(
                "hypergraph has {n} vertices, limit is {MAX_VERTICES}"
            )));
        }
        if let Some(pos) = edges.iter().position(|e| e.bound() > n) {
            return Err(Error::input(format!(
                "edge {} contains vertex {} outside 1..{n}",
                pos + 1,
                edges[pos].bound()
            )));
        }
        Ok(Hypergraph {
            n,
            edges,
            name: None,
        })
    }

    /// Builds a hypergraph from edges written with 1-based vertex indices.
    pub fn from_one_based<E: AsRef<[usize]>>(n: usize, edges: &[E]) -> Result<Self> {
        let mut sets = Vec::with_capacity(edges.len());
        for (pos, e) in edges.iter().enumerate() {
            let mut s = VertexSet::new();
            for &v in e.as_ref() {
                if v == 0 || v > n {
                    return Err(Error::input(format!(
                        "edge {} contains vertex {v} outside 1..{n}",
                        pos + 1
                    )));
                }
                s.insert(v - 1);
            }
            sets.push(s);
        }
        Self::new(n, sets)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// For each vertex, the indices of the edges containing it.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e {
                cols[v].push(i);
            }
        }
        cols
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Maximum vertex degree, 0 for the empty hypergraph.
    pub fn max_degree(&self) -> usize {
        self.columns().iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn distinct_edge_count(&self) -> usize {
        self.edges.iter().collect::<FxHashSet<_>>().len()
    }

    fn check_subset(&self, c: &VertexSet) -> Result<()> {
        if c.bound() > self.n {
            return Err(Error::input(format!(
                "vertex {} outside 1..{}",
                c.bound(),
                self.n
            )));
        }
        Ok(())
    }

    /// Number of distinct traces `e ∩ C`.
    pub fn class_count(&self, c: &VertexSet) -> usize {
        self.edges
            .iter()
            .map(|e| e.intersection(c))
            .collect::<FxHashSet<_>>()
            .len()
    }

    pub fn trace_profile(&self, c: &VertexSet) -> Result<TraceProfile> {
        self.check_subset(c)?;
        let mut first: BTreeMap<VertexSet, usize> = BTreeMap::new();
        let traces: Vec<VertexSet> = self.edges.iter().map(|e| e.intersection(c)).collect();
        for (i, t) in traces.iter().enumerate() {
            first.entry(t.clone()).or_insert(i);
        }
        let index: FxHashMap<&VertexSet, usize> =
            first.keys().enumerate().map(|(i, t)| (t, i)).collect();
        let edge_class = traces.iter().map(|t| index[t]).collect();
        let class_count = first.len();
        let (traces, representatives) = first.into_iter().unzip();
        Ok(TraceProfile {
            solution: c.clone(),
            traces,
            representatives,
            edge_class,
            class_count,
        })
    }

    /// Whether all `2^|C|` subsets of `C` occur as traces.
    pub fn is_shattered(&self, c: &VertexSet) -> bool {
        let k = c.len();
        if k >= usize::BITS as usize - 1 || (1usize << k) > self.m() {
            return false;
        }
        self.class_count(c) == 1usize << k
    }

    /// First pair of equal edges `(i, j)`, `i < j`.
    pub fn find_twin_edges(&self) -> Option<(usize, usize)> {
        let mut seen: FxHashMap<&VertexSet, usize> = FxHashMap::default();
        for (j, e) in self.edges.iter().enumerate() {
            if let Some(&i) = seen.get(e) {
                return Some((i, j));
            }
            seen.insert(e, j);
        }
        None
    }

    /// First pair of vertices with identical incidence, `(u, v)`, `u < v`.
    pub fn find_twin_vertices(&self) -> Option<(usize, usize)> {
        let cols = self.columns();
        let mut seen: FxHashMap<&[usize], usize> = FxHashMap::default();
        for (v, col) in cols.iter().enumerate() {
            if let Some(&u) = seen.get(col.as_slice()) {
                return Some((u, v));
            }
            seen.insert(col.as_slice(), v);
        }
        None
    }

    pub fn is_twin_free(&self) -> bool {
        self.find_twin_edges().is_none() && self.find_twin_vertices().is_none()
    }

    /// Keeps the lowest-indexed member of every group of equal edges and of
    /// every group of vertices with equal incidence. Class counts are unchanged
    /// for any vertex set restricted to the survivors.
    pub fn remove_twins(&self) -> TwinReduction {
        let mut seen: FxHashSet<&VertexSet> = FxHashSet::default();
        let edge_map: Vec<usize> = (0..self.m())
            .filter(|&i| seen.insert(&self.edges[i]))
            .collect();

        let mut cols: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (new_i, &i) in edge_map.iter().enumerate() {
            for v in &self.edges[i] {
                cols[v].push(new_i);
            }
        }
        let mut first_col: FxHashSet<&[usize]> = FxHashSet::default();
        let vertex_map: Vec<usize> = (0..self.n)
            .filter(|&v| first_col.insert(cols[v].as_slice()))
            .collect();
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in vertex_map.iter().enumerate() {
            relabel[v] = i;
        }
        let edges = edge_map
            .iter()
            .map(|&i| {
                self.edges[i]
                    .iter()
                    .filter(|&v| relabel[v] != usize::MAX)
                    .map(|v| relabel[v])
                    .collect()
            })
            .collect();
        let mut hypergraph = Hypergraph {
            n: vertex_map.len(),
            edges,
            name: None,
        };
        hypergraph.name = self.name.clone();
        TwinReduction {
            hypergraph,
            vertex_map,
            edge_map,
        }
    }

    /// Transposed incidence: `m` vertices, `n` edges; edge `x` of the dual
    /// contains vertex `e` iff `x ∈ e` here.
    pub fn dual(&self) -> Hypergraph {
        let edges = self
            .columns()
            .into_iter()
            .map(|col| col.into_iter().collect())
            .collect();
        Hypergraph {
            n: self.m(),
            edges,
            name: self.name.as_ref().map(|s| format!("dual({s})")),
        }
    }

    /// Trace family on `x`, relabelled to `0..|x|` in ascending order.
    pub fn restrict_to(&self, x: &VertexSet) -> (Hypergraph, Vec<usize>) {
        let map: Vec<usize> = x.iter().collect();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                map.iter()
                    .enumerate()
                    .filter(|(_, &v)| e.contains(v))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        (
            Hypergraph {
                n: map.len(),
                edges,
                name: None,
            },
            map,
        )
    }

    /// Whether two distinct edges share at least two vertices, i.e. the
    /// bipartite incidence graph has a 4-cycle. Returns the first such pair.
    pub fn find_incidence_four_cycle(&self) -> Option<(usize, usize)> {
        for i in 0..self.m() {
            for j in i + 1..self.m() {
                if self.edges[i].intersection_len(&self.edges[j]) >= 2 {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{neighborhood_hypergraph, Graph};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn power_set(n: usize) -> Hypergraph {
        let edges = (0..1usize << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        Hypergraph::new(n, edges).unwrap()
    }

    #[test]
    fn build_examples() {
        let h = Hypergraph::from_one_based(3, &[vec![1, 2], vec![2], vec![]]).unwrap();
        assert_eq!(h.m(), 3);
        let e = Hypergraph::from_one_based::<Vec<usize>>(0, &[]).unwrap();
        assert_eq!(e.m(), 0);
        let t = Hypergraph::from_one_based(2, &[vec![1], vec![1], vec![2]]).unwrap();
        assert_eq!(t.m(), 3);
    }

    #[test]
    fn build_rejects_out_of_range_with_position() {
        let err = Hypergraph::from_one_based(2, &[vec![1], vec![3]]).unwrap_err();
        assert!(err.to_string().contains("edge 2"), "{err}");
        assert!(Hypergraph::from_one_based(2, &[vec![0]]).is_err());
        assert!(matches!(
            Hypergraph::new(MAX_VERTICES + 1, vec![]),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn trace_profile_examples() {
        let p3 = neighborhood_hypergraph(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        let tp = p3.trace_profile(&set(&[0])).unwrap();
        assert_eq!(tp.class_count, 2);
        assert_eq!(tp.traces, vec![VertexSet::new(), set(&[0])]);
        assert_eq!(tp.representatives, vec![2, 0]);
        assert_eq!(tp.edge_class, vec![1, 1, 0]);

        assert_eq!(p3.trace_profile(&VertexSet::new()).unwrap().class_count, 1);
        assert_eq!(power_set(2).trace_profile(&set(&[0, 1])).unwrap().class_count, 4);
        assert!(p3.trace_profile(&set(&[3])).is_err());
    }

    #[test]
    fn shattering_examples() {
        assert!(power_set(3).is_shattered(&set(&[0, 1, 2])));
        let small: Vec<VertexSet> = std::iter::once(VertexSet::new())
            .chain((0..4).map(VertexSet::singleton))
            .collect();
        let h = Hypergraph::new(4, small).unwrap();
        assert!(!h.is_shattered(&set(&[0, 1])));
        assert!(h.is_shattered(&VertexSet::new()));
        assert!(!Hypergraph::new(1, vec![]).unwrap().is_shattered(&VertexSet::new()));
    }

    #[test]
    fn twin_examples() {
        let t = Hypergraph::from_one_based(2, &[vec![1], vec![1], vec![2]]).unwrap();
        let r = t.remove_twins();
        assert_eq!(r.hypergraph.m(), 2);
        assert_eq!(r.edge_map, vec![0, 2]);

        let p2 = neighborhood_hypergraph(&Graph::from_edges(2, &[(0, 1)]).unwrap());
        let r = p2.remove_twins();
        assert_eq!((r.hypergraph.n(), r.hypergraph.m()), (1, 1));
        assert_eq!(r.vertex_map, vec![0]);

        let tf = Hypergraph::from_one_based(2, &[vec![1], vec![1, 2]]).unwrap();
        assert!(tf.is_twin_free());
        let r = tf.remove_twins();
        assert_eq!(r.hypergraph, tf);
        assert_eq!(r.vertex_map, vec![0, 1]);
        assert_eq!(r.edge_map, vec![0, 1]);
    }

    #[test]
    fn dual_examples() {
        let h = Hypergraph::from_one_based(2, &[vec![1], vec![1, 2]]).unwrap();
        let d = h.dual();
        assert_eq!(d, Hypergraph::from_one_based(2, &[vec![1, 2], vec![2]]).unwrap());
        assert_eq!(d.dual(), h);
        let empty = Hypergraph::new(0, vec![]).unwrap();
        assert_eq!(empty.dual(), empty);
    }

    #[test]
    fn degree_examples() {
        let h = Hypergraph::from_one_based(2, &[vec![1, 2], vec![1]]).unwrap();
        assert_eq!(h.max_degree(), 2);
        assert_eq!(Hypergraph::new(3, vec![]).unwrap().max_degree(), 0);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(neighborhood_hypergraph(&k4).max_degree(), 4);
    }

    #[test]
    fn four_cycle_detection() {
        let bad = Hypergraph::from_one_based(3, &[vec![1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(bad.find_incidence_four_cycle(), Some((0, 1)));
        let ok = Hypergraph::from_one_based(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(ok.find_incidence_four_cycle(), None);
    }
}
