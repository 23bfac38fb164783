//! Simple undirected graphs and their neighborhood hypergraphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Simple undirected graph with sorted adjacency lists, 0-based vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from 0-based endpoint pairs. Loops, parallel edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capacity(format!(
                "graph has {n} vertices, limit is {MAX_VERTICES}"
            )));
        }
        let mut g = Graph::empty(n);
        for (pos, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge {} ({}, {}) has an endpoint outside 1..{n}",
                    pos + 1,
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::input(format!("edge {} is a self-loop on {}", pos + 1, u + 1)));
            }
            if g.adj[u].contains(&v) {
                return Err(Error::input(format!(
                    "edge {} ({}, {}) is a parallel edge",
                    pos + 1,
                    u + 1,
                    v + 1
                )));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] with 1-based endpoints.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut shifted = Vec::with_capacity(edges.len());
        for (pos, &(u, v)) in edges.iter().enumerate() {
            if u == 0 || v == 0 {
                return Err(Error::input(format!(
                    "edge {} uses index 0; vertices are numbered from 1",
                    pos + 1
                )));
            }
            shifted.push((u - 1, v - 1));
        }
        Self::from_edges(n, &shifted)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s: VertexSet = self.adj[v].iter().copied().collect();
        s.insert(v);
        s
    }

    /// Subgraph induced by `keep`, relabelled in ascending order. The second
    /// component maps new indices back to the originals.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().filter(|&v| v < self.n()).collect();
        let mut back = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (back[u] != usize::MAX).then_some(back[u]))
                    .collect()
            })
            .collect();
        (Graph { adj }, map)
    }

    /// Connected components restricted to the vertices of `within`, each as a
    /// vertex set, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &u in &self.adj[v] {
                    if within.contains(u) && !seen.contains(u) {
                        seen.insert(u);
                        queue.push_back(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Proper 2-colouring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(v, u)).collect())
            .collect();
        Graph { adj }
    }

    /// Largest `s` such that some `s` vertices span a clique, by enumeration.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, cand: &[usize], size: usize, best: &mut usize) {
            *best = (*best).max(size);
            for (i, &v) in cand.iter().enumerate() {
                if size + cand.len() - i <= *best {
                    return;
                }
                let next: Vec<usize> = cand[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&u| g.has_edge(v, u))
                    .collect();
                grow(g, &next, size + 1, best);
            }
        }
        let all: Vec<usize> = (0..self.n()).collect();
        let mut best = 0;
        grow(self, &all, 0, &mut best);
        best
    }
}

/// The hypergraph whose `i`-th hyperedge is the closed neighborhood of vertex `i`.
pub fn neighborhood_hypergraph(g: &Graph) -> Hypergraph {
    let edges = (0..g.n()).map(|v| g.closed_neighborhood(v)).collect();
    Hypergraph::new(g.n(), edges).expect("closed neighborhoods stay inside the vertex range")
}
