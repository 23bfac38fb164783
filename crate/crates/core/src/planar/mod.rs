//! Layer decompositions of planar graphs and the Baker-style schemes built
//! on them.

mod baker;
mod table;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use baker::{baker_max_partial_vc, baker_min_distinguishing, BakerMax, BakerMin};
pub use table::{component_exact_solver, knapsack_combine, ComponentTable};

/// A graph with a 1-based level per vertex; edges join equal or adjacent levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeveledPlanarGraph {
    graph: Graph,
    level: Vec<usize>,
    t: usize,
}

impl LeveledPlanarGraph {
    /// Checks that levels are positive, contiguous from 1, and that no edge
    /// skips a level.
    pub fn new(graph: Graph, level: Vec<usize>) -> Result<Self> {
        if level.len() != graph.n() {
            return Err(Error::input(format!(
                "{} levels given for {} vertices",
                level.len(),
                graph.n()
            )));
        }
        if let Some(v) = level.iter().position(|&l| l == 0) {
            return Err(Error::input(format!("vertex {} has level 0; levels start at 1", v + 1)));
        }
        let t = level.iter().copied().max().unwrap_or(0);
        let mut present = vec![false; t + 1];
        for &l in &level {
            present[l] = true;
        }
        if let Some(l) = (1..=t).find(|&l| !present[l]) {
            return Err(Error::input(format!("no vertex has level {l} although level {t} is used")));
        }
        for (u, v) in graph.edges() {
            if level[u].abs_diff(level[v]) > 1 {
                return Err(Error::input(format!(
                    "edge ({}, {}) joins levels {} and {}",
                    u + 1,
                    v + 1,
                    level[u],
                    level[v]
                )));
            }
        }
        Ok(LeveledPlanarGraph { graph, level, t })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    /// Number of levels.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Vertices whose level lies in `lo..=hi`.
    pub(crate) fn band(&self, lo: usize, hi: usize) -> VertexSet {
        (0..self.graph.n())
            .filter(|&v| (lo..=hi).contains(&self.level[v]))
            .collect()
    }
}

/// Levels by breadth-first layering from the outer face: outer vertices get
/// level 1, their other neighbors level 2, and so on. On grids and other
/// graphs whose faces nest as rings this is the usual onion peeling.
pub fn compute_levels(g: &Graph, outer_face: &VertexSet) -> Result<LeveledPlanarGraph> {
    if outer_face.bound() > g.n() {
        return Err(Error::input(format!(
            "outer face names vertex {} but the graph has {} vertices",
            outer_face.bound(),
            g.n()
        )));
    }
    if g.n() > 0 && outer_face.is_empty() {
        return Err(Error::input("outer face is empty"));
    }
    let mut level = vec![0usize; g.n()];
    let mut queue: VecDeque<usize> = outer_face.iter().collect();
    for v in outer_face {
        level[v] = 1;
    }
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if level[u] == 0 {
                level[u] = level[v] + 1;
                queue.push_back(u);
            }
        }
    }
    if let Some(v) = level.iter().position(|&l| l == 0) {
        return Err(Error::input(format!(
            "vertex {} is not connected to the outer face",
            v + 1
        )));
    }
    LeveledPlanarGraph::new(g.clone(), level)
}
