//! Greedy class splitting.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

use super::{ApproxResult, Method};

/// Class bookkeeping for the greedy: each edge carries a class id and adding
/// a vertex splits every class it cuts.
pub(crate) struct Splitter {
    cols: Vec<Vec<usize>>,
    class: Vec<usize>,
    size: Vec<usize>,
    cnt: Vec<usize>,
    remap: Vec<usize>,
}

impl Splitter {
    pub fn new(h: &Hypergraph) -> Self {
        let m = h.m();
        Splitter {
            cols: h.columns(),
            class: vec![0; m],
            size: if m > 0 { vec![m] } else { Vec::new() },
            cnt: vec![0; m.max(1)],
            remap: vec![0; m.max(1)],
        }
    }

    pub fn classes(&self) -> usize {
        self.size.len()
    }

    /// Classes gained by adding `x`.
    pub fn gain(&mut self, x: usize) -> usize {
        let mut g = 0;
        for &e in &self.cols[x] {
            self.cnt[self.class[e]] += 1;
        }
        for &e in &self.cols[x] {
            let c = self.class[e];
            if self.cnt[c] != 0 {
                if self.cnt[c] < self.size[c] {
                    g += 1;
                }
                self.cnt[c] = 0;
            }
        }
        g
    }

    pub fn add(&mut self, x: usize) {
        for &e in &self.cols[x] {
            self.cnt[self.class[e]] += 1;
        }
        for &e in &self.cols[x] {
            let c = self.class[e];
            if self.cnt[c] != 0 {
                if self.cnt[c] < self.size[c] {
                    self.size[c] -= self.cnt[c];
                    self.size.push(self.cnt[c]);
                    self.remap[c] = self.size.len() - 1;
                } else {
                    self.remap[c] = c;
                }
                self.cnt[c] = 0;
            }
        }
        for &e in &self.cols[x] {
            self.class[e] = self.remap[self.class[e]];
        }
    }
}

/// Greedy selection of `k` vertices, each step taking the vertex with the
/// largest class gain (lowest index on ties). Works on any hypergraph; the guarantee needs twin-freeness.
pub(crate) fn greedy_select(h: &Hypergraph, k: usize) -> (VertexSet, usize) {
    let mut sp = Splitter::new(h);
    let mut chosen = VertexSet::new();
    for _ in 0..k.min(h.n()) {
        let mut best: Option<(usize, usize)> = None;
        for x in 0..h.n() {
            if chosen.contains(x) {
                continue;
            }
            let g = sp.gain(x);
            if best.is_none_or(|(bg, _)| g > bg) {
                best = Some((g, x));
            }
        }
        let (_, x) = best.expect("an unchosen vertex remains");
        sp.add(x);
        chosen.insert(x);
    }
    let value = sp.classes();
    (chosen, value)
}

/// Greedy class maximization on a twin-free hypergraph: at least
/// `min(m, k + 1)` classes.
pub fn greedy_classes(h: &Hypergraph, k: usize) -> Result<ApproxResult> {
    if let Some((a, b)) = h.find_twin_edges() {
        return Err(Error::input(format!(
            "greedy needs a twin-free hypergraph; edges {} and {} are equal",
            a + 1,
            b + 1
        )));
    }
    if let Some((a, b)) = h.find_twin_vertices() {
        return Err(Error::input(format!(
            "greedy needs a twin-free hypergraph; vertices {} and {} have equal incidence",
            a + 1,
            b + 1
        )));
    }
    if k > h.n() {
        return Err(Error::input(format!("k={k} exceeds n={}", h.n())));
    }
    let (witness, value) = greedy_select(h, k);
    Ok(ApproxResult::certify(h, witness, value, Method::Greedy, None))
}
