//! Level-deletion schemes for neighborhood hypergraphs of planar graphs.

use rayon::prelude::*;

use super::table::{knapsack, table_with_ceiling};
use super::LeveledPlanarGraph;
use crate::approx::{upper_bound_classes, vc_dimension_hint, ApproxResult, Method};
use crate::error::{Error, Result};
use crate::exact::{pad_to, Problem, SearchConfig, SolveResult};
use crate::graph::neighborhood_hypergraph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BakerMax {
    pub result: ApproxResult,
    /// Class count promised by the component combination; never above `result.value`.
    pub dp_value: usize,
    /// Residue class of deleted levels that won.
    pub residue: usize,
    pub residues_tried: usize,
    pub lambda: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BakerMin {
    pub result: SolveResult,
    pub residue: usize,
    pub residues_tried: usize,
    pub lambda: usize,
    /// Level ranges solved for the winning residue.
    pub slabs: Vec<(usize, usize)>,
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::input(format!("epsilon must be positive, got {epsilon}")));
    }
    Ok(())
}

/// `ceil(a / epsilon)` for small positive `epsilon`, robust to float noise on
/// exact quotients like `3 / 0.5`.
fn ceil_div(a: f64, epsilon: f64) -> usize {
    let q = a / epsilon;
    let r = q.round();
    if (q - r).abs() < 1e-9 {
        r as usize
    } else {
        q.ceil() as usize
    }
}

pub fn baker_max_partial_vc(l: &LeveledPlanarGraph, k: usize, epsilon: f64) -> Result<BakerMax> {
    SearchConfig::default().baker_max(l, k, epsilon)
}

pub fn baker_min_distinguishing(l: &LeveledPlanarGraph, epsilon: f64) -> Result<BakerMin> {
    SearchConfig::default().baker_min(l, epsilon)
}

struct Residue {
    value: usize,
    witness: VertexSet,
    dp_value: usize,
}

impl SearchConfig {
    /// Deletes every `(λ+1)`-th level for each of the `λ+1` offsets, solves
    /// the remaining components exactly and combines them under the budget.
    pub fn baker_max(&self, l: &LeveledPlanarGraph, k: usize, epsilon: f64) -> Result<BakerMax> {
        check_epsilon(epsilon)?;
        let g = l.graph();
        if k > g.n() {
            return Err(Error::input(format!("k={k} exceeds the vertex count {}", g.n())));
        }
        let lambda = 2 + ceil_div(3.0, epsilon);
        let h = neighborhood_hypergraph(g);
        let runs: Vec<Residue> = (0..=lambda)
            .into_par_iter()
            .map(|i| self.max_residue(l, &h, k, lambda, i))
            .collect::<Result<_>>()?;
        let (residue, best) = runs
            .iter()
            .enumerate()
            .fold(None::<(usize, &Residue)>, |acc, (i, r)| match acc {
                Some((_, b)) if b.value >= r.value => acc,
                _ => Some((i, r)),
            })
            .expect("at least one residue");
        let ub = upper_bound_classes(&h, k, Some(vc_dimension_hint(&h)));
        let result = ApproxResult::new(best.witness.clone(), best.value, ub.max(best.value), Method::Baker);
        Ok(BakerMax {
            result,
            dp_value: best.dp_value,
            residue,
            residues_tried: runs.len(),
            lambda,
        })
    }

    fn max_residue(&self, l: &LeveledPlanarGraph, h: &Hypergraph, k: usize, lambda: usize, i: usize) -> Result<Residue> {
        let g = l.graph();
        let keep: VertexSet = (0..g.n()).filter(|&v| l.level(v) % (lambda + 1) != i).collect();
        let comps = g.components_within(&keep);
        let tables = comps
            .par_iter()
            .enumerate()
            .map(|(ci, c)| {
                let (sub, map) = g.induced(c);
                table_with_ceiling(&sub, k, self.ceiling)
                    .map(|t| (t, map))
                    .map_err(|e| match e {
                        Error::Capacity(msg) => Error::capacity(format!(
                            "component {} of residue {i} ({} vertices, first vertex {}): {msg}",
                            ci + 1,
                            c.len(),
                            c.iter().next().map_or(0, |v| v + 1)
                        )),
                        other => other,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let rows: Vec<Vec<Option<usize>>> = tables
            .iter()
            .map(|(t, _)| t.best.iter().map(|(v, _)| Some(*v)).collect())
            .collect();
        let open_rows: Vec<Vec<Option<usize>>> = tables
            .iter()
            .map(|(t, _)| t.best_open.iter().map(|o| o.as_ref().map(|(v, _)| *v)).collect())
            .collect();
        // Nonempty classes of different components are disjoint; the empty
        // class adds one more as soon as some vertex is left undominated.
        let closed = knapsack(&rows, None, k).expect("budget 0 is feasible");
        let open = knapsack(&rows, Some(&open_rows), k);
        let (dp_value, alloc, used) = match open {
            Some((v, a, u)) if v + 1 > closed.0 => (v + 1, a, u),
            _ => (closed.0, closed.1, None),
        };
        let mut witness = VertexSet::new();
        for (q, ((t, map), &x)) in tables.iter().zip(&alloc).enumerate() {
            let local = if used == Some(q) {
                &t.best_open[x].as_ref().expect("allocated open entry exists").1
            } else {
                &t.best[x].1
            };
            for v in local {
                witness.insert(map[v]);
            }
        }
        pad_to(&mut witness, k, g.n());
        let value = h.class_count(&witness);
        debug_assert!(value >= dp_value, "combination overclaimed: {dp_value} > {value}");
        Ok(Residue {
            value,
            witness,
            dp_value,
        })
    }

    /// Covers the levels by overlapping slabs for each of `λ` offsets, finds
    /// a smallest separating and dominating set per slab, and keeps the
    /// smallest union.
    pub fn baker_min(&self, l: &LeveledPlanarGraph, epsilon: f64) -> Result<BakerMin> {
        check_epsilon(epsilon)?;
        let g = l.graph();
        let h = neighborhood_hypergraph(g);
        if let Some((a, b)) = h.find_twin_edges() {
            return Err(Error::input(format!(
                "vertices {} and {} have the same closed neighborhood",
                a + 1,
                b + 1
            )));
        }
        let lambda = ceil_div(2.0, epsilon).max(1);
        let runs: Vec<(VertexSet, Vec<(usize, usize)>)> = (0..lambda)
            .into_par_iter()
            .map(|i| {
                let slabs = slabs(l.t(), lambda, i);
                let parts = slabs
                    .par_iter()
                    .map(|&(lo, hi)| self.solve_slab(l, lo, hi))
                    .collect::<Result<Vec<_>>>()?;
                let union = parts.iter().fold(VertexSet::new(), |acc, p| acc.union(p));
                Ok((union, slabs))
            })
            .collect::<Result<_>>()?;
        let (residue, (best, slabs)) = runs
            .iter()
            .enumerate()
            .min_by_key(|(i, (u, _))| (u.len(), *i))
            .expect("lambda >= 1");
        let mut result = SolveResult {
            problem: Problem::MinDistinguishingTransversal,
            witness: best.clone(),
            value: best.len(),
            decided: None,
            k: None,
            ell: None,
            reason: Some("baker"),
            elapsed_ms: 0,
            enumerated: 0,
        };
        if h.class_count(&result.witness) != h.m() {
            return Err(Error::input("slab solutions failed to separate the whole graph"));
        }
        result.k = Some(result.value);
        Ok(BakerMin {
            result,
            residue,
            residues_tried: runs.len(),
            lambda,
            slabs: slabs.clone(),
        })
    }

    /// Smallest set separating and dominating the closed neighborhoods of the
    /// slab vertices. Candidates come from the slab itself; if that cannot
    /// separate them, from the slab plus one level on each side, which holds
    /// every such neighborhood entirely.
    fn solve_slab(&self, l: &LeveledPlanarGraph, lo: usize, hi: usize) -> Result<VertexSet> {
        let g = l.graph();
        let slab = l.band(lo, hi);
        for cand_set in [slab.clone(), l.band(lo.saturating_sub(1).max(1), hi + 1)] {
            let cand: Vec<usize> = cand_set.iter().collect();
            let mut local = vec![usize::MAX; g.n()];
            for (i, &v) in cand.iter().enumerate() {
                local[v] = i;
            }
            let edges: Vec<VertexSet> = slab
                .iter()
                .map(|v| {
                    g.closed_neighborhood(v)
                        .iter()
                        .filter(|&u| local[u] != usize::MAX)
                        .map(|u| local[u])
                        .collect()
                })
                .collect();
            let sub = Hypergraph::new(cand.len(), edges)?;
            if sub.find_twin_edges().is_some() {
                continue;
            }
            let (w, _) = self.min_separating(&sub, true)?;
            return Ok(w.iter().map(|v| cand[v]).collect());
        }
        Err(Error::input(format!("levels {lo}..{hi} contain vertices with equal closed neighborhoods")))
    }
}

/// Level ranges `[s, s+λ+1] ∩ [1, t]` for `s ≡ i (mod λ)`, minus any range
/// contained in another.
fn slabs(t: usize, lambda: usize, i: usize) -> Vec<(usize, usize)> {
    if t == 0 {
        return Vec::new();
    }
    let (t, lam) = (t as isize, lambda as isize);
    let mut s = i as isize;
    while s + lam + 1 >= 1 {
        s -= lam;
    }
    s += lam;
    let mut out: Vec<(usize, usize)> = Vec::new();
    while s <= t {
        let lo = s.max(1) as usize;
        let hi = (s + lam + 1).min(t) as usize;
        out.push((lo, hi));
        s += lam;
    }
    let all = out.clone();
    out.retain(|&(a, b)| !all.iter().any(|&(c, d)| (c, d) != (a, b) && c <= a && b <= d));
    out.dedup();
    out
}
