//! Constructive shattering: pull a shattered set out of a family that is
//! larger than the Sauer-Shelah threshold.

use rayon::prelude::*;

use crate::approx::{approx_max_partial_vc, sauer_threshold};
use crate::error::{Error, Result};
use crate::exact::SearchConfig;
use crate::hypergraph::Hypergraph;
use crate::search::binomial;
use crate::vertex_set::VertexSet;

/// Largest enumeration spent on the extra brute-force step of
/// [`approx_max_vc_dimension`].
const EXTRA_STEP_CEILING: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShatterCertificate {
    pub shattered: VertexSet,
    pub dimension: usize,
    /// For subset number `s` of `shattered` (bit `i` set when the `i`-th
    /// smallest element is included), an edge whose trace is that subset.
    pub trace_witnesses: Vec<usize>,
}

impl ShatterCertificate {
    /// Builds the witness table; fails when `set` is not shattered.
    pub fn for_set(h: &Hypergraph, set: VertexSet) -> Result<Self> {
        let elems: Vec<usize> = set.iter().collect();
        let d = elems.len();
        if d >= 32 {
            return Err(Error::capacity(format!("cannot certify a {d}-set")));
        }
        let mut witnesses = vec![usize::MAX; 1 << d];
        for (i, e) in h.edges().iter().enumerate() {
            let mask = elems
                .iter()
                .enumerate()
                .filter(|(_, &v)| e.contains(v))
                .fold(0usize, |acc, (b, _)| acc | 1 << b);
            if witnesses[mask] == usize::MAX {
                witnesses[mask] = i;
            }
        }
        if let Some(s) = witnesses.iter().position(|&w| w == usize::MAX) {
            let missing: Vec<usize> = (0..d).filter(|b| s >> b & 1 == 1).map(|b| elems[b] + 1).collect();
            return Err(Error::input(format!(
                "set {:?} is not shattered: no edge has trace {missing:?}",
                set.to_one_based()
            )));
        }
        Ok(ShatterCertificate {
            shattered: set,
            dimension: d,
            trace_witnesses: witnesses,
        })
    }

    /// Degenerate certificate for an edgeless hypergraph.
    fn empty() -> Self {
        ShatterCertificate {
            shattered: VertexSet::new(),
            dimension: 0,
            trace_witnesses: Vec::new(),
        }
    }

    /// Re-checks every witness against `h`.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        let elems: Vec<usize> = self.shattered.iter().collect();
        if elems.len() != self.dimension {
            return false;
        }
        if h.m() == 0 {
            return self.dimension == 0 && self.trace_witnesses.is_empty();
        }
        self.trace_witnesses.len() == 1 << self.dimension
            && self.trace_witnesses.iter().enumerate().all(|(s, &e)| {
                e < h.m()
                    && elems
                        .iter()
                        .enumerate()
                        .all(|(b, &v)| h.edges()[e].contains(v) == (s >> b & 1 == 1))
            })
    }
}

/// Shattered `d`-set inside `family` (distinct sets over `verts`).
///
/// Splitting on the first vertex `x`: either the family stays above the
/// threshold once `x` is forgotten, or enough sets come in pairs differing
/// only in `x` that their common part shatters a `(d-1)`-set, and `x` extends it.
fn split(mut family: Vec<VertexSet>, verts: &[usize], d: usize) -> VertexSet {
    if d == 0 {
        return VertexSet::new();
    }
    let (&x, rest) = verts.split_first().expect("threshold exceeded implies a vertex remains");
    let mut without: Vec<VertexSet> = family
        .iter()
        .map(|s| {
            let mut t = s.clone();
            t.remove(x);
            t
        })
        .collect();
    without.sort_unstable();
    let mut pairs = Vec::new();
    for w in without.windows(2) {
        if w[0] == w[1] {
            pairs.push(w[0].clone());
        }
    }
    without.dedup();
    if without.len() as u128 > sauer_threshold(rest.len(), d) {
        family = without;
        split(family, rest, d)
    } else {
        let mut s = split(pairs, rest, d - 1);
        s.insert(x);
        s
    }
}

/// A certified shattered set of size `d`, provided the number of distinct
/// edges exceeds `Σ_{i<d} C(n, i)`.
pub fn extract_shattered(h: &Hypergraph, d: usize) -> Result<ShatterCertificate> {
    let mut family: Vec<VertexSet> = h.edges().to_vec();
    family.sort_unstable();
    family.dedup();
    if family.len() as u128 <= sauer_threshold(h.n(), d) {
        return Err(Error::input(format!(
            "Sauer threshold not exceeded: {} distinct edges, need more than {} for d={d}",
            family.len(),
            sauer_threshold(h.n(), d)
        )));
    }
    let verts: Vec<usize> = (0..h.n()).collect();
    let set = split(family, &verts, d);
    ShatterCertificate::for_set(h, set)
}

/// Largest `d` whose threshold on `n` vertices is strictly below `count`.
fn largest_feasible(n: usize, count: usize) -> usize {
    let mut d = 0;
    while d < n && sauer_threshold(n, d + 1) < count as u128 {
        d += 1;
    }
    d
}

/// Shattered set of at least half the VC dimension: find the largest budget
/// whose greedy set still induces half of all its possible classes, then
/// extract a shattered set from the traces on that set.
pub fn approx_max_vc_dimension(h: &Hypergraph) -> Result<ShatterCertificate> {
    if h.m() == 0 {
        return Ok(ShatterCertificate::empty());
    }
    let red = h.remove_twins();
    let core = &red.hypergraph;
    let m = core.m();
    let top = ((usize::BITS - 1 - m.leading_zeros()) as usize).min(core.n());
    if top == 0 {
        return ShatterCertificate::for_set(h, VertexSet::new());
    }
    let sweep: Vec<(usize, VertexSet)> = (1..=top)
        .into_par_iter()
        .map(|k| {
            approx_max_partial_vc(core, k).map(|r| (k, r.witness, r.value))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(k, _, v)| 2 * v >= 1usize << k)
        .map(|(k, w, _)| (k, w))
        .collect();
    let (k0, x) = sweep.into_iter().max_by_key(|(k, _)| *k).expect("k = 1 always qualifies");

    let (restricted, map) = core.restrict_to(&x);
    let d = largest_feasible(k0, restricted.distinct_edge_count());
    let cert = extract_shattered(&restricted, d)?;
    let mut best: VertexSet = cert.shattered.iter().map(|v| map[v]).collect();

    // One size up by brute force on the whole core, when that is cheap.
    let next = best.len() + 1;
    if next <= core.n() && binomial(core.n(), next) <= EXTRA_STEP_CEILING as u128 {
        if let Ok((Some(s), _)) = SearchConfig::with_ceiling(EXTRA_STEP_CEILING).find_shattered(core, next) {
            best = s;
        }
    }
    ShatterCertificate::for_set(h, red.lift(&best))
}
