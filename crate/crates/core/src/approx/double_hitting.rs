//! Partial double hitting and its transfer to class counting on hypergraphs
//! without incidence 4-cycles.

use rustc_hash::FxHashMap;

use crate::approx::{greedy_classes, upper_bound_classes, ApproxResult, Method};
use crate::error::{Error, Result};
use crate::exact::pad_to;
use crate::hypergraph::Hypergraph;
use crate::search::binomial;
use crate::vertex_set::VertexSet;

/// Number of edges containing at least two vertices of `c`.
pub fn double_hit_count(h: &Hypergraph, c: &VertexSet) -> usize {
    h.edges().iter().filter(|e| e.intersection_len(c) >= 2).count()
}

/// Greedy for partial double hitting: add the vertex that double-hits the most
/// new edges; when no single vertex helps, add the best pair.
pub fn greedy_partial_double_hitting(h: &Hypergraph, k: usize) -> Result<ApproxResult> {
    if k > h.n() {
        return Err(Error::input(format!("k={k} exceeds the vertex count {}", h.n())));
    }
    let cols = h.columns();
    let mut hits = vec![0usize; h.m()];
    let mut chosen = VertexSet::new();
    let take = |x: usize, chosen: &mut VertexSet, hits: &mut Vec<usize>| {
        chosen.insert(x);
        for &e in &cols[x] {
            hits[e] += 1;
        }
    };
    while chosen.len() < k {
        let mut best: Option<(usize, usize)> = None;
        for x in (0..h.n()).filter(|&x| !chosen.contains(x)) {
            let g = cols[x].iter().filter(|&&e| hits[e] == 1).count();
            if best.is_none_or(|(bg, _)| g > bg) {
                best = Some((g, x));
            }
        }
        let (gain, x) = best.expect("an unchosen vertex remains");
        if gain > 0 {
            take(x, &mut chosen, &mut hits);
            continue;
        }
        if k - chosen.len() >= 2 {
            let mut pair_gain: FxHashMap<(usize, usize), usize> = FxHashMap::default();
            for (i, e) in h.edges().iter().enumerate() {
                if hits[i] != 0 {
                    continue;
                }
                let free: Vec<usize> = e.iter().collect();
                for a in 0..free.len() {
                    for b in a + 1..free.len() {
                        *pair_gain.entry((free[a], free[b])).or_insert(0) += 1;
                    }
                }
            }
            let best_pair = pair_gain
                .into_iter()
                .max_by(|(p, g), (q, h)| g.cmp(h).then(q.cmp(p)));
            if let Some(((a, b), _)) = best_pair {
                take(a, &mut chosen, &mut hits);
                take(b, &mut chosen, &mut hits);
                continue;
            }
        }
        take(x, &mut chosen, &mut hits);
    }
    let value = hits.iter().filter(|&&c| c >= 2).count();
    let upper = h.edges().iter().filter(|e| e.len() >= 2).count();
    let mut r = ApproxResult::new(chosen, value, upper, Method::DoubleHitting);
    r.double_hit = Some(value);
    Ok(r)
}

/// Class maximization through double hitting on hypergraphs where no two
/// edges share two vertices. Every double-hit edge then owns a trace of size
/// at least two, so the class count is at least the double-hit count; the
/// better of that witness and the class greedy is returned.
pub fn approx_via_double_hitting(h: &Hypergraph, k: usize) -> Result<ApproxResult> {
    if let Some((a, b)) = h.find_incidence_four_cycle() {
        return Err(Error::input(format!(
            "edges {} and {} share two vertices (incidence 4-cycle)",
            a + 1,
            b + 1
        )));
    }
    if k > h.n() {
        return Err(Error::input(format!("k={k} exceeds the vertex count {}", h.n())));
    }
    let dh = greedy_partial_double_hitting(h, k)?;
    let dh_classes = h.class_count(&dh.witness);

    let red = h.remove_twins();
    let core = &red.hypergraph;
    let g = greedy_classes(core, k.min(core.n()))?;
    let mut gw = red.lift(&g.witness);
    pad_to(&mut gw, k, h.n());
    let g_classes = h.class_count(&gw);

    let (witness, value) = if dh_classes > g_classes {
        (dh.witness, dh_classes)
    } else {
        (gw, g_classes)
    };
    // Classes are the empty trace, at most k singleton traces, and traces of
    // size >= 2, each of which pins one double-hit edge.
    let wide = h.edges().iter().filter(|e| e.len() >= 2).count() as u128;
    let chain = wide.min(binomial(k, 2)) + k as u128 + 1;
    let ub = (upper_bound_classes(h, k, Some(2)) as u128).min(chain) as usize;
    let mut r = ApproxResult::new(witness, value, ub.max(value), Method::DoubleHittingTransfer);
    r.double_hit = dh.double_hit;
    Ok(r)
}
