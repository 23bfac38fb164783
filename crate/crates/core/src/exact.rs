//! Exhaustive solvers: the ground truth every other module is checked against.

use std::fmt;
use std::time::Instant;

use crate::approx::greedy::greedy_select;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::search::{self, binomial, Goal, SearchSpace, State, Visit, MAX_DEPTH};
use crate::vertex_set::VertexSet;

/// Default limit on search-tree nodes per enumeration.
pub const DEFAULT_CEILING: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    PartialVcDecision,
    MaxPartialVc,
    VcDimension,
    MinDistinguishingTransversal,
}

impl Problem {
    pub fn tag(self) -> &'static str {
        match self {
            Problem::PartialVcDecision => "partial-vc-decision",
            Problem::MaxPartialVc => "max-partial-vc",
            Problem::VcDimension => "vc-dimension",
            Problem::MinDistinguishingTransversal => "min-distinguishing-transversal",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub problem: Problem,
    pub witness: VertexSet,
    /// Class count, dimension or transversal size, depending on `problem`.
    pub value: usize,
    /// Answer of a decision query.
    pub decided: Option<bool>,
    pub k: Option<usize>,
    pub ell: Option<usize>,
    /// Short tag explaining how a decision was reached (`cap`, `greedy`, `search`, ...).
    pub reason: Option<&'static str>,
    pub elapsed_ms: u128,
    /// Complete candidate sets evaluated.
    pub enumerated: u64,
}

impl SolveResult {
    fn new(problem: Problem, witness: VertexSet, value: usize) -> Self {
        SolveResult {
            problem,
            witness,
            value,
            decided: None,
            k: None,
            ell: None,
            reason: None,
            elapsed_ms: 0,
            enumerated: 0,
        }
    }
}

/// Knobs shared by all exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest number of search-tree nodes a single enumeration may visit
    /// before giving up with a capacity error.
    pub ceiling: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            ceiling: DEFAULT_CEILING,
        }
    }
}

pub fn solve_partial_vc_decision(h: &Hypergraph, k: usize, ell: usize) -> Result<SolveResult> {
    SearchConfig::default().partial_vc_decision(h, k, ell)
}

pub fn solve_max_partial_vc(h: &Hypergraph, k: usize) -> Result<SolveResult> {
    SearchConfig::default().max_partial_vc(h, k)
}

pub fn vc_dimension(h: &Hypergraph) -> Result<SolveResult> {
    SearchConfig::default().vc_dimension(h)
}

pub fn min_distinguishing_transversal(h: &Hypergraph) -> Result<SolveResult> {
    SearchConfig::default().min_distinguishing_transversal(h)
}

fn check_k(h: &Hypergraph, k: usize) -> Result<()> {
    if k > h.n() {
        return Err(Error::input(format!("k={k} exceeds the vertex count {}", h.n())));
    }
    Ok(())
}

/// Adds the lowest unused vertices of `0..n` until `set` has `k` elements.
pub(crate) fn pad_to(set: &mut VertexSet, k: usize, n: usize) {
    let mut v = 0;
    while set.len() < k && v < n {
        set.insert(v);
        v += 1;
    }
}

fn to_vertices(space: &SearchSpace, chosen: &[usize]) -> VertexSet {
    chosen.iter().map(|&i| space.cand[i]).collect()
}

struct MaxGoal {
    k: usize,
    floor: usize,
    best: Option<(usize, Vec<usize>)>,
    leaves: u64,
}

impl Goal for MaxGoal {
    fn node(&mut self, space: &SearchSpace, st: &State, next: usize) -> Visit {
        let depth = st.depth();
        if depth == self.k {
            self.leaves += 1;
            let v = st.distinct;
            let better = match &self.best {
                Some((b, _)) => v > *b,
                None => v >= self.floor,
            };
            if better {
                self.best = Some((v, st.chosen.clone()));
            }
            return Visit::Prune;
        }
        let bound = space.completion_bound(st, next, self.k - depth);
        if bound < self.floor || self.best.as_ref().is_some_and(|(b, _)| bound <= *b) {
            return Visit::Prune;
        }
        Visit::Descend
    }
}

/// Stops at the first leaf inducing at least `ell` classes.
struct AtLeastGoal {
    k: usize,
    ell: usize,
    hit: Option<Vec<usize>>,
    leaves: u64,
}

impl Goal for AtLeastGoal {
    fn node(&mut self, space: &SearchSpace, st: &State, next: usize) -> Visit {
        let depth = st.depth();
        if depth == self.k {
            self.leaves += 1;
            if st.distinct >= self.ell {
                self.hit = Some(st.chosen.clone());
                return Visit::Stop;
            }
            return Visit::Prune;
        }
        if space.completion_bound(st, next, self.k - depth) < self.ell {
            return Visit::Prune;
        }
        Visit::Descend
    }
}

/// Stops at the first shattered `d`-set; every prefix must itself be shattered.
struct ShatterGoal {
    d: usize,
    hit: Option<Vec<usize>>,
    leaves: u64,
}

impl Goal for ShatterGoal {
    fn node(&mut self, _: &SearchSpace, st: &State, _: usize) -> Visit {
        let depth = st.depth();
        if st.distinct != 1usize << depth {
            if depth == self.d {
                self.leaves += 1;
            }
            return Visit::Prune;
        }
        if depth == self.d {
            self.leaves += 1;
            self.hit = Some(st.chosen.clone());
            return Visit::Stop;
        }
        Visit::Descend
    }
}

/// Stops at the first `k`-set separating all edges, optionally also leaving
/// no edge with an empty trace.
pub(crate) struct SeparateGoal {
    pub k: usize,
    pub dominate: bool,
    pub hit: Option<Vec<usize>>,
    pub leaves: u64,
}

impl Goal for SeparateGoal {
    fn node(&mut self, space: &SearchSpace, st: &State, next: usize) -> Visit {
        let depth = st.depth();
        if depth == self.k {
            self.leaves += 1;
            if st.distinct == space.m && (!self.dominate || st.empty_count() == 0) {
                self.hit = Some(st.chosen.clone());
                return Visit::Stop;
            }
            return Visit::Prune;
        }
        if space.completion_bound(st, next, self.k - depth) < space.m {
            return Visit::Prune;
        }
        Visit::Descend
    }
}

/// Calls `f` on every `k`-subset of `0..n` in combination order until it
/// returns false. Used only where the bit-parallel engine does not apply.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl SearchConfig {
    pub fn with_ceiling(ceiling: u64) -> Self {
        SearchConfig { ceiling }
    }

    fn guard_plain(&self, n: usize, k: usize) -> Result<()> {
        let total = binomial(n, k);
        if total > self.ceiling as u128 {
            return Err(Error::capacity(format!(
                "C({n}, {k}) = {total} candidate sets exceed the ceiling of {}",
                self.ceiling
            )));
        }
        Ok(())
    }

    /// Maximum class count over all `k`-subsets; ties go to the first set in
    /// combination order.
    pub fn max_partial_vc(&self, h: &Hypergraph, k: usize) -> Result<SolveResult> {
        let start = Instant::now();
        check_k(h, k)?;
        let mut res = if h.m() == 0 {
            let mut w = VertexSet::new();
            pad_to(&mut w, k, h.n());
            SolveResult::new(Problem::MaxPartialVc, w, 0)
        } else if k > MAX_DEPTH {
            self.guard_plain(h.n(), k)?;
            let mut best: Option<(usize, VertexSet)> = None;
            let mut count = 0u64;
            for_each_combination(h.n(), k, |c| {
                count += 1;
                let set: VertexSet = c.iter().copied().collect();
                let v = h.class_count(&set);
                if best.as_ref().is_none_or(|(b, _)| v > *b) {
                    best = Some((v, set));
                }
                true
            });
            let (v, w) = best.expect("k <= n gives at least one subset");
            let mut r = SolveResult::new(Problem::MaxPartialVc, w, v);
            r.enumerated = count;
            r
        } else {
            let (_, floor) = greedy_select(h, k);
            let space = SearchSpace::new(h, (0..h.n()).collect(), k);
            let out = search::enumerate(&space, k, self.ceiling, || MaxGoal {
                k,
                floor,
                best: None,
                leaves: 0,
            })?;
            let mut best: Option<(usize, &Vec<usize>)> = None;
            let mut leaves = 0;
            for g in out.relevant() {
                leaves += g.leaves;
                if let Some((v, c)) = &g.best {
                    if best.is_none_or(|(b, _)| *v > b) {
                        best = Some((*v, c));
                    }
                }
            }
            let (v, chosen) = best.expect("the greedy floor is always attained");
            let mut r = SolveResult::new(Problem::MaxPartialVc, to_vertices(&space, chosen), v);
            r.enumerated = leaves;
            r
        };
        res.k = Some(k);
        res.elapsed_ms = start.elapsed().as_millis();
        Ok(res)
    }

    /// Is there a `k`-set inducing at least `ell` classes?
    pub fn partial_vc_decision(&self, h: &Hypergraph, k: usize, ell: usize) -> Result<SolveResult> {
        let start = Instant::now();
        check_k(h, k)?;
        let cap = if k >= usize::BITS as usize - 1 {
            h.distinct_edge_count()
        } else {
            h.distinct_edge_count().min(1usize << k)
        };
        let mut res = if ell > cap {
            let (w, v) = greedy_select(h, k);
            let mut r = SolveResult::new(Problem::PartialVcDecision, w, v);
            r.decided = Some(false);
            r.reason = Some("cap");
            r
        } else if ell == 0 {
            let mut w = VertexSet::new();
            pad_to(&mut w, k, h.n());
            let v = h.class_count(&w);
            let mut r = SolveResult::new(Problem::PartialVcDecision, w, v);
            r.decided = Some(true);
            r.reason = Some("trivial");
            r
        } else if k + 1 >= ell {
            // Greedy on the twin-free core reaches min(m, budget + 1) classes,
            // and ell <= m there, so budget ell - 1 always suffices.
            let red = h.remove_twins();
            let core = &red.hypergraph;
            let (w, _) = greedy_select(core, (ell - 1).min(core.n()));
            let mut w = red.lift(&w);
            pad_to(&mut w, k, h.n());
            let v = h.class_count(&w);
            if v < ell {
                return Err(Error::input(format!(
                    "greedy reached only {v} < {ell} classes on a twin-free core"
                )));
            }
            let mut r = SolveResult::new(Problem::PartialVcDecision, w, v);
            r.decided = Some(true);
            r.reason = Some("greedy");
            r
        } else {
            self.decide_by_search(h, k, ell)?
        };
        res.k = Some(k);
        res.ell = Some(ell);
        res.elapsed_ms = start.elapsed().as_millis();
        Ok(res)
    }

    fn decide_by_search(&self, h: &Hypergraph, k: usize, ell: usize) -> Result<SolveResult> {
        let (found, enumerated) = if k > MAX_DEPTH {
            self.guard_plain(h.n(), k)?;
            let mut hit = None;
            let mut count = 0u64;
            for_each_combination(h.n(), k, |c| {
                count += 1;
                let set: VertexSet = c.iter().copied().collect();
                if h.class_count(&set) >= ell {
                    hit = Some(set);
                    return false;
                }
                true
            });
            (hit, count)
        } else {
            let space = SearchSpace::new(h, (0..h.n()).collect(), k);
            let out = search::enumerate(&space, k, self.ceiling, || AtLeastGoal {
                k,
                ell,
                hit: None,
                leaves: 0,
            })?;
            let leaves = out.relevant().map(|g| g.leaves).sum();
            let hit = out
                .first_found
                .and_then(|t| out.tasks[t].goal.hit.as_ref())
                .map(|c| to_vertices(&space, c));
            (hit, leaves)
        };
        let mut r = match found {
            Some(w) => {
                let v = h.class_count(&w);
                let mut r = SolveResult::new(Problem::PartialVcDecision, w, v);
                r.decided = Some(true);
                r
            }
            None => {
                let (w, v) = greedy_select(h, k);
                let mut r = SolveResult::new(Problem::PartialVcDecision, w, v);
                r.decided = Some(false);
                r
            }
        };
        r.reason = Some("search");
        r.enumerated = enumerated;
        Ok(r)
    }

    /// Largest shattered set, by ascending size.
    pub fn vc_dimension(&self, h: &Hypergraph) -> Result<SolveResult> {
        let start = Instant::now();
        let mut res = SolveResult::new(Problem::VcDimension, VertexSet::new(), 0);
        if h.m() > 0 {
            // Shattering ignores duplicate edges, and twin vertices never sit
            // together in a shattered set, so the lowest of each group suffices.
            let red = h.remove_twins();
            let core = &red.hypergraph;
            let m = core.m();
            let max_d = (usize::BITS - 1 - m.leading_zeros()) as usize;
            let max_d = max_d.min(core.n()).min(MAX_DEPTH);
            for d in 1..=max_d {
                let (hit, leaves) = self.find_shattered(core, d)?;
                res.enumerated += leaves;
                match hit {
                    Some(c) => {
                        res.witness = red.lift(&c);
                        res.value = d;
                    }
                    None => break,
                }
            }
        }
        res.elapsed_ms = start.elapsed().as_millis();
        Ok(res)
    }

    /// First shattered `d`-set in combination order, if any, and the number
    /// of complete sets examined. `h` must have distinct edges.
    pub(crate) fn find_shattered(&self, h: &Hypergraph, d: usize) -> Result<(Option<VertexSet>, u64)> {
        if d == 0 {
            return Ok(((h.m() > 0).then(VertexSet::new), 0));
        }
        if d > MAX_DEPTH || d >= usize::BITS as usize {
            return Ok((None, 0));
        }
        let m = h.m();
        let half = 1usize << (d - 1);
        if m < 2 * half {
            return Ok((None, 0));
        }
        let cand: Vec<usize> = (0..h.n())
            .filter(|&v| {
                let deg = h.degree(v);
                deg >= half && m - deg >= half
            })
            .collect();
        if cand.len() < d {
            return Ok((None, 0));
        }
        let space = SearchSpace::new(h, cand, d);
        let out = search::enumerate(&space, d, self.ceiling, || ShatterGoal {
            d,
            hit: None,
            leaves: 0,
        })?;
        let leaves = out.relevant().map(|g| g.leaves).sum();
        let hit = out
            .first_found
            .and_then(|t| out.tasks[t].goal.hit.as_ref())
            .map(|c| to_vertices(&space, c));
        Ok((hit, leaves))
    }

    /// Smallest set inducing `m` classes, i.e. separating every pair of edges.
    pub fn min_distinguishing_transversal(&self, h: &Hypergraph) -> Result<SolveResult> {
        let start = Instant::now();
        if let Some((a, b)) = h.find_twin_edges() {
            return Err(Error::input(format!(
                "edges {} and {} are equal, so no set separates them",
                a + 1,
                b + 1
            )));
        }
        let (w, enumerated) = self.min_separating(h, false)?;
        let value = w.len();
        let mut res = SolveResult::new(Problem::MinDistinguishingTransversal, w, value);
        res.enumerated = enumerated;
        res.elapsed_ms = start.elapsed().as_millis();
        Ok(res)
    }

    /// Smallest separating set (also hitting every edge when `dominate`),
    /// first in combination order among those of minimum size. The edges must
    /// be pairwise distinct.
    pub(crate) fn min_separating(&self, h: &Hypergraph, dominate: bool) -> Result<(VertexSet, u64)> {
        let m = h.m();
        let feasible = |s: &VertexSet| h.class_count(s) == m && (!dominate || h.edges().iter().all(|e| e.intersects(s)));
        if feasible(&VertexSet::new()) {
            return Ok((VertexSet::new(), 0));
        }
        let red = h.remove_twins();
        // Keep the lowest vertex of each twin group; a minimum set never needs two.
        let cand = red.vertex_map.clone();
        let space = SearchSpace::new(h, cand.clone(), cand.len().min(MAX_DEPTH));
        let mut total = 0;
        let lo = (usize::BITS - (m - 1).leading_zeros()) as usize;
        for k in lo.max(1)..=cand.len() {
            if k > MAX_DEPTH {
                return Err(Error::capacity(format!(
                    "no separating set of size at most {MAX_DEPTH} exists"
                )));
            }
            let out = search::enumerate(&space, k, self.ceiling, || SeparateGoal {
                k,
                dominate,
                hit: None,
                leaves: 0,
            })?;
            total += out.relevant().map(|g| g.leaves).sum::<u64>();
            if let Some(c) = out.first_found.and_then(|t| out.tasks[t].goal.hit.as_ref()) {
                return Ok((to_vertices(&space, c), total));
            }
        }
        Err(Error::input(
            "no vertex set separates all edges (some edges coincide or an edge is empty while domination is required)",
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{neighborhood_hypergraph, Graph};

    fn power_set(n: usize) -> Hypergraph {
        let edges = (0..1usize << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        Hypergraph::new(n, edges).unwrap()
    }

    fn small_sets(n: usize) -> Hypergraph {
        let mut edges = vec![VertexSet::new()];
        edges.extend((0..n).map(VertexSet::singleton));
        Hypergraph::new(n, edges).unwrap()
    }

    fn p3() -> Hypergraph {
        neighborhood_hypergraph(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap())
    }

    fn p2() -> Hypergraph {
        neighborhood_hypergraph(&Graph::from_edges(2, &[(0, 1)]).unwrap())
    }

    #[test]
    fn decision_on_paths() {
        let yes = solve_partial_vc_decision(&p3(), 1, 2).unwrap();
        assert_eq!(yes.decided, Some(true));
        assert_eq!(yes.witness, VertexSet::singleton(0));
        let no = solve_partial_vc_decision(&p2(), 1, 2).unwrap();
        assert_eq!(no.decided, Some(false));
        let trivial = solve_partial_vc_decision(&p3(), 2, 0).unwrap();
        assert_eq!(trivial.decided, Some(true));
        assert_eq!(trivial.witness.len(), 2);
    }

    #[test]
    fn cap_answers_no_immediately() {
        let r = solve_partial_vc_decision(&p3(), 1, 3).unwrap();
        assert_eq!((r.decided, r.reason), (Some(false), Some("cap")));
    }

    #[test]
    fn max_examples() {
        assert_eq!(solve_max_partial_vc(&power_set(3), 3).unwrap().value, 8);
        let r = solve_max_partial_vc(&small_sets(4), 2).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness.iter().collect::<Vec<_>>(), vec![0, 1]);
        let r = solve_max_partial_vc(&p3(), 0).unwrap();
        assert_eq!((r.value, r.witness.len()), (1, 0));
    }

    #[test]
    fn vc_dimension_examples() {
        assert_eq!(vc_dimension(&power_set(3)).unwrap().value, 3);
        let mut edges = vec![VertexSet::new()];
        for i in 0..5 {
            edges.push(VertexSet::singleton(i));
            for j in i + 1..5 {
                edges.push([i, j].into_iter().collect());
            }
        }
        let h = Hypergraph::new(5, edges).unwrap();
        let r = vc_dimension(&h).unwrap();
        assert_eq!(r.value, 2);
        assert!(h.is_shattered(&r.witness));
        let single = Hypergraph::from_one_based(1, &[vec![1]]).unwrap();
        assert_eq!(vc_dimension(&single).unwrap().value, 0);
        let empty = Hypergraph::new(3, vec![]).unwrap();
        assert_eq!(vc_dimension(&empty).unwrap().value, 0);
    }

    #[test]
    fn transversal_examples() {
        let one = Hypergraph::from_one_based(2, &[vec![1, 2]]).unwrap();
        assert_eq!(min_distinguishing_transversal(&one).unwrap().value, 0);
        let two = Hypergraph::from_one_based(1, &[vec![], vec![1]]).unwrap();
        let r = min_distinguishing_transversal(&two).unwrap();
        assert_eq!((r.value, r.witness.to_one_based()), (1, vec![1]));
        let r = min_distinguishing_transversal(&p3()).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert!(matches!(
            min_distinguishing_transversal(&p2()),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn ceiling_yields_capacity_error() {
        let mut x: u64 = 12345;
        let edges = (0..30)
            .map(|_| {
                (0..20)
                    .filter(|_| {
                        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        x >> 63 == 1
                    })
                    .collect()
            })
            .collect();
        let h = Hypergraph::new(20, edges).unwrap();
        let r = SearchConfig::with_ceiling(50).max_partial_vc(&h, 4);
        assert!(matches!(r, Err(Error::Capacity(_))), "{r:?}");
        assert!(SearchConfig::default().max_partial_vc(&h, 4).is_ok());
    }

    #[test]
    fn combination_stepper_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_combination(3, 0, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
    }
}
