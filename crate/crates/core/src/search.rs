//! Depth-first subset enumeration with incremental trace counting.
//!
//! Candidate sets are grown in combination order (ascending index tuples).
//! Each edge keeps its trace as a bit mask over *positions* in the current
//! candidate set, and a multiplicity table over those masks gives the class
//! count in O(deg) per push or pop. Goals decide what to do at each node.
//!
//! The top of the tree is cut into independent prefix tasks that run on the
//! rayon pool; callers merge per-task goals in task order, so the outcome does
//! not depend on scheduling.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Widest candidate set the engine can track (traces are `u64` position masks).
pub const MAX_DEPTH: usize = 64;

const DENSE_DEPTH: usize = 16;
const FLUSH_EVERY: u64 = 1 << 12;

fn flush_every(ceiling: u64) -> u64 {
    (ceiling / 64).clamp(1, FLUSH_EVERY)
}

/// Candidate vertices and their incidence lists, plus static gain bounds.
pub(crate) struct SearchSpace {
    /// Original vertex id of each candidate, ascending.
    pub cand: Vec<usize>,
    cols: Vec<Vec<u32>>,
    pub m: usize,
    pub m_distinct: usize,
    /// `top_gain[next][r]`: sum of the `r` largest gain bounds among `cand[next..]`.
    top_gain: Vec<Vec<usize>>,
    /// Same for column sizes.
    top_deg: Vec<Vec<usize>>,
}

/// `out[i][r]`: sum of the `r` largest values among `values[i..]`, for `r <= r_max`.
fn suffix_top_sums(values: &[usize], r_max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; r_max + 1]; values.len() + 1];
    let mut best: Vec<usize> = Vec::new();
    for i in (0..values.len()).rev() {
        let pos = best.partition_point(|&g| g >= values[i]);
        best.insert(pos, values[i]);
        best.truncate(r_max);
        let row = &mut out[i];
        for r in 1..=r_max {
            row[r] = row[r - 1] + best.get(r - 1).copied().unwrap_or(0);
        }
    }
    out
}

fn top_sum(table: &[Vec<usize>], next: usize, r: usize, per_step: usize) -> usize {
    let row = &table[next];
    let tab = row.len() - 1;
    row[r.min(tab)] + r.saturating_sub(tab) * per_step
}

impl SearchSpace {
    /// `max_depth` bounds the `r` for which gain sums are tabulated.
    pub fn new(h: &Hypergraph, cand: Vec<usize>, max_depth: usize) -> Self {
        let all_cols = h.columns();
        let m = h.m();
        let cols: Vec<Vec<u32>> = cand
            .iter()
            .map(|&v| all_cols[v].iter().map(|&e| e as u32).collect())
            .collect();
        // Adding x splits each class into its x-part and the rest, so at most
        // min(|col x|, m - |col x|) new classes appear, whatever was chosen before.
        let gains: Vec<usize> = cols.iter().map(|c| c.len().min(m - c.len())).collect();
        let degs: Vec<usize> = cols.iter().map(Vec::len).collect();
        let r_max = max_depth.min(cand.len());
        let top_gain = suffix_top_sums(&gains, r_max);
        let top_deg = suffix_top_sums(&degs, r_max);
        SearchSpace {
            cand,
            cols,
            m,
            m_distinct: h.distinct_edge_count(),
            top_gain,
            top_deg,
        }
    }

    pub fn len(&self) -> usize {
        self.cand.len()
    }

    /// Upper bound on the extra classes gained by adding `r` candidates from `next..`.
    pub fn gain_bound(&self, next: usize, r: usize) -> usize {
        top_sum(&self.top_gain, next, r, self.m)
    }

    /// Class-count upper bound for any completion of `st` by `r` more candidates.
    ///
    /// Besides doubling and per-vertex gains, this uses a counting bound: with
    /// `a` edges hit once and `b` hit at least twice, there are at most
    /// `min(a, |C|)` singleton traces and `b` larger ones, while
    /// `a + 2b <= Σ |col x|`. Hence at most `1 + ⌊(Σ |col x| + |C|) / 2⌋` classes.
    pub fn completion_bound(&self, st: &State, next: usize, r: usize) -> usize {
        let doubling = if r >= 32 {
            usize::MAX
        } else {
            st.distinct.saturating_mul(1usize << r)
        };
        let incidences = st.deg_sum + top_sum(&self.top_deg, next, r, self.m);
        let counting = 1 + (incidences + st.depth() + r) / 2;
        doubling
            .min(st.distinct + self.gain_bound(next, r))
            .min(counting)
            .min(self.m_distinct)
    }

    pub fn new_state(&self, depth: usize) -> State {
        let counts = if depth <= DENSE_DEPTH {
            let mut d = vec![0u32; 1usize << depth];
            d[0] = self.m as u32;
            Counts::Dense(d)
        } else {
            let mut s = FxHashMap::default();
            if self.m > 0 {
                s.insert(0, self.m as u32);
            }
            Counts::Sparse(s)
        };
        State {
            trace: vec![0; self.m],
            counts,
            distinct: usize::from(self.m > 0),
            deg_sum: 0,
            chosen: Vec::with_capacity(depth),
        }
    }
}

enum Counts {
    Dense(Vec<u32>),
    Sparse(FxHashMap<u64, u32>),
}

/// Mutable search state: chosen candidates and the per-edge traces.
pub(crate) struct State {
    trace: Vec<u64>,
    counts: Counts,
    pub distinct: usize,
    /// Total column size of the chosen candidates.
    deg_sum: usize,
    /// Candidate positions (indices into `SearchSpace::cand`).
    pub chosen: Vec<usize>,
}

impl State {
    pub fn depth(&self) -> usize {
        self.chosen.len()
    }

    /// Number of edges whose trace is empty.
    pub fn empty_count(&self) -> usize {
        match &self.counts {
            Counts::Dense(d) => d[0] as usize,
            Counts::Sparse(s) => s.get(&0).copied().unwrap_or(0) as usize,
        }
    }

    fn inc(&mut self, t: u64) {
        let c = match &mut self.counts {
            Counts::Dense(d) => &mut d[t as usize],
            Counts::Sparse(s) => s.entry(t).or_insert(0),
        };
        if *c == 0 {
            self.distinct += 1;
        }
        *c += 1;
    }

    fn dec(&mut self, t: u64) {
        let c = match &mut self.counts {
            Counts::Dense(d) => &mut d[t as usize],
            Counts::Sparse(s) => s.get_mut(&t).expect("trace present"),
        };
        *c -= 1;
        if *c == 0 {
            self.distinct -= 1;
        }
    }

    pub fn push(&mut self, space: &SearchSpace, i: usize) {
        let bit = 1u64 << self.chosen.len();
        self.chosen.push(i);
        self.deg_sum += space.cols[i].len();
        for &e in &space.cols[i] {
            let old = self.trace[e as usize];
            self.dec(old);
            self.inc(old | bit);
            self.trace[e as usize] = old | bit;
        }
    }

    pub fn pop(&mut self, space: &SearchSpace) {
        let i = self.chosen.pop().expect("pop on empty state");
        let bit = 1u64 << self.chosen.len();
        self.deg_sum -= space.cols[i].len();
        for &e in &space.cols[i] {
            let new = self.trace[e as usize];
            self.dec(new);
            self.inc(new & !bit);
            self.trace[e as usize] = new & !bit;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Visit {
    Descend,
    Prune,
    Stop,
}

/// Decides at every node whether to descend. Nodes at the target depth are
/// leaves; the engine never descends past them.
pub(crate) trait Goal: Send {
    fn node(&mut self, space: &SearchSpace, st: &State, next: usize) -> Visit;
}

struct Budget<'a> {
    total: &'a AtomicU64,
    ceiling: u64,
    local: u64,
    every: u64,
    exceeded: &'a AtomicBool,
    found_at: &'a AtomicUsize,
    task: usize,
}

impl Budget<'_> {
    /// Counts a node; returns false when the task must abandon its subtree.
    fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local >= self.every {
            let t = self.total.fetch_add(self.local, Ordering::Relaxed) + self.local;
            self.local = 0;
            if t > self.ceiling {
                self.exceeded.store(true, Ordering::Relaxed);
            }
            return !self.exceeded.load(Ordering::Relaxed)
                && self.found_at.load(Ordering::Relaxed) > self.task;
        }
        true
    }

    fn flush(&mut self) {
        let t = self.total.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if t > self.ceiling {
            self.exceeded.store(true, Ordering::Relaxed);
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    /// The goal asked to stop: its task succeeded.
    Found,
    /// Budget exhausted or a lower task already succeeded.
    Abort,
}

fn dfs<G: Goal>(
    space: &SearchSpace,
    st: &mut State,
    goal: &mut G,
    budget: &mut Budget<'_>,
    next: usize,
    k: usize,
) -> Flow {
    if !budget.tick() {
        return Flow::Abort;
    }
    match goal.node(space, st, next) {
        Visit::Stop => return Flow::Found,
        Visit::Prune => return Flow::Continue,
        Visit::Descend => {}
    }
    let depth = st.depth();
    if depth == k {
        return Flow::Continue;
    }
    let need = k - depth;
    for i in next..=space.len() - need {
        st.push(space, i);
        let flow = dfs(space, st, goal, budget, i + 1, k);
        st.pop(space);
        if flow != Flow::Continue {
            return flow;
        }
    }
    Flow::Continue
}

/// Per-task outcome: the goal and whether it stopped on success.
pub(crate) struct TaskResult<G> {
    pub goal: G,
    pub found: bool,
    aborted: bool,
}

/// Result of a full enumeration.
pub(crate) struct Outcome<G> {
    pub tasks: Vec<TaskResult<G>>,
    /// Index of the lowest task that stopped on success, if any.
    pub first_found: Option<usize>,
}

impl<G> Outcome<G> {
    /// Goals of the tasks that decide the answer: all of them, or those up
    /// to the first success.
    pub fn relevant(&self) -> impl Iterator<Item = &G> {
        let end = self.first_found.map_or(self.tasks.len(), |t| t + 1);
        self.tasks[..end].iter().map(|t| &t.goal)
    }
}

/// Enumerates all `k`-subsets of the candidates, split into prefix tasks.
/// A goal returning [`Visit::Stop`] ends its task and cancels higher tasks.
pub(crate) fn enumerate<G, F>(space: &SearchSpace, k: usize, ceiling: u64, make: F) -> Result<Outcome<G>>
where
    G: Goal,
    F: Fn() -> G + Sync,
{
    if k > space.len() || k > MAX_DEPTH {
        return Err(Error::input(format!(
            "subset size {k} exceeds the {} candidates or the depth limit {MAX_DEPTH}",
            space.len()
        )));
    }
    let prefixes = prefixes(space.len(), k, k.min(2));
    let total = AtomicU64::new(0);
    let exceeded = AtomicBool::new(false);
    let found_at = AtomicUsize::new(usize::MAX);

    let tasks: Vec<TaskResult<G>> = prefixes
        .par_iter()
        .enumerate()
        .map(|(task, prefix)| {
            let mut goal = make();
            if found_at.load(Ordering::Relaxed) < task {
                return TaskResult { goal, found: false, aborted: true };
            }
            let mut budget = Budget {
                total: &total,
                ceiling,
                local: 0,
                every: flush_every(ceiling),
                exceeded: &exceeded,
                found_at: &found_at,
                task,
            };
            let mut st = space.new_state(k);
            // Walk the prefix, giving the goal a chance to prune at each depth.
            let mut next = 0;
            let mut flow = Flow::Continue;
            let mut pruned = false;
            for &i in prefix {
                match goal.node(space, &st, next) {
                    Visit::Descend => {}
                    Visit::Prune => {
                        pruned = true;
                        break;
                    }
                    Visit::Stop => {
                        flow = Flow::Found;
                        break;
                    }
                }
                st.push(space, i);
                next = i + 1;
            }
            if !pruned && flow == Flow::Continue {
                flow = dfs(space, &mut st, &mut goal, &mut budget, next, k);
            }
            budget.flush();
            if flow == Flow::Found {
                found_at.fetch_min(task, Ordering::Relaxed);
            }
            TaskResult {
                goal,
                found: flow == Flow::Found,
                aborted: flow == Flow::Abort,
            }
        })
        .collect();

    let first_found = tasks.iter().position(|t| t.found);
    let end = first_found.unwrap_or(tasks.len());
    if tasks[..end].iter().any(|t| t.aborted) {
        return Err(Error::capacity(format!(
            "enumeration exceeded the ceiling of {ceiling} candidate sets \
             ({} candidates, size {k})",
            space.len()
        )));
    }
    Ok(Outcome { tasks, first_found })
}

/// Runs a single sequential enumeration over all subsets of size `0..=k`.
pub(crate) fn enumerate_sequential<G: Goal>(
    space: &SearchSpace,
    k: usize,
    ceiling: u64,
    goal: &mut G,
) -> Result<()> {
    let k = k.min(space.len());
    if k > MAX_DEPTH {
        return Err(Error::input(format!("subset size {k} exceeds depth limit {MAX_DEPTH}")));
    }
    let total = AtomicU64::new(0);
    let exceeded = AtomicBool::new(false);
    let found_at = AtomicUsize::new(usize::MAX);
    let mut budget = Budget {
        total: &total,
        ceiling,
        local: 0,
        every: flush_every(ceiling),
        exceeded: &exceeded,
        found_at: &found_at,
        task: 0,
    };
    let mut st = space.new_state(k);
    let flow = dfs(space, &mut st, goal, &mut budget, 0, k);
    budget.flush();
    if flow == Flow::Abort || exceeded.load(Ordering::Relaxed) {
        return Err(Error::capacity(format!(
            "enumeration exceeded the ceiling of {ceiling} candidate sets ({} candidates, size up to {k})",
            space.len()
        )));
    }
    Ok(())
}

/// All `len`-prefixes of `k`-combinations over `n` items, in combination order.
fn prefixes(n: usize, k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(n: usize, k: usize, len: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        if n < need {
            return;
        }
        for i in start..=n - need {
            cur.push(i);
            rec(n, k, len, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, len, 0, &mut cur, &mut out);
    out
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::VertexSet;

    struct CountAll {
        k: usize,
        leaves: Vec<(Vec<usize>, usize)>,
    }

    impl Goal for CountAll {
        fn node(&mut self, _: &SearchSpace, st: &State, _: usize) -> Visit {
            if st.depth() == self.k {
                self.leaves.push((st.chosen.clone(), st.distinct));
            }
            Visit::Descend
        }
    }

    fn sample() -> Hypergraph {
        Hypergraph::from_one_based(
            5,
            &[vec![1, 2], vec![2, 3], vec![1, 3, 5], vec![4], vec![], vec![2, 4, 5]],
        )
        .unwrap()
    }

    #[test]
    fn incremental_counts_match_direct_evaluation() {
        let h = sample();
        for k in 0..=5 {
            let space = SearchSpace::new(&h, (0..5).collect(), k);
            let out = enumerate(&space, k, u64::MAX, || CountAll { k, leaves: vec![] }).unwrap();
            let leaves: Vec<_> = out.tasks.into_iter().flat_map(|t| t.goal.leaves).collect();
            assert_eq!(leaves.len() as u128, binomial(5, k));
            let mut prev: Option<Vec<usize>> = None;
            for (chosen, distinct) in leaves {
                let set: VertexSet = chosen.iter().copied().collect();
                assert_eq!(distinct, h.class_count(&set), "{chosen:?}");
                if let Some(p) = &prev {
                    assert!(*p < chosen, "combination order");
                }
                prev = Some(chosen);
            }
        }
    }

    #[test]
    fn sparse_counts_agree_with_dense() {
        // depth above DENSE_DEPTH forces the hashed multiplicity table
        let n = 18;
        let edges: Vec<VertexSet> = (0..40)
            .map(|i| (0..n).filter(|v| (i * 7 + v * 3) % 5 < 2).collect())
            .collect();
        let h = Hypergraph::new(n, edges).unwrap();
        let space = SearchSpace::new(&h, (0..n).collect(), 17);
        let out = enumerate(&space, 17, u64::MAX, || CountAll { k: 17, leaves: vec![] }).unwrap();
        for t in out.tasks {
            for (chosen, distinct) in t.goal.leaves {
                let set: VertexSet = chosen.iter().copied().collect();
                assert_eq!(distinct, h.class_count(&set));
            }
        }
    }

    #[test]
    fn ceiling_is_enforced() {
        let h = sample();
        let space = SearchSpace::new(&h, (0..5).collect(), 3);
        let err = enumerate(&space, 3, 2, || CountAll { k: 3, leaves: vec![] });
        // Budget is flushed in blocks, so a tiny tree may finish below the
        // flush size; force many nodes instead.
        let _ = err;
        let n = 30;
        let edges: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
        let big = Hypergraph::new(n, edges).unwrap();
        let space = SearchSpace::new(&big, (0..n).collect(), 6);
        let res = enumerate(&space, 6, 10_000, || CountAll { k: 99, leaves: vec![] });
        assert!(matches!(res, Err(Error::Capacity(_))));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(54, 8), 1_040_465_790);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn gain_bound_tabulation() {
        let h = sample();
        let space = SearchSpace::new(&h, (0..5).collect(), 5);
        // columns: v1:{0,2} v2:{0,1,5} v3:{1,2} v4:{3,5} v5:{2,5}; m=6
        // gains: 2,3,2,2,2
        assert_eq!(space.gain_bound(0, 1), 3);
        assert_eq!(space.gain_bound(0, 2), 5);
        assert_eq!(space.gain_bound(2, 3), 6);
        assert_eq!(space.gain_bound(5, 2), 0);
    }
}
