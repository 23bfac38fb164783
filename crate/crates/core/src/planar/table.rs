//! Per-component budget tables and their knapsack combination.

use crate::error::Result;
use crate::graph::{neighborhood_hypergraph, Graph};
use crate::search::{enumerate_sequential, Goal, SearchSpace, State, Visit};
use crate::vertex_set::VertexSet;

/// Best nonempty-class counts inside one component for every budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentTable {
    /// Vertices of the component, in the numbering of the graph it came from.
    pub component: VertexSet,
    /// `best[y]`: most nonempty classes with exactly `y` chosen vertices, and
    /// the first set in combination order reaching it.
    pub best: Vec<(usize, VertexSet)>,
    /// Same, restricted to sets that leave some component vertex with an
    /// empty trace; `None` when every `y`-set dominates the component.
    pub best_open: Vec<Option<(usize, VertexSet)>>,
}

struct TableGoal {
    best: Vec<Option<(usize, Vec<usize>)>>,
    open: Vec<Option<(usize, Vec<usize>)>>,
}

impl Goal for TableGoal {
    fn node(&mut self, _: &SearchSpace, st: &State, _: usize) -> Visit {
        let y = st.depth();
        let empty = st.empty_count() > 0;
        let nonempty = st.distinct - usize::from(empty);
        if self.best[y].as_ref().is_none_or(|(b, _)| nonempty > *b) {
            self.best[y] = Some((nonempty, st.chosen.clone()));
        }
        if empty && self.open[y].as_ref().is_none_or(|(b, _)| nonempty > *b) {
            self.open[y] = Some((nonempty, st.chosen.clone()));
        }
        Visit::Descend
    }
}

/// Exhaustive table for the neighborhood hypergraph of `subgraph`, budgets
/// `0..=min(k_max, n)`. Witnesses use the subgraph's own vertex numbering;
/// `component` is set to all of its vertices.
pub fn component_exact_solver(subgraph: &Graph, k_max: usize) -> Result<ComponentTable> {
    table_with_ceiling(subgraph, k_max, crate::exact::DEFAULT_CEILING)
}

pub(crate) fn table_with_ceiling(subgraph: &Graph, k_max: usize, ceiling: u64) -> Result<ComponentTable> {
    let h = neighborhood_hypergraph(subgraph);
    let n = subgraph.n();
    let k_max = k_max.min(n);
    let space = SearchSpace::new(&h, (0..n).collect(), k_max);
    let mut goal = TableGoal {
        best: vec![None; k_max + 1],
        open: vec![None; k_max + 1],
    };
    enumerate_sequential(&space, k_max, ceiling, &mut goal)?;
    let to_set = |c: Vec<usize>| -> VertexSet { c.into_iter().collect() };
    Ok(ComponentTable {
        component: VertexSet::full(n),
        best: goal
            .best
            .into_iter()
            .map(|e| {
                let (v, c) = e.expect("every budget up to n has a set");
                (v, to_set(c))
            })
            .collect(),
        best_open: goal.open.into_iter().map(|e| e.map(|(v, c)| (v, to_set(c)))).collect(),
    })
}

/// Group knapsack over `rows[q][x]` (value of giving `x` to item `q`, `None`
/// when impossible) with total budget at most `k`. With `open` rows given,
/// exactly one item must use its open row instead. Returns the value, the
/// per-item allocation and, for the open variant, the item that used it.
/// Ties go to earlier items taking larger budgets.
pub(crate) fn knapsack(
    rows: &[Vec<Option<usize>>],
    open: Option<&[Vec<Option<usize>>]>,
    k: usize,
) -> Option<(usize, Vec<usize>, Option<usize>)> {
    let q_n = rows.len();
    let states = if open.is_some() { 2 } else { 1 };
    // g[q][s][y]: best for items q.., `s` = still owing the open item, budget <= y
    let mut g = vec![vec![vec![None::<usize>; k + 1]; states]; q_n + 1];
    g[q_n][0].fill(Some(0));
    let cell = |row: &[Option<usize>], x: usize| row.get(x).copied().flatten();
    for q in (0..q_n).rev() {
        for s in 0..states {
            for y in 0..=k {
                let mut best = None;
                for x in 0..=y {
                    let mut cand = None;
                    if let (Some(a), Some(b)) = (cell(&rows[q], x), g[q + 1][s][y - x]) {
                        cand = Some(a + b);
                    }
                    if s == 1 {
                        if let (Some(a), Some(b)) = (cell(&open.unwrap()[q], x), g[q + 1][0][y - x]) {
                            cand = cand.max(Some(a + b));
                        }
                    }
                    best = best.max(cand);
                }
                g[q][s][y] = best;
            }
        }
    }
    let start = states - 1;
    let total = g[0][start][k]?;
    // Forward reconstruction, preferring the largest budget for each item.
    let mut alloc = Vec::with_capacity(q_n);
    let (mut s, mut y, mut used) = (start, k, None);
    for q in 0..q_n {
        let target = g[q][s][y].expect("reachable state");
        let mut pick = None;
        for x in (0..=y).rev() {
            if s == 1 {
                if let (Some(a), Some(b)) = (cell(&open.unwrap()[q], x), g[q + 1][0][y - x]) {
                    if a + b == target {
                        pick = Some((x, true));
                        break;
                    }
                }
            }
            if let (Some(a), Some(b)) = (cell(&rows[q], x), g[q + 1][s][y - x]) {
                if a + b == target {
                    pick = Some((x, false));
                    break;
                }
            }
        }
        let (x, took_open) = pick.expect("optimum is attained");
        alloc.push(x);
        if took_open {
            used = Some(q);
            s = 0;
        }
        y -= x;
    }
    Some((total, alloc, used))
}

/// Best total of the `best` columns under a shared budget `k`, with the
/// budget given to each table.
pub fn knapsack_combine(tables: &[ComponentTable], k: usize) -> (usize, Vec<usize>) {
    let rows: Vec<Vec<Option<usize>>> = tables
        .iter()
        .map(|t| t.best.iter().map(|(v, _)| Some(*v)).collect())
        .collect();
    let (value, alloc, _) = knapsack(&rows, None, k).expect("budget 0 is always feasible");
    (value, alloc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(values: &[usize]) -> ComponentTable {
        ComponentTable {
            component: VertexSet::new(),
            best: values.iter().map(|&v| (v, VertexSet::new())).collect(),
            best_open: vec![None; values.len()],
        }
    }

    #[test]
    fn single_vertex_table() {
        let t = component_exact_solver(&Graph::empty(1), 1).unwrap();
        assert_eq!(t.best[0].0, 0);
        assert_eq!(t.best[1], (1, VertexSet::singleton(0)));
        assert_eq!(t.best_open[1], None);
    }

    #[test]
    fn edgeless_pair_and_path() {
        let t = component_exact_solver(&Graph::empty(2), 2).unwrap();
        assert_eq!(t.best[2].0, 2);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let t = component_exact_solver(&p3, 2).unwrap();
        assert_eq!(t.best[2].0, 3);
        assert!(t.best.windows(2).all(|w| w[0].0 <= w[1].0));
    }

    #[test]
    fn knapsack_examples() {
        let (v, a) = knapsack_combine(&[table(&[0, 1, 3])], 2);
        assert_eq!((v, a), (3, vec![2]));
        let (v, a) = knapsack_combine(&[table(&[0, 1, 3]), table(&[0, 1, 3])], 2);
        assert_eq!((v, a), (3, vec![2, 0]));
        let (v, _) = knapsack_combine(&[table(&[2, 5]), table(&[1, 4])], 0);
        assert_eq!(v, 3);
    }

    #[test]
    fn knapsack_never_overspends() {
        let (v, a) = knapsack_combine(&[table(&[0, 1]), table(&[0, 1]), table(&[0, 1])], 2);
        assert_eq!((v, a.iter().sum::<usize>()), (2, 2));
        assert_eq!(a, vec![1, 1, 0]);
    }

    #[test]
    fn open_variant_forces_one_item() {
        let rows = vec![vec![Some(0), Some(3)], vec![Some(0), Some(2)]];
        let open = vec![vec![Some(0), None], vec![Some(0), Some(1)]];
        let (v, a, used) = knapsack(&rows, Some(&open), 2).unwrap();
        assert_eq!((v, a, used), (4, vec![1, 1], Some(1)));
    }
}
