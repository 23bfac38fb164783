//! Seeded instance generators. All randomness comes from a caller-supplied
//! `ChaCha8Rng`, so equal seeds give equal instances on every platform.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Attempts at drawing a twin-free hypergraph before reducing one instead.
const TWIN_FREE_ATTEMPTS: usize = 200;

/// Attempts at drawing a simple cubic graph. A single pairing is simple with
/// probability about `e^-2`, so about 7.4 draws are expected.
const CUBIC_ATTEMPTS: usize = 10_000;

/// `rows × cols` grid in row-major order, with ring levels
/// `1 + min(r, c, rows-1-r, cols-1-c)`.
pub fn grid(rows: usize, cols: usize) -> (Graph, Vec<usize>) {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    let g = Graph::from_edges(rows * cols, &edges).expect("grid edges are simple");
    let levels = (0..rows * cols)
        .map(|v| {
            let (r, c) = (v / cols, v % cols);
            1 + r.min(c).min(rows - 1 - r).min(cols - 1 - c)
        })
        .collect();
    (g, levels)
}

/// `m` edges, each vertex included independently with probability `density`.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, m: usize, density: f64) -> Result<Hypergraph> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::input(format!("density {density} is outside [0, 1]")));
    }
    let edges = (0..m)
        .map(|_| (0..n).filter(|_| rng.gen_bool(density)).collect())
        .collect();
    Hypergraph::new(n, edges)
}

/// Like [`random_hypergraph`] but redrawn until twin-free; after
/// `TWIN_FREE_ATTEMPTS` failures the last draw is twin-reduced, which may
/// leave fewer vertices and edges than asked for.
pub fn random_twin_free(rng: &mut ChaCha8Rng, n: usize, m: usize, density: f64) -> Result<Hypergraph> {
    let mut last = None;
    for _ in 0..TWIN_FREE_ATTEMPTS {
        let h = random_hypergraph(rng, n, m, density)?;
        if h.is_twin_free() {
            return Ok(h);
        }
        last = Some(h);
    }
    Ok(last.expect("at least one attempt").remove_twins().hypergraph)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} is outside [0, 1]")));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Uniform simple cubic graph on `n` vertices by the pairing model with rejection.
pub fn random_cubic(rng: &mut ChaCha8Rng, n: usize) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::input(format!("cubic graphs need an even n >= 4, got {n}")));
    }
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..CUBIC_ATTEMPTS {
        points.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = points
            .chunks(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        if edges.iter().any(|(u, v)| u == v) {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::from_edges(n, &edges);
    }
    Err(Error::capacity(format!(
        "no simple pairing found in {CUBIC_ATTEMPTS} attempts for n={n}"
    )))
}

/// Every subset of `0..n` with at most `max_size` elements, by size then
/// combination order.
pub fn small_subsets(n: usize, max_size: usize) -> Hypergraph {
    let mut edges: Vec<VertexSet> = (0..1u64 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<VertexSet>())
        .filter(|e: &VertexSet| e.len() <= max_size)
        .collect();
    edges.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    Hypergraph::new(n, edges).expect("subsets stay in range")
}

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges).expect("complete graph is simple")
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|u| (u.min((u + 1) % n), u.max((u + 1) % n))).collect();
    Graph::from_edges(n, &edges).expect("cycle is simple for n >= 3")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn grid_shape() {
        let (g, levels) = grid(4, 4);
        assert_eq!(g.edge_count(), 24);
        assert_eq!(levels.iter().filter(|&&l| l == 2).count(), 4);
    }

    #[test]
    fn cubic_is_cubic_and_seeded() {
        let a = random_cubic(&mut ChaCha8Rng::seed_from_u64(3), 8).unwrap();
        let b = random_cubic(&mut ChaCha8Rng::seed_from_u64(3), 8).unwrap();
        assert_eq!(a, b);
        assert!((0..8).all(|v| a.degree(v) == 3));
        assert!(random_cubic(&mut ChaCha8Rng::seed_from_u64(3), 5).is_err());
    }

    #[test]
    fn twin_free_draws() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert!(random_twin_free(&mut rng, 8, 12, 0.5).unwrap().is_twin_free());
        }
    }

    #[test]
    fn subsets_and_named_graphs() {
        let h = small_subsets(4, 1);
        assert_eq!(h.m(), 5);
        assert_eq!(small_subsets(3, 3).m(), 8);
        assert_eq!(complete_graph(5).edge_count(), 10);
        assert_eq!(cycle_graph(5).edge_count(), 5);
    }
}
