//! Double hitting on graph-shaped hypergraphs, where every pair of edges
//! shares at most one vertex.

use partial_vc::approx::{approx_via_double_hitting, double_hit_count};
use partial_vc::exact::solve_max_partial_vc;
use partial_vc::generate::random_graph;
use partial_vc::Hypergraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> partial_vc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = random_graph(&mut rng, 10, 0.4)?;
    let edges: Vec<Vec<usize>> = g.edges().iter().map(|&(u, v)| vec![u + 1, v + 1]).collect();
    let h = Hypergraph::from_one_based(g.n(), &edges)?;
    println!("graph with {} vertices and {} edges", g.n(), h.m());
    for k in 2..=5 {
        let r = approx_via_double_hitting(&h, k)?;
        let opt = solve_max_partial_vc(&h, k)?.value;
        println!(
            "k={k}: classes {} (double hits {}), opt {opt}, bound {}, witness {:?}",
            r.value,
            double_hit_count(&h, &r.witness),
            r.upper_bound,
            r.witness.to_one_based()
        );
    }
    Ok(())
}
