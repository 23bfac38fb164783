//! Pulling a shattered set out of a hypergraph with many distinct edges.

use partial_vc::approx::{extract_shattered, sauer_threshold};
use partial_vc::exact::vc_dimension;
use partial_vc::generate::random_hypergraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> partial_vc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let h = random_hypergraph(&mut rng, 8, 60, 0.5)?;
    let distinct = h.distinct_edge_count();
    println!("n={} m={} distinct={}", h.n(), h.m(), distinct);

    let d = (1..=h.n()).take_while(|&d| distinct as u128 > sauer_threshold(h.n(), d)).last().unwrap_or(0);
    println!("largest d with distinct > threshold(n, d): {d} (threshold {})", sauer_threshold(h.n(), d));

    let cert = extract_shattered(&h, d)?;
    println!(
        "extracted {:?}, dimension {}, verified {}",
        cert.shattered.to_one_based(),
        cert.dimension,
        cert.verify(&h)
    );
    let elems: Vec<usize> = cert.shattered.to_one_based();
    for (s, edge) in cert.trace_witnesses.iter().enumerate().take(4) {
        let trace: Vec<usize> = elems.iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).map(|(_, &v)| v).collect();
        println!("  trace {trace:?} realised by edge {}", edge + 1);
    }
    println!("exact VC dimension: {}", vc_dimension(&h)?.value);
    Ok(())
}
