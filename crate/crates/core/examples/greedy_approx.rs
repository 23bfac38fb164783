//! Greedy class splitting against the exact optimum on random twin-free
//! hypergraphs, with the certified upper bound of each run.

use partial_vc::approx::approx_max_partial_vc;
use partial_vc::exact::solve_max_partial_vc;
use partial_vc::generate::random_twin_free;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> partial_vc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    println!("{:>3} {:>3} {:>2} {:>6} {:>5} {:>5} {:>6}", "n", "m", "k", "greedy", "opt", "bound", "ratio");
    for _ in 0..5 {
        let h = random_twin_free(&mut rng, 10, 16, 0.4)?;
        for k in [2, 3, 4] {
            let a = approx_max_partial_vc(&h, k)?;
            let opt = solve_max_partial_vc(&h, k)?.value;
            assert!(a.value <= opt && opt <= a.upper_bound);
            println!(
                "{:>3} {:>3} {:>2} {:>6} {:>5} {:>5} {:>6}",
                h.n(),
                h.m(),
                k,
                a.value,
                opt,
                a.upper_bound,
                a.claimed_ratio.to_string()
            );
        }
    }
    Ok(())
}
