//! The 2-approximation for VC dimension next to the exact value.

use partial_vc::approx::approx_max_vc_dimension;
use partial_vc::exact::vc_dimension;
use partial_vc::generate::random_hypergraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> partial_vc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..8 {
        let h = random_hypergraph(&mut rng, 12, 40, 0.5)?;
        let approx = approx_max_vc_dimension(&h)?;
        let exact = vc_dimension(&h)?;
        assert!(2 * approx.dimension >= exact.value);
        println!(
            "instance {i}: approx {} {:?}, exact {} {:?}",
            approx.dimension,
            approx.shattered.to_one_based(),
            exact.value,
            exact.witness.to_one_based()
        );
    }
    Ok(())
}
