//! Building reduction instances and checking their identities by brute force.

use partial_vc::exact::SearchConfig;
use partial_vc::generate::{complete_graph, cycle_graph};
use partial_vc::reductions::{
    clique_to_vcdim, is_to_disting_transversal, mpvc_to_mpvcd, verify_reduction, Variant,
};

fn main() -> partial_vc::Result<()> {
    let cfg = SearchConfig::default();

    for (name, g) in [("K4", complete_graph(4)), ("C5", cycle_graph(5))] {
        for variant in [Variant::Bipartite, Variant::Split, Variant::CoBipartite] {
            let cert = clique_to_vcdim(&g, 4, variant)?;
            let v = verify_reduction(&cert, &cfg)?;
            println!(
                "{name} {variant}: clique number {}, target VC dimension {}, holds {}",
                v.source_opt, v.target_opt, v.holds
            );
        }
    }

    let c5 = cycle_graph(5);
    let cert = is_to_disting_transversal(&c5, 2)?;
    let v = verify_reduction(&cert, &cfg)?;
    println!("C5 independent set 2: {} | alpha {}, dt {}, holds {}", cert.identity(), v.source_opt, v.target_opt, v.holds);

    let k4 = complete_graph(4);
    let cert = mpvc_to_mpvcd(&k4, 1)?;
    let v = verify_reduction(&cert, &cfg)?;
    println!(
        "K4 cover budget 1: {} | {} vs {}, holds {}",
        cert.identity(),
        v.source_opt,
        v.target_opt,
        v.holds
    );
    Ok(())
}
