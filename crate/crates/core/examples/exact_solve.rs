//! Exact solvers on the neighborhood hypergraphs of small paths.
//!
//! Run with `cargo run --example exact_solve`.

use partial_vc::exact::{
    min_distinguishing_transversal, solve_max_partial_vc, solve_partial_vc_decision, vc_dimension,
};
use partial_vc::{neighborhood_hypergraph, Graph};

fn main() -> partial_vc::Result<()> {
    let p3 = neighborhood_hypergraph(&Graph::from_one_based(3, &[(1, 2), (2, 3)])?);
    let p2 = neighborhood_hypergraph(&Graph::from_one_based(2, &[(1, 2)])?);

    for (name, h) in [("P3", &p3), ("P2", &p2)] {
        let d = solve_partial_vc_decision(h, 1, 2)?;
        println!("{name}: one vertex, two classes? {:?} (witness {:?})", d.decided, d.witness.to_one_based());
    }

    for k in 0..=3 {
        let r = solve_max_partial_vc(&p3, k)?;
        println!("P3, k={k}: {} classes with {:?}", r.value, r.witness.to_one_based());
    }

    let p5 = neighborhood_hypergraph(&Graph::from_one_based(5, &[(1, 2), (2, 3), (3, 4), (4, 5)])?);
    let vc = vc_dimension(&p5)?;
    println!("P5: VC dimension {} shattered by {:?}", vc.value, vc.witness.to_one_based());
    let dt = min_distinguishing_transversal(&p5)?;
    println!("P5: smallest distinguishing transversal {:?}", dt.witness.to_one_based());
    Ok(())
}
