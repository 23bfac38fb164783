//! Level deletion on grid graphs for both the maximization and the
//! distinguishing transversal problem.

use partial_vc::exact::{min_distinguishing_transversal, solve_max_partial_vc};
use partial_vc::generate::grid;
use partial_vc::planar::{baker_max_partial_vc, baker_min_distinguishing};
use partial_vc::{neighborhood_hypergraph, LeveledPlanarGraph};

fn main() -> partial_vc::Result<()> {
    for side in [3, 4, 5] {
        let (g, levels) = grid(side, side);
        let lg = LeveledPlanarGraph::new(g, levels)?;
        let h = neighborhood_hypergraph(lg.graph());
        for eps in [0.5, 1.0, 2.0] {
            let b = baker_max_partial_vc(&lg, 3, eps)?;
            let opt = solve_max_partial_vc(&h, 3)?.value;
            println!(
                "{side}x{side} k=3 eps={eps}: baker {} (lambda {}, residue {}), opt {opt}",
                b.result.value, b.lambda, b.residue
            );
        }
        let m = baker_min_distinguishing(&lg, 1.0)?;
        let opt = min_distinguishing_transversal(&h)?.value;
        println!(
            "{side}x{side} transversal eps=1: {} vertices {:?}, opt {opt}",
            m.result.value,
            m.result.witness.to_one_based()
        );
    }
    Ok(())
}
