//! First-fit counting into antichains, checked against the enumerated
//! maximal antichains.

use granum::counting::{pca_count, verify_decomposition, ConflictGraph, OrderArrangement};
use granum::fixtures;
use granum::oracles::enumerate_maximal_antichains;
use granum::parthood::ConflictMode;

fn main() -> granum::error::Result<()> {
    let poset = fixtures::fixture_p();
    let graph = ConflictGraph::from_poset(&poset, ConflictMode::Comparability);
    let trace = pca_count(&OrderArrangement::canonical(poset.size()), &graph);
    let names = poset.names();
    print!("{}", trace.render_text(names));

    let decomposition = verify_decomposition(&trace, &graph);
    print!("{}", decomposition.render_text(names));

    println!("maximal antichains:");
    for a in enumerate_maximal_antichains(&graph)? {
        println!("  {:?}", a.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>());
    }
    Ok(())
}
