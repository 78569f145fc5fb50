//! HPCA passes with deferred markers, and a search over arrangements.

use granum::counting::{
    find_coherent_order, hpca_count, is_hpca_coherent, ConflictGraph, MarkingRule, OrderArrangement, SearchConfig,
};
use granum::fixtures;
use granum::parthood::ConflictMode;

fn main() -> granum::error::Result<()> {
    let poset = fixtures::fixture_p();
    let names = poset.names();
    let graph = ConflictGraph::from_poset(&poset, ConflictMode::Comparability);

    for marking in MarkingRule::ALL {
        println!("marking: {marking}");
        let (trace, decomposition) = hpca_count(&OrderArrangement::canonical(4), &graph, marking);
        print!("{}", trace.render_text(names));
        println!("coherent: {:?}", decomposition.coherent);
    }

    let reversed = OrderArrangement::permutation(vec![3, 2, 1, 0])?;
    println!(
        "reversed order coherent: {}",
        is_hpca_coherent(&reversed, &graph, MarkingRule::default())
    );

    let search = find_coherent_order(&graph, SearchConfig::default());
    println!(
        "search examined {} arrangements (exhaustive: {}), first coherent: {:?}",
        search.examined,
        search.exhaustive,
        search.found.map(|o| o.sequence().to_vec())
    );
    Ok(())
}
