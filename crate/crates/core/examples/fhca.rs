//! FHCA: delegation on coherent orders and the permuting strategies.

use granum::counting::{fhca_count, fhca_permuting, ConflictGraph, MarkingRule, OrderArrangement, PermutationStrategy};
use granum::fixtures;
use granum::parthood::ConflictMode;

fn main() -> granum::error::Result<()> {
    let poset = fixtures::named_posets()
        .into_iter()
        .find(|(n, _)| *n == "n-poset")
        .unwrap()
        .1;
    let names = poset.names();
    let graph = ConflictGraph::from_poset(&poset, ConflictMode::Comparability);
    let seq = OrderArrangement::canonical(poset.size());

    let out = fhca_count(&seq, &graph, PermutationStrategy::Rotation, 8, MarkingRule::default())?;
    println!("delegated: {}, complete: {}", out.delegated, out.complete);

    for strategy in [PermutationStrategy::Rotation, PermutationStrategy::Random { seed: 7 }] {
        let out = fhca_permuting(&seq, &graph, strategy, 8, MarkingRule::default())?;
        println!("strategy {strategy}: stop {:?}", out.trace.stop);
        for a in &out.antichains {
            println!("  {:?}", a.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>());
        }
    }
    Ok(())
}
