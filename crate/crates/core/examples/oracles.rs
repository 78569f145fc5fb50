//! Brute-force oracles: signatures, maximal antichains and the Mirsky cover.

use granum::fixtures;
use granum::oracles::{brute_force_signatures, poset_antichain_cover};
use granum::sets::{Approximation, ApproximationContext};

fn main() -> granum::error::Result<()> {
    let ctx: ApproximationContext = fixtures::fixture_a();
    let u = ctx.universe();
    let sigs = brute_force_signatures(ctx.granulation())?;
    let agree = u
        .all_regions()
        .zip(&sigs)
        .all(|(a, (l, up))| ctx.lower(&a) == *l && ctx.upper(&a) == *up);
    println!("{} signatures, formulas agree: {agree}", sigs.len());

    for (name, poset) in fixtures::named_posets() {
        let cover = poset_antichain_cover(&poset);
        let levels: Vec<Vec<&str>> = cover
            .levels
            .iter()
            .map(|l| l.iter().map(|&i| poset.names()[i].as_str()).collect())
            .collect();
        println!("{name:<12} height {}  levels {levels:?}", cover.len());
    }
    Ok(())
}
