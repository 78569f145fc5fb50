//! Lower and upper approximations over an information table.

use granum::sets::{parse_information_table, rough_equality, Approximation, ApproximationContext, TableFormat};

fn main() -> granum::error::Result<()> {
    let table = parse_information_table(include_str!("data/fixture_a.csv"), TableFormat::Csv)?;
    let ctx = ApproximationContext::from_table(&table, table.attributes())?;
    let u = ctx.universe();
    println!("granules:");
    for g in ctx.granulation().granules() {
        println!("  {}", u.display(g));
    }

    for names in [vec!["1", "3", "4"], vec!["3", "4", "5"], vec!["2"]] {
        let a = u.region(&names)?;
        println!(
            "{}  lower {}  upper {}",
            u.display(&a),
            u.display(&ctx.lower(&a)),
            u.display(&ctx.upper(&a))
        );
    }

    // {1} and {2} sit in the same granule, so they are roughly equal.
    let one = u.region(["1"])?;
    let two = u.region(["2"])?;
    println!("{{1}} ~ {{2}}: {}", rough_equality(&one, &two, ctx.granulation()));

    // Using only the size attribute coarsens the partition.
    let coarse = ApproximationContext::from_table(&table, &["size"])?;
    println!("by size alone: {} granules", coarse.granulation().len());
    Ok(())
}
