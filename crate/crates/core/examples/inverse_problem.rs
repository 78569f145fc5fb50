//! Deciding whether lower/upper pairs come from a single partition.

use granum::oracles::{inverse_rough_check, InverseOutcome, PairsFile};

fn report(label: &str, text: &str) -> granum::error::Result<()> {
    let file = PairsFile::parse(text)?;
    let (universe, pairs) = file.resolve()?;
    let outcome = inverse_rough_check(&pairs, universe.size())?;
    print!("{label}: ");
    match &outcome {
        InverseOutcome::Realizable(w) => {
            let blocks: Vec<String> = w.partition.blocks().iter().map(|b| universe.display(b)).collect();
            println!("yes, partition {}", blocks.join(" "));
            for ((a, b), x) in pairs.iter().zip(&w.realizations) {
                println!(
                    "  ({}, {}) <- {}",
                    universe.display(a),
                    universe.display(b),
                    universe.display(x)
                );
            }
        }
        InverseOutcome::Filtered { pair, reason } => println!("no, pair {pair}: {reason}"),
        InverseOutcome::NoPartition { examined } => println!("no, {examined} partitions examined"),
    }
    Ok(())
}

fn main() -> granum::error::Result<()> {
    report("yes", include_str!("data/pairs_yes.json"))?;
    report("no", include_str!("data/pairs_no.json"))?;
    report("hidden", include_str!("data/pairs_hidden.json"))
}
