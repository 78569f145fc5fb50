//! Labelling a sequence by the order of its indiscernibility types.

use granum::counting::{hpc_count, OrderArrangement};
use granum::relation::Relation;

fn main() -> granum::error::Result<()> {
    let names: Vec<String> = ["x", "y", "z", "w"].map(String::from).to_vec();
    // x and y are indiscernible from each other, as are z and w.
    let related = Relation::from_pairs(4, [(0, 1), (1, 0), (2, 3), (3, 2)]);
    let trace = hpc_count(&OrderArrangement::canonical(4), &related)?;
    print!("{}", trace.render_text(&names));
    println!("{}", trace.label_strings(0).join(" "));
    Ok(())
}
