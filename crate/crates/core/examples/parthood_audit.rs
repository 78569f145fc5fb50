//! Which order laws each parthood variant satisfies on a small context.

use granum::fixtures;
use granum::parthood::{audit_properties, AuditBudget, Parthood, ParthoodVariant, Property};
use granum::sets::Approximation;

fn main() {
    let ctx = fixtures::fixture_a();
    let u = ctx.universe();
    let budget = AuditBudget::default();
    print!("{:<18}", "");
    for p in Property::ALL {
        print!(" {:>12}", p.as_str());
    }
    println!();
    for v in ParthoodVariant::ALL {
        let report = audit_properties(&v, &ctx, &budget);
        print!("{:<18}", v.name());
        for p in Property::ALL {
            let mark = report.verdict(p).map_or("-", |x| if x.holds() { "yes" } else { "no" });
            print!(" {mark:>12}");
        }
        println!();
    }

    let lateral = audit_properties(&ParthoodVariant::Lateral, &ctx, &budget);
    if let Some(w) = lateral.finding(Property::Reflexive).and_then(|f| f.witnesses.first()) {
        println!("lateral is not reflexive: {}", u.display(&w.0[0]));
    }
}
