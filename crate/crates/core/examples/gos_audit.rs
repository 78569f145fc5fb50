//! Axiom audit, rough objects and interval representation of a granular
//! operator space.

use granum::fixtures;
use granum::gos::{
    audit_full_underlap, audit_lower_stability, audit_lower_within_upper, audit_wra, interval_representation,
    knowledge_validity_check, rough_objects, AxiomConfig, GranularOperatorSpace, RoughObjectNotion,
};
use granum::parthood::ParthoodVariant;
use granum::sets::{Approximation, ApproximationContext};

fn main() -> granum::error::Result<()> {
    let cfg = AxiomConfig::default();
    let gos = GranularOperatorSpace::granular(fixtures::fixture_a(), ParthoodVariant::RoughInclusion);
    let u = gos.universe().clone();

    for report in [
        audit_wra(&gos, &cfg),
        audit_lower_stability(&gos, &cfg),
        audit_full_underlap(&gos, &cfg),
        audit_lower_within_upper(&gos, &cfg),
    ] {
        println!("{:<24} {}", report.axiom, if report.passed { "pass" } else { "fail" });
    }

    let q = rough_objects(&gos, RoughObjectNotion::MaximalConsistent)?;
    let rep = interval_representation(&q, &gos);
    println!(
        "{} rough objects, {} crisp, {} properly rough",
        q.len(),
        rep.k,
        rep.rough.len()
    );
    for img in rep.phi.iter().take(4) {
        println!(
            "  class {} -> ({}, {})",
            img.class,
            u.display(&img.lower),
            u.display(&img.upper)
        );
    }

    // Overlapping granules break lower stability for some regions.
    let cover = ApproximationContext::from_names(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]])?;
    let gos = GranularOperatorSpace::granular(cover, ParthoodVariant::RoughInclusion);
    let knowledge = knowledge_validity_check(&gos.universe().region(["a", "b"])?, &gos);
    for check in &knowledge.checks {
        println!("{}: {}", check.equation, check.holds);
    }
    Ok(())
}
