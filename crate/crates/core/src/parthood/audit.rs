//! Empirical auditing of order-theoretic laws for a parthood predicate.
//!
//! Verdicts are measured on the context at hand, never assumed. Every
//! failing verdict carries witnesses that re-evaluate to a violation.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bitset::BitSet;
use crate::parthood::Parthood;
use crate::sets::{canonical_regions, Approximation, Region, Signature, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Reflexive,
    Transitive,
    Antisymmetric,
    /// `P(a,b) & P(a,c) → ∃e. P(b,e) & P(c,e)`
    StrictlyConfluent,
    /// The same law stated for proper parthood throughout.
    StrictlyConfluentProper,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::Reflexive,
        Property::Transitive,
        Property::Antisymmetric,
        Property::StrictlyConfluent,
        Property::StrictlyConfluentProper,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::Reflexive => "reflexive",
            Property::Transitive => "transitive",
            Property::Antisymmetric => "antisymmetric",
            Property::StrictlyConfluent => "strictly-confluent",
            Property::StrictlyConfluentProper => "strictly-confluent-proper",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    HoldsExhaustively,
    HoldsOnSample,
    /// Sampling could neither confirm nor refute (existential laws only).
    Undetermined,
    Fails,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::HoldsExhaustively => "holds-exhaustively",
            Verdict::HoldsOnSample => "holds-on-sample",
            Verdict::Undetermined => "undetermined",
            Verdict::Fails => "fails",
        }
    }

    pub fn holds(self) -> bool {
        matches!(self, Verdict::HoldsExhaustively | Verdict::HoldsOnSample)
    }
}

/// Regions witnessing a violation; arity depends on the property.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness(pub Vec<Region>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scope {
    Exhaustive { regions: usize },
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct PropertyFinding {
    pub property: Property,
    pub verdict: Verdict,
    /// Total violations found (may exceed the number of witnesses kept).
    pub violations: usize,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub variant: String,
    pub scope: Scope,
    pub findings: Vec<PropertyFinding>,
}

impl PropertyReport {
    pub fn finding(&self, p: Property) -> Option<&PropertyFinding> {
        self.findings.iter().find(|f| f.property == p)
    }

    pub fn verdict(&self, p: Property) -> Option<Verdict> {
        self.finding(p).map(|f| f.verdict)
    }

    pub fn to_json(&self, universe: &Universe) -> Value {
        let scope = match &self.scope {
            Scope::Exhaustive { regions } => json!({"mode": "exhaustive", "regions": regions}),
            Scope::Sampled { samples, seed } => json!({"mode": "sampled", "samples": samples, "seed": seed}),
        };
        let findings: serde_json::Map<String, Value> = self
            .findings
            .iter()
            .map(|f| {
                let witnesses: Vec<Value> = f
                    .witnesses
                    .iter()
                    .map(|w| json!(w.0.iter().map(|r| universe.names_of(r)).collect::<Vec<_>>()))
                    .collect();
                (
                    f.property.as_str().to_string(),
                    json!({"verdict": f.verdict.as_str(), "violations": f.violations, "witnesses": witnesses}),
                )
            })
            .collect();
        json!({"variant": self.variant, "scope": scope, "properties": findings})
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AuditBudget {
    /// Largest universe scanned exhaustively.
    pub exhaustive_cap: usize,
    /// Sample count used above the cap.
    pub samples: usize,
    pub seed: u64,
    /// Witnesses kept per property.
    pub witness_cap: usize,
}

impl Default for AuditBudget {
    fn default() -> Self {
        AuditBudget {
            exhaustive_cap: 5,
            samples: 4096,
            seed: 0x5EED,
            witness_cap: 8,
        }
    }
}

/// Parthood verdicts over every region of a small universe, as bit rows.
struct RelationMatrix {
    pub regions: Vec<Region>,
    pub rows: Vec<BitSet>,
    pub cols: Vec<BitSet>,
}

impl RelationMatrix {
    pub fn build<P: Parthood, C: Approximation + Sync + ?Sized>(v: &P, ctx: &C) -> Self {
        let regions = canonical_regions(ctx.universe().size());
        let sigs: Vec<Signature> = regions.iter().map(|r| ctx.signature(r)).collect();
        let g = ctx.granulation();
        let m = regions.len();
        let rows: Vec<BitSet> = (0..m)
            .into_par_iter()
            .map(|i| {
                BitSet::from_indices(
                    m,
                    (0..m).filter(|&j| v.holds_on(&regions[i], &sigs[i], &regions[j], &sigs[j], g)),
                )
            })
            .collect();
        let mut cols = vec![BitSet::empty(m); m];
        for (i, row) in rows.iter().enumerate() {
            for j in row.iter() {
                cols[j].insert(i);
            }
        }
        RelationMatrix { regions, rows, cols }
    }

    fn proper_rows(&self) -> Vec<BitSet> {
        self.rows.iter().zip(&self.cols).map(|(r, c)| r.difference(c)).collect()
    }
}

/// Measures reflexivity, transitivity, antisymmetry and strict confluence.
///
/// Universes up to `budget.exhaustive_cap` are scanned over all regions
/// (pairs and triples); larger ones are sampled with the budget's seed.
pub fn audit_properties<P: Parthood, C: Approximation + Sync + ?Sized>(
    v: &P,
    ctx: &C,
    budget: &AuditBudget,
) -> PropertyReport {
    audit_selected(v, ctx, budget, &Property::ALL)
}

/// Plain transitivity and strict confluence, the two implemented readings of
/// "generalized transitive".
pub fn audit_generalized_transitivity<P: Parthood, C: Approximation + Sync + ?Sized>(
    v: &P,
    ctx: &C,
    budget: &AuditBudget,
) -> PropertyReport {
    audit_selected(
        v,
        ctx,
        budget,
        &[
            Property::Transitive,
            Property::StrictlyConfluent,
            Property::StrictlyConfluentProper,
        ],
    )
}

fn audit_selected<P: Parthood, C: Approximation + Sync + ?Sized>(
    v: &P,
    ctx: &C,
    budget: &AuditBudget,
    properties: &[Property],
) -> PropertyReport {
    let n = ctx.universe().size();
    if n <= budget.exhaustive_cap && n <= 12 {
        let matrix = RelationMatrix::build(v, ctx);
        let findings = properties
            .iter()
            .map(|&p| exhaustive_finding(&matrix, p, budget.witness_cap))
            .collect();
        PropertyReport {
            variant: v.name(),
            scope: Scope::Exhaustive {
                regions: matrix.regions.len(),
            },
            findings,
        }
    } else {
        let findings = properties.iter().map(|&p| sampled_finding(v, ctx, p, budget)).collect();
        PropertyReport {
            variant: v.name(),
            scope: Scope::Sampled {
                samples: budget.samples,
                seed: budget.seed,
            },
            findings,
        }
    }
}

fn finish(property: Property, per_row: Vec<(usize, Vec<Witness>)>, cap: usize, exhaustive: bool) -> PropertyFinding {
    let violations = per_row.iter().map(|(c, _)| c).sum();
    let witnesses: Vec<Witness> = per_row.into_iter().flat_map(|(_, w)| w).take(cap).collect();
    let verdict = if violations > 0 {
        Verdict::Fails
    } else if exhaustive {
        Verdict::HoldsExhaustively
    } else {
        Verdict::HoldsOnSample
    };
    PropertyFinding {
        property,
        verdict,
        violations,
        witnesses,
    }
}

fn exhaustive_finding(matrix: &RelationMatrix, property: Property, cap: usize) -> PropertyFinding {
    let m = matrix.regions.len();
    let regions = &matrix.regions;
    let proper;
    let rows: &[BitSet] = match property {
        Property::StrictlyConfluentProper => {
            proper = matrix.proper_rows();
            &proper
        }
        _ => &matrix.rows,
    };
    // Each row is scanned independently; results are concatenated in row order.
    let per_row: Vec<(usize, Vec<Witness>)> = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut count = 0;
            let mut ws = Vec::new();
            let mut push = |w: Vec<usize>| {
                count += 1;
                if ws.len() < cap {
                    ws.push(Witness(w.into_iter().map(|i| regions[i].clone()).collect()));
                }
            };
            match property {
                Property::Reflexive => {
                    if !rows[a].contains(a) {
                        push(vec![a]);
                    }
                }
                Property::Transitive => {
                    for b in rows[a].iter() {
                        for c in rows[b].difference(&rows[a]).iter() {
                            push(vec![a, b, c]);
                        }
                    }
                }
                Property::Antisymmetric => {
                    for b in rows[a].iter().filter(|&b| b > a) {
                        if rows[b].contains(a) {
                            push(vec![a, b]);
                        }
                    }
                }
                Property::StrictlyConfluent | Property::StrictlyConfluentProper => {
                    let succ: Vec<usize> = rows[a].iter().collect();
                    for (i, &b) in succ.iter().enumerate() {
                        for &c in &succ[i..] {
                            if rows[b].is_disjoint(&rows[c]) {
                                push(vec![a, b, c]);
                            }
                        }
                    }
                }
            }
            (count, ws)
        })
        .collect();
    finish(property, per_row, cap, true)
}

fn random_region<R: Rng>(n: usize, rng: &mut R) -> Region {
    Region::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)))
}

fn sampled_finding<P: Parthood, C: Approximation + ?Sized>(
    v: &P,
    ctx: &C,
    property: Property,
    budget: &AuditBudget,
) -> PropertyFinding {
    let n = ctx.universe().size();
    let g = ctx.granulation();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed ^ property as u64);
    let holds = |a: &(Region, Signature), b: &(Region, Signature)| v.holds_on(&a.0, &a.1, &b.0, &b.1, g);
    let proper = |a: &(Region, Signature), b: &(Region, Signature)| holds(a, b) && !holds(b, a);
    let draw = |rng: &mut ChaCha8Rng| {
        let r = random_region(n, rng);
        let s = ctx.signature(&r);
        (r, s)
    };
    let pool: Vec<(Region, Signature)> = {
        let mut p = vec![
            (
                ctx.universe().full_region(),
                ctx.signature(&ctx.universe().full_region()),
            ),
            (
                ctx.universe().empty_region(),
                ctx.signature(&ctx.universe().empty_region()),
            ),
        ];
        p.extend((0..64).map(|_| draw(&mut rng)));
        p
    };

    let mut count = 0;
    let mut undetermined = 0;
    let mut witnesses = Vec::new();
    let mut record = |w: Vec<Region>, count: &mut usize| {
        *count += 1;
        if witnesses.len() < budget.witness_cap {
            witnesses.push(Witness(w));
        }
    };
    for _ in 0..budget.samples {
        match property {
            Property::Reflexive => {
                let a = draw(&mut rng);
                if !holds(&a, &a) {
                    record(vec![a.0], &mut count);
                }
            }
            Property::Transitive => {
                let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
                if holds(&a, &b) && holds(&b, &c) && !holds(&a, &c) {
                    record(vec![a.0, b.0, c.0], &mut count);
                }
            }
            Property::Antisymmetric => {
                let (a, b) = (draw(&mut rng), draw(&mut rng));
                if a.0 != b.0 && holds(&a, &b) && holds(&b, &a) {
                    record(vec![a.0, b.0], &mut count);
                }
            }
            Property::StrictlyConfluent | Property::StrictlyConfluentProper => {
                let rel = |x: &(Region, Signature), y: &(Region, Signature)| {
                    if property == Property::StrictlyConfluent {
                        holds(x, y)
                    } else {
                        proper(x, y)
                    }
                };
                let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
                if rel(&a, &b) && rel(&a, &c) && !pool.iter().any(|e| rel(&b, e) && rel(&c, e)) {
                    // No joint upper bound in the pool: not a proof of failure.
                    undetermined += 1;
                }
            }
        }
    }
    let mut f = finish(property, vec![(count, witnesses)], budget.witness_cap, false);
    if f.verdict == Verdict::HoldsOnSample && undetermined > 0 {
        f.verdict = Verdict::Undetermined;
    }
    f
}

/// Re-evaluates a failing witness from scratch. `true` means the witness is a
/// genuine violation of `property` under `v`.
pub fn witness_is_violation<P: Parthood, C: Approximation + ?Sized>(
    v: &P,
    ctx: &C,
    property: Property,
    w: &Witness,
) -> bool {
    let r = &w.0;
    let p = |a: &Region, b: &Region| v.holds(a, b, ctx);
    let pp = |a: &Region, b: &Region| p(a, b) && !p(b, a);
    match (property, r.as_slice()) {
        (Property::Reflexive, [a]) => !p(a, a),
        (Property::Transitive, [a, b, c]) => p(a, b) && p(b, c) && !p(a, c),
        (Property::Antisymmetric, [a, b]) => a != b && p(a, b) && p(b, a),
        (Property::StrictlyConfluent, [a, b, c]) => {
            p(a, b) && p(a, c) && !ctx.universe().all_regions().any(|e| p(b, &e) && p(c, &e))
        }
        (Property::StrictlyConfluentProper, [a, b, c]) => {
            pp(a, b) && pp(a, c) && !ctx.universe().all_regions().any(|e| pp(b, &e) && pp(c, &e))
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::parthood::ParthoodVariant::*;

    #[test]
    fn bilateral_on_fixture_a() {
        let ctx = fixtures::fixture_a();
        let rep = audit_properties(&Bilateral, &ctx, &AuditBudget::default());
        assert_eq!(rep.scope, Scope::Exhaustive { regions: 32 });
        assert_eq!(rep.verdict(Property::Reflexive), Some(Verdict::HoldsExhaustively));
        assert_eq!(rep.verdict(Property::Transitive), Some(Verdict::HoldsExhaustively));
    }

    #[test]
    fn lateral_plus_plus_confluent_on_fixture_a() {
        let ctx = fixtures::fixture_a();
        let rep = audit_properties(&LateralPlusPlus, &ctx, &AuditBudget::default());
        assert_eq!(
            rep.verdict(Property::StrictlyConfluent),
            Some(Verdict::HoldsExhaustively)
        );
        // Not reflexive: a region with a nonempty boundary outside its lower.
        assert_eq!(rep.verdict(Property::Reflexive), Some(Verdict::Fails));
    }

    #[test]
    fn lateral_reflexivity_fails_at_three() {
        let ctx = fixtures::fixture_a();
        let rep = audit_properties(&Lateral, &ctx, &AuditBudget::default());
        let f = rep.finding(Property::Reflexive).unwrap();
        assert_eq!(f.verdict, Verdict::Fails);
        let three = ctx.universe().region(["3"]).unwrap();
        assert_eq!(f.witnesses[0], Witness(vec![three]));
        for w in &f.witnesses {
            assert!(witness_is_violation(&Lateral, &ctx, Property::Reflexive, w));
        }
    }

    #[test]
    fn every_witness_reverifies() {
        let ctx = fixtures::fixture_a();
        for v in crate::parthood::ParthoodVariant::ALL {
            let rep = audit_properties(&v, &ctx, &AuditBudget::default());
            for f in &rep.findings {
                assert_eq!(
                    f.verdict == Verdict::Fails,
                    !f.witnesses.is_empty(),
                    "{v} {}",
                    f.property
                );
                for w in &f.witnesses {
                    assert!(
                        witness_is_violation(&v, &ctx, f.property, w),
                        "{v} {} {w:?}",
                        f.property
                    );
                }
            }
        }
    }

    #[test]
    fn sampled_mode_above_cap() {
        let ctx = fixtures::fixture_a();
        let budget = AuditBudget {
            exhaustive_cap: 3,
            samples: 500,
            ..AuditBudget::default()
        };
        let rep = audit_properties(&RoughInclusion, &ctx, &budget);
        assert!(matches!(rep.scope, Scope::Sampled { samples: 500, .. }));
        assert_eq!(rep.verdict(Property::Reflexive), Some(Verdict::HoldsOnSample));
        assert_eq!(rep.verdict(Property::Transitive), Some(Verdict::HoldsOnSample));
        let lat = audit_properties(&Lateral, &ctx, &budget);
        assert_eq!(lat.verdict(Property::Reflexive), Some(Verdict::Fails));
    }

    #[test]
    fn generalized_transitivity_subset() {
        let ctx = fixtures::fixture_a();
        let rep = audit_generalized_transitivity(&Cautious, &ctx, &AuditBudget::default());
        assert_eq!(rep.findings.len(), 3);
        assert!(rep.finding(Property::Reflexive).is_none());
    }
}
