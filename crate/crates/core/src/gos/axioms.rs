//! Audits of the granular operator space axioms.
//!
//! Universes up to [`AxiomConfig::exhaustive_cap`] are checked over every
//! region; larger ones are sampled and the report says so.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::gos::GranularOperatorSpace;
use crate::parthood::Parthood;
use crate::sets::{canonical_regions, Approximation, Region, Universe};

#[derive(Clone, Copy, Debug)]
pub struct AxiomConfig {
    pub exhaustive_cap: usize,
    pub samples: usize,
    pub seed: u64,
    pub witness_cap: usize,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        AxiomConfig {
            exhaustive_cap: 14,
            samples: 4096,
            seed: 0x5EED,
            witness_cap: 16,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomScope {
    Exhaustive { regions: usize },
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomWitness {
    pub regions: Vec<Region>,
    pub detail: String,
}

/// Result of the full-underlap search for one granule pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnderlapResult {
    pub first: usize,
    pub second: usize,
    pub witness: Option<Region>,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub axiom: &'static str,
    pub passed: bool,
    pub scope: AxiomScope,
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<AxiomWitness>,
    /// Only filled by the full-underlap audit.
    pub pairs: Vec<UnderlapResult>,
}

impl AxiomReport {
    pub fn to_json(&self, universe: &Universe) -> Value {
        let scope = match self.scope {
            AxiomScope::Exhaustive { regions } => json!({"mode": "exhaustive", "regions": regions}),
            AxiomScope::Sampled { samples, seed } => json!({"mode": "sampled", "samples": samples, "seed": seed}),
        };
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|w| {
                json!({
                    "regions": w.regions.iter().map(|r| universe.names_of(r)).collect::<Vec<_>>(),
                    "detail": w.detail,
                })
            })
            .collect();
        let mut v = json!({
            "axiom": self.axiom,
            "passed": self.passed,
            "scope": scope,
            "checked": self.checked,
            "failures": self.failures,
            "witnesses": witnesses,
        });
        if !self.pairs.is_empty() {
            v["pairs"] = self
                .pairs
                .iter()
                .map(|p| {
                    json!({
                        "granules": [p.first, p.second],
                        "witness": p.witness.as_ref().map(|z| universe.names_of(z)),
                    })
                })
                .collect();
        }
        v
    }
}

enum Domain {
    All(Vec<Region>),
    Sample(Vec<Region>, u64),
}

impl Domain {
    fn new(universe: &Universe, cfg: &AxiomConfig, salt: u64) -> Domain {
        let n = universe.size();
        if n <= cfg.exhaustive_cap && n <= 20 {
            Domain::All(canonical_regions(n))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ salt);
            let mut v = vec![universe.empty_region(), universe.full_region()];
            v.extend((0..cfg.samples).map(|_| Region::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)))));
            Domain::Sample(v, cfg.seed)
        }
    }

    fn regions(&self) -> &[Region] {
        match self {
            Domain::All(v) | Domain::Sample(v, _) => v,
        }
    }

    fn scope(&self) -> AxiomScope {
        match self {
            Domain::All(v) => AxiomScope::Exhaustive { regions: v.len() },
            Domain::Sample(v, seed) => AxiomScope::Sampled {
                samples: v.len(),
                seed: *seed,
            },
        }
    }
}

fn collect_report(
    axiom: &'static str,
    scope: AxiomScope,
    checked: usize,
    found: Vec<AxiomWitness>,
    cap: usize,
) -> AxiomReport {
    let failures = found.len();
    AxiomReport {
        axiom,
        passed: failures == 0,
        scope,
        checked,
        failures,
        witnesses: found.into_iter().take(cap).collect(),
        pairs: Vec::new(),
    }
}

/// Weak RA: every lower and upper approximation is a union of granules.
pub fn audit_wra(gos: &GranularOperatorSpace, cfg: &AxiomConfig) -> AxiomReport {
    let domain = Domain::new(gos.universe(), cfg, 1);
    let g = gos.granulation();
    let found: Vec<AxiomWitness> = domain
        .regions()
        .par_iter()
        .flat_map_iter(|x| {
            let mut out = Vec::new();
            for (side, image) in [("lower", gos.lower(x)), ("upper", gos.upper(x))] {
                if !g.is_union_of_granules(&image) {
                    out.push(AxiomWitness {
                        regions: vec![x.clone(), image],
                        detail: format!("{side} approximation is not a union of granules"),
                    });
                }
            }
            out
        })
        .collect();
    collect_report(
        "weak-ra",
        domain.scope(),
        domain.regions().len(),
        found,
        cfg.witness_cap,
    )
}

/// Lower stability: `P(y, x) → P(y, x^l)` for every granule `y`.
pub fn audit_lower_stability(gos: &GranularOperatorSpace, cfg: &AxiomConfig) -> AxiomReport {
    let domain = Domain::new(gos.universe(), cfg, 2);
    let p = gos.parthood();
    let granules = gos.granulation().granules();
    let found: Vec<AxiomWitness> = domain
        .regions()
        .par_iter()
        .flat_map_iter(|x| {
            let xl = gos.lower(x);
            granules
                .iter()
                .filter(|y| p.holds(y, x, gos) && !p.holds(y, &xl, gos))
                .map(|y| AxiomWitness {
                    regions: vec![y.clone(), x.clone()],
                    detail: "granule is part of x but not of its lower approximation".into(),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    collect_report(
        "lower-stability",
        domain.scope(),
        domain.regions().len() * granules.len(),
        found,
        cfg.witness_cap,
    )
}

/// Whether `z` is definite and properly above both granules under the space's parthood.
pub fn is_underlap_witness(gos: &GranularOperatorSpace, x: &Region, y: &Region, z: &Region) -> bool {
    let p = gos.parthood();
    let proper = |a: &Region, b: &Region| p.holds(a, b, gos) && !p.holds(b, a, gos);
    gos.is_definite(z) && proper(x, z) && proper(y, z)
}

/// Full underlap: every pair of granules (a granule paired with itself
/// included) has a definite region properly above both.
pub fn audit_full_underlap(gos: &GranularOperatorSpace, cfg: &AxiomConfig) -> AxiomReport {
    let mut domain = Domain::new(gos.universe(), cfg, 3);
    let granules = gos.granulation().granules();
    if let Domain::Sample(v, _) = &mut domain {
        // Unions of granules are the natural definite candidates.
        for x in granules {
            for y in granules {
                v.push(gos.upper(&x.union(y)));
            }
        }
    }
    let definite: Vec<&Region> = domain.regions().iter().filter(|z| gos.is_definite(z)).collect();
    let index_pairs: Vec<(usize, usize)> = (0..granules.len())
        .flat_map(|i| (i..granules.len()).map(move |j| (i, j)))
        .collect();
    let pairs: Vec<UnderlapResult> = index_pairs
        .par_iter()
        .map(|&(i, j)| UnderlapResult {
            first: i,
            second: j,
            witness: definite
                .iter()
                .find(|z| is_underlap_witness(gos, &granules[i], &granules[j], z))
                .map(|z| (*z).clone()),
        })
        .collect();
    let found = pairs
        .iter()
        .filter(|p| p.witness.is_none())
        .map(|p| AxiomWitness {
            regions: vec![granules[p.first].clone(), granules[p.second].clone()],
            detail: "no definite region properly above both granules".into(),
        })
        .collect();
    let mut report = collect_report("full-underlap", domain.scope(), pairs.len(), found, cfg.witness_cap);
    report.pairs = pairs;
    report
}

/// `lower(A) ⊆ upper(A)` for every region.
pub fn audit_lower_within_upper(gos: &GranularOperatorSpace, cfg: &AxiomConfig) -> AxiomReport {
    let domain = Domain::new(gos.universe(), cfg, 4);
    let found: Vec<AxiomWitness> = domain
        .regions()
        .par_iter()
        .filter_map(|x| {
            let (l, u) = (gos.lower(x), gos.upper(x));
            (!l.is_subset(&u)).then(|| AxiomWitness {
                regions: vec![x.clone(), l, u],
                detail: "lower approximation not inside upper".into(),
            })
        })
        .collect();
    collect_report(
        "lower-within-upper",
        domain.scope(),
        domain.regions().len(),
        found,
        cfg.witness_cap,
    )
}
