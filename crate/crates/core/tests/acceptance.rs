//! Acceptance harness: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance`. The process fails when a
//! criterion fails, unless the failure is listed in `UNATTAINABLE` together
//! with the reason it cannot be met.

mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use granum::counting::{
    fhca_count, fhca_permuting, find_incoherent_order, hpc_count, hpca_count, is_hpca_coherent, pca_count,
    verify_decomposition, ConflictGraph, CountLabel, CountingTrace, MarkingRule, OrderArrangement, PermutationStrategy,
    SearchConfig,
};
use granum::fixtures;
use granum::gos::{rough_objects, GranularOperatorSpace, RoughObjectNotion};
use granum::oracles::{
    brute_force_signatures, enumerate_maximal_antichains, inverse_rough_check, minimum_antichain_cover,
};
use granum::parthood::{
    audit_properties, witness_is_violation, AuditBudget, ConflictMode, ParthoodVariant, Property, Verdict,
};
use granum::poset::Poset;
use granum::relation::Relation;
use granum::sets::{Approximation, ApproximationContext, Granulation, Region, Universe};
use rand::Rng;

use common::*;

type Check = std::result::Result<String, String>;

/// Criteria that cannot be met under the specified procedures.
const UNATTAINABLE: &[(usize, &str)] = &[(
    5,
    "under every-reject marking each pass builds a maximal conflict-free set and every element missing \
     from C_1 becomes a start point, so every arrangement is coherent; under after-counted marking the \
     exhaustive search above finds no incoherent arrangement either",
)];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn comparability(p: &Poset) -> ConflictGraph {
    ConflictGraph::from_poset(p, ConflictMode::Comparability)
}

fn c1_approximations() -> Check {
    let mut suite: Vec<(usize, Vec<Vec<usize>>, &str)> = Vec::new();
    for n in 1..=4 {
        for p in partitions_by_insertion(n) {
            suite.push((n, p, "partition"));
        }
    }
    let mut r = rng(1);
    for _ in 0..6 {
        let n = r.gen_range(5..=6);
        suite.push((n, random_partition(n, &mut r), "partition"));
    }
    for _ in 0..12 {
        let n = r.gen_range(3..=6);
        let count = r.gen_range(2..=n + 1);
        suite.push((n, random_granules(n, count, true, &mut r), "overlapping"));
    }
    let mut non_covering = 0;
    while non_covering < 6 {
        let n = r.gen_range(3..=6);
        let g = random_granules(n, 2, false, &mut r);
        let covered: BTreeSet<usize> = g.iter().flatten().copied().collect();
        if covered.len() < n {
            suite.push((n, g, "non-covering"));
            non_covering += 1;
        }
    }
    suite.push((5, vec![vec![0, 1], vec![2], vec![3, 4]], "partition"));
    let mut regions = 0usize;
    for (n, blocks, kind) in &suite {
        let ctx = context(*n, blocks);
        let oracle = brute_force_signatures(ctx.granulation()).map_err(|e| e.to_string())?;
        for mask in 0..1u64 << n {
            let a = Region::from_mask(*n, mask);
            let (l, u) = (ctx.lower(&a), ctx.upper(&a));
            ensure(oracle[mask as usize] == (l.clone(), u.clone()), || {
                format!("{kind} {blocks:?}: library and oracle differ on {mask:b}")
            })?;
            ensure(naive_signature(*n, blocks, mask) == (l.mask(), u.mask()), || {
                format!("{kind} {blocks:?}: library and definition differ on {mask:b}")
            })?;
            regions += 1;
        }
    }
    Ok(format!("{} granulations, {regions} regions", suite.len()))
}

fn c2_quotient() -> Check {
    let mut r = rng(2);
    let mut classes = 0;
    for i in 0..50 {
        let n = r.gen_range(1..=6);
        let blocks = random_partition(n, &mut r);
        let gos = GranularOperatorSpace::granular(context(n, &blocks), ParthoodVariant::RoughInclusion);
        let q = rough_objects(&gos, RoughObjectNotion::MaximalConsistent).map_err(|e| e.to_string())?;
        let distinct: BTreeSet<(u64, u64)> = (0..1u64 << n).map(|m| naive_signature(n, &blocks, m)).collect();
        ensure(distinct.len() == q.len(), || {
            format!("context {i}: {} classes, expected {}", q.len(), distinct.len())
        })?;
        let o = &q.order;
        ensure(o.reflexivity_violation().is_none(), || {
            format!("context {i}: not reflexive")
        })?;
        ensure(o.transitivity_violation().is_none(), || {
            format!("context {i}: not transitive")
        })?;
        ensure(o.antisymmetry_violation().is_none(), || {
            format!("context {i}: not antisymmetric")
        })?;
        ensure(o.bottom().is_some() && o.top().is_some(), || {
            format!("context {i}: not bounded")
        })?;
        classes += q.len();
    }
    Ok(format!("50 contexts, {classes} rough objects, 0 counterexamples"))
}

fn all_covers(n: usize) -> Vec<Vec<Vec<usize>>> {
    let nonempty: Vec<Vec<usize>> = (1..1u32 << n)
        .map(|m| (0..n).filter(|&x| m >> x & 1 == 1).collect())
        .collect();
    let mut out = Vec::new();
    for pick in 1..1u64 << nonempty.len() {
        let g: Vec<Vec<usize>> = (0..nonempty.len())
            .filter(|&i| pick >> i & 1 == 1)
            .map(|i| nonempty[i].clone())
            .collect();
        let covered: BTreeSet<usize> = g.iter().flatten().copied().collect();
        if covered.len() == n {
            out.push(g);
        }
    }
    out
}

fn c3_parthood_audit() -> Check {
    use ParthoodVariant::*;
    let budget = AuditBudget::default();
    let partitions: Vec<(usize, Vec<Vec<usize>>)> = (1..=5)
        .flat_map(|n| partitions_by_insertion(n).into_iter().map(move |p| (n, p)))
        .collect();
    for (n, p) in &partitions {
        let ctx = context(*n, p);
        for v in [Bilateral, VeryCautious, Possibilist, GSimple, RoughInclusion] {
            let rep = audit_properties(&v, &ctx, &budget);
            for prop in [Property::Reflexive, Property::Transitive] {
                ensure(rep.verdict(prop) == Some(Verdict::HoldsExhaustively), || {
                    format!("(a) {v} {prop} on {p:?}: {:?}", rep.verdict(prop))
                })?;
            }
        }
    }
    let mut covers: Vec<(usize, Vec<Vec<usize>>)> = partitions.clone();
    for n in 1..=3 {
        covers.extend(all_covers(n).into_iter().map(|g| (n, g)));
    }
    let mut r = rng(3);
    for _ in 0..150 {
        let n = r.gen_range(4..=5);
        let count = r.gen_range(1..=n + 2);
        covers.push((n, random_granules(n, count, true, &mut r)));
    }
    for (n, g) in &covers {
        let ctx = context(*n, g);
        ensure(
            ctx.lower(&ctx.universe().full_region()) == ctx.universe().full_region(),
            || format!("{g:?} not covering"),
        )?;
        let rep = audit_properties(&LateralPlusPlus, &ctx, &budget);
        ensure(
            rep.verdict(Property::StrictlyConfluent) == Some(Verdict::HoldsExhaustively),
            || {
                format!(
                    "(b) lateral-plus-plus confluence on {g:?}: {:?}",
                    rep.verdict(Property::StrictlyConfluent)
                )
            },
        )?;
    }
    let mut lateral = None;
    let mut lateral_plus = None;
    let mut witnesses = 0usize;
    for (n, p) in partitions.iter().chain(covers.iter().take(400)) {
        let ctx = context(*n, p);
        for v in ParthoodVariant::ALL {
            let rep = audit_properties(&v, &ctx, &budget);
            for f in &rep.findings {
                for w in &f.witnesses {
                    ensure(witness_is_violation(&v, &ctx, f.property, w), || {
                        format!("(c) {v} {} witness {:?} does not re-verify on {p:?}", f.property, w)
                    })?;
                    witnesses += 1;
                }
                if f.property == Property::Reflexive && f.verdict == Verdict::Fails && !f.witnesses.is_empty() {
                    let slot = match v {
                        Lateral => &mut lateral,
                        LateralPlus => &mut lateral_plus,
                        _ => continue,
                    };
                    if slot.is_none() {
                        *slot = Some(format!("{} on {p:?}", ctx.universe().display(&f.witnesses[0].0[0])));
                    }
                }
            }
        }
    }
    let lateral = lateral.ok_or("(c) no lateral reflexivity counterexample")?;
    let lateral_plus = lateral_plus.ok_or("(c) no lateral-plus reflexivity counterexample")?;
    Ok(format!(
        "(a) {} partitions, (b) {} covering contexts, (c) lateral {lateral}, lateral-plus {lateral_plus}, {witnesses} witnesses re-verified",
        partitions.len(),
        covers.len()
    ))
}

/// Labels of category `j` in the pass that built it, in scan order.
fn category_labels(t: &CountingTrace, j: usize) -> Vec<String> {
    t.passes
        .iter()
        .filter(|p| p.category.is_none_or(|c| c == j))
        .flat_map(|p| p.steps.iter())
        .filter_map(|s| match s.label {
            Some(l @ CountLabel::Count { category, .. }) if category == j => Some(l.to_string()),
            _ => None,
        })
        .collect()
}

fn oracle_sets(p: &Poset, g: &ConflictGraph) -> std::result::Result<BTreeSet<Vec<usize>>, String> {
    let lib: BTreeSet<Vec<usize>> = enumerate_maximal_antichains(g)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    let search = maximal_antichains_by_search(p.size(), &|a, b| p.comparable(a, b));
    ensure(lib == search, || {
        "antichain oracle disagrees with the independent search".into()
    })?;
    Ok(lib)
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

fn c4_pca() -> Check {
    let corpus = poset_corpus();
    for (name, p) in &corpus {
        let g = comparability(p);
        let n = p.size();
        let t = pca_count(&OrderArrangement::canonical(n), &g);
        let maximal = oracle_sets(p, &g)?;
        ensure(maximal.contains(&sorted(&t.categories[0].members)), || {
            format!("{name}: C_1 not maximal")
        })?;
        let mut hits = vec![0; n];
        for c in &t.categories {
            for &x in &c.members {
                hits[x] += 1;
            }
            let expected: Vec<String> = (1..=c.len()).map(|k| format!("{k}_{}", c.index)).collect();
            ensure(category_labels(&t, c.index) == expected, || {
                format!("{name}: labels of C_{} have gaps", c.index)
            })?;
        }
        ensure(hits.iter().all(|&h| h == 1), || {
            format!("{name}: categories do not partition")
        })?;
        let d = verify_decomposition(&t, &g);
        ensure(d.total == n && d.partition == Some(true), || {
            format!("{name}: sum Q_i = {} for n = {n}", d.total)
        })?;
    }
    Ok(format!("{} posets, 0 failures", corpus.len()))
}

/// All posets on `n` elements up to isomorphism are among the naturally
/// labelled ones, whose relations only go from lower to higher index.
fn naturally_labelled_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let chosen: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| pairs[k])
            .collect();
        let p = Poset::from_pairs((0..n).map(|i| format!("e{i}")).collect(), &chosen).expect("acyclic");
        let key: Vec<(usize, usize)> = p.less_relation().pairs().collect();
        if seen.insert(key) {
            out.push(p);
        }
    }
    out
}

fn c5_hpca() -> Check {
    let corpus = poset_corpus();
    let mut categories = 0usize;
    for (name, p) in &corpus {
        let g = comparability(p);
        let maximal = oracle_sets(p, &g)?;
        for m in MarkingRule::ALL {
            let (t, _) = hpca_count(&OrderArrangement::canonical(p.size()), &g, m);
            for (i, c) in t.categories.iter().enumerate() {
                ensure(maximal.contains(&sorted(&c.members)), || {
                    format!("{name} ({m}): C_{} not maximal", c.index)
                })?;
                for d in &t.categories[..i] {
                    ensure(!c.is_within(&d.members) && !d.is_within(&c.members), || {
                        format!("{name}: nested categories")
                    })?;
                }
                categories += 1;
            }
        }
    }

    // The definition unfolded by hand on fixture P, for every arrangement.
    let p = fixtures::fixture_p();
    let g = comparability(&p);
    for rank in 0..24 {
        let seq = OrderArrangement::lexicographic(4, rank);
        for m in MarkingRule::ALL {
            let (t, _) = hpca_count(&seq, &g, m);
            let union: BTreeSet<usize> = t.categories.iter().flat_map(|c| c.members.iter().copied()).collect();
            let by_hand = union.len() == 4
                && t.categories
                    .iter()
                    .all(|c| is_maximal_antichain(4, &|a, b| p.comparable(a, b), &c.members));
            ensure(is_hpca_coherent(&seq, &g, m) == by_hand, || {
                format!("fixture P order {:?}: coherence disagrees", seq.sequence())
            })?;
        }
    }
    let (t, _) = hpca_count(&OrderArrangement::canonical(4), &g, MarkingRule::default());
    let cats: Vec<Vec<usize>> = t.categories.iter().map(|c| c.members.clone()).collect();
    ensure(cats == vec![vec![0, 3], vec![1, 2, 3]], || {
        format!("fixture P decomposition {cats:?}")
    })?;
    ensure(
        is_hpca_coherent(&OrderArrangement::canonical(4), &g, MarkingRule::default()),
        || "fixture P not coherent".into(),
    )?;
    let prefix = format!("(a) {categories} categories oracle-maximal, (b) fixture P agrees on 24 orders");

    let posets = naturally_labelled_posets(5);
    let mut searched = 0u64;
    for p in &posets {
        let g = comparability(p);
        for m in MarkingRule::ALL {
            let cfg = SearchConfig {
                budget: 120,
                marking: m,
                ..SearchConfig::default()
            };
            let s = find_incoherent_order(&g, cfg);
            if let Some(a) = s.found {
                let pairs: Vec<(usize, usize)> = p.less_relation().pairs().collect();
                return Ok(format!(
                    "{prefix}, (c) incoherent order {:?} on {pairs:?} under {m}",
                    a.sequence()
                ));
            }
            ensure(s.exhaustive, || "search was not exhaustive".into())?;
            searched += s.examined;
        }
    }
    Err(format!(
        "{prefix}; (c) no incoherent pair among {} five-element posets x 120 orders x 2 marking rules ({searched} HPCA runs)",
        posets.len()
    ))
}

fn labels_of(t: &CountingTrace) -> Vec<Vec<String>> {
    (0..t.passes.len()).map(|i| t.label_strings(i)).collect()
}

fn c6_fhca() -> Check {
    let corpus = poset_corpus();
    let (mut delegated, mut permuted) = (0, 0);
    for (name, p) in &corpus {
        let n = p.size();
        let g = comparability(p);
        let maximal = oracle_sets(p, &g)?;
        let seq = OrderArrangement::canonical(n);
        let out = fhca_count(&seq, &g, PermutationStrategy::Rotation, n, MarkingRule::default())
            .map_err(|e| e.to_string())?;
        ensure(out.complete && out.trace.passes.len() <= n, || {
            format!("{name}: not covered within {n} permutations")
        })?;
        if is_hpca_coherent(&seq, &g, MarkingRule::default()) {
            let (h, _) = hpca_count(&seq, &g, MarkingRule::default());
            ensure(
                labels_of(&out.trace) == labels_of(&h) && out.trace.categories == h.categories,
                || format!("{name}: FHCA differs from HPCA on a coherent order"),
            )?;
            delegated += 1;
        }
        let forced = fhca_permuting(&seq, &g, PermutationStrategy::Rotation, n, MarkingRule::default())
            .map_err(|e| e.to_string())?;
        ensure(forced.complete, || format!("{name}: permuting branch incomplete"))?;
        ensure(forced.trace.passes.len() - 1 <= n, || {
            format!("{name}: {} permutations", forced.trace.passes.len() - 1)
        })?;
        for run in [&out, &forced] {
            for (i, a) in run.antichains.iter().enumerate() {
                ensure(maximal.contains(&sorted(a)), || {
                    format!("{name}: A_{} not maximal", i + 1)
                })?;
            }
        }
        for c in &forced.trace.categories {
            let expected: Vec<String> = (1..=c.len()).map(|k| format!("{k}_{}", c.index)).collect();
            ensure(category_labels(&forced.trace, c.index) == expected, || {
                format!("{name}: A_{} mislabelled", c.index)
            })?;
        }
        permuted += 1;
    }
    Ok(format!(
        "{} posets: {delegated} delegated label-identically, {permuted} permuting runs covered within n",
        corpus.len()
    ))
}

fn c7_mirsky() -> Check {
    let corpus = poset_corpus();
    let mut r = rng(7);
    let mut decompositions = 0;
    for (name, p) in &corpus {
        let n = p.size();
        let height = longest_chain(p);
        let cover = minimum_antichain_cover(p.less_relation()).map_err(|e| e.to_string())?;
        ensure(cover.len() == height, || {
            format!("{name}: {} levels, longest chain {height}", cover.len())
        })?;
        let flat: BTreeSet<usize> = cover.levels.iter().flatten().copied().collect();
        ensure(
            flat.len() == n && cover.levels.iter().map(Vec::len).sum::<usize>() == n,
            || format!("{name}: levels do not partition"),
        )?;
        for level in &cover.levels {
            ensure(
                level.iter().all(|&a| level.iter().all(|&b| !p.comparable(a, b))),
                || format!("{name}: level not an antichain"),
            )?;
        }
        let g = comparability(p);
        let mut orders = vec![OrderArrangement::canonical(n)];
        orders.extend((0..5).map(|_| OrderArrangement::permutation(shuffled(n, &mut r)).expect("permutation")));
        for seq in orders {
            for m in MarkingRule::ALL {
                let (t, d) = hpca_count(&seq, &g, m);
                if d.coherent == Some(true) {
                    ensure(t.categories.len() >= height, || {
                        format!("{name}: {} categories below the bound {height}", t.categories.len())
                    })?;
                    decompositions += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} orders, {decompositions} coherent decompositions at or above the bound",
        corpus.len()
    ))
}

fn to_regions(n: usize, pairs: &[(u64, u64)]) -> Vec<(Region, Region)> {
    pairs
        .iter()
        .map(|&(a, b)| (Region::from_mask(n, a), Region::from_mask(n, b)))
        .collect()
}

fn replays(n: usize, pairs: &[(u64, u64)], w: &granum::oracles::PartitionWitness) -> bool {
    let u = Universe::numbered(n);
    let g = Granulation::new(&u, w.partition.blocks().to_vec()).expect("witness partition");
    let ctx = ApproximationContext::new(u, g).expect("context");
    pairs.len() == w.realizations.len()
        && pairs
            .iter()
            .zip(&w.realizations)
            .all(|(&(a, b), r)| ctx.lower(r).mask() == a && ctx.upper(r).mask() == b)
}

fn hidden_family<R: Rng>(n: usize, r: &mut R) -> Vec<(u64, u64)> {
    let blocks = random_partition(n, r);
    let count = r.gen_range(1..=4);
    (0..count)
        .map(|_| naive_signature(n, &blocks, r.gen_range(0..1u64 << n)))
        .collect()
}

fn c8_inverse() -> Check {
    let mut r = rng(8);
    for i in 0..100 {
        let n = r.gen_range(1..=8);
        let pairs = hidden_family(n, &mut r);
        let out = inverse_rough_check(&to_regions(n, &pairs), n).map_err(|e| e.to_string())?;
        let w = out
            .witness()
            .ok_or_else(|| format!("hidden family {i} reported unrealizable"))?;
        ensure(replays(n, &pairs, w), || {
            format!("hidden family {i}: witness does not replay")
        })?;
    }
    let (mut no, mut yes, mut attempts) = (0, 0, 0);
    while no < 100 {
        attempts += 1;
        ensure(attempts < 20_000, || format!("only {no} adversarial families found"))?;
        let n = r.gen_range(2..=6);
        let mut pairs = hidden_family(n, &mut r);
        let i = r.gen_range(0..pairs.len());
        let bit = 1u64 << r.gen_range(0..n);
        if r.gen_bool(0.5) {
            pairs[i].0 ^= bit;
        } else {
            pairs[i].1 ^= bit;
        }
        let truth = inverse_by_insertion(n, &pairs);
        let out = inverse_rough_check(&to_regions(n, &pairs), n).map_err(|e| e.to_string())?;
        match (truth, out.witness()) {
            (false, None) => no += 1,
            (true, Some(w)) => {
                ensure(replays(n, &pairs, w), || {
                    "mutated family: witness does not replay".into()
                })?;
                yes += 1;
            }
            (t, _) => {
                return Err(format!(
                    "mutated family {pairs:?} on {n}: enumerator says {t}, library disagrees"
                ))
            }
        }
    }
    Ok(format!("100 hidden families replay exactly; 100 adversarial families rejected ({yes} mutations stayed realizable and agreed)"))
}

fn c9_hpc() -> Check {
    let mut cases: Vec<(usize, Relation)> = vec![(3, Relation::from_pairs(3, [(0, 1), (1, 0)]))];
    let mut r = rng(9);
    for _ in 0..20 {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.1..0.6);
        let mut rel = Relation::empty(n);
        for i in 0..n {
            for j in i..n {
                if r.gen_bool(p) {
                    rel.set(i, j);
                    rel.set(j, i);
                }
            }
        }
        cases.push((n, rel));
    }
    for (k, (n, rel)) in cases.iter().enumerate() {
        let t = hpc_count(&OrderArrangement::canonical(*n), rel).map_err(|e| e.to_string())?;
        let lib = t.label_strings(0).join(" ");
        let reference = straight_line_hpc(*n, &|a, b| rel.holds(a, b)).join(" ");
        ensure(lib == reference, || format!("case {k}: {lib:?} vs {reference:?}"))?;
        if k == 0 {
            ensure(lib == "1_1 1_2 s(1_2)", || format!("three-element example gives {lib}"))?;
        }
    }
    Ok(format!(
        "three-element example and {} random relations byte-identical",
        cases.len() - 1
    ))
}

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("examples/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn c10_determinism() -> Check {
    let runs: Vec<Vec<String>> = vec![
        vec![
            "count".into(),
            "--algo".into(),
            "hpca".into(),
            "--input".into(),
            data("fixture_p.json"),
        ],
        vec![
            "count".into(),
            "--algo".into(),
            "fhca".into(),
            "--strategy".into(),
            "random".into(),
            "--input".into(),
            data("fixture_a.csv"),
        ],
        vec![
            "count".into(),
            "--algo".into(),
            "pca".into(),
            "--input".into(),
            data("fixture_a.csv"),
            "--conflict".into(),
            "incomparability".into(),
        ],
        vec![
            "coherence".into(),
            "--budget".into(),
            "64".into(),
            "--input".into(),
            data("fixture_a.csv"),
        ],
        vec![
            "parthood-audit".into(),
            "--input".into(),
            data("fixture_a.csv"),
            "--exhaustive-cap".into(),
            "4".into(),
            "--samples".into(),
            "256".into(),
        ],
        vec!["gos-audit".into(), "--input".into(), data("overlapping.json")],
        vec!["inverse".into(), "--input".into(), data("pairs_hidden.json")],
        vec![
            "oracle".into(),
            "antichains".into(),
            "--input".into(),
            data("fixture_a.csv"),
        ],
    ];
    let bin = env!("CARGO_BIN_EXE_granum");
    for args in &runs {
        let mut outputs = BTreeSet::new();
        for threads in ["1", "4"] {
            for _ in 0..3 {
                let out = Command::new(bin)
                    .args(args)
                    .args(["--output", "json", "--threads", threads, "--seed", "0x5EED"])
                    .output()
                    .map_err(|e| e.to_string())?;
                ensure(out.status.success(), || format!("{args:?} exited with {}", out.status))?;
                outputs.insert(out.stdout);
            }
        }
        ensure(outputs.len() == 1, || {
            format!("{args:?}: {} distinct outputs", outputs.len())
        })?;
    }
    Ok(format!(
        "{} configurations x 3 runs x threads {{1, 4}} byte-identical",
        runs.len()
    ))
}

type Criterion = (usize, &'static str, Option<Duration>, fn() -> Check);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "approximation correctness",
            Some(Duration::from_secs(5)),
            c1_approximations,
        ),
        (
            2,
            "quotient is a bounded partial order",
            Some(Duration::from_secs(30)),
            c2_quotient,
        ),
        (
            3,
            "parthood property audit",
            Some(Duration::from_secs(60)),
            c3_parthood_audit,
        ),
        (4, "PCA decomposition", None, c4_pca),
        (5, "HPCA maximality and coherence", None, c5_hpca),
        (6, "FHCA coverage", None, c6_fhca),
        (7, "Mirsky grading", None, c7_mirsky),
        (8, "inverse problem", Some(Duration::from_secs(300)), c8_inverse),
        (9, "HPC trace conformance", None, c9_hpc),
        (10, "determinism", None, c10_determinism),
    ];
    let mut unexpected = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(d), Some(l)) if elapsed > l => Err(format!("{d}; took {elapsed:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS [{id:>2}] {name}: {detail} ({elapsed:.2?})"),
            Err(detail) => {
                println!("FAIL [{id:>2}] {name}: {detail} ({elapsed:.2?})");
                match UNATTAINABLE.iter().find(|(u, _)| *u == id) {
                    Some((_, why)) => println!("     unattainable: {why}"),
                    None => unexpected += 1,
                }
            }
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criterion(s) failed unexpectedly");
        std::process::exit(1);
    }
}
