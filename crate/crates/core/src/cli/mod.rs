//! The `granum` command line: one subcommand per analysis, text or JSON reports.
//!
//! Exit status is 0 on success, 1 when `--strict` is set and the analysis
//! comes out negative, and 2 on usage, input or analysis errors.

mod input;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::counting::{
    fhca_count, find_coherent_order, hpc_count, hpca_count, is_hpca_coherent, pca_count, verify_decomposition,
    Algorithm, MarkingRule, OrderArrangement, PermutationStrategy, SearchConfig,
};
use crate::error::{Error, Result};
use crate::gos::{
    audit_full_underlap, audit_lower_stability, audit_lower_within_upper, audit_wra, interval_representation,
    knowledge_validity_check, rough_objects, AxiomConfig, AxiomReport, RoughObjectNotion, QUOTIENT_CAP,
};
use crate::oracles::{
    brute_force_signatures, enumerate_maximal_antichains, inverse_rough_check, minimum_antichain_cover, InverseOutcome,
};
use crate::parthood::{audit_properties, AuditBudget, ConflictMode, ParthoodVariant, PropertyReport};
use crate::sets::{Approximation, Universe};

use input::{collection, load, space, split_names, Collection, Input};
pub use input::{parse_seed, InputFormat};

pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "granum",
    version,
    about = "Granular operator spaces, parthood audits and antichain counting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// Seed for every sampled step (decimal or 0x-hex).
    #[arg(long, global = true, env = "GRANUM_SEED", value_parser = parse_seed)]
    seed: Option<u64>,
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Exit with status 1 when the analysis is negative.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    /// Comma-separated attribute subset for information tables.
    #[arg(long)]
    attrs: Option<String>,
}

#[derive(Debug, Args)]
struct CollectionArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "rough-inclusion")]
    parthood: ParthoodVariant,
    #[arg(long, default_value = "comparability")]
    conflict: ConflictMode,
    #[arg(long, value_enum, default_value_t = Notion::MaximalConsistent)]
    notion: Notion,
    #[arg(long, default_value = "every-reject")]
    marking: MarkingRule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Notion {
    MaximalConsistent,
    DefiniteOnly,
}

impl From<Notion> for RoughObjectNotion {
    fn from(n: Notion) -> Self {
        match n {
            Notion::MaximalConsistent => RoughObjectNotion::MaximalConsistent,
            Notion::DefiniteOnly => RoughObjectNotion::DefiniteOnly,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Rotation,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Antichains,
    Mirsky,
    Signatures,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lower and upper approximations of regions.
    Approx {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated region; repeatable. All regions when absent.
        #[arg(long)]
        region: Vec<String>,
    },
    /// Axiom audit of the granular operator space and its rough objects.
    GosAudit {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "rough-inclusion")]
        parthood: ParthoodVariant,
        #[arg(long, value_enum, default_value_t = Notion::MaximalConsistent)]
        notion: Notion,
    },
    /// Order-theoretic property audit of parthood variants.
    ParthoodAudit {
        #[command(flatten)]
        input: InputArgs,
        /// Variant to audit; repeatable. All variants when absent.
        #[arg(long)]
        variant: Vec<ParthoodVariant>,
        #[arg(long, default_value_t = AuditBudget::default().exhaustive_cap)]
        exhaustive_cap: usize,
        #[arg(long, default_value_t = AuditBudget::default().samples)]
        samples: usize,
    },
    /// Run a counting procedure.
    Count {
        #[command(flatten)]
        collection: CollectionArgs,
        #[arg(long, default_value = "hpca")]
        algo: Algorithm,
        /// Comma-separated counting order; the input order when absent.
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t = Strategy::Rotation)]
        strategy: Strategy,
        /// FHCA permutation budget; the collection size when absent.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Check the input order for HPCA coherence and search for a coherent one.
    Coherence {
        #[command(flatten)]
        collection: CollectionArgs,
        #[arg(long, default_value_t = SearchConfig::default().budget)]
        budget: u64,
    },
    /// Decide whether approximation pairs can come from a partition.
    Inverse {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Brute-force oracles.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        collection: CollectionArgs,
    },
}

/// The settings that fully determine a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub output: OutputFormat,
    pub strict: bool,
    pub threads: Option<usize>,
}

struct Report {
    json: Value,
    text: String,
    negative: bool,
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and diagnostics to `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let config = RunConfig {
        seed: cli.seed.unwrap_or(DEFAULT_SEED),
        output: cli.output,
        strict: cli.strict,
        threads: cli.threads,
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match pool.install(|| execute(&cli.command, &config)) {
        Ok(report) => {
            let written = match config.output {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("reports serialise")
                ),
                OutputFormat::Text => write!(out, "{}", report.text),
            };
            if written.is_err() {
                return 2;
            }
            if config.strict && report.negative {
                1
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: &Command, config: &RunConfig) -> Result<Report> {
    match command {
        Command::Approx { input, region } => approx(input, region),
        Command::GosAudit {
            input,
            parthood,
            notion,
        } => gos_audit(input, *parthood, (*notion).into(), config),
        Command::ParthoodAudit {
            input,
            variant,
            exhaustive_cap,
            samples,
        } => {
            let budget = AuditBudget {
                exhaustive_cap: *exhaustive_cap,
                samples: *samples,
                seed: config.seed,
                ..AuditBudget::default()
            };
            parthood_audit(input, variant, &budget)
        }
        Command::Count {
            collection,
            algo,
            order,
            strategy,
            budget,
        } => count(collection, *algo, order.as_deref(), *strategy, *budget, config),
        Command::Coherence { collection, budget } => coherence(collection, *budget, config),
        Command::Inverse { input } => inverse(input),
        Command::Oracle { kind, collection } => oracle(*kind, collection),
    }
}

fn load_input(args: &InputArgs) -> Result<Input> {
    load(&args.input, args.format)
}

fn approx(args: &InputArgs, regions: &[String]) -> Result<Report> {
    let input = load_input(args)?;
    let gos = space(&input, args.attrs.as_deref(), ParthoodVariant::RoughInclusion)?;
    let u = gos.universe();
    let selected = if regions.is_empty() {
        if u.size() > QUOTIENT_CAP {
            return Err(Error::TooLarge {
                what: "universe for listing every region",
                size: u.size(),
                cap: QUOTIENT_CAP,
            });
        }
        crate::sets::canonical_regions(u.size())
    } else {
        regions
            .iter()
            .map(|r| u.region(split_names(r)))
            .collect::<Result<Vec<_>>>()?
    };
    let mut text = format!("granules: {}\n", granules_text(u, &gos));
    let mut rows = Vec::new();
    for r in &selected {
        let sig = gos.signature(r);
        let definite = gos.is_definite(r);
        text.push_str(&format!(
            "{}: lower {} upper {}{}\n",
            u.display(r),
            u.display(&sig.lower),
            u.display(&sig.upper),
            if definite { " (definite)" } else { "" }
        ));
        rows.push(json!({
            "region": u.names_of(r),
            "lower": u.names_of(&sig.lower),
            "upper": u.names_of(&sig.upper),
            "definite": definite,
        }));
    }
    let mut json = json!({
        "universe": u.elements(),
        "granules": gos.granulation().granules().iter().map(|g| u.names_of(g)).collect::<Vec<_>>(),
        "partition": gos.granulation().is_partition(),
        "regions": rows,
    });
    if !regions.is_empty() {
        let reports: Vec<_> = selected.iter().map(|r| knowledge_validity_check(r, &gos)).collect();
        for k in &reports {
            let checks: Vec<String> = k
                .checks
                .iter()
                .map(|c| format!("{} {}", c.equation, if c.holds { "holds" } else { "fails" }))
                .collect();
            text.push_str(&format!("{}: {}\n", u.display(&k.region), checks.join(", ")));
        }
        json["knowledge"] = reports.iter().map(|k| k.to_json(u)).collect();
    }
    Ok(Report {
        json,
        text,
        negative: false,
    })
}

fn granules_text(u: &Universe, gos: &impl Approximation) -> String {
    gos.granulation()
        .granules()
        .iter()
        .map(|g| u.display(g))
        .collect::<Vec<_>>()
        .join(" ")
}

fn gos_audit(
    args: &InputArgs,
    parthood: ParthoodVariant,
    notion: RoughObjectNotion,
    config: &RunConfig,
) -> Result<Report> {
    let input = load_input(args)?;
    let gos = space(&input, args.attrs.as_deref(), parthood)?;
    let u = gos.universe();
    let cfg = AxiomConfig {
        seed: config.seed,
        ..AxiomConfig::default()
    };
    let reports: Vec<AxiomReport> = vec![
        audit_wra(&gos, &cfg),
        audit_lower_stability(&gos, &cfg),
        audit_full_underlap(&gos, &cfg),
        audit_lower_within_upper(&gos, &cfg),
    ];
    let mut text = format!("granules: {}\nparthood: {parthood}\n", granules_text(u, &gos));
    for r in &reports {
        text.push_str(&format!(
            "{}: {} ({} checked, {} failures)\n",
            r.axiom,
            if r.passed { "passes" } else { "fails" },
            r.checked,
            r.failures
        ));
        for w in &r.witnesses {
            let regions: Vec<String> = w.regions.iter().map(|x| u.display(x)).collect();
            text.push_str(&format!("  witness {}: {}\n", regions.join(" "), w.detail));
        }
    }
    let quotient = if u.size() <= QUOTIENT_CAP {
        let q = rough_objects(&gos, notion)?;
        let rep = interval_representation(&q, &gos);
        text.push_str(&format!(
            "rough objects: {} classes, {} crisp, {} represented by crisp pairs, {} unrepresentable\n",
            rep.n,
            rep.k,
            rep.phi.len(),
            rep.unrepresentable.len()
        ));
        rep.to_json(u)
    } else {
        Value::Null
    };
    let negative = reports.iter().any(|r| !r.passed);
    Ok(Report {
        json: json!({
            "parthood": parthood.as_str(),
            "axioms": reports.iter().map(|r| r.to_json(u)).collect::<Vec<_>>(),
            "rough_objects": quotient,
        }),
        text,
        negative,
    })
}

fn parthood_audit(args: &InputArgs, variants: &[ParthoodVariant], budget: &AuditBudget) -> Result<Report> {
    let input = load_input(args)?;
    let gos = space(&input, args.attrs.as_deref(), ParthoodVariant::RoughInclusion)?;
    let u = gos.universe();
    let variants: Vec<ParthoodVariant> = if variants.is_empty() {
        ParthoodVariant::ALL.to_vec()
    } else {
        variants.to_vec()
    };
    let reports: Vec<PropertyReport> = variants.iter().map(|v| audit_properties(v, &gos, budget)).collect();
    let mut text = String::new();
    for r in &reports {
        let cells: Vec<String> = r
            .findings
            .iter()
            .map(|f| match f.witnesses.first() {
                Some(w) => {
                    let regions: Vec<String> = w.0.iter().map(|x| u.display(x)).collect();
                    format!("{}: {}, witness {}", f.property, f.verdict.as_str(), regions.join(" "))
                }
                None => format!("{}: {}", f.property, f.verdict.as_str()),
            })
            .collect();
        text.push_str(&format!("{}\n  {}\n", r.variant, cells.join("\n  ")));
    }
    let negative = reports
        .iter()
        .any(|r| r.findings.iter().any(|f| f.verdict == crate::parthood::Verdict::Fails));
    Ok(Report {
        json: json!({"variants": reports.iter().map(|r| r.to_json(u)).collect::<Vec<_>>()}),
        text,
        negative,
    })
}

fn load_collection(args: &CollectionArgs) -> Result<Collection> {
    let input = load_input(&args.input)?;
    collection(
        &input,
        args.input.attrs.as_deref(),
        args.parthood,
        args.conflict,
        args.notion.into(),
    )
}

fn arrangement(c: &Collection, order: Option<&str>) -> Result<OrderArrangement> {
    match order {
        None => Ok(OrderArrangement::canonical(c.names().len())),
        Some(s) => {
            let seq = split_names(s)
                .iter()
                .map(|n| {
                    c.names()
                        .iter()
                        .position(|x| x == n)
                        .ok_or_else(|| Error::UnknownElement(n.clone()))
                })
                .collect::<Result<Vec<_>>>()?;
            if seq.len() != c.names().len() {
                return Err(Error::Invalid("--order must list every element exactly once".into()));
            }
            OrderArrangement::permutation(seq)
        }
    }
}

fn config_json(args: &CollectionArgs, c: &Collection) -> Value {
    json!({
        "collection": c.kind,
        "elements": c.names(),
        "parthood": args.parthood.as_str(),
        "conflict": args.conflict.as_str(),
        "marking": args.marking.as_str(),
    })
}

fn count(
    args: &CollectionArgs,
    algo: Algorithm,
    order: Option<&str>,
    strategy: Strategy,
    budget: Option<usize>,
    config: &RunConfig,
) -> Result<Report> {
    let c = load_collection(args)?;
    let seq = arrangement(&c, order)?;
    let names = c.names();
    let mut json = json!({"config": config_json(args, &c)});
    let (trace, decomposition, negative) = match algo {
        Algorithm::Hpc => {
            let t = hpc_count(&seq, c.conflict.relation())?;
            (t, None, false)
        }
        Algorithm::Pca => {
            let t = pca_count(&seq, &c.conflict);
            let d = verify_decomposition(&t, &c.conflict);
            let negative = d.partition != Some(true);
            (t, Some(d), negative)
        }
        Algorithm::Hpca => {
            let (t, d) = hpca_count(&seq, &c.conflict, args.marking);
            let negative = d.coherent != Some(true);
            (t, Some(d), negative)
        }
        Algorithm::Fhca => {
            let strategy = match strategy {
                Strategy::Rotation => PermutationStrategy::Rotation,
                Strategy::Random => PermutationStrategy::Random { seed: config.seed },
            };
            let budget = budget.unwrap_or(names.len().max(1));
            let out = fhca_count(&seq, &c.conflict, strategy, budget, args.marking)?;
            let d = verify_decomposition(&out.trace, &c.conflict);
            json["fhca"] = json!({
                "strategy": strategy.to_string(),
                "budget": budget,
                "complete": out.complete,
                "delegated": out.delegated,
            });
            (out.trace, Some(d), !out.complete)
        }
    };
    let mut text = trace.render_text(names);
    json["trace"] = trace.to_json(names);
    if let Some(d) = &decomposition {
        text.push_str(&d.render_text(names));
        json["decomposition"] = d.to_json(names);
    } else {
        json["decomposition"] = Value::Null;
    }
    Ok(Report { json, text, negative })
}

fn coherence(args: &CollectionArgs, budget: u64, config: &RunConfig) -> Result<Report> {
    let c = load_collection(args)?;
    let names = c.names();
    let seq = OrderArrangement::canonical(names.len());
    let canonical = is_hpca_coherent(&seq, &c.conflict, args.marking);
    let search = find_coherent_order(
        &c.conflict,
        SearchConfig {
            budget,
            seed: config.seed,
            marking: args.marking,
        },
    );
    let found: Option<Vec<String>> = search
        .found
        .as_ref()
        .map(|a| a.sequence().iter().map(|&x| names[x].clone()).collect());
    let mut text = format!("input order coherent: {}\n", if canonical { "yes" } else { "no" });
    match &found {
        Some(order) => text.push_str(&format!(
            "coherent order: ({}) after {} arrangements\n",
            order.join(", "),
            search.examined
        )),
        None if search.exhaustive => text.push_str(&format!(
            "no coherent order among all {} arrangements\n",
            search.examined
        )),
        None => text.push_str(&format!(
            "none found within budget ({} arrangements)\n",
            search.examined
        )),
    }
    Ok(Report {
        json: json!({
            "config": config_json(args, &c),
            "input_order_coherent": canonical,
            "search": {
                "found": found,
                "examined": search.examined,
                "exhaustive": search.exhaustive,
                "budget": budget,
            },
        }),
        text,
        negative: search.found.is_none(),
    })
}

fn inverse(args: &InputArgs) -> Result<Report> {
    let Input::Pairs(file) = load_input(args)? else {
        return Err(Error::Invalid("inverse needs a pairs file".into()));
    };
    let (u, pairs) = file.resolve()?;
    let outcome = inverse_rough_check(&pairs, u.size())?;
    let text = match &outcome {
        InverseOutcome::Realizable(w) => {
            let blocks: Vec<String> = w.partition.blocks().iter().map(|b| u.display(b)).collect();
            let mut t = format!("yes: partition {}\n", blocks.join(" "));
            for (i, r) in w.realizations.iter().enumerate() {
                t.push_str(&format!("  pair {i}: A = {}\n", u.display(r)));
            }
            t
        }
        InverseOutcome::Filtered { pair, reason } => format!("no: pair {pair}: {reason}\n"),
        InverseOutcome::NoPartition { examined } => {
            format!("no: none of the {examined} partitions realizes all pairs\n")
        }
    };
    Ok(Report {
        negative: outcome.witness().is_none(),
        json: outcome.to_json(&u),
        text,
    })
}

fn oracle(kind: OracleKind, args: &CollectionArgs) -> Result<Report> {
    let sets_json = |names: &[String], sets: &[Vec<usize>]| -> Vec<Vec<String>> {
        sets.iter()
            .map(|s| s.iter().map(|&x| names[x].clone()).collect())
            .collect()
    };
    let brace = |names: &[String], s: &[usize]| -> String {
        let inner: Vec<&str> = s.iter().map(|&x| names[x].as_str()).collect();
        format!("{{{}}}", inner.join(", "))
    };
    match kind {
        OracleKind::Antichains => {
            let c = load_collection(args)?;
            let sets = enumerate_maximal_antichains(&c.conflict)?;
            let text: String = sets.iter().map(|s| brace(c.names(), s) + "\n").collect();
            Ok(Report {
                json: json!({"config": config_json(args, &c), "maximal_antichains": sets_json(c.names(), &sets)}),
                text,
                negative: false,
            })
        }
        OracleKind::Mirsky => {
            let c = load_collection(args)?;
            let cover = minimum_antichain_cover(&c.order)?;
            let mut text = format!("longest chain: {}\n", brace(c.names(), &cover.longest_chain));
            for (h, level) in cover.levels.iter().enumerate() {
                text.push_str(&format!("level {}: {}\n", h + 1, brace(c.names(), level)));
            }
            Ok(Report {
                json: json!({
                    "config": config_json(args, &c),
                    "levels": sets_json(c.names(), &cover.levels),
                    "longest_chain": cover.longest_chain.iter().map(|&x| c.names()[x].clone()).collect::<Vec<_>>(),
                }),
                text,
                negative: false,
            })
        }
        OracleKind::Signatures => {
            let input = load_input(&args.input)?;
            let gos = space(&input, args.input.attrs.as_deref(), args.parthood)?;
            let u = gos.universe();
            let sigs = brute_force_signatures(gos.granulation())?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (mask, (l, up)) in sigs.iter().enumerate() {
                let r = crate::sets::Region::from_mask(u.size(), mask as u64);
                text.push_str(&format!(
                    "{}: lower {} upper {}\n",
                    u.display(&r),
                    u.display(l),
                    u.display(up)
                ));
                rows.push(json!({"region": u.names_of(&r), "lower": u.names_of(l), "upper": u.names_of(up)}));
            }
            Ok(Report {
                json: json!({"signatures": rows}),
                text,
                negative: false,
            })
        }
    }
}
