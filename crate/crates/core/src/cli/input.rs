use std::path::Path;
use std::str::FromStr;

use serde_json::Value;

use crate::counting::ConflictGraph;
use crate::error::{Error, Result};
use crate::gos::{rough_objects, GranularOperatorSpace, RoughObjectNotion};
use crate::oracles::PairsFile;
use crate::parthood::{proper_part, ConflictMode, ParthoodVariant};
use crate::poset::{Poset, PosetFile};
use crate::relation::Relation;
use crate::sets::{
    parse_information_table, Approximation, ApproximationContext, ContextFile, InformationTable, TableFormat,
};

/// Input file kinds; `Auto` decides from the extension and the JSON keys.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    #[default]
    Auto,
    /// Information table, CSV with an `id` column.
    Csv,
    /// Information table, JSON.
    Json,
    /// Context file with granules, optional operators and objects.
    Context,
    Poset,
    Pairs,
}

pub enum Input {
    Table(InformationTable),
    Context(ContextFile),
    Poset(PosetFile),
    Pairs(PairsFile),
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        row: e.line(),
        column: None,
        message: e.to_string(),
    })
}

pub fn load(path: &Path, format: InputFormat) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    let format = match format {
        InputFormat::Auto => sniff(path, &text)?,
        f => f,
    };
    Ok(match format {
        InputFormat::Csv => Input::Table(parse_information_table(&text, TableFormat::Csv)?),
        InputFormat::Json => Input::Table(parse_information_table(&text, TableFormat::Json)?),
        InputFormat::Context => Input::Context(ContextFile::parse(&text)?),
        InputFormat::Poset => Input::Poset(parse_json(&text)?),
        InputFormat::Pairs => Input::Pairs(PairsFile::parse(&text)?),
        InputFormat::Auto => unreachable!("resolved above"),
    })
}

fn sniff(path: &Path, text: &str) -> Result<InputFormat> {
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        return Ok(InputFormat::Csv);
    }
    let v: Value = parse_json(text)?;
    let has = |k: &str| v.get(k).is_some();
    if has("granules") {
        Ok(InputFormat::Context)
    } else if has("pairs") {
        Ok(InputFormat::Pairs)
    } else if has("elements") {
        Ok(InputFormat::Poset)
    } else if has("attributes") {
        Ok(InputFormat::Json)
    } else {
        Err(Error::Invalid(format!(
            "{}: cannot tell the input kind; pass --format",
            path.display()
        )))
    }
}

pub fn split_names(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(String::from)
        .collect()
}

/// A granular operator space from a table or context file.
pub fn space(input: &Input, attrs: Option<&str>, parthood: ParthoodVariant) -> Result<GranularOperatorSpace> {
    match input {
        Input::Table(t) => {
            let attrs = attrs.map_or_else(|| t.attributes().to_vec(), split_names);
            Ok(GranularOperatorSpace::granular(
                ApproximationContext::from_table(t, &attrs)?,
                parthood,
            ))
        }
        Input::Context(c) => GranularOperatorSpace::from_context_file(c, parthood),
        _ => Err(Error::Invalid(
            "this command needs an information table or a context file".into(),
        )),
    }
}

/// A counted collection with its conflict relation and a strict order.
pub struct Collection {
    pub kind: &'static str,
    pub conflict: ConflictGraph,
    pub order: Relation,
}

impl Collection {
    pub fn names(&self) -> &[String] {
        self.conflict.names()
    }
}

pub fn collection(
    input: &Input,
    attrs: Option<&str>,
    parthood: ParthoodVariant,
    mode: ConflictMode,
    notion: RoughObjectNotion,
) -> Result<Collection> {
    if let Input::Poset(f) = input {
        let p = Poset::from_file(f)?;
        return Ok(Collection {
            kind: "poset",
            conflict: ConflictGraph::from_poset(&p, mode),
            order: p.less_relation().clone(),
        });
    }
    let gos = space(input, attrs, parthood)?;
    if let Input::Context(c) = input {
        if !c.objects.is_empty() {
            let regions = c.named_regions(gos.universe())?;
            let order = Relation::from_fn(regions.len(), |i, j| {
                proper_part(&parthood, &regions[i].1, &regions[j].1, &gos)
            });
            return Ok(Collection {
                kind: "objects",
                conflict: ConflictGraph::from_regions(&regions, &parthood, &gos, mode),
                order,
            });
        }
    }
    let q = rough_objects(&gos, notion)?;
    let order = Relation::from_fn(q.len(), |i, j| i != j && q.order.holds(i, j));
    Ok(Collection {
        kind: "rough-objects",
        conflict: ConflictGraph::from_quotient(&q, &gos, mode),
        order,
    })
}

/// Parses `0x`-prefixed hexadecimal or decimal seeds.
pub fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let s = s.trim();
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16).map_err(|e| e.to_string()),
        None => u64::from_str(s).map_err(|e| e.to_string()),
    }
}
