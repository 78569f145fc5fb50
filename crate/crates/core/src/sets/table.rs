//! Information tables: objects × attributes → opaque value tokens.

use std::collections::HashSet;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::sets::{Region, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::Invalid(format!("unknown table format {other:?}"))),
        }
    }
}

/// A total information table. Object order is file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InformationTable {
    objects: Universe,
    attributes: Vec<String>,
    /// Row-major: `values[object][attribute]`.
    values: Vec<Vec<String>>,
}

impl InformationTable {
    pub fn new(objects: Universe, attributes: Vec<String>, values: Vec<Vec<String>>) -> Result<Self> {
        if values.len() != objects.size() {
            return Err(Error::Invalid(format!(
                "{} value rows for {} objects",
                values.len(),
                objects.size()
            )));
        }
        let mut seen = HashSet::new();
        for a in &attributes {
            if !seen.insert(a) {
                return Err(Error::Invalid(format!("duplicate attribute {a:?}")));
            }
        }
        for (row, vals) in values.iter().enumerate() {
            if vals.len() != attributes.len() {
                return Err(Error::Parse {
                    row: row + 1,
                    column: attributes.get(vals.len()).cloned(),
                    message: format!("expected {} values, found {}", attributes.len(), vals.len()),
                });
            }
        }
        Ok(InformationTable {
            objects,
            attributes,
            values,
        })
    }

    pub fn objects(&self) -> &Universe {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn attribute_index(&self, name: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownAttribute(name.to_string()))
    }

    pub fn value(&self, attribute: usize, object: usize) -> &str {
        &self.values[object][attribute]
    }

    /// Objects whose value for `attribute` equals `token`.
    pub fn select(&self, attribute: usize, token: &str) -> Region {
        Region::from_indices(
            self.objects.size(),
            (0..self.objects.size()).filter(|&x| self.value(attribute, x) == token),
        )
    }
}

/// Parses a table. CSV: header `id,<attr>…`; JSON: `{"attributes": […], "objects": [{"id", "values": {…}}]}`.
pub fn parse_information_table(text: &str, format: TableFormat) -> Result<InformationTable> {
    match format {
        TableFormat::Csv => parse_csv(text),
        TableFormat::Json => parse_json(text),
    }
}

fn parse_csv(text: &str) -> Result<InformationTable> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let header = reader.headers().map_err(|e| csv_error(0, e))?.clone();
    if header.is_empty() || header.get(0) != Some("id") {
        return Err(Error::Parse {
            row: 0,
            column: header.get(0).map(str::to_string),
            message: "first header column must be \"id\"".into(),
        });
    }
    let attributes: Vec<String> = header.iter().skip(1).map(str::to_string).collect();

    let mut ids = Vec::new();
    let mut values = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let row = i + 1;
        let record = record.map_err(|e| csv_error(row, e))?;
        if record.len() > header.len() {
            return Err(Error::Parse {
                row,
                column: None,
                message: format!("ragged row: {} fields for {} columns", record.len(), header.len()),
            });
        }
        let mut fields = record.iter();
        let id = fields.next().unwrap_or("");
        if id.is_empty() {
            return Err(Error::Parse {
                row,
                column: Some("id".into()),
                message: "missing object id".into(),
            });
        }
        let mut vals = Vec::with_capacity(attributes.len());
        for attr in &attributes {
            match fields.next() {
                Some(v) if !v.is_empty() => vals.push(v.to_string()),
                _ => {
                    return Err(Error::Parse {
                        row,
                        column: Some(attr.clone()),
                        message: "missing value".into(),
                    })
                }
            }
        }
        ids.push(id.to_string());
        values.push(vals);
    }
    if ids.is_empty() {
        return Err(Error::NoObjects);
    }
    InformationTable::new(Universe::new(ids)?, attributes, values)
}

fn csv_error(row: usize, e: csv::Error) -> Error {
    Error::Parse {
        row,
        column: None,
        message: e.to_string(),
    }
}

#[derive(Deserialize)]
struct JsonTable {
    attributes: Vec<String>,
    objects: Vec<JsonRow>,
}

#[derive(Deserialize)]
struct JsonRow {
    id: String,
    values: serde_json::Map<String, serde_json::Value>,
}

fn parse_json(text: &str) -> Result<InformationTable> {
    let table: JsonTable = serde_json::from_str(text).map_err(|e| Error::Parse {
        row: e.line(),
        column: None,
        message: e.to_string(),
    })?;
    if table.objects.is_empty() {
        return Err(Error::NoObjects);
    }
    let mut ids = Vec::new();
    let mut values = Vec::new();
    for (i, obj) in table.objects.into_iter().enumerate() {
        let row = i + 1;
        let mut vals = Vec::with_capacity(table.attributes.len());
        for attr in &table.attributes {
            let token = match obj.values.get(attr) {
                Some(serde_json::Value::String(s)) => s.clone(),
                Some(serde_json::Value::Null) | None => {
                    return Err(Error::Parse {
                        row,
                        column: Some(attr.clone()),
                        message: "missing value".into(),
                    })
                }
                Some(other) => other.to_string(),
            };
            vals.push(token);
        }
        if let Some(extra) = obj.values.keys().find(|k| !table.attributes.contains(k)) {
            return Err(Error::UnknownAttribute(extra.clone()));
        }
        ids.push(obj.id);
        values.push(vals);
    }
    InformationTable::new(Universe::new(ids)?, table.attributes, values)
}
