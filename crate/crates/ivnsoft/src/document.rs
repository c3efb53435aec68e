//! Dataset, threshold and report documents.
//!
//! Datasets are JSON with degrees carried as decimal text, so values survive
//! the trip through the file format exactly:
//!
//! ```json
//! {
//!   "universe": ["u1", "u2"],
//!   "parameters": ["x1", "x2"],
//!   "values": {
//!     "x1": {
//!       "u1": { "T": ["0.6", "0.8"], "I": ["0.8", "0.9"], "F": ["0.1", "0.5"] },
//!       ...
//!     }
//!   }
//! }
//! ```
//!
//! Numeric JSON literals are accepted and re-parsed through their literal
//! text. Serialization is canonical: parameters then universe order, minimal
//! exact number text, two-space indentation.

use serde_json::{Map, Value};

use crate::decision::{suggest_rethreshold, DecisionReport};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::levels::ThresholdSet;
use crate::number::{Component, IvnNumber};
use crate::scalar::Scalar;
use crate::soft::{CellRepair, IvnSoftSet};

/// Whether loading repairs invalid cells or rejects them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    Strict,
    Lenient,
}

/// One invalid cell found by a full-document scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellIssue {
    pub parameter: String,
    pub object: String,
    pub component: Component,
    pub lo: Scalar,
    pub hi: Scalar,
}

impl CellIssue {
    pub fn describe(&self) -> String {
        format!(
            "cell {}/{} {}: invalid interval [{}, {}]",
            self.parameter,
            self.object,
            self.component.short(),
            self.lo,
            self.hi
        )
    }
}

fn root_object(text: &str) -> Result<Map<String, Value>> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Schema(format!("not valid JSON: {e}")))?;
    match value {
        Value::Object(map) => Ok(map),
        _ => Err(Error::Schema("top level must be an object".to_string())),
    }
}

fn string_list(map: &Map<String, Value>, key: &str) -> Result<Vec<String>> {
    let value = map
        .get(key)
        .ok_or_else(|| Error::Schema(format!("missing {key:?}")))?;
    let items = value
        .as_array()
        .ok_or_else(|| Error::Schema(format!("{key:?} must be an array of strings")))?;
    items
        .iter()
        .map(|item| {
            item.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Schema(format!("{key:?} must contain only strings")))
        })
        .collect()
}

fn scalar_from_value(value: &Value, at: &str) -> Result<Scalar> {
    match value {
        Value::String(text) => Scalar::parse(text).map_err(|e| Error::Schema(format!("{at}: {e}"))),
        // arbitrary-precision numbers keep their literal text
        Value::Number(n) => {
            Scalar::parse(&n.to_string()).map_err(|e| Error::Schema(format!("{at}: {e}")))
        }
        _ => Err(Error::Schema(format!(
            "{at}: expected a number or decimal text"
        ))),
    }
}

fn endpoint_pair(
    cell: &Map<String, Value>,
    component: Component,
    at: &str,
) -> Result<(Scalar, Scalar)> {
    let key = component.short();
    let value = cell
        .get(key)
        .ok_or_else(|| Error::Schema(format!("{at}: missing component {key}")))?;
    let pair = value
        .as_array()
        .ok_or_else(|| Error::Schema(format!("{at} {key}: expected [lo, hi]")))?;
    if pair.len() != 2 {
        return Err(Error::Schema(format!(
            "{at} {key}: expected exactly two endpoints"
        )));
    }
    let lo = scalar_from_value(&pair[0], &format!("{at} {key} lo"))?;
    let hi = scalar_from_value(&pair[1], &format!("{at} {key} hi"))?;
    Ok((lo, hi))
}

struct RawCell {
    parameter: String,
    object: String,
    components: [(Component, Scalar, Scalar); 3],
}

fn check_unique(names: &[String], what: &str) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(Error::Schema(format!("duplicate {what} {name:?}")));
        }
    }
    Ok(())
}

fn scan_cells(text: &str) -> Result<(Vec<String>, Vec<String>, Vec<RawCell>)> {
    let root = root_object(text)?;
    let universe = string_list(&root, "universe")?;
    let parameters = string_list(&root, "parameters")?;
    check_unique(&universe, "object")?;
    check_unique(&parameters, "parameter")?;
    let values = root
        .get("values")
        .ok_or_else(|| Error::Schema("missing \"values\"".to_string()))?
        .as_object()
        .ok_or_else(|| Error::Schema("\"values\" must be an object".to_string()))?;

    for parameter in values.keys() {
        if !parameters.contains(parameter) {
            return Err(Error::Schema(format!(
                "unknown parameter {parameter:?} in \"values\""
            )));
        }
    }

    let mut cells = Vec::with_capacity(parameters.len() * universe.len());
    for parameter in &parameters {
        let row = values
            .get(parameter)
            .ok_or_else(|| Error::Schema(format!("missing row for parameter {parameter:?}")))?
            .as_object()
            .ok_or_else(|| Error::Schema(format!("row {parameter:?} must be an object")))?;
        for object in row.keys() {
            if !universe.contains(object) {
                return Err(Error::Schema(format!(
                    "unknown object {object:?} in row {parameter:?}"
                )));
            }
        }
        for object in &universe {
            let at = format!("cell {parameter}/{object}");
            let cell = row
                .get(object)
                .ok_or_else(|| Error::Schema(format!("missing {at}")))?
                .as_object()
                .ok_or_else(|| Error::Schema(format!("{at}: expected an object")))?;
            let mut components = Vec::with_capacity(3);
            for component in [
                Component::Truth,
                Component::Indeterminacy,
                Component::Falsity,
            ] {
                let (lo, hi) = endpoint_pair(cell, component, &at)?;
                components.push((component, lo, hi));
            }
            cells.push(RawCell {
                parameter: parameter.clone(),
                object: object.clone(),
                components: components.try_into().expect("three components"),
            });
        }
    }
    Ok((universe, parameters, cells))
}

/// Parses a dataset document into an [`IvnSoftSet`].
///
/// Strict mode rejects the first invalid cell; lenient mode repairs invalid
/// cells (clamp into `[0,1]`, swap inverted endpoints) and records one
/// repair note per fixed component.
pub fn parse_dataset(text: &str, mode: ParseMode) -> Result<IvnSoftSet> {
    let (universe, parameters, raw_cells) = scan_cells(text)?;
    let mut cells = Vec::with_capacity(raw_cells.len());
    let mut repairs = Vec::new();
    for raw in &raw_cells {
        let mut intervals = Vec::with_capacity(3);
        for (component, lo, hi) in &raw.components {
            let interval = match mode {
                ParseMode::Strict => Interval::new(lo.clone(), hi.clone()).map_err(|_| {
                    Error::Schema(
                        CellIssue {
                            parameter: raw.parameter.clone(),
                            object: raw.object.clone(),
                            component: *component,
                            lo: lo.clone(),
                            hi: hi.clone(),
                        }
                        .describe(),
                    )
                })?,
                ParseMode::Lenient => {
                    let (interval, repair) = Interval::new_lenient(lo.clone(), hi.clone());
                    if let Some(repair) = repair {
                        repairs.push(CellRepair {
                            parameter: raw.parameter.clone(),
                            object: raw.object.clone(),
                            component: *component,
                            original_lo: repair.original_lo,
                            original_hi: repair.original_hi,
                            repaired: interval.clone(),
                            clamped: repair.clamped,
                            swapped: repair.swapped,
                        });
                    }
                    interval
                }
            };
            intervals.push(interval);
        }
        let falsity = intervals.pop().expect("falsity");
        let indeterminacy = intervals.pop().expect("indeterminacy");
        let truth = intervals.pop().expect("truth");
        cells.push(IvnNumber::new(truth, indeterminacy, falsity));
    }
    Ok(IvnSoftSet::new(universe, parameters, cells)?.with_repairs(repairs))
}

/// Scans a structurally well-formed document and lists every invalid cell.
/// An empty list means the document passes strict validation.
pub fn validate_dataset(text: &str) -> Result<Vec<CellIssue>> {
    let (_, _, raw_cells) = scan_cells(text)?;
    let mut issues = Vec::new();
    for raw in &raw_cells {
        for (component, lo, hi) in &raw.components {
            if Interval::new(lo.clone(), hi.clone()).is_err() {
                issues.push(CellIssue {
                    parameter: raw.parameter.clone(),
                    object: raw.object.clone(),
                    component: *component,
                    lo: lo.clone(),
                    hi: hi.clone(),
                });
            }
        }
    }
    Ok(issues)
}

fn interval_value(interval: &Interval) -> Value {
    Value::Array(vec![
        Value::String(interval.lo().to_exact_text()),
        Value::String(interval.hi().to_exact_text()),
    ])
}

fn cell_value(cell: &IvnNumber) -> Value {
    let mut map = Map::new();
    map.insert("T".to_string(), interval_value(cell.truth()));
    map.insert("I".to_string(), interval_value(cell.indeterminacy()));
    map.insert("F".to_string(), interval_value(cell.falsity()));
    Value::Object(map)
}

/// Canonical dataset document text. Reflects repaired values when the set
/// was loaded leniently; `parse(serialize(s))` reproduces `s`'s values.
pub fn serialize_dataset(set: &IvnSoftSet) -> String {
    let mut root = Map::new();
    root.insert(
        "universe".to_string(),
        Value::Array(set.universe().iter().cloned().map(Value::String).collect()),
    );
    root.insert(
        "parameters".to_string(),
        Value::Array(
            set.parameters()
                .iter()
                .cloned()
                .map(Value::String)
                .collect(),
        ),
    );
    let mut values = Map::new();
    for (p, parameter) in set.parameters().iter().enumerate() {
        let mut row = Map::new();
        for (u, object) in set.universe().iter().enumerate() {
            row.insert(object.clone(), cell_value(set.cell(p, u)));
        }
        values.insert(parameter.clone(), Value::Object(row));
    }
    root.insert("values".to_string(), Value::Object(values));
    to_pretty(&Value::Object(root))
}

/// Threshold document: one cut per parameter in the dataset cell format.
pub fn serialize_threshold(threshold: &ThresholdSet) -> String {
    let mut root = Map::new();
    root.insert(
        "parameters".to_string(),
        Value::Array(
            threshold
                .parameters()
                .iter()
                .cloned()
                .map(Value::String)
                .collect(),
        ),
    );
    root.insert(
        "origin".to_string(),
        Value::String(threshold.origin().label()),
    );
    let mut cuts = Map::new();
    for (p, parameter) in threshold.parameters().iter().enumerate() {
        cuts.insert(parameter.clone(), cell_value(threshold.cut(p)));
    }
    root.insert("cuts".to_string(), Value::Object(cuts));
    to_pretty(&Value::Object(root))
}

/// Parses a threshold document. The cuts are taken at face value, so the
/// resulting set always has explicit origin; strict interval validation
/// applies.
pub fn parse_threshold(text: &str) -> Result<ThresholdSet> {
    let root = root_object(text)?;
    let parameters = string_list(&root, "parameters")?;
    let cuts_map = root
        .get("cuts")
        .ok_or_else(|| Error::Schema("missing \"cuts\"".to_string()))?
        .as_object()
        .ok_or_else(|| Error::Schema("\"cuts\" must be an object".to_string()))?;
    for parameter in cuts_map.keys() {
        if !parameters.contains(parameter) {
            return Err(Error::Schema(format!(
                "unknown parameter {parameter:?} in \"cuts\""
            )));
        }
    }
    let mut cuts = Vec::with_capacity(parameters.len());
    for parameter in &parameters {
        let at = format!("cut {parameter}");
        let cell = cuts_map
            .get(parameter)
            .ok_or_else(|| Error::Schema(format!("missing {at}")))?
            .as_object()
            .ok_or_else(|| Error::Schema(format!("{at}: expected an object")))?;
        let mut intervals = Vec::with_capacity(3);
        for component in [
            Component::Truth,
            Component::Indeterminacy,
            Component::Falsity,
        ] {
            let (lo, hi) = endpoint_pair(cell, component, &at)?;
            let interval = Interval::new(lo.clone(), hi.clone()).map_err(|_| {
                Error::Schema(format!(
                    "{at} {}: invalid interval [{lo}, {hi}]",
                    component.short()
                ))
            })?;
            intervals.push(interval);
        }
        let falsity = intervals.pop().expect("falsity");
        let indeterminacy = intervals.pop().expect("indeterminacy");
        let truth = intervals.pop().expect("truth");
        cuts.push(IvnNumber::new(truth, indeterminacy, falsity));
    }
    ThresholdSet::explicit(parameters, cuts)
}

/// Structured document for one level-soft-set extraction.
pub fn serialize_level(level: &crate::levels::LevelSoftSet) -> String {
    let result = level.result();
    let mut root = Map::new();
    root.insert(
        "mode".to_string(),
        Value::String(level.mode().label().to_string()),
    );
    root.insert(
        "source_digest".to_string(),
        Value::String(level.source_digest().to_string()),
    );
    let threshold = level.threshold();
    let mut cuts = Map::new();
    for (p, parameter) in threshold.parameters().iter().enumerate() {
        cuts.insert(parameter.clone(), cell_value(threshold.cut(p)));
    }
    let mut threshold_map = Map::new();
    threshold_map.insert(
        "origin".to_string(),
        Value::String(threshold.origin().label()),
    );
    threshold_map.insert("cuts".to_string(), Value::Object(cuts));
    root.insert("threshold".to_string(), Value::Object(threshold_map));
    let mut rows = Map::new();
    for (p, parameter) in result.parameters().iter().enumerate() {
        rows.insert(
            parameter.clone(),
            Value::Array(
                result
                    .row_members(p)
                    .into_iter()
                    .map(|name| Value::String(name.to_string()))
                    .collect(),
            ),
        );
    }
    root.insert("level".to_string(), Value::Object(rows));
    root.insert(
        "level_table".to_string(),
        Value::String(result.render_table()),
    );
    to_pretty(&Value::Object(root))
}

/// Structured report document for one decision run. Deterministic bytes for
/// fixed inputs; echoes rule, mode and the exact threshold so the run can be
/// reproduced.
pub fn serialize_report(report: &DecisionReport) -> String {
    let level = report.level.result();
    let mut root = Map::new();
    root.insert(
        "rule".to_string(),
        Value::String(report.audit.rule_label.clone()),
    );
    root.insert(
        "mode".to_string(),
        Value::String(report.audit.mode.label().to_string()),
    );
    root.insert(
        "source_digest".to_string(),
        Value::String(report.audit.source_digest.clone()),
    );
    root.insert(
        "universe".to_string(),
        Value::Array(
            level
                .universe()
                .iter()
                .cloned()
                .map(Value::String)
                .collect(),
        ),
    );
    root.insert(
        "parameters".to_string(),
        Value::Array(
            level
                .parameters()
                .iter()
                .cloned()
                .map(Value::String)
                .collect(),
        ),
    );

    let threshold = &report.audit.threshold;
    let mut cuts_exact = Map::new();
    let mut cuts_display = Map::new();
    for (p, parameter) in threshold.parameters().iter().enumerate() {
        cuts_exact.insert(parameter.clone(), cell_value(threshold.cut(p)));
        cuts_display.insert(
            parameter.clone(),
            Value::String(threshold.cut(p).display_dp(2)),
        );
    }
    let mut threshold_map = Map::new();
    threshold_map.insert(
        "origin".to_string(),
        Value::String(threshold.origin().label()),
    );
    threshold_map.insert("cuts".to_string(), Value::Object(cuts_exact));
    threshold_map.insert("display_2dp".to_string(), Value::Object(cuts_display));
    root.insert("threshold".to_string(), Value::Object(threshold_map));

    let mut rows = Map::new();
    for (p, parameter) in level.parameters().iter().enumerate() {
        rows.insert(
            parameter.clone(),
            Value::Array(
                level
                    .row_members(p)
                    .into_iter()
                    .map(|name| Value::String(name.to_string()))
                    .collect(),
            ),
        );
    }
    root.insert("level".to_string(), Value::Object(rows));
    root.insert(
        "level_table".to_string(),
        Value::String(level.render_table()),
    );

    let mut counts = Map::new();
    for (object, count) in &report.choices.counts {
        counts.insert(object.clone(), Value::Number((*count).into()));
    }
    root.insert("choice_values".to_string(), Value::Object(counts));
    root.insert(
        "ranking".to_string(),
        Value::Array(
            report
                .choices
                .ranking
                .iter()
                .cloned()
                .map(Value::String)
                .collect(),
        ),
    );
    root.insert(
        "optimal".to_string(),
        Value::Array(report.optimal.iter().cloned().map(Value::String).collect()),
    );
    root.insert(
        "unique_winner".to_string(),
        report
            .unique_winner
            .clone()
            .map(Value::String)
            .unwrap_or(Value::Null),
    );
    if report.is_tied() {
        let suggestions = suggest_rethreshold(report)
            .map(|rules| rules.iter().map(|r| Value::String(r.label())).collect())
            .unwrap_or_default();
        root.insert("suggested_rules".to_string(), Value::Array(suggestions));
    }
    root.insert(
        "repairs".to_string(),
        Value::Array(
            report
                .audit
                .repairs
                .iter()
                .cloned()
                .map(Value::String)
                .collect(),
        ),
    );
    root.insert(
        "notes".to_string(),
        Value::Array(
            report
                .audit
                .notes
                .iter()
                .cloned()
                .map(Value::String)
                .collect(),
        ),
    );
    to_pretty(&Value::Object(root))
}

fn to_pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializing JSON");
    text.push('\n');
    text
}
