//! Plain-text table rendering in the tabular layout the datasets use:
//! parameters as rows, objects as columns. Output is deterministic, so it
//! can be compared byte-for-byte.

use crate::decision::{suggest_rethreshold, DecisionReport};
use crate::levels::ThresholdSet;
use crate::soft::IvnSoftSet;

fn aligned_rows(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let columns = header.len();
    let mut widths = vec![0usize; columns];
    for row in std::iter::once(&header).chain(rows.iter()) {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows) {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            let pad = widths[i].saturating_sub(cell.chars().count());
            for _ in 0..pad {
                line.push(' ');
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Cell grid of an ivn-soft set. `digits` rounds endpoints half-up for
/// display; `None` prints exact minimal text.
pub fn render_ivn_table(set: &IvnSoftSet, digits: Option<u32>) -> String {
    let mut header = vec!["U".to_string()];
    header.extend(set.universe().iter().cloned());
    let rows = set
        .parameters()
        .iter()
        .enumerate()
        .map(|(p, parameter)| {
            let mut row = vec![parameter.clone()];
            for u in 0..set.universe().len() {
                let cell = set.cell(p, u);
                row.push(match digits {
                    Some(dp) => cell.display_dp(dp),
                    None => cell.exact_text(),
                });
            }
            row
        })
        .collect();
    aligned_rows(header, rows)
}

/// One row per parameter: rounded display next to the exact cut.
pub fn render_threshold_table(threshold: &ThresholdSet, digits: u32) -> String {
    let header = vec![
        "parameter".to_string(),
        "cut".to_string(),
        "exact".to_string(),
    ];
    let rows = threshold
        .parameters()
        .iter()
        .enumerate()
        .map(|(p, parameter)| {
            let cut = threshold.cut(p);
            vec![parameter.clone(), cut.display_dp(digits), cut.exact_text()]
        })
        .collect();
    let mut out = format!("threshold ({})\n", threshold.origin().label());
    out.push_str(&aligned_rows(header, rows));
    out
}

/// Full decision report in text form: threshold, level table, per-parameter
/// level rows, choice values and the outcome.
pub fn render_report(report: &DecisionReport) -> String {
    let level = report.level.result();
    let mut out = String::new();
    out.push_str(&format!(
        "rule: {}   mode: {}   source: {}\n",
        report.audit.rule_label,
        report.audit.mode.label(),
        report.audit.source_digest
    ));
    out.push_str(&render_threshold_table(&report.audit.threshold, 2));
    out.push_str("\nlevel soft set\n");
    out.push_str(&level.render_table());
    for (p, parameter) in level.parameters().iter().enumerate() {
        out.push_str(&format!(
            "{}: {{{}}}\n",
            parameter,
            level.row_members(p).join(", ")
        ));
    }
    out.push_str("\nchoice values\n");
    for (object, count) in &report.choices.counts {
        out.push_str(&format!("c({object}) = {count}\n"));
    }
    match &report.unique_winner {
        Some(winner) => out.push_str(&format!("optimal: {winner}\n")),
        None => {
            out.push_str(&format!("optimal (tie): {}\n", report.optimal.join(", ")));
            if let Ok(rules) = suggest_rethreshold(report) {
                let labels: Vec<String> = rules.iter().map(|r| r.label()).collect();
                if labels.is_empty() {
                    out.push_str("tie: no stricter rule available in the escalation order\n");
                } else {
                    out.push_str(&format!(
                        "tie: consider re-running with a stricter rule: {}\n",
                        labels.join(", ")
                    ));
                }
            }
        }
    }
    if !report.audit.repairs.is_empty() {
        out.push_str("\nrepairs\n");
        for repair in &report.audit.repairs {
            out.push_str(&format!("- {repair}\n"));
        }
    }
    if !report.audit.notes.is_empty() {
        out.push_str("\nnotes\n");
        for note in &report.audit.notes {
            out.push_str(&format!("- {note}\n"));
        }
    }
    out
}
