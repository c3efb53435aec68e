//! The level-set decision procedure: build a threshold, cut the level soft
//! set, tabulate it, count choice values, and report the argmax set.
//!
//! Ties are never broken arbitrarily. A report carries the full optimal set;
//! a unique winner is present only when that set is a singleton, and
//! [`suggest_rethreshold`] proposes stricter rules for tied reports.

use crate::crisp::ChoiceValues;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::levels::{level_soft_set, ConstantCut, ExtremeKind, LevelSoftSet, ThresholdSet};
use crate::number::ComparisonMode;
use crate::soft::IvnSoftSet;

/// How the per-parameter cut is produced in step 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThresholdRule {
    Avg,
    Extreme(ExtremeKind),
    Constant(Box<ConstantCut>),
    Explicit(ThresholdSet),
}

impl ThresholdRule {
    pub fn label(&self) -> String {
        match self {
            ThresholdRule::Avg => "avg".to_string(),
            ThresholdRule::Extreme(ExtremeKind::MaxMaxMax) => "MMM-extrapolated".to_string(),
            ThresholdRule::Extreme(kind) => kind.label().to_string(),
            ThresholdRule::Constant(cut) => format!(
                "constant({},{},{})",
                cut.alpha.exact_text(),
                cut.beta.exact_text(),
                cut.gamma.exact_text()
            ),
            ThresholdRule::Explicit(_) => "explicit".to_string(),
        }
    }

    /// Resolves the rule into a concrete threshold over the set's parameters.
    pub fn resolve(&self, set: &IvnSoftSet) -> Result<ThresholdSet> {
        match self {
            ThresholdRule::Avg => Ok(ThresholdSet::avg(set)),
            ThresholdRule::Extreme(kind) => Ok(ThresholdSet::extreme(set, *kind)),
            ThresholdRule::Constant(cut) => Ok(ThresholdSet::constant(
                set.parameters().to_vec(),
                cut.alpha.clone(),
                cut.beta.clone(),
                cut.gamma.clone(),
            )),
            ThresholdRule::Explicit(threshold) => {
                if threshold.parameters() != set.parameters() {
                    return Err(Error::ThresholdMismatch(format!(
                        "explicit threshold parameters {:?} do not match the set's {:?}",
                        threshold.parameters(),
                        set.parameters()
                    )));
                }
                Ok(threshold.clone())
            }
        }
    }
}

/// A threshold rule together with the comparison mode it is applied under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionRule {
    pub threshold: ThresholdRule,
    pub mode: ComparisonMode,
}

impl ThresholdRule {
    pub fn constant(alpha: Interval, beta: Interval, gamma: Interval) -> Self {
        ThresholdRule::Constant(Box::new(ConstantCut { alpha, beta, gamma }))
    }
}

impl DecisionRule {
    pub fn new(threshold: ThresholdRule, mode: ComparisonMode) -> Self {
        DecisionRule { threshold, mode }
    }

    pub fn avg(mode: ComparisonMode) -> Self {
        DecisionRule::new(ThresholdRule::Avg, mode)
    }
}

/// Everything a decision run used and produced, for audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionAudit {
    pub rule_label: String,
    pub mode: ComparisonMode,
    pub threshold: ThresholdSet,
    pub source_digest: String,
    /// Lenient-load repair notes carried over from the input set(s).
    pub repairs: Vec<String>,
    /// Caveats attached to the run: extrapolated rule, compatibility mode,
    /// group-extension provenance, rounded-cut compatibility.
    pub notes: Vec<String>,
}

/// The outcome of one decision run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionReport {
    pub level: LevelSoftSet,
    pub choices: ChoiceValues,
    pub optimal: Vec<String>,
    pub unique_winner: Option<String>,
    pub audit: DecisionAudit,
}

impl DecisionReport {
    pub fn is_tied(&self) -> bool {
        self.unique_winner.is_none()
    }
}

fn report_from_level(
    level: LevelSoftSet,
    repairs: Vec<String>,
    audit_notes: Vec<String>,
    rule_label: String,
) -> DecisionReport {
    let choices = level.result().choice_values();
    let optimal = choices.optimal();
    let unique_winner = (optimal.len() == 1).then(|| optimal[0].clone());
    let audit = DecisionAudit {
        rule_label,
        mode: level.mode(),
        threshold: level.threshold().clone(),
        source_digest: level.source_digest().to_string(),
        repairs,
        notes: audit_notes,
    };
    DecisionReport {
        level,
        choices,
        optimal,
        unique_winner,
        audit,
    }
}

/// Runs the whole pipeline on one set.
pub fn decide(set: &IvnSoftSet, rule: &DecisionRule) -> Result<DecisionReport> {
    decide_with_rounding(set, rule, None)
}

/// [`decide`], optionally rounding cut endpoints half-up to `round_dp`
/// decimal places before comparing. Rounding is a compatibility device for
/// cuts published in rounded form; exact cuts are the default.
pub fn decide_with_rounding(
    set: &IvnSoftSet,
    rule: &DecisionRule,
    round_dp: Option<u32>,
) -> Result<DecisionReport> {
    let mut threshold = rule.threshold.resolve(set)?;
    let mut notes = Vec::new();
    if let Some(dp) = round_dp {
        threshold = threshold.rounded(dp);
        notes.push(format!(
            "cut endpoints rounded half-up to {dp} decimal places before comparison"
        ));
    }
    if threshold.origin().is_extrapolated() {
        notes.push("MMM rule is an extrapolation: max-max-max completes the threshold naming scheme by symmetry".to_string());
    }
    if rule.mode == ComparisonMode::AllGeq {
        notes.push(
            "all-geq comparison is a compatibility mode; dominance is the faithful default"
                .to_string(),
        );
    }
    let level = level_soft_set(set, &threshold, rule.mode)?;
    let repairs = set.repairs().iter().map(|r| r.describe()).collect();
    Ok(report_from_level(
        level,
        repairs,
        notes,
        rule.threshold.label(),
    ))
}

/// Which product combines the two sets of a group decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combiner {
    And,
    Or,
}

impl Combiner {
    pub fn label(&self) -> &'static str {
        match self {
            Combiner::And => "and",
            Combiner::Or => "or",
        }
    }
}

/// Group decision: form the AND/OR product over parameter pairs, then run
/// the ordinary pipeline treating each pair as a parameter.
pub fn group_decide(
    a: &IvnSoftSet,
    b: &IvnSoftSet,
    combiner: Combiner,
    rule: &DecisionRule,
) -> Result<DecisionReport> {
    group_decide_with_rounding(a, b, combiner, rule, None)
}

pub fn group_decide_with_rounding(
    a: &IvnSoftSet,
    b: &IvnSoftSet,
    combiner: Combiner,
    rule: &DecisionRule,
    round_dp: Option<u32>,
) -> Result<DecisionReport> {
    let product = match combiner {
        Combiner::And => a.and_product(b)?,
        Combiner::Or => a.or_product(b)?,
    };
    let mut report = decide_with_rounding(product.as_set(), rule, round_dp)?;
    report.audit.repairs = a
        .repairs()
        .iter()
        .chain(b.repairs())
        .map(|r| r.describe())
        .collect();
    report.audit.notes.push(format!(
        "group decision over the {} product of two sets; pair parameters are ({} x {})",
        combiner.label(),
        product.left_parameters().len(),
        product.right_parameters().len(),
    ));
    Ok(report)
}

/// Proposes stricter rules for a tied report, in a fixed escalation order
/// (avg, then Mmm), never repeating the rule already used. Rules outside the
/// ladder (constant, explicit, mmm, MMM) escalate to the whole ladder; a
/// tied Mmm report has nothing stricter left.
pub fn suggest_rethreshold(report: &DecisionReport) -> Result<Vec<ThresholdRule>> {
    if !report.is_tied() {
        return Err(Error::NotTied);
    }
    // strictness rank inside the escalation ladder
    let rank = |label: &str| match label {
        "avg" => 1,
        "Mmm" => 2,
        _ => 0,
    };
    let used = rank(&report.audit.rule_label);
    let ladder = [
        ThresholdRule::Avg,
        ThresholdRule::Extreme(ExtremeKind::MaxMinMin),
    ];
    Ok(ladder
        .into_iter()
        .filter(|candidate| rank(&candidate.label()) > used)
        .collect())
}
