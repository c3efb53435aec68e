//! Exact-arithmetic interval-valued neutrosophic soft sets.
//!
//! An ivn-soft set maps each parameter to an interval-valued neutrosophic
//! set over a finite universe: every (parameter, object) cell carries a
//! truth, an indeterminacy and a falsity interval inside `[0,1]`. This crate
//! implements the full operation algebra on those sets, threshold
//! construction and level-soft-set extraction, and the level-set decision
//! procedure, all over exact rational arithmetic so that boundary
//! comparisons are never decided by floating-point error.

pub mod crisp;
pub mod decision;
pub mod document;
mod error;
pub mod interval;
pub mod levels;
pub mod number;
pub mod render;
pub mod scalar;
pub mod soft;

pub use crisp::{ChoiceValues, CrispSoftSet};
pub use decision::{
    decide, decide_with_rounding, group_decide, group_decide_with_rounding, suggest_rethreshold,
    Combiner, DecisionAudit, DecisionReport, DecisionRule, ThresholdRule,
};
pub use document::{
    parse_dataset, parse_threshold, serialize_dataset, serialize_level, serialize_report,
    serialize_threshold, validate_dataset, CellIssue, ParseMode,
};
pub use error::{Error, Result};
pub use interval::{Interval, IntervalRepair, ScaleKind};
pub use levels::{level_soft_set, ExtremeKind, LevelSoftSet, ThresholdOrigin, ThresholdSet};
pub use number::{ComparisonMode, Component, IvnNumber};
pub use scalar::{Rounding, Scalar};
pub use soft::{CellRepair, IvnSoftSet, PairedIvnSoftSet};
