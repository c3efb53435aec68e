//! Threshold sets and level soft sets: the bridge from ivn-soft sets to
//! crisp soft sets.
//!
//! A threshold set assigns one cut value per parameter. A cell survives into
//! the level soft set when it passes its parameter's cut under the chosen
//! [`ComparisonMode`]. In the constant cut `⟨alpha, beta, gamma⟩`, `alpha`
//! bounds truth from below while `beta` bounds indeterminacy and `gamma`
//! bounds falsity from above (under the default dominance reading).

use crate::crisp::CrispSoftSet;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::number::{ComparisonMode, IvnNumber};
use crate::scalar::Rounding;
use crate::soft::IvnSoftSet;

/// Component-extreme threshold families.
///
/// `MaxMinMin` (written `Mmm`) cuts at max truth, min indeterminacy, min
/// falsity per parameter; `MinMinMin` (`mmm`) uses min truth instead.
/// `MaxMaxMax` (`MMM`) completes the naming scheme by symmetry — it has no
/// defining source and is always labelled extrapolated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremeKind {
    MaxMinMin,
    MinMinMin,
    MaxMaxMax,
}

impl ExtremeKind {
    pub fn label(&self) -> &'static str {
        match self {
            ExtremeKind::MaxMinMin => "Mmm",
            ExtremeKind::MinMinMin => "mmm",
            ExtremeKind::MaxMaxMax => "MMM",
        }
    }
}

/// The three intervals of a constant cut, kept for audit labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantCut {
    pub alpha: Interval,
    pub beta: Interval,
    pub gamma: Interval,
}

/// Where a threshold set came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThresholdOrigin {
    Constant(Box<ConstantCut>),
    Explicit,
    Avg,
    Extreme(ExtremeKind),
}

impl ThresholdOrigin {
    pub fn label(&self) -> String {
        match self {
            ThresholdOrigin::Constant(cut) => format!(
                "constant({},{},{})",
                cut.alpha.exact_text(),
                cut.beta.exact_text(),
                cut.gamma.exact_text()
            ),
            ThresholdOrigin::Explicit => "explicit".to_string(),
            ThresholdOrigin::Avg => "avg".to_string(),
            ThresholdOrigin::Extreme(ExtremeKind::MaxMaxMax) => "MMM-extrapolated".to_string(),
            ThresholdOrigin::Extreme(kind) => kind.label().to_string(),
        }
    }

    /// True for the threshold family that exists only for naming symmetry.
    pub fn is_extrapolated(&self) -> bool {
        matches!(self, ThresholdOrigin::Extreme(ExtremeKind::MaxMaxMax))
    }
}

/// One cut value per parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdSet {
    parameters: Vec<String>,
    cuts: Vec<IvnNumber>,
    origin: ThresholdOrigin,
}

impl ThresholdSet {
    /// The same `⟨alpha, beta, gamma⟩` cut at every parameter.
    pub fn constant(
        parameters: Vec<String>,
        alpha: Interval,
        beta: Interval,
        gamma: Interval,
    ) -> Self {
        let cut = IvnNumber::new(alpha.clone(), beta.clone(), gamma.clone());
        ThresholdSet {
            cuts: vec![cut; parameters.len()],
            parameters,
            origin: ThresholdOrigin::Constant(Box::new(ConstantCut { alpha, beta, gamma })),
        }
    }

    pub fn explicit(parameters: Vec<String>, cuts: Vec<IvnNumber>) -> Result<Self> {
        if parameters.len() != cuts.len() {
            return Err(Error::ThresholdMismatch(format!(
                "{} parameters but {} cuts",
                parameters.len(),
                cuts.len()
            )));
        }
        Ok(ThresholdSet {
            parameters,
            cuts,
            origin: ThresholdOrigin::Explicit,
        })
    }

    /// Component-wise arithmetic mean of each parameter's column.
    pub fn avg(set: &IvnSoftSet) -> Self {
        let cuts = (0..set.parameters().len())
            .map(|p| {
                let column: Vec<&IvnNumber> =
                    (0..set.universe().len()).map(|u| set.cell(p, u)).collect();
                // a set always has a non-empty universe, so mean cannot fail
                let truth = Interval::mean(column.iter().map(|c| c.truth())).unwrap();
                let indeterminacy =
                    Interval::mean(column.iter().map(|c| c.indeterminacy())).unwrap();
                let falsity = Interval::mean(column.iter().map(|c| c.falsity())).unwrap();
                IvnNumber::new(truth, indeterminacy, falsity)
            })
            .collect();
        ThresholdSet {
            parameters: set.parameters().to_vec(),
            cuts,
            origin: ThresholdOrigin::Avg,
        }
    }

    /// Component-extreme cut per parameter; see [`ExtremeKind`].
    pub fn extreme(set: &IvnSoftSet, kind: ExtremeKind) -> Self {
        let fold_min = |acc: Interval, next: &Interval| acc.pointwise_min(next);
        let fold_max = |acc: Interval, next: &Interval| acc.pointwise_max(next);
        let cuts = (0..set.parameters().len())
            .map(|p| {
                let column: Vec<&IvnNumber> =
                    (0..set.universe().len()).map(|u| set.cell(p, u)).collect();
                let fold = |pick: fn(&IvnNumber) -> &Interval, use_max: bool| {
                    let mut acc = pick(column[0]).clone();
                    for cell in &column[1..] {
                        acc = if use_max {
                            fold_max(acc, pick(cell))
                        } else {
                            fold_min(acc, pick(cell))
                        };
                    }
                    acc
                };
                let (t_max, i_max, f_max) = match kind {
                    ExtremeKind::MaxMinMin => (true, false, false),
                    ExtremeKind::MinMinMin => (false, false, false),
                    ExtremeKind::MaxMaxMax => (true, true, true),
                };
                IvnNumber::new(
                    fold(IvnNumber::truth, t_max),
                    fold(IvnNumber::indeterminacy, i_max),
                    fold(IvnNumber::falsity, f_max),
                )
            })
            .collect();
        ThresholdSet {
            parameters: set.parameters().to_vec(),
            cuts,
            origin: ThresholdOrigin::Extreme(kind),
        }
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn cuts(&self) -> &[IvnNumber] {
        &self.cuts
    }

    pub fn cut(&self, parameter: usize) -> &IvnNumber {
        &self.cuts[parameter]
    }

    pub fn cut_by_name(&self, parameter: &str) -> Option<&IvnNumber> {
        let p = self.parameters.iter().position(|x| x == parameter)?;
        Some(&self.cuts[p])
    }

    pub fn origin(&self) -> &ThresholdOrigin {
        &self.origin
    }

    /// Compatibility transform: rounds every cut endpoint half-up to `dp`
    /// decimal places. Comparisons stay exact otherwise; this exists solely
    /// to mimic cuts that were published in rounded form.
    pub fn rounded(&self, dp: u32) -> Self {
        let cuts = self
            .cuts
            .iter()
            .map(|cut| {
                IvnNumber::new(
                    cut.truth().round_dp(dp, Rounding::HalfUp),
                    cut.indeterminacy().round_dp(dp, Rounding::HalfUp),
                    cut.falsity().round_dp(dp, Rounding::HalfUp),
                )
            })
            .collect();
        ThresholdSet {
            parameters: self.parameters.clone(),
            cuts,
            origin: self.origin.clone(),
        }
    }
}

/// The crisp soft set cut out of an ivn-soft set by a threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSoftSet {
    result: CrispSoftSet,
    threshold: ThresholdSet,
    mode: ComparisonMode,
    source_digest: String,
}

impl LevelSoftSet {
    pub fn result(&self) -> &CrispSoftSet {
        &self.result
    }

    pub fn threshold(&self) -> &ThresholdSet {
        &self.threshold
    }

    pub fn mode(&self) -> ComparisonMode {
        self.mode
    }

    pub fn source_digest(&self) -> &str {
        &self.source_digest
    }
}

/// Marks each (parameter, object) cell that passes its parameter's cut.
pub fn level_soft_set(
    set: &IvnSoftSet,
    threshold: &ThresholdSet,
    mode: ComparisonMode,
) -> Result<LevelSoftSet> {
    if threshold.parameters() != set.parameters() {
        return Err(Error::ThresholdMismatch(format!(
            "threshold parameters {:?} do not match the set's {:?}",
            threshold.parameters(),
            set.parameters()
        )));
    }
    let rows = (0..set.parameters().len())
        .map(|p| {
            let cut = threshold.cut(p);
            (0..set.universe().len())
                .map(|u| set.cell(p, u).satisfies(cut, mode))
                .collect()
        })
        .collect();
    let result = CrispSoftSet::new(set.universe().to_vec(), set.parameters().to_vec(), rows)?;
    Ok(LevelSoftSet {
        result,
        threshold: threshold.clone(),
        mode,
        source_digest: set.digest(),
    })
}
