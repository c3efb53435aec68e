//! Interval-valued neutrosophic numbers: a truth, an indeterminacy and a
//! falsity interval per cell, with the cell-level kernels of every set
//! operation.
//!
//! The three components are independent; nothing constrains their sum.

use std::fmt;

use crate::error::Result;
use crate::interval::{Interval, ScaleKind};
use crate::scalar::Scalar;

/// Which component of a number a message refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    Truth,
    Indeterminacy,
    Falsity,
}

impl Component {
    pub fn short(&self) -> &'static str {
        match self {
            Component::Truth => "T",
            Component::Indeterminacy => "I",
            Component::Falsity => "F",
        }
    }
}

/// How a value is compared against a threshold when building level soft sets.
///
/// `Dominance` is the faithful reading of the component order: the threshold
/// must sit below the value (truth no larger, indeterminacy and falsity no
/// smaller, endpoint-wise). `AllGeq` instead requires every component of the
/// value to sit at or above the threshold's; it exists only to reproduce
/// sources that read constant cuts that way, and output produced with it is
/// labelled accordingly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComparisonMode {
    #[default]
    Dominance,
    AllGeq,
}

impl ComparisonMode {
    pub fn label(&self) -> &'static str {
        match self {
            ComparisonMode::Dominance => "dominance",
            ComparisonMode::AllGeq => "all-geq",
        }
    }
}

/// One cell of membership data: truth, indeterminacy and falsity intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IvnNumber {
    truth: Interval,
    indeterminacy: Interval,
    falsity: Interval,
}

impl IvnNumber {
    pub fn new(truth: Interval, indeterminacy: Interval, falsity: Interval) -> Self {
        IvnNumber {
            truth,
            indeterminacy,
            falsity,
        }
    }

    /// `⟨[0,0],[1,1],[1,1]⟩` — the bottom of the component order.
    pub fn empty_value() -> Self {
        IvnNumber::new(Interval::zero(), Interval::unit(), Interval::unit())
    }

    /// `⟨[1,1],[0,0],[0,0]⟩` — the top of the component order.
    pub fn universal_value() -> Self {
        IvnNumber::new(Interval::unit(), Interval::zero(), Interval::zero())
    }

    /// `⟨[0,0],[0,0],[0,0]⟩` — the identity of clamped addition.
    pub fn zero_value() -> Self {
        IvnNumber::new(Interval::zero(), Interval::zero(), Interval::zero())
    }

    pub fn truth(&self) -> &Interval {
        &self.truth
    }

    pub fn indeterminacy(&self) -> &Interval {
        &self.indeterminacy
    }

    pub fn falsity(&self) -> &Interval {
        &self.falsity
    }

    pub fn component(&self, c: Component) -> &Interval {
        match c {
            Component::Truth => &self.truth,
            Component::Indeterminacy => &self.indeterminacy,
            Component::Falsity => &self.falsity,
        }
    }

    /// Swaps truth with falsity and reflects indeterminacy in the unit
    /// interval. An involution.
    pub fn complement(&self) -> Self {
        IvnNumber::new(
            self.falsity.clone(),
            self.indeterminacy.complement_unit(),
            self.truth.clone(),
        )
    }

    /// Component order: `self` sits below `other` — truth no larger,
    /// indeterminacy and falsity no smaller, all endpoint-wise. A partial
    /// order with [`IvnNumber::empty_value`] at the bottom and
    /// [`IvnNumber::universal_value`] at the top.
    pub fn dominates(&self, other: &Self) -> bool {
        self.truth.le(&other.truth)
            && self.indeterminacy.ge(&other.indeterminacy)
            && self.falsity.ge(&other.falsity)
    }

    /// Does `self` (a cell value) pass `threshold` under `mode`?
    pub fn satisfies(&self, threshold: &Self, mode: ComparisonMode) -> bool {
        match mode {
            ComparisonMode::Dominance => threshold.dominates(self),
            ComparisonMode::AllGeq => {
                self.truth.ge(&threshold.truth)
                    && self.indeterminacy.ge(&threshold.indeterminacy)
                    && self.falsity.ge(&threshold.falsity)
            }
        }
    }

    /// Least upper bound: max truth, min indeterminacy, min falsity.
    pub fn join(&self, other: &Self) -> Self {
        IvnNumber::new(
            self.truth.pointwise_max(&other.truth),
            self.indeterminacy.pointwise_min(&other.indeterminacy),
            self.falsity.pointwise_min(&other.falsity),
        )
    }

    /// Greatest lower bound: min truth, max indeterminacy, max falsity.
    pub fn meet(&self, other: &Self) -> Self {
        IvnNumber::new(
            self.truth.pointwise_min(&other.truth),
            self.indeterminacy.pointwise_max(&other.indeterminacy),
            self.falsity.pointwise_max(&other.falsity),
        )
    }

    /// Asymmetric difference kernel:
    /// truth `min(T, F')`, indeterminacy `[max(inf I, 1-sup I'), max(sup I, 1-inf I')]`,
    /// falsity `max(F, T')`.
    pub fn difference(&self, other: &Self) -> Self {
        let reflected = other.indeterminacy.complement_unit();
        IvnNumber::new(
            self.truth.pointwise_min(&other.falsity),
            self.indeterminacy.pointwise_max(&reflected),
            self.falsity.pointwise_max(&other.truth),
        )
    }

    /// Clamped addition on all three components.
    pub fn add(&self, other: &Self) -> Self {
        IvnNumber::new(
            self.truth.add_clamped(&other.truth),
            self.indeterminacy.add_clamped(&other.indeterminacy),
            self.falsity.add_clamped(&other.falsity),
        )
    }

    /// Clamped scaling of all three components by `c > 0`.
    pub fn scale(&self, c: &Scalar, kind: ScaleKind) -> Result<Self> {
        Ok(IvnNumber::new(
            self.truth.scale_clamped(c, kind)?,
            self.indeterminacy.scale_clamped(c, kind)?,
            self.falsity.scale_clamped(c, kind)?,
        ))
    }

    /// Folds indeterminacy into truth: `⟨min(T+I,1), [0,0], F⟩`.
    pub fn truth_favorite(&self) -> Self {
        IvnNumber::new(
            self.truth.add_clamped(&self.indeterminacy),
            Interval::zero(),
            self.falsity.clone(),
        )
    }

    /// Folds indeterminacy into falsity: `⟨T, [0,0], min(F+I,1)⟩`.
    pub fn false_favorite(&self) -> Self {
        IvnNumber::new(
            self.truth.clone(),
            Interval::zero(),
            self.falsity.add_clamped(&self.indeterminacy),
        )
    }

    /// `⟨[a,b],[c,d],[e,f]⟩` with exact minimal endpoint text.
    pub fn exact_text(&self) -> String {
        format!(
            "\u{27e8}{},{},{}\u{27e9}",
            self.truth.exact_text(),
            self.indeterminacy.exact_text(),
            self.falsity.exact_text()
        )
    }

    /// Same shape as [`IvnNumber::exact_text`], endpoints half-up rounded to
    /// `dp` digits.
    pub fn display_dp(&self, dp: u32) -> String {
        format!(
            "\u{27e8}{},{},{}\u{27e9}",
            self.truth.display_dp(dp),
            self.indeterminacy.display_dp(dp),
            self.falsity.display_dp(dp)
        )
    }
}

impl fmt::Display for IvnNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.exact_text())
    }
}
