//! Closed sub-intervals of the unit interval and the pointwise kernels all
//! higher-level operations are assembled from.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Rounding, Scalar};

/// Whether a scalar multiplies or divides the interval endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaleKind {
    Multiply,
    Divide,
}

/// What lenient construction had to do to make an interval valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRepair {
    pub original_lo: Scalar,
    pub original_hi: Scalar,
    pub clamped: bool,
    pub swapped: bool,
}

impl IntervalRepair {
    pub fn describe(&self) -> String {
        let mut actions = Vec::new();
        if self.clamped {
            actions.push("clamped into [0,1]");
        }
        if self.swapped {
            actions.push("swapped inverted endpoints");
        }
        format!(
            "[{}, {}] {}",
            self.original_lo,
            self.original_hi,
            actions.join(" and ")
        )
    }
}

/// A closed interval `[lo, hi]` with `0 <= lo <= hi <= 1`, exact endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Scalar,
    hi: Scalar,
}

impl Interval {
    /// Strict constructor: rejects endpoints outside `[0,1]` or out of order.
    pub fn new(lo: Scalar, hi: Scalar) -> Result<Self> {
        if !lo.is_in_unit() || !hi.is_in_unit() || lo > hi {
            return Err(Error::InvalidInterval {
                lo: Box::new(lo),
                hi: Box::new(hi),
            });
        }
        Ok(Interval { lo, hi })
    }

    /// Lenient constructor: clamps endpoints into `[0,1]`, then swaps them if
    /// inverted. Returns a repair record when anything was fixed.
    pub fn new_lenient(lo: Scalar, hi: Scalar) -> (Self, Option<IntervalRepair>) {
        let clamped_lo = lo.clamp_unit();
        let clamped_hi = hi.clamp_unit();
        let clamped = clamped_lo != lo || clamped_hi != hi;
        let swapped = clamped_lo > clamped_hi;
        let (final_lo, final_hi) = if swapped {
            (clamped_hi, clamped_lo)
        } else {
            (clamped_lo, clamped_hi)
        };
        let repair = if clamped || swapped {
            Some(IntervalRepair {
                original_lo: lo,
                original_hi: hi,
                clamped,
                swapped,
            })
        } else {
            None
        };
        (
            Interval {
                lo: final_lo,
                hi: final_hi,
            },
            repair,
        )
    }

    /// Internal constructor for results that are valid by construction.
    fn assemble(lo: Scalar, hi: Scalar) -> Self {
        debug_assert!(lo.is_in_unit() && hi.is_in_unit() && lo <= hi);
        Interval { lo, hi }
    }

    pub fn zero() -> Self {
        Interval::assemble(Scalar::zero(), Scalar::zero())
    }

    pub fn unit() -> Self {
        Interval::assemble(Scalar::one(), Scalar::one())
    }

    pub fn lo(&self) -> &Scalar {
        &self.lo
    }

    pub fn hi(&self) -> &Scalar {
        &self.hi
    }

    /// `[min(lo, lo'), min(hi, hi')]`
    pub fn pointwise_min(&self, other: &Self) -> Self {
        Interval::assemble(
            min_ref(&self.lo, &other.lo).clone(),
            min_ref(&self.hi, &other.hi).clone(),
        )
    }

    /// `[max(lo, lo'), max(hi, hi')]`
    pub fn pointwise_max(&self, other: &Self) -> Self {
        Interval::assemble(
            max_ref(&self.lo, &other.lo).clone(),
            max_ref(&self.hi, &other.hi).clone(),
        )
    }

    /// `[min(lo + lo', 1), min(hi + hi', 1)]`
    pub fn add_clamped(&self, other: &Self) -> Self {
        Interval::assemble(
            (&self.lo + &other.lo).clamp_unit(),
            (&self.hi + &other.hi).clamp_unit(),
        )
    }

    /// Multiplies or divides both endpoints by `c > 0`, clamping at 1.
    pub fn scale_clamped(&self, c: &Scalar, kind: ScaleKind) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::NonPositiveScalar(Box::new(c.clone())));
        }
        let (lo, hi) = match kind {
            ScaleKind::Multiply => (&self.lo * c, &self.hi * c),
            ScaleKind::Divide => (&self.lo / c, &self.hi / c),
        };
        Ok(Interval::assemble(lo.clamp_unit(), hi.clamp_unit()))
    }

    /// `[1 - hi, 1 - lo]`
    pub fn complement_unit(&self) -> Self {
        Interval::assemble(&Scalar::one() - &self.hi, &Scalar::one() - &self.lo)
    }

    /// Component-wise arithmetic mean. The sum is *not* clamped: the mean of
    /// unit-interval endpoints is already in the unit interval, and clamping
    /// an intermediate sum would change the result.
    pub fn mean<'a, I>(items: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Interval>,
    {
        let mut lo_sum = Scalar::zero();
        let mut hi_sum = Scalar::zero();
        let mut count = 0i64;
        for item in items {
            lo_sum = &lo_sum + &item.lo;
            hi_sum = &hi_sum + &item.hi;
            count += 1;
        }
        if count == 0 {
            return Err(Error::EmptySequence);
        }
        let n = Scalar::from_integer(count);
        Ok(Interval::assemble(&lo_sum / &n, &hi_sum / &n))
    }

    /// Both endpoints no larger than `other`'s.
    pub fn le(&self, other: &Self) -> bool {
        self.lo <= other.lo && self.hi <= other.hi
    }

    /// Both endpoints no smaller than `other`'s.
    pub fn ge(&self, other: &Self) -> bool {
        self.lo >= other.lo && self.hi >= other.hi
    }

    pub fn round_dp(&self, dp: u32, mode: Rounding) -> Self {
        Interval::assemble(self.lo.round_dp(dp, mode), self.hi.round_dp(dp, mode))
    }

    /// Exact minimal text, `[0.55,0.8]`.
    pub fn exact_text(&self) -> String {
        format!("[{},{}]", self.lo, self.hi)
    }

    /// Half-up rounded text with at most `dp` fraction digits.
    pub fn display_dp(&self, dp: u32) -> String {
        format!("[{},{}]", self.lo.display_dp(dp), self.hi.display_dp(dp))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.exact_text())
    }
}

fn min_ref<'a>(a: &'a Scalar, b: &'a Scalar) -> &'a Scalar {
    if a <= b {
        a
    } else {
        b
    }
}

fn max_ref<'a>(a: &'a Scalar, b: &'a Scalar) -> &'a Scalar {
    if a >= b {
        a
    } else {
        b
    }
}
