//! Exact rational scalars for membership degrees.
//!
//! Every degree in a dataset is kept as an exact rational number. Decimal
//! literals parse to exact decimal fractions (`"0.55"` becomes `11/20`), so
//! comparisons at level-set boundaries are never subject to binary
//! floating-point error. Rounding exists only for display and for the
//! explicit round-before-compare compatibility flag.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// How [`Scalar::round_dp`] resolves digits beyond the requested precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Round half away from zero on the last kept digit (display default).
    HalfUp,
    /// Drop digits beyond the kept precision.
    Truncate,
}

/// An exact rational number.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact ratio `num/den`. Panics if `den == 0`; intended for literals.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Parses decimal text (`"0.55"`, `"1"`, `".5"`) or fraction text
    /// (`"19/60"`) into an exact rational. Signs and exponents are rejected;
    /// degrees and scale factors in this domain are plain non-negative
    /// rationals.
    pub fn parse(text: &str) -> Result<Self> {
        let fail = |why: &str| Error::NumberParse(text.to_string(), why.to_string());
        if text.is_empty() {
            return Err(fail("empty"));
        }
        if let Some((num, den)) = text.split_once('/') {
            let n = digits_to_bigint(num).ok_or_else(|| fail("numerator is not a digit string"))?;
            let d =
                digits_to_bigint(den).ok_or_else(|| fail("denominator is not a digit string"))?;
            if d.is_zero() {
                return Err(fail("zero denominator"));
            }
            return Ok(Scalar(BigRational::new(n, d)));
        }
        if let Some((int_part, frac_part)) = text.split_once('.') {
            let int = if int_part.is_empty() {
                BigInt::zero()
            } else {
                digits_to_bigint(int_part).ok_or_else(|| fail("bad integer part"))?
            };
            let frac = digits_to_bigint(frac_part).ok_or_else(|| fail("bad fractional part"))?;
            let den = pow10(frac_part.len() as u32);
            return Ok(Scalar(BigRational::new(int * &den + frac, den)));
        }
        let n = digits_to_bigint(text).ok_or_else(|| fail("not a digit string"))?;
        Ok(Scalar(BigRational::from_integer(n)))
    }

    /// Minimal exact text: a finite decimal when the reduced denominator has
    /// only factors 2 and 5 (`11/20` prints as `0.55`), otherwise `p/q`.
    pub fn to_exact_text(&self) -> String {
        let num = self.0.numer();
        let den = self.0.denom();
        if den.is_one() {
            return num.to_string();
        }
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        let mut rest = den.clone();
        let mut twos = 0u32;
        let mut fives = 0u32;
        while (&rest % &two).is_zero() {
            rest /= &two;
            twos += 1;
        }
        while (&rest % &five).is_zero() {
            rest /= &five;
            fives += 1;
        }
        if !rest.is_one() {
            return format!("{num}/{den}");
        }
        let digits = twos.max(fives);
        let scaled = num * pow10(digits) / den;
        let sign = if scaled.is_negative() { "-" } else { "" };
        let abs = scaled.abs();
        let (int_part, frac_part) = abs.div_rem(&pow10(digits));
        format!(
            "{sign}{int_part}.{frac_part:0>width$}",
            width = digits as usize
        )
    }

    /// Rounds to `dp` decimal places. The value itself stays exact; this
    /// returns a new exact rational with denominator dividing `10^dp`.
    pub fn round_dp(&self, dp: u32, mode: Rounding) -> Self {
        let m = pow10(dp);
        let n = self.0.numer();
        let d = self.0.denom();
        let units = match mode {
            Rounding::HalfUp => {
                let doubled = BigInt::from(2) * n * &m;
                let half = if self.0.is_negative() { -d } else { d.clone() };
                (doubled + half).div_floor(&(BigInt::from(2) * d))
            }
            Rounding::Truncate => (n * &m) / d,
        };
        Scalar(BigRational::new(units, m))
    }

    /// Half-up rounded text with at most `dp` fraction digits.
    pub fn display_dp(&self, dp: u32) -> String {
        self.round_dp(dp, Rounding::HalfUp).to_exact_text()
    }

    pub fn is_in_unit(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }

    pub fn clamp_unit(&self) -> Self {
        if self.0.is_negative() {
            Scalar::zero()
        } else if self.0 > BigRational::one() {
            Scalar::one()
        } else {
            self.clone()
        }
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Approximate value for diagnostics only; never used in comparisons.
    pub fn to_f64_lossy(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

fn digits_to_bigint(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse::<BigInt>().ok()
}

fn pow10(exp: u32) -> BigInt {
    BigInt::from(10).pow(exp)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_text())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);
