//! Scalar coefficients: real numbers extended with the two infinities.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A coefficient: a finite `f64` or one of the two infinity sentinels.
///
/// NaN is unrepresentable, so equality and ordering are total. Arithmetic
/// that would produce an indeterminate form (`+inf + -inf`, `0 * inf`)
/// reports an error instead of silently yielding NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedReal(f64);

pub const POS_INF: ExtendedReal = ExtendedReal(f64::INFINITY);
pub const NEG_INF: ExtendedReal = ExtendedReal(f64::NEG_INFINITY);

impl ExtendedReal {
    /// Wraps a float. Panics on NaN — NaN is a programming error here,
    /// never a data value.
    pub fn new(value: f64) -> Self {
        assert!(!value.is_nan(), "ExtendedReal cannot hold NaN");
        ExtendedReal(value)
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    /// Sum, rejecting `+inf + -inf`.
    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        if self.0.is_infinite() && rhs.0.is_infinite() && self.0 != rhs.0 {
            return Err(Error::Indeterminate { form: "inf - inf" });
        }
        Ok(ExtendedReal(self.0 + rhs.0))
    }

    /// Difference, rejecting `inf - inf` of the same sign.
    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        if self.0.is_infinite() && rhs.0.is_infinite() && self.0 == rhs.0 {
            return Err(Error::Indeterminate { form: "inf - inf" });
        }
        Ok(ExtendedReal(self.0 - rhs.0))
    }

    /// Product, rejecting `0 * inf`.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        if (self.0 == 0.0 && rhs.0.is_infinite()) || (rhs.0 == 0.0 && self.0.is_infinite()) {
            return Err(Error::Indeterminate { form: "0 * inf" });
        }
        Ok(ExtendedReal(self.0 * rhs.0))
    }

    pub fn min(self, rhs: Self) -> Self {
        if self.0 <= rhs.0 {
            self
        } else {
            rhs
        }
    }

    pub fn max(self, rhs: Self) -> Self {
        if self.0 >= rhs.0 {
            self
        } else {
            rhs
        }
    }

    /// `|self - rhs| <= tol`, with equal infinities counting as equal even
    /// at `tol = 0`.
    pub fn approx_eq(self, rhs: Self, tol: f64) -> bool {
        self.0 == rhs.0 || (self.0 - rhs.0).abs() <= tol
    }
}

impl From<f64> for ExtendedReal {
    fn from(value: f64) -> Self {
        ExtendedReal::new(value)
    }
}

impl From<i64> for ExtendedReal {
    fn from(value: i64) -> Self {
        ExtendedReal(value as f64)
    }
}

impl Eq for ExtendedReal {}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedReal {
    fn cmp(&self, other: &Self) -> Ordering {
        // Safe: NaN is excluded by construction.
        self.0.partial_cmp(&other.0).expect("NaN in ExtendedReal")
    }
}

/// Renders `inf` / `-inf` for the sentinels, integers without a decimal
/// point, and the shortest round-tripping decimal otherwise.
impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for ExtendedReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "+inf" => return Ok(POS_INF),
            "-inf" => return Ok(NEG_INF),
            _ => {}
        }
        let v: f64 = s.parse().map_err(|_| Error::InvalidValue(s.to_string()))?;
        if v.is_nan() || v.is_infinite() {
            // `f64::from_str` accepts spellings like "NaN" and "infinity";
            // the text formats only admit the two above.
            return Err(Error::InvalidValue(s.to_string()));
        }
        Ok(ExtendedReal(v))
    }
}
