//! Exact fractions backing every metric value.
//!
//! Metric values are subset counts (`numerator` things out of `denominator`
//! things) and are kept as integer pairs, never floats. A zero denominator
//! means the metric is undefined for the scope it was computed over (for
//! example CTF of a model with no classes); callers must handle that case
//! explicitly instead of reading a silent 0 or 1.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// A non-negative fraction `num/den` with `num <= den`.
///
/// Equality and hashing are structural (`2/4 != 1/2`) so that raw counts
/// survive round-trips. Use [`Ratio::value_cmp`] or the `value_*` helpers to
/// compare by mathematical value; those comparisons cross-multiply in 128-bit
/// arithmetic and never go through floating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    /// Builds `num/den`. Counting code must uphold `num <= den`.
    pub fn new(num: u64, den: u64) -> Self {
        debug_assert!(num <= den || den == 0 && num == 0, "ratio {num}/{den} out of [0,1]");
        Ratio { num, den }
    }

    /// The undefined ratio `0/0`.
    pub fn undefined() -> Self {
        Ratio { num: 0, den: 0 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// False when the denominator is zero.
    pub fn is_defined(&self) -> bool {
        self.den != 0
    }

    /// Compares by value via cross-multiplication; `None` if either side is
    /// undefined.
    pub fn value_cmp(&self, other: &Ratio) -> Option<Ordering> {
        if !self.is_defined() || !other.is_defined() {
            return None;
        }
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        Some(lhs.cmp(&rhs))
    }

    /// True when both sides are defined and equal in value (`2/4 == 1/2`).
    pub fn value_eq(&self, other: &Ratio) -> bool {
        self.value_cmp(other) == Some(Ordering::Equal)
    }

    /// True when both sides are defined and `self >= other` in value.
    pub fn value_ge(&self, other: &Ratio) -> bool {
        matches!(self.value_cmp(other), Some(Ordering::Greater | Ordering::Equal))
    }

    /// Decimal expansion with exactly six places, rounded half to even.
    /// `None` for the undefined ratio.
    pub fn decimal(&self) -> Option<String> {
        if !self.is_defined() {
            return None;
        }
        const SCALE: u128 = 1_000_000;
        let scaled = self.num as u128 * SCALE;
        let den = self.den as u128;
        let mut q = scaled / den;
        let r = scaled % den;
        match (2 * r).cmp(&den) {
            Ordering::Greater => q += 1,
            Ordering::Equal => {
                if q % 2 == 1 {
                    q += 1;
                }
            }
            Ordering::Less => {}
        }
        Some(format!("{}.{:06}", q / SCALE, q % SCALE))
    }

    /// Parses `"a/b"` fractions or decimal literals like `"0.25"`; the value
    /// must land in `[0, 1]`.
    pub fn parse(s: &str) -> Result<Ratio, RatioParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(RatioParseError::new(s, "empty value"));
        }
        if let Some((num_s, den_s)) = s.split_once('/') {
            let num: u64 = num_s
                .trim()
                .parse()
                .map_err(|_| RatioParseError::new(s, "numerator is not a non-negative integer"))?;
            let den: u64 = den_s
                .trim()
                .parse()
                .map_err(|_| RatioParseError::new(s, "denominator is not a non-negative integer"))?;
            if den == 0 {
                return Err(RatioParseError::new(s, "denominator is zero"));
            }
            if num > den {
                return Err(RatioParseError::new(s, "value exceeds 1"));
            }
            return Ok(Ratio { num, den });
        }
        // Decimal form: int part and up to 18 fractional digits over 10^k.
        let (int_s, frac_s) = s.split_once('.').unwrap_or((s, ""));
        let int_s = if int_s.is_empty() { "0" } else { int_s };
        if !int_s.bytes().all(|b| b.is_ascii_digit()) || !frac_s.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(RatioParseError::new(s, "not a decimal or a/b fraction"));
        }
        if frac_s.len() > 18 {
            return Err(RatioParseError::new(s, "too many fractional digits"));
        }
        let int_part: u64 = int_s
            .parse()
            .map_err(|_| RatioParseError::new(s, "integer part out of range"))?;
        let den = 10u64.pow(frac_s.len() as u32);
        let frac_part: u64 = if frac_s.is_empty() { 0 } else { frac_s.parse().unwrap() };
        let num = int_part
            .checked_mul(den)
            .and_then(|v| v.checked_add(frac_part))
            .ok_or_else(|| RatioParseError::new(s, "value out of range"))?;
        if num > den {
            return Err(RatioParseError::new(s, "value exceeds 1"));
        }
        Ok(Ratio { num, den })
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Ratio", 3)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.serialize_field("value", &self.decimal())?;
        st.end()
    }
}

/// A threshold or metric string that did not parse as a ratio in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioParseError {
    pub input: String,
    pub reason: &'static str,
}

impl RatioParseError {
    fn new(input: &str, reason: &'static str) -> Self {
        RatioParseError { input: input.to_string(), reason }
    }
}

impl fmt::Display for RatioParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid ratio '{}': {}", self.input, self.reason)
    }
}

impl std::error::Error for RatioParseError {}
