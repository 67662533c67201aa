//! Extended exponents in `(0, inf]` with exact reciprocal arithmetic.

use crate::rational::{ParseRationalError, Rational};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A Lebesgue exponent `p` in `(0, inf]`.
///
/// Internally stores the reciprocal `1/p`, with `1/inf = 0`, so that the
/// boundedness conditions (which are all stated in reciprocal form) never
/// divide by infinity. All arithmetic is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Exponent {
    recip: Rational,
}

impl Exponent {
    pub const INFINITY: Exponent = Exponent {
        recip: Rational::ZERO,
    };
    pub const ONE: Exponent = Exponent {
        recip: Rational::ONE,
    };

    /// Builds a finite exponent from a positive rational value.
    ///
    /// Panics unless `value > 0`.
    pub fn from_rational(value: Rational) -> Exponent {
        assert!(value.is_positive(), "exponent must be positive, got {value}");
        Exponent {
            recip: value.recip(),
        }
    }

    pub fn from_int(value: i64) -> Exponent {
        Exponent::from_rational(Rational::from_int(value))
    }

    /// Builds an exponent from its reciprocal in `[0, inf)`; `0` means `inf`.
    pub fn from_reciprocal(recip: Rational) -> Exponent {
        assert!(!recip.is_negative(), "reciprocal must be nonnegative");
        Exponent { recip }
    }

    /// `1/p`, with `1/inf = 0`. The involution `p -> 1/(1/p)` holds on `(0, inf]`.
    pub fn reciprocal(&self) -> Rational {
        self.recip
    }

    pub fn is_infinite(&self) -> bool {
        self.recip.is_zero()
    }

    /// The value as a rational, or `None` for infinity.
    pub fn value(&self) -> Option<Rational> {
        if self.is_infinite() {
            None
        } else {
            Some(self.recip.recip())
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            f64::INFINITY
        } else {
            self.recip.recip().to_f64()
        }
    }

    /// Hoelder conjugate, defined for `p` in `[1, inf]`: `1/p + 1/p' = 1`.
    pub fn conjugate(&self) -> Option<Exponent> {
        if self.recip > Rational::ONE {
            return None;
        }
        Some(Exponent {
            recip: Rational::ONE - self.recip,
        })
    }

    /// The scaled quotient `self / p` for finite `p`, with `inf / p = inf`.
    ///
    /// Panics if `p` is infinite.
    pub fn div_by(&self, p: &Exponent) -> Exponent {
        let pv = p.value().expect("cannot scale by an infinite exponent");
        Exponent {
            recip: self.recip * pv,
        }
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        // Larger exponent <=> smaller reciprocal.
        other.recip.cmp(&self.recip)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.recip.recip())
        }
    }
}

impl FromStr for Exponent {
    type Err = ParseRationalError;

    /// Accepts `inf` (any case), integers, fractions like `4/3`, and finite
    /// decimals, parsed exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") || t == "∞" {
            return Ok(Exponent::INFINITY);
        }
        let v: Rational = t.parse()?;
        if !v.is_positive() {
            return Err(ParseRationalError(s.to_string()));
        }
        Ok(Exponent::from_rational(v))
    }
}

impl TryFrom<String> for Exponent {
    type Error = ParseRationalError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Exponent> for String {
    fn from(e: Exponent) -> String {
        e.to_string()
    }
}
