//! Exact rational numbers.
//!
//! Every weight and multiweight is carried as a reduced fraction of 128-bit
//! integers. Arithmetic is checked: an overflow aborts with a panic instead of
//! silently wrapping, since a wrapped value would turn equality tests into noise.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Panics if `denominator` is zero.
    pub fn new(numerator: i128, denominator: i128) -> Self {
        assert!(denominator != 0, "zero denominator");
        Rational(Ratio::new(numerator, denominator))
    }

    pub fn from_integer(value: i128) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn numerator(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn half(self) -> Self {
        self / Rational::from_integer(2)
    }

    /// Lossy conversion, for display and layout only.
    pub fn to_f64(&self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}

fn overflow(op: &str) -> ! {
    panic!("exact rational {op} overflowed 128-bit range")
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0.checked_add(&rhs.0).unwrap_or_else(|| overflow("addition")))
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = *self + rhs;
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0.checked_sub(&rhs.0).unwrap_or_else(|| overflow("subtraction")))
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0.checked_mul(&rhs.0).unwrap_or_else(|| overflow("multiplication")))
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0.checked_div(&rhs.0).unwrap_or_else(|| overflow("division")))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + *x)
    }
}

impl From<i128> for Rational {
    fn from(value: i128) -> Self {
        Rational::from_integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_integer(text: &str, whole: &str) -> Result<i128, Error> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Syntax(format!("not a number: {whole:?}")));
    }
    text.parse::<i128>().map_err(|_| Error::Syntax(format!("number out of range: {whole:?}")))
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts integers (`3`), decimals (`3.5`, `-.25`) and fractions (`7/2`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let text = s.trim();
        let (negative, body) = match text.as_bytes().first() {
            Some(b'-') => (true, &text[1..]),
            Some(b'+') => (false, &text[1..]),
            _ => (false, text),
        };
        let magnitude = if let Some((num, den)) = body.split_once('/') {
            let num = parse_integer(num.trim(), s)?;
            let den = parse_integer(den.trim(), s)?;
            if den == 0 {
                return Err(Error::Syntax(format!("zero denominator: {s:?}")));
            }
            Ratio::new(num, den)
        } else if let Some((int, frac)) = body.split_once('.') {
            if int.is_empty() && frac.is_empty() {
                return Err(Error::Syntax(format!("not a number: {s:?}")));
            }
            let int = if int.is_empty() { 0 } else { parse_integer(int, s)? };
            let (frac_value, scale) = if frac.is_empty() {
                (0, 1)
            } else {
                let digits = u32::try_from(frac.len())
                    .ok()
                    .filter(|&d| d <= 36)
                    .ok_or_else(|| Error::Syntax(format!("too many decimal places: {s:?}")))?;
                (parse_integer(frac, s)?, 10i128.pow(digits))
            };
            let scaled = int
                .checked_mul(scale)
                .and_then(|v| v.checked_add(frac_value))
                .ok_or_else(|| Error::Syntax(format!("number out of range: {s:?}")))?;
            Ratio::new(scaled, scale)
        } else {
            Ratio::from_integer(parse_integer(body, s)?)
        };
        Ok(Rational(if negative { -magnitude } else { magnitude }))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(r("3.5"), Rational::new(7, 2));
        assert_eq!(r("0.1") + r("0.2"), r("0.3"));
        assert_eq!(r("-.25"), Rational::new(-1, 4));
        assert_eq!(r("7/2"), Rational::new(7, 2));
        assert_eq!(r("10/4"), Rational::new(5, 2));
        assert_eq!(r(" 4 "), Rational::from_integer(4));
        assert_eq!(r("2."), Rational::from_integer(2));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", ".", "1/0", "abc", "1.2.3", "1e5", "--1", "1/-2", "0x10"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(Rational::new(6, 4).to_string(), "3/2");
        assert_eq!(Rational::new(-8, 4).to_string(), "-2");
    }

    #[test]
    #[should_panic(expected = "overflowed")]
    fn overflow_panics() {
        let big = Rational::from_integer(i128::MAX);
        let _ = big + Rational::ONE;
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(n in -1_000_000i128..1_000_000, d in 1i128..10_000) {
            let x = Rational::new(n, d);
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
