//! Exact rational weights and the three-element weight set.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"-3"`, `"1/2"`, `"-0.125"` or `"2.5"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = |msg: &str| Error::Parse {
        offset: 0,
        message: format!("{msg}: {text:?}"),
    };
    if s.is_empty() {
        return Err(bad("empty number"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_int(n.trim()).ok_or_else(|| bad("bad numerator"))?;
        let d = parse_int(d.trim()).ok_or_else(|| bad("bad denominator"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    let (neg, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad("no digits"));
    }
    if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("not a decimal"));
    }
    let digits = format!("{whole}{frac}");
    let num = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse::<BigInt>().map_err(|_| bad("not a decimal"))?
    };
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(num, den);
    Ok(if neg { -r } else { r })
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Always `num/den`, e.g. `-1/1`, `3/2`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Three weights `a < b < c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSet {
    values: [Rational; 3],
}

/// Which way the gaps of a weight set compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Spacing {
    /// `b - a < c - b`
    WiderAbove,
    /// `b - a = c - b`
    Arithmetic,
    /// `b - a > c - b`
    WiderBelow,
}

impl WeightSet {
    /// Accepts the three values in any order; they must be distinct.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let mut values = [a, b, c];
        values.sort();
        if values[0] == values[1] || values[1] == values[2] {
            return Err(Error::InvalidWeightSet(format!(
                "values must be distinct, got {}",
                values.iter().map(format_rational).collect::<Vec<_>>().join(",")
            )));
        }
        Ok(Self { values })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(int(a), int(b), int(c))
    }

    /// The set `{-d1, 0, d2}`.
    pub fn centered(d1: &Rational, d2: &Rational) -> Result<Self> {
        Self::new(-d1.clone(), Rational::zero(), d2.clone())
    }

    pub fn values(&self) -> &[Rational; 3] {
        &self.values
    }

    pub fn a(&self) -> &Rational {
        &self.values[0]
    }

    pub fn b(&self) -> &Rational {
        &self.values[1]
    }

    pub fn c(&self) -> &Rational {
        &self.values[2]
    }

    pub fn lower_gap(&self) -> Rational {
        &self.values[1] - &self.values[0]
    }

    pub fn upper_gap(&self) -> Rational {
        &self.values[2] - &self.values[1]
    }

    pub fn spacing(&self) -> Spacing {
        match self.lower_gap().cmp(&self.upper_gap()) {
            std::cmp::Ordering::Less => Spacing::WiderAbove,
            std::cmp::Ordering::Equal => Spacing::Arithmetic,
            std::cmp::Ordering::Greater => Spacing::WiderBelow,
        }
    }

    pub fn is_arithmetic(&self) -> bool {
        self.spacing() == Spacing::Arithmetic
    }

    pub fn contains(&self, r: &Rational) -> bool {
        self.values.contains(r)
    }

    pub fn index_of(&self, r: &Rational) -> Option<usize> {
        self.values.iter().position(|v| v == r)
    }

    /// Common-denominator integer representatives `(scaled values, denominator)`.
    pub fn scaled_integers(&self) -> ([BigInt; 3], BigInt) {
        let den = self
            .values
            .iter()
            .fold(BigInt::one(), |acc, v| num_integer::lcm(acc, v.denom().clone()));
        let scaled = self
            .values
            .clone()
            .map(|v| (v * Rational::from_integer(den.clone())).to_integer());
        (scaled, den)
    }

    pub fn has_negative(&self) -> bool {
        self.values[0].is_negative()
    }
}

impl FromStr for WeightSet {
    type Err = Error;

    /// `"a,b,c"` with exact decimals or fractions.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidWeightSet(format!(
                "expected three comma-separated values, got {s:?}"
            )));
        }
        Self::new(
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        )
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl Serialize for WeightSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.values.iter().map(format_rational).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        if v.len() != 3 {
            return Err(serde::de::Error::custom("weight set needs three values"));
        }
        let parsed: Result<Vec<Rational>> = v.iter().map(|s| parse_rational(s)).collect();
        let mut parsed = parsed.map_err(serde::de::Error::custom)?;
        let c = parsed.pop().unwrap();
        let b = parsed.pop().unwrap();
        let a = parsed.pop().unwrap();
        WeightSet::new(a, b, c).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!(parse_rational("-1").unwrap(), int(-1));
        assert_eq!(parse_rational("0.5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-2.25").unwrap(), ratio(-9, 4));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-1/3").unwrap(), ratio(-1, 3));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("-").is_err());
    }

    #[test]
    fn format_is_num_over_den() {
        assert_eq!(format_rational(&int(-1)), "-1/1");
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
    }

    #[test]
    fn weight_set_sorts_and_classifies() {
        let q: WeightSet = "8,5,7".parse().unwrap();
        assert_eq!(q.values(), &[int(5), int(7), int(8)]);
        assert_eq!(q.spacing(), Spacing::WiderBelow);
        assert_eq!("0,1,3".parse::<WeightSet>().unwrap().spacing(), Spacing::WiderAbove);
        assert!("1,2,3".parse::<WeightSet>().unwrap().is_arithmetic());
        assert!("1,1,3".parse::<WeightSet>().is_err());
        assert!("1,2".parse::<WeightSet>().is_err());
    }

    #[test]
    fn scaled_integers_share_a_denominator() {
        let q: WeightSet = "1/2,1/3,2".parse().unwrap();
        let (s, d) = q.scaled_integers();
        assert_eq!(d, BigInt::from(6));
        assert_eq!(s, [BigInt::from(2), BigInt::from(3), BigInt::from(12)]);
    }
}
