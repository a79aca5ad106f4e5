use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, FloatConst, NumCast, One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// An exact angle `r·π` with rational `r`.
#[derive(Debug, Clone, Copy)]
pub struct AngleQ<I>(Ratio<I>);

impl<I: Integer + Clone> PartialEq for AngleQ<I> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl<I: Integer + Clone> Eq for AngleQ<I> {}

impl<I: Integer + Clone> PartialOrd for AngleQ<I> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<I: Integer + Clone> Ord for AngleQ<I> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp(&other.0)
    }
}

impl<I: Integer + Clone + std::hash::Hash> std::hash::Hash for AngleQ<I> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl<I: Integer + Clone> AngleQ<I> {
    pub fn new(numer: I, denom: I) -> Self {
        AngleQ(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<I>) -> Self {
        AngleQ(r)
    }

    /// The coefficient of π.
    pub fn ratio(&self) -> &Ratio<I> {
        &self.0
    }

    pub fn pi() -> Self {
        AngleQ(Ratio::one())
    }

    pub fn full_turn() -> Self {
        AngleQ(Ratio::from_integer(I::one() + I::one()))
    }

    pub fn scale(&self, k: I) -> Self {
        AngleQ(self.0.clone() * Ratio::from_integer(k))
    }
}

impl<I: Integer + Clone + ToPrimitive> AngleQ<I> {
    pub fn to_radians<F: Float + FloatConst>(&self) -> F {
        let n: F = NumCast::from(self.0.numer().clone()).expect("numerator fits");
        let d: F = NumCast::from(self.0.denom().clone()).expect("denominator fits");
        n / d * F::PI()
    }
}

impl<I: Integer + Clone> Add for AngleQ<I> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        AngleQ(self.0 + rhs.0)
    }
}

impl<I: Integer + Clone> Sub for AngleQ<I> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        AngleQ(self.0 - rhs.0)
    }
}

impl<I: Integer + Clone> Mul<I> for AngleQ<I> {
    type Output = Self;
    fn mul(self, k: I) -> Self {
        self.scale(k)
    }
}

impl<I: Integer + Clone> Zero for AngleQ<I> {
    fn zero() -> Self {
        AngleQ(Ratio::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<I: Integer + Clone + fmt::Display + Signed> fmt::Display for AngleQ<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            f.write_str("0")
        } else if self.0.is_integer() {
            write!(f, "{} pi", self.0.numer())
        } else {
            write!(f, "{}/{} pi", self.0.numer(), self.0.denom())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse angle `{0}` (expected forms like `2/3 pi`)")]
pub struct ParseAngleError(String);

impl<I: Integer + Clone + FromStr> FromStr for AngleQ<I> {
    type Err = ParseAngleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseAngleError(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let body = s.strip_suffix("pi").ok_or_else(err)?.trim();
        let (n, d) = match body.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (body, "1"),
        };
        let n: I = n.parse().map_err(|_| err())?;
        let d: I = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(AngleQ::new(n, d))
    }
}

impl<I: Integer + Clone + fmt::Display + Signed> Serialize for AngleQ<I> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de, I: Integer + Clone + FromStr> Deserialize<'de> for AngleQ<I> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type A = AngleQ<i64>;

    #[test]
    fn display_and_parse() {
        for (a, s) in [(A::new(4, 6), "2/3 pi"), (A::new(1, 6), "1/6 pi"), (A::new(4, 2), "2 pi"), (A::zero(), "0")] {
            assert_eq!(a.to_string(), s);
            assert_eq!(s.parse::<A>().unwrap(), a);
        }
        assert!("2/3".parse::<A>().is_err());
        assert!("1/0 pi".parse::<A>().is_err());
    }

    #[test]
    fn exact_comparison_at_full_turn() {
        let tip = A::new(2, 3);
        assert_eq!(tip * 3, A::full_turn());
        assert!(A::new(1, 6) * 11 < A::full_turn());
        assert_eq!(A::new(1, 6) * 12, A::full_turn());
    }

    #[test]
    fn serde_as_string() {
        let a = A::new(1, 7);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "\"1/7 pi\"");
        assert_eq!(serde_json::from_str::<A>(&json).unwrap(), a);
    }

    #[test]
    fn generic_over_integer_width() {
        let a = AngleQ::<i32>::new(1, 4);
        let r: f32 = a.to_radians();
        assert!((r - std::f32::consts::FRAC_PI_4).abs() < 1e-6);
        let b = AngleQ::<i128>::new(1, 3) + AngleQ::new(1, 6);
        assert_eq!(b, AngleQ::new(1, 2));
    }
}
