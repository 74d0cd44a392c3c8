//! Exact rational scalar used throughout the crate.
//!
//! Every quantity in this crate is a ratio of integers; there is no floating
//! point anywhere. `Rat` wraps a reduced `num_rational::Ratio<i128>`, which
//! keeps denominators positive and gcd-reduced, and renders as `p/q` (or `p`
//! for integers).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(Ratio<i128>);

impl Rat {
    pub const fn zero() -> Self {
        Rat(Ratio::new_raw(0, 1))
    }

    pub const fn one() -> Self {
        Rat(Ratio::new_raw(1, 1))
    }

    /// Reduced rational `num/den`. Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        Rat(Ratio::new(num, den))
    }

    pub fn from_int(n: i128) -> Self {
        Rat(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs_diff(self, other: Rat) -> Rat {
        if self >= other {
            self - other
        } else {
            other - self
        }
    }

    pub fn half(self) -> Rat {
        Rat(self.0 / 2)
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), Add::add)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational `{input}`: {reason}")]
pub struct ParseRatError {
    pub input: String,
    pub reason: String,
}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseRatError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: i128 = num_str
            .trim()
            .parse()
            .map_err(|_| err("numerator is not an integer"))?;
        let den: i128 = den_str
            .trim()
            .parse()
            .map_err(|_| err("denominator is not an integer"))?;
        if den == 0 {
            return Err(err("denominator is zero"));
        }
        Ok(Rat::new(num, den))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("3/2".parse::<Rat>().unwrap(), Rat::new(3, 2));
        assert_eq!("2".parse::<Rat>().unwrap(), Rat::from_int(2));
        assert_eq!("-4/6".parse::<Rat>().unwrap(), Rat::new(-2, 3));
        assert_eq!(Rat::new(-2, 3).to_string(), "-2/3");
        assert_eq!(Rat::new(6, 3).to_string(), "2");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("a/2".parse::<Rat>().is_err());
    }

    #[test]
    fn canonical_sign() {
        let r = Rat::new(1, -2);
        assert_eq!(r.numer(), -1);
        assert_eq!(r.denom(), 2);
    }

    proptest! {
        #[test]
        fn display_roundtrips(n in -1000i128..1000, d in 1i128..200) {
            let r = Rat::new(n, d);
            prop_assert_eq!(r.to_string().parse::<Rat>().unwrap(), r);
        }

        #[test]
        fn abs_diff_symmetric(a in -500i128..500, b in -500i128..500, d in 1i128..30) {
            let (x, y) = (Rat::new(a, d), Rat::new(b, d));
            prop_assert_eq!(x.abs_diff(y), y.abs_diff(x));
            prop_assert!(!x.abs_diff(y).is_negative());
        }
    }
}
