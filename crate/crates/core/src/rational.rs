//! Exact positive rationals extended by infinity.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// A rational number or `∞`; used for contact orders and exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRat {
    Fin(BigRational),
    Inf,
}

impl ExtRat {
    pub fn ratio(numer: i64, denom: i64) -> ExtRat {
        ExtRat::Fin(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn int(v: i64) -> ExtRat {
        ExtRat::Fin(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::Inf)
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtRat::Fin(r) => Some(r),
            ExtRat::Inf => None,
        }
    }

    /// True for finite integers.
    pub fn is_integer(&self) -> bool {
        matches!(self, ExtRat::Fin(r) if r.is_integer())
    }

    /// Integer or infinite.
    pub fn is_integral_or_inf(&self) -> bool {
        match self {
            ExtRat::Fin(r) => r.is_integer(),
            ExtRat::Inf => true,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match self {
            ExtRat::Fin(r) if r.is_integer() => r.to_integer().to_u64(),
            _ => None,
        }
    }

    pub fn min(self, other: ExtRat) -> ExtRat {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl From<BigRational> for ExtRat {
    fn from(r: BigRational) -> Self {
        ExtRat::Fin(r)
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Fin(a), ExtRat::Fin(b)) => a.cmp(b),
            (ExtRat::Fin(_), ExtRat::Inf) => Ordering::Less,
            (ExtRat::Inf, ExtRat::Fin(_)) => Ordering::Greater,
            (ExtRat::Inf, ExtRat::Inf) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Fin(r) => write!(f, "{r}"),
            ExtRat::Inf => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid exponent {0:?}: expected \"p/q\", an integer or \"inf\"")]
pub struct ParseExtRatError(pub String);

impl FromStr for ExtRat {
    type Err = ParseExtRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "inf" || t == "∞" {
            return Ok(ExtRat::Inf);
        }
        let err = || ParseExtRatError(s.to_string());
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(ExtRat::Fin(BigRational::new(n, d)))
    }
}

impl Serialize for ExtRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Converts a non-negative integral rational to `u64`.
pub(crate) fn to_u64_exact(r: &BigRational) -> Option<u64> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().to_u64()
    } else {
        None
    }
}
