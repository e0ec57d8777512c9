//! Exact rationals with an `i64` fast path.
//!
//! Almost every coefficient met while building these representations is a
//! small integer, so arithmetic stays on machine words until an operation
//! overflows, then falls back to [`BigRational`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Headroom kept below `i64::MAX` so negation never overflows.
const SMALL_LIMIT: i64 = 1 << 62;

/// An exact rational number.
#[derive(Clone, Debug)]
pub enum Q {
    #[doc(hidden)]
    Small(Ratio<i64>),
    #[doc(hidden)]
    Big(BigRational),
}

fn fits(v: i64) -> bool {
    v > -SMALL_LIMIT && v < SMALL_LIMIT
}

impl Q {
    pub fn zero() -> Q {
        Q::Small(Ratio::from_integer(0))
    }

    pub fn one() -> Q {
        Q::Small(Ratio::from_integer(1))
    }

    pub fn from_int(n: i64) -> Q {
        Q::from_small(Ratio::from_integer(n))
    }

    /// `n/d`; panics when `d == 0`.
    pub fn new(n: i64, d: i64) -> Q {
        assert!(d != 0, "zero denominator");
        Q::from_big(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn from_small(r: Ratio<i64>) -> Q {
        if fits(*r.numer()) && fits(*r.denom()) {
            Q::Small(r)
        } else {
            Q::Big(BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())))
        }
    }

    pub fn from_big(r: BigRational) -> Q {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if fits(n) && fits(d) {
                return Q::Small(Ratio::new_raw(n, d));
            }
        }
        Q::Big(r)
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Q::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Q::Small(r) => r.is_zero(),
            Q::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Q::Small(r) => r.is_one(),
            Q::Big(r) => r.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Q::Small(r) => r.is_negative(),
            Q::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Q::Small(r) => r.is_integer(),
            Q::Big(r) => r.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Q::Small(r) => BigInt::from(*r.numer()),
            Q::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Q::Small(r) => BigInt::from(*r.denom()),
            Q::Big(r) => r.denom().clone(),
        }
    }

    pub fn add(&self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(c) = a.checked_add(b) {
                return Q::from_small(c);
            }
        }
        Q::from_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(c) = a.checked_sub(b) {
                return Q::from_small(c);
            }
        }
        Q::from_big(self.to_big() - o.to_big())
    }

    pub fn mul(&self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(c) = a.checked_mul(b) {
                return Q::from_small(c);
            }
        }
        Q::from_big(self.to_big() * o.to_big())
    }

    /// Division; `None` when `o` is zero.
    pub fn div(&self, o: &Q) -> Option<Q> {
        if o.is_zero() {
            return None;
        }
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(c) = a.checked_div(b) {
                return Some(Q::from_small(c));
            }
        }
        Some(Q::from_big(self.to_big() / o.to_big()))
    }

    pub fn neg(&self) -> Q {
        match self {
            Q::Small(r) => Q::Small(-*r),
            Q::Big(r) => Q::Big(-r.clone()),
        }
    }

    pub fn recip(&self) -> Option<Q> {
        Q::one().div(self)
    }

    /// Integer power, negative exponents allowed for nonzero bases.
    pub fn pow(&self, e: i32) -> Option<Q> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        let mut acc = Q::one();
        let mut base = self.clone();
        let mut k = e as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        Some(acc)
    }
}

impl PartialEq for Q {
    fn eq(&self, o: &Q) -> bool {
        match (self, o) {
            (Q::Small(a), Q::Small(b)) => a == b,
            (Q::Big(a), Q::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Q {}

impl Hash for Q {
    fn hash<H: Hasher>(&self, h: &mut H) {
        match self {
            Q::Small(r) => {
                0u8.hash(h);
                r.numer().hash(h);
                r.denom().hash(h);
            }
            Q::Big(r) => {
                1u8.hash(h);
                r.numer().hash(h);
                r.denom().hash(h);
            }
        }
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, o: &Q) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Q {
    fn cmp(&self, o: &Q) -> Ordering {
        match (self, o) {
            (Q::Small(a), Q::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Q {
        Q::from_int(n)
    }
}

impl From<BigRational> for Q {
    fn from(r: BigRational) -> Q {
        Q::from_big(r)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(r) => write!(f, "{}", r),
            Q::Big(r) => write!(f, "{}", r),
        }
    }
}

impl FromStr for Q {
    type Err = Error;

    /// Accepts `p`, `p/q`, and optional leading sign.
    fn from_str(s: &str) -> Result<Q> {
        let t = s.trim();
        let bad = |reason: &str| Error::Parse { position: 0, token: s.to_string(), reason: reason.to_string() };
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad("invalid numerator"))?;
        let d: BigInt = d.parse().map_err(|_| bad("invalid denominator"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(Q::from_big(BigRational::new(n, d)))
    }
}

impl serde::Serialize for Q {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Q {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Q::from_int(SMALL_LIMIT - 1);
        let sq = big.mul(&big);
        assert!(matches!(sq, Q::Big(_)));
        let back = sq.div(&big).unwrap();
        assert!(matches!(back, Q::Small(_)));
        assert_eq!(back, big);
    }

    #[test]
    fn parse_and_print() {
        let q: Q = "-6/4".parse().unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!("7".parse::<Q>().unwrap(), Q::from_int(7));
        assert!("1/0".parse::<Q>().is_err());
        assert!("x".parse::<Q>().is_err());
    }

    #[test]
    fn pow_negative() {
        let q = Q::new(2, 3);
        assert_eq!(q.pow(-2).unwrap(), Q::new(9, 4));
        assert!(Q::zero().pow(-1).is_none());
    }
}
