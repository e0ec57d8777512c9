//! The coefficient ring `Q(m)[l, l^-1]`.
//!
//! A [`Scalar`] is a Laurent polynomial in `l` whose coefficients are
//! reduced rational functions of `m`. Representation is canonical, so
//! structural equality is mathematical equality.

mod poly;
mod rational;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use poly::{Poly, RatFunc};
pub use rational::Q;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingConst};

/// Element of `Q(m)[l, l^-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    // sorted by exponent of `l`, no zero coefficients
    terms: Vec<(i32, RatFunc)>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Scalar {
        Scalar::from_ratfunc(RatFunc::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_q(Q::from_int(n))
    }

    pub fn from_q(c: Q) -> Scalar {
        Scalar::from_ratfunc(RatFunc::constant(c))
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar::from_ratfunc(RatFunc::from_poly(p))
    }

    pub fn from_ratfunc(f: RatFunc) -> Scalar {
        Scalar::monomial(f, 0)
    }

    /// `f * l^k`.
    pub fn monomial(f: RatFunc, k: i32) -> Scalar {
        if f.is_zero() {
            Scalar::zero()
        } else {
            Scalar { terms: vec![(k, f)] }
        }
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms(it: impl IntoIterator<Item = (i32, RatFunc)>) -> Scalar {
        let mut v: Vec<(i32, RatFunc)> = it.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, RatFunc)> = Vec::with_capacity(v.len());
        for (k, f) in v {
            match out.last_mut() {
                Some((k0, f0)) if *k0 == k => *f0 = f0.add(&f),
                _ => out.push((k, f)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Scalar { terms: out }
    }

    /// The parameter `m`.
    pub fn m() -> Scalar {
        Scalar::from_poly(Poly::var())
    }

    /// The parameter `l`.
    pub fn l() -> Scalar {
        Scalar::monomial(RatFunc::one(), 1)
    }

    pub fn l_inv() -> Scalar {
        Scalar::monomial(RatFunc::one(), -1)
    }

    /// `l^k`.
    pub fn l_pow(k: i32) -> Scalar {
        Scalar::monomial(RatFunc::one(), k)
    }

    /// `x = 1 - (l - l^-1)/m`, the eigenvalue of `e_i` on itself.
    pub fn x_value() -> Scalar {
        let minv = RatFunc::one().div(&RatFunc::from_poly(Poly::var())).expect("m != 0");
        Scalar::from_terms([(0, RatFunc::one()), (1, minv.neg()), (-1, minv)])
    }

    pub fn terms(&self) -> &[(i32, RatFunc)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// True when no power of `l` other than `l^0` occurs.
    pub fn is_l_free(&self) -> bool {
        self.terms.iter().all(|t| t.0 == 0)
    }

    /// Coefficient of `l^0` if `self` is `l`-free.
    pub fn as_ratfunc(&self) -> Option<RatFunc> {
        match self.terms.as_slice() {
            [] => Some(RatFunc::zero()),
            [(0, f)] => Some(f.clone()),
            _ => None,
        }
    }

    /// Smallest and largest exponents of `l`.
    pub fn l_range(&self) -> Option<(i32, i32)> {
        Some((self.terms.first()?.0, self.terms.last()?.0))
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            match (self.terms.get(i), o.terms.get(j)) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    let s = a.1.add(&b.1);
                    if !s.is_zero() {
                        out.push((a.0, s));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    out.push(a.clone());
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    out.push(b.clone());
                    j += 1;
                }
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(b)) => {
                    out.push(b.clone());
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Scalar { terms: out }
    }

    pub fn neg(&self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(k, f)| (*k, f.neg())).collect() }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        if self.terms.len() == 1 || o.terms.len() == 1 {
            let (single, other) = if self.terms.len() == 1 { (self, o) } else { (o, self) };
            let (k, f) = &single.terms[0];
            let terms: Vec<_> = other.terms.iter().map(|(j, g)| (j + k, f.mul(g))).collect();
            return Scalar { terms };
        }
        let mut acc: Vec<(i32, RatFunc)> = Vec::new();
        for (a, f) in &self.terms {
            for (b, g) in &o.terms {
                acc.push((a + b, f.mul(g)));
            }
        }
        Scalar::from_terms(acc)
    }

    pub fn scale_q(&self, c: &Q) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(k, f)| (*k, f.scale(c))).collect() }
    }

    /// Exact division. The divisor must be a unit of the ring, that is a
    /// single nonzero term `f(m) l^k`.
    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        match o.terms.as_slice() {
            [] => Err(Error::DivisionByZero),
            [(k, f)] => {
                let inv = f.recip().ok_or(Error::DivisionByZero)?;
                Ok(self.mul(&Scalar::monomial(inv, -k)))
            }
            _ => Err(Error::Unsupported(format!("division by the non-unit {o}"))),
        }
    }

    /// Nonnegative power.
    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates at `l = l0`, `m = m0`.
    pub fn eval_at(&self, l0: &Q, m0: &Q) -> Result<Q> {
        if l0.is_zero() && !self.is_zero() {
            return Err(Error::Evaluation("l = 0".into()));
        }
        let mut acc = Q::zero();
        for (k, f) in &self.terms {
            let v = f
                .eval(m0)
                .ok_or_else(|| Error::Evaluation(format!("denominator {} vanishes at m = {m0}", f.den())))?;
            let lk = l0.pow(*k).ok_or_else(|| Error::Evaluation("l = 0".into()))?;
            acc = acc.add(&v.mul(&lk));
        }
        Ok(acc)
    }

    /// Replaces `m` by a rational function `g` of another variable,
    /// keeping `l`.
    pub fn substitute_m(&self, g: &RatFunc) -> Result<Scalar> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (k, f) in &self.terms {
            let h = f.compose(g).ok_or_else(|| Error::Evaluation(format!("pole of {} under substitution", f.den())))?;
            out.push((*k, h));
        }
        Ok(Scalar::from_terms(out))
    }

    /// Text form using `var` for the coefficient variable.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, f)| {
                let c = f.fmt_var(var);
                let wrapped = if f.is_poly() && f.num().coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
                    c
                } else {
                    format!("({c})")
                };
                match k {
                    0 => wrapped,
                    1 if f.is_one() => "l".into(),
                    _ if f.is_one() => format!("l^{k}"),
                    1 => format!("{wrapped}*l"),
                    _ => format!("{wrapped}*l^{k}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("m"))
    }
}

impl Ring for Scalar {
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl RingConst for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    lexp: i32,
    num: Vec<Q>,
    den: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct ScalarJson {
    terms: Vec<TermJson>,
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let j = ScalarJson {
            terms: self
                .terms
                .iter()
                .map(|(k, f)| TermJson { lexp: *k, num: f.num().coeffs().to_vec(), den: f.den().coeffs().to_vec() })
                .collect(),
        };
        j.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let j = ScalarJson::deserialize(d)?;
        let mut terms = Vec::new();
        for t in j.terms {
            let f = RatFunc::new(Poly::from_coeffs(t.num), Poly::from_coeffs(t.den))
                .ok_or_else(|| serde::de::Error::custom("zero denominator"))?;
            terms.push((t.lexp, f));
        }
        Ok(Scalar::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn x_at_reference_point() {
        // l - 1/l = 5/7 - 7/5 = -24/35; divided by 3/2 gives -16/35
        assert_eq!(Scalar::x_value().eval_at(&q(5, 7), &q(3, 2)).unwrap(), q(51, 35));
    }

    #[test]
    fn l_plus_inverse() {
        let s = Scalar::l().add(&Scalar::l_inv());
        assert_eq!(s.eval_at(&q(2, 1), &q(1, 1)).unwrap(), q(5, 2));
    }

    #[test]
    fn quotient_by_m_is_stored_with_denominator() {
        let s = Scalar::l().sub(&Scalar::l_inv()).div(&Scalar::m()).unwrap();
        for (_, f) in s.terms() {
            assert_eq!(f.den(), &Poly::var());
        }
        assert_eq!(Scalar::one().sub(&s), Scalar::x_value());
    }

    #[test]
    fn eval_errors() {
        assert!(Scalar::l().eval_at(&Q::zero(), &Q::one()).is_err());
        let s = Scalar::one().div(&Scalar::m()).unwrap();
        assert!(s.eval_at(&Q::one(), &Q::zero()).is_err());
        assert!(Scalar::one().div(&Scalar::zero()).is_err());
        assert!(Scalar::one().div(&Scalar::l().add(&Scalar::one())).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let s = Scalar::x_value().mul(&Scalar::m().add(&Scalar::from_q(q(1, 3))));
        let text = serde_json::to_string(&s).unwrap();
        let back: Scalar = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn cancellation_gives_zero() {
        let a = Scalar::x_value();
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.sub(&a), Scalar::zero());
    }
}
