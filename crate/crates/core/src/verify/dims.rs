//! Dimension formulas.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{DynkinType, Family, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Follows from a proved formula.
    Proved,
    /// Conjectured, neither confirmed nor refuted here.
    Conjectural,
}

/// One layer `I_k / I_{k+1}` of the ideal filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layer {
    pub label: String,
    /// Number of basis blocks, squared in the dimension.
    #[serde(with = "wide")]
    pub orbit: u128,
    /// Order of the Coxeter group attached to the layer.
    #[serde(with = "wide")]
    pub group_order: u128,
    /// Number of such ideals.
    #[serde(with = "wide")]
    pub multiplicity: u128,
    #[serde(with = "wide")]
    pub dim: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Total {
    #[serde(with = "wide")]
    pub value: u128,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsReport {
    #[serde(rename = "type")]
    pub ty: DynkinType,
    #[serde(with = "wide")]
    pub positive_roots: u128,
    #[serde(with = "wide")]
    pub wc_order: u128,
    /// `|W|`, the dimension of the Hecke algebra quotient `B/I_1`.
    #[serde(with = "wide")]
    pub hecke_dim: u128,
    /// `|Phi^+|^2 |W_C|`.
    #[serde(with = "wide")]
    pub i1_mod_i2_dim: u128,
    pub total: Option<Total>,
    pub layers: Option<Vec<Layer>>,
}

/// Values that fit in 64 bits are JSON numbers, larger ones decimal strings.
mod wide {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(*v) {
            Ok(small) => s.serialize_u64(small),
            Err(_) => s.serialize_str(&v.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Num(u64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(n as u128),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

fn overflow() -> Error {
    Error::Unsupported("dimension exceeds 128 bits".into())
}

fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or_else(overflow)
}

fn factorial(k: u128) -> Result<u128> {
    (1..=k).try_fold(1u128, mul)
}

/// `(2n+1)!! = (2n+1)(2n-1)...1`.
pub fn double_factorial_odd(n: u128) -> Result<u128> {
    (0..=n).try_fold(1u128, |acc, k| mul(acc, 2 * k + 1))
}

/// Number of sets of `i` pairwise disjoint pairs in a set of size `n`.
pub fn matchings(n: u128, i: u128) -> Result<u128> {
    if 2 * i > n {
        return Ok(0);
    }
    let num = factorial(n)?;
    let den = mul(mul(1u128.checked_shl(i as u32).ok_or_else(overflow)?, factorial(i)?)?, factorial(n - 2 * i)?)?;
    Ok(num / den)
}

fn a_layers(n: u128) -> Result<Vec<Layer>> {
    (0..=(n + 1) / 2)
        .map(|i| {
            let orbit = matchings(n + 1, i)?;
            let group_order = factorial(n + 1 - 2 * i)?;
            Ok(Layer { label: format!("I_{i}/I_{}", i + 1), orbit, group_order, multiplicity: 1, dim: mul(mul(orbit, orbit)?, group_order)? })
        })
        .collect()
}

/// Layer data for `D_4`, quoted rather than derived.
fn d4_layers() -> Vec<Layer> {
    let layer = |label: &str, orbit: u128, group_order: u128, multiplicity: u128| Layer {
        label: label.into(),
        orbit,
        group_order,
        multiplicity,
        dim: multiplicity * orbit * orbit * group_order,
    };
    vec![
        layer("B/I_1", 1, 192, 1),
        layer("I_1/I_2", 12, 8, 1),
        layer("I_J/I_3 for |J| = 2", 6, 2, 3),
        layer("I_3", 3, 1, 1),
    ]
}

/// The conjectured total `(2^n + 1)(2n-1)!! - (2^{n-1} + 1) n!` for `D_n`.
pub fn d_conjecture(n: u128) -> Result<u128> {
    let p = mul(1u128.checked_shl(n as u32).ok_or_else(overflow)? + 1, double_factorial_odd(n - 1)?)?;
    let q = mul((1u128 << (n - 1)) + 1, factorial(n)?)?;
    p.checked_sub(q).ok_or_else(overflow)
}

pub fn dims_report(ty: DynkinType) -> Result<DimsReport> {
    let rs = RootSystem::build(ty);
    let np = rs.num_positive() as u128;
    let wc = rs.wc_order();
    let i1 = mul(mul(np, np)?, wc)?;
    let n = ty.rank as u128;
    let (total, layers) = match (ty.family, ty.rank) {
        (Family::A, _) => {
            let layers = a_layers(n)?;
            let sum = layers.iter().try_fold(0u128, |a, l| a.checked_add(l.dim).ok_or_else(overflow))?;
            (Some(Total { value: sum, status: Status::Proved }), Some(layers))
        }
        (Family::D, 4) => {
            let layers = d4_layers();
            let sum = layers.iter().map(|l| l.dim).sum();
            (Some(Total { value: sum, status: Status::Proved }), Some(layers))
        }
        (Family::D, _) => (Some(Total { value: d_conjecture(n)?, status: Status::Conjectural }), None),
        (Family::E, _) => (None, None),
    };
    Ok(DimsReport { ty, positive_roots: np, wc_order: wc, hecke_dim: rs.weyl_order(), i1_mod_i2_dim: i1, total, layers })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(s: &str) -> DimsReport {
        dims_report(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn second_layer_matches_root_formula_for_a() {
        for n in 1..=8 {
            let r = report(&format!("A{n}"));
            let layers = r.layers.unwrap();
            assert_eq!(layers[0].dim, r.hecke_dim);
            if n >= 1 && layers.len() > 1 {
                assert_eq!(layers[1].dim, r.i1_mod_i2_dim);
            }
        }
    }

    #[test]
    fn matchings_small() {
        assert_eq!(matchings(4, 2).unwrap(), 3);
        assert_eq!(matchings(6, 3).unwrap(), 15);
        assert_eq!(matchings(3, 2).unwrap(), 0);
    }

    #[test]
    fn d4_quoted_layers_agree_with_formulas() {
        let r = report("D4");
        let layers = r.layers.unwrap();
        assert_eq!(layers[1].dim, r.i1_mod_i2_dim);
        assert_eq!(layers[0].dim, r.hecke_dim);
        assert_eq!(d_conjecture(4).unwrap(), 1569);
    }
}
