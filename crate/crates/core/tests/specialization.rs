use std::collections::BTreeMap;
use std::sync::Arc;

use bmw_core::lkrep::{
    classical_lk, gamma_theta, q_point_map, r_substitution_map, CharacterCoeffs, DenseMatrix, ThetaCoeffs, ThetaSpec,
};
use bmw_core::verify::default_points;
use bmw_core::{LkModel, RootSystem, Scalar, Z0Coeffs, Q};

fn r_inv() -> Scalar {
    Scalar::one().div(&Scalar::m()).unwrap()
}

/// Applying theta to the symbolic matrices agrees with building the
/// representation directly over the image of theta.
fn commutes(name: &str, theta: ThetaSpec<Scalar>) -> usize {
    let rs = Arc::new(RootSystem::from_name(name).unwrap());
    let generic = LkModel::build(Z0Coeffs::new(rs.clone())).unwrap();
    let after = gamma_theta(&generic, &theta, &r_substitution_map()).unwrap();
    let before = LkModel::build(ThetaCoeffs::new(rs, theta, r_substitution_map()).unwrap()).unwrap().flattened_sigmas();
    assert_eq!(after.len(), before.len());
    for (i, (a, b)) in after.iter().zip(&before).enumerate() {
        assert!(a == b, "{name}: node {} differs", i + 1);
    }
    after[0].rows()
}

#[test]
fn d4_classical_theta_commutes() {
    let rs = RootSystem::from_name("D4").unwrap();
    assert_eq!(commutes("D4", classical_lk(&rs)), 12);
}

#[test]
fn d4_two_dimensional_theta_commutes() {
    let rs = RootSystem::from_name("D4").unwrap();
    let diag = |a: Scalar, b: Scalar| DenseMatrix::from_rows(vec![vec![a, Scalar::zero()], vec![Scalar::zero(), b]]);
    let minus_r = Scalar::m().neg();
    let images = BTreeMap::from([
        (1, diag(r_inv(), minus_r.clone())),
        (3, diag(r_inv(), r_inv())),
        (4, diag(minus_r, r_inv())),
    ]);
    let theta = ThetaSpec { dim: 2, m: classical_lk(&rs).m, images };
    assert_eq!(commutes("D4", theta), 24);
}

#[test]
fn theta_rejects_broken_quadratic() {
    let rs = Arc::new(RootSystem::from_name("D4").unwrap());
    let mut theta = classical_lk(&rs);
    theta.images.insert(3, DenseMatrix::scalar(1, Scalar::from_int(2)));
    assert!(ThetaCoeffs::new(rs, theta, r_substitution_map()).is_err());
}

#[test]
fn a3_gamma_is_six_by_six() {
    let rs = RootSystem::from_name("A3").unwrap();
    assert_eq!(commutes("A3", classical_lk(&rs)), 6);
}

/// The character model at a point equals the symbolic model evaluated there.
#[test]
fn generic_matches_specialized_at_sample_points() {
    for name in ["A3", "A4", "D4"] {
        let rs = Arc::new(RootSystem::from_name(name).unwrap());
        let generic = LkModel::build(Z0Coeffs::new(rs.clone())).unwrap();
        for p in default_points() {
            let theta = classical_lk(&rs).specialize(&p.r).unwrap();
            let evaluated = gamma_theta(&generic, &theta, &q_point_map(&p)).unwrap();
            let direct = LkModel::build(CharacterCoeffs::<Q>::classical(rs.clone(), &p).unwrap()).unwrap();
            for (k, i) in rs.nodes().enumerate() {
                let dense = direct.sigma(i).dense_entries(&Q::zero());
                let n = direct.dim();
                for c in 0..n {
                    for r in 0..n {
                        assert_eq!(&dense[c * n + r], evaluated[k].get(r, c), "{name} at {p}, node {i}, entry ({r},{c})");
                    }
                }
            }
        }
    }
}
