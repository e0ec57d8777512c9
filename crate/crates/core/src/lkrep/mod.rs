//! The generalized Lawrence-Krammer representation.
//!
//! The module `V` is free over `Z_0` with basis `x_beta`, one vector per
//! positive root. The generator `g_i` acts by `sigma_i = tau_i + l^-1 T_i`
//! where `tau_i` permutes basis vectors up to Hecke factors and `T_i`
//! lands in the line of `x_{alpha_i}` with coefficients `T_{i,beta}`.
//!
//! Everything is generic over a [`CoeffAlgebra`]: the symbolic Hecke algebra
//! `Z_0` ([`Z0Coeffs`]) or a representation of it ([`ThetaCoeffs`],
//! [`CharacterCoeffs`]).

mod cache;
mod matrix;
mod tcoeff;
mod theta;

use std::sync::Arc;

use rayon::prelude::*;

pub use cache::{build_z0_cached, cache_path};
pub use matrix::{rank_q, DenseMatrix, RepMatrix};
pub use tcoeff::{closed_form_word, step3_alternatives, t_table};
pub use theta::{
    classical_lk, classical_lk_at, gamma_theta, q_point_map, r_substitution_map, theta_of_hecke, CharacterCoeffs, ScalarMap, SpecPoint,
    ThetaCoeffs, ThetaSpec,
};

use crate::error::Result;
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::ring::Ring;
use crate::rootsys::{Node, Root, RootSystem};
use crate::scalar::Scalar;

/// Coefficient algebra for the representation: a target for `Z_0`.
pub trait CoeffAlgebra: Send + Sync {
    type Elem: Ring + std::fmt::Debug;

    fn root_system(&self) -> &Arc<RootSystem>;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of a central scalar.
    fn from_scalar(&self, c: &Scalar) -> Result<Self::Elem>;
    /// Image of `z_j` for `j` in `C`.
    fn generator(&self, j: Node) -> Self::Elem;

    fn generator_inv(&self, j: Node) -> Result<Self::Elem> {
        Ok(self.generator(j).plus(&self.from_scalar(&Scalar::m())?))
    }

    /// Value of a signed Artin word of the full type, when the algebra has a
    /// way to evaluate it and the result is known to lie in the image of
    /// `Z_0`. `None` means the caller must use recursions instead.
    fn closed_form(&self, word: &[(Node, bool)]) -> Option<Result<Self::Elem>>;

    /// Whether an element is free of `l`; only meaningful symbolically.
    fn is_l_free(&self, _e: &Self::Elem) -> bool {
        true
    }
}

/// Symbolic coefficients: the Hecke algebra `Z_0` itself.
pub struct Z0Coeffs {
    rs: Arc<RootSystem>,
    z0: Arc<HeckeAlgebra>,
    full: Arc<HeckeAlgebra>,
}

impl Z0Coeffs {
    pub fn new(rs: Arc<RootSystem>) -> Z0Coeffs {
        Z0Coeffs { z0: HeckeAlgebra::z0(rs.clone()), full: HeckeAlgebra::full(rs.clone()), rs }
    }

    pub fn z0(&self) -> &Arc<HeckeAlgebra> {
        &self.z0
    }

    pub fn full(&self) -> &Arc<HeckeAlgebra> {
        &self.full
    }
}

impl CoeffAlgebra for Z0Coeffs {
    type Elem = HeckeElement;

    fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }
    fn zero(&self) -> HeckeElement {
        self.z0.zero()
    }
    fn one(&self) -> HeckeElement {
        self.z0.one()
    }
    fn from_scalar(&self, c: &Scalar) -> Result<HeckeElement> {
        Ok(self.z0.scalar(c.clone()))
    }
    fn generator(&self, j: Node) -> HeckeElement {
        self.z0.generator(j).expect("node of C")
    }
    fn closed_form(&self, word: &[(Node, bool)]) -> Option<Result<HeckeElement>> {
        Some(self.full.eval_signed_word(word).and_then(|v| v.project(&self.z0)))
    }
    fn is_l_free(&self, e: &HeckeElement) -> bool {
        e.is_l_free()
    }
}

/// All representation data for one coefficient algebra.
pub struct LkModel<A: CoeffAlgebra> {
    alg: A,
    t: Vec<Vec<A::Elem>>,
    sigma: Vec<RepMatrix<A::Elem>>,
    tau: Vec<RepMatrix<A::Elem>>,
    f: Vec<RepMatrix<A::Elem>>,
    e: Vec<RepMatrix<A::Elem>>,
    identity: RepMatrix<A::Elem>,
    m: A::Elem,
    l: A::Elem,
    l_inv: A::Elem,
    x: A::Elem,
}

impl<A: CoeffAlgebra> LkModel<A>
where
    A::Elem: Send + Sync,
{
    /// Computes the coefficients `T_{i,beta}` and assembles every matrix.
    pub fn build(alg: A) -> Result<Self> {
        let t = t_table(&alg)?;
        Self::from_table(alg, t)
    }

    /// Assembles the matrices from a precomputed coefficient table.
    pub fn from_table(alg: A, t: Vec<Vec<A::Elem>>) -> Result<Self> {
        let rs = alg.root_system().clone();
        let n = rs.num_positive();
        let m = alg.from_scalar(&Scalar::m())?;
        let l = alg.from_scalar(&Scalar::l())?;
        let l_inv = alg.from_scalar(&Scalar::l_inv())?;
        let x = alg.from_scalar(&Scalar::x_value())?;
        let l_over_m = alg.from_scalar(&Scalar::l().div(&Scalar::m())?)?;
        let identity = RepMatrix::identity(n, &alg.one());
        let nodes: Vec<Node> = rs.nodes().collect();
        let built: Vec<_> = nodes
            .par_iter()
            .map(|&i| {
                let tau = tau_matrix(&alg, &rs, i, &m);
                let mut sigma = tau.clone();
                let ai = rs.simple_index(i);
                for b in 0..n {
                    let tib = &t[i - 1][b];
                    if !tib.is_zero() {
                        sigma.add_entry(ai, b, l_inv.times(tib));
                    }
                }
                let f = sigma.mul(&sigma).add(&sigma.scale_left(&m)).sub(&identity);
                let e = f.scale_left(&l_over_m);
                (sigma, tau, f, e)
            })
            .collect();
        let mut sigma = Vec::new();
        let mut tau = Vec::new();
        let mut f = Vec::new();
        let mut e = Vec::new();
        for (s, ta, fi, ei) in built {
            sigma.push(s);
            tau.push(ta);
            f.push(fi);
            e.push(ei);
        }
        Ok(LkModel { alg, t, sigma, tau, f, e, identity, m, l, l_inv, x })
    }
}

fn tau_matrix<A: CoeffAlgebra>(alg: &A, rs: &RootSystem, i: Node, m: &A::Elem) -> RepMatrix<A::Elem> {
    let n = rs.num_positive();
    let ai = rs.simple(i);
    let mut tau = RepMatrix::zero(n);
    for b in 0..n {
        let beta = rs.root(b);
        match rs.pairing_simple(i, b) {
            2 => {}
            1 => tau.add_entry(rs.index_of(&beta.sub(&ai)).expect("root"), b, alg.one()),
            0 => {
                let h = rs.h_beta_i(beta, i).expect("pairing is zero");
                tau.add_entry(b, b, alg.generator(h));
            }
            -1 => {
                tau.add_entry(rs.index_of(&beta.add(&ai)).expect("root"), b, alg.one());
                tau.add_entry(b, b, m.negated());
            }
            p => unreachable!("pairing {p} between a simple root and a positive root"),
        }
    }
    tau
}

impl<A: CoeffAlgebra> LkModel<A> {
    pub fn algebra(&self) -> &A {
        &self.alg
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.alg.root_system()
    }

    pub fn dim(&self) -> usize {
        self.identity.dim()
    }

    /// `T_{i,beta}` by root index.
    pub fn t(&self, i: Node, b: usize) -> &A::Elem {
        &self.t[i - 1][b]
    }

    /// `T_{i,beta}` by root.
    pub fn t_coeff(&self, i: Node, beta: &Root) -> Result<&A::Elem> {
        self.root_system().check_node(i)?;
        let b = self.root_system().require(beta)?;
        Ok(self.t(i, b))
    }

    pub fn t_table(&self) -> &[Vec<A::Elem>] {
        &self.t
    }

    pub fn sigma(&self, i: Node) -> &RepMatrix<A::Elem> {
        &self.sigma[i - 1]
    }

    /// `sigma_i^{-1} = sigma_i + m - m e_i`.
    pub fn sigma_inv(&self, i: Node) -> RepMatrix<A::Elem> {
        let s = self.sigma(i);
        s.add(&RepMatrix::diagonal(self.dim(), &self.m)).sub(&self.e(i).scale_left(&self.m))
    }

    pub fn tau(&self, i: Node) -> &RepMatrix<A::Elem> {
        &self.tau[i - 1]
    }

    pub fn f(&self, i: Node) -> &RepMatrix<A::Elem> {
        &self.f[i - 1]
    }

    pub fn e(&self, i: Node) -> &RepMatrix<A::Elem> {
        &self.e[i - 1]
    }

    pub fn identity(&self) -> &RepMatrix<A::Elem> {
        &self.identity
    }

    pub fn m(&self) -> &A::Elem {
        &self.m
    }

    pub fn l(&self) -> &A::Elem {
        &self.l
    }

    pub fn l_inv(&self) -> &A::Elem {
        &self.l_inv
    }

    pub fn x(&self) -> &A::Elem {
        &self.x
    }

    /// `sigma` of a positive word, product read left to right.
    pub fn sigma_word(&self, word: &[Node]) -> RepMatrix<A::Elem> {
        word.iter().fold(self.identity.clone(), |acc, &s| acc.mul(self.sigma(s)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(name: &str) -> LkModel<Z0Coeffs> {
        let rs = Arc::new(RootSystem::from_name(name).unwrap());
        LkModel::build(Z0Coeffs::new(rs)).unwrap()
    }

    #[test]
    fn small_t_values() {
        let lk = model("A3");
        let rs = lk.root_system().clone();
        let z0 = lk.algebra().z0().clone();
        for i in rs.nodes() {
            assert_eq!(lk.t_coeff(i, &rs.simple(i)).unwrap(), &z0.one());
            for j in rs.nodes() {
                if i != j {
                    assert!(lk.t_coeff(i, &rs.simple(j)).unwrap().is_zero());
                }
                if rs.adjacent(i, j) {
                    let b = rs.simple(i).add(&rs.simple(j));
                    assert_eq!(lk.t_coeff(i, &b).unwrap(), &z0.scalar(Scalar::m()));
                }
            }
        }
    }

    #[test]
    fn sigma_on_simple_root_column() {
        let lk = model("A2");
        let rs = lk.root_system().clone();
        for i in rs.nodes() {
            let ai = rs.simple_index(i);
            let col = lk.sigma(i).column(ai);
            assert_eq!(col.len(), 1);
            assert_eq!(col.get(&ai).unwrap().as_scalar().unwrap(), Scalar::l_inv());
        }
    }

    #[test]
    fn pairing_minus_one_column() {
        let lk = model("A3");
        let rs = lk.root_system().clone();
        let i = 2;
        let b = rs.index_of(&rs.simple(1)).unwrap();
        let up = rs.index_of(&Root(vec![1, 1, 0])).unwrap();
        let s = lk.sigma(i);
        assert!(s.get(up, b).unwrap().as_scalar().unwrap().is_one());
        assert_eq!(s.get(b, b).unwrap().as_scalar().unwrap(), Scalar::m().neg());
        assert!(s.get(rs.simple_index(i), b).is_none());
    }
}
