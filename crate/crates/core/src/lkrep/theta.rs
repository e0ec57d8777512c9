//! Representations of `Z_0` and the representations `Gamma_theta` they induce.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::ring::{Ring, RingConst};
use crate::rootsys::{Node, RootSystem};
use crate::scalar::{Poly, RatFunc, Scalar, Q};

use super::matrix::{DenseMatrix, RepMatrix};
use super::{CoeffAlgebra, LkModel, Z0Coeffs};

/// Sends a coefficient of `Q(m)[l, l^-1]` into the target field.
pub type ScalarMap<F> = Arc<dyn Fn(&Scalar) -> Result<F> + Send + Sync>;

/// A point `(l, r)` with `m = r - 1/r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecPoint {
    pub l: Q,
    pub r: Q,
}

impl SpecPoint {
    pub fn new(l: Q, r: Q) -> Result<SpecPoint> {
        if l.is_zero() {
            return Err(Error::Evaluation("l must be nonzero".into()));
        }
        if r.is_zero() || r.is_one() || r.neg().is_one() {
            return Err(Error::Evaluation("r must avoid 0 and ±1 so that m is invertible".into()));
        }
        Ok(SpecPoint { l, r })
    }

    pub fn m(&self) -> Q {
        self.r.sub(&self.r.recip().expect("r != 0"))
    }

    /// Parses `l=<rat>,r=<rat>`.
    pub fn parse(s: &str) -> Result<SpecPoint> {
        let bad = |reason: &str| Error::Parse { position: 0, token: s.to_string(), reason: reason.into() };
        let mut l = None;
        let mut r = None;
        for part in s.split(',') {
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let v: Q = v.parse()?;
            match k.trim() {
                "l" => l = Some(v),
                "r" => r = Some(v),
                _ => return Err(bad("unknown key")),
            }
        }
        SpecPoint::new(l.ok_or_else(|| bad("missing l"))?, r.ok_or_else(|| bad("missing r"))?)
    }
}

impl std::fmt::Display for SpecPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "l={},r={}", self.l, self.r)
    }
}

/// Evaluation at a rational point.
pub fn q_point_map(p: &SpecPoint) -> ScalarMap<Q> {
    let (l, m) = (p.l.clone(), p.m());
    Arc::new(move |c: &Scalar| c.eval_at(&l, &m))
}

/// `m -> r - 1/r`, keeping `l`; the result uses the coefficient variable as `r`.
pub fn r_substitution_map() -> ScalarMap<Scalar> {
    let g = r_minus_inverse();
    Arc::new(move |c: &Scalar| c.substitute_m(&g))
}

fn r_minus_inverse() -> RatFunc {
    RatFunc::new(Poly::from_coeffs(vec![Q::from_int(-1), Q::zero(), Q::one()]), Poly::var()).expect("r != 0")
}

/// A representation of `Z_0` by matrices over a field `F`.
#[derive(Clone, Debug)]
pub struct ThetaSpec<F> {
    pub dim: usize,
    /// The value of `m` in `F`.
    pub m: F,
    pub images: BTreeMap<Node, DenseMatrix<F>>,
}

impl<F: RingConst> ThetaSpec<F> {
    /// Checks the quadratic relation for each image and the braid and
    /// commutation relations of the diagram restricted to `C`.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        let c = rs.c_nodes();
        let keys: Vec<Node> = self.images.keys().copied().collect();
        if keys != c {
            return Err(Error::InvalidTheta(format!("images given for {keys:?}, expected {c:?}")));
        }
        let id = DenseMatrix::identity(self.dim);
        for (j, z) in &self.images {
            if z.rows() != self.dim || z.cols() != self.dim {
                return Err(Error::InvalidTheta(format!("image of node {j} has the wrong size")));
            }
            let q = z.mul(z).plus(&z.scale(&self.m)).minus(&id);
            if !q.is_zero() {
                return Err(Error::InvalidTheta(format!("quadratic relation fails for node {j}")));
            }
        }
        for (&a, za) in &self.images {
            for (&b, zb) in &self.images {
                if a >= b {
                    continue;
                }
                let ok = if rs.adjacent(a, b) {
                    za.mul(zb).mul(za) == zb.mul(za).mul(zb)
                } else {
                    za.mul(zb) == zb.mul(za)
                };
                if !ok {
                    return Err(Error::InvalidTheta(format!("relation between nodes {a} and {b} fails")));
                }
            }
        }
        Ok(())
    }

    /// The common image when every generator maps to the same matrix.
    pub fn uniform_image(&self) -> Option<&DenseMatrix<F>> {
        let mut it = self.images.values();
        let first = it.next()?;
        it.all(|z| z == first).then_some(first)
    }
}

impl ThetaSpec<Scalar> {
    /// Specializes the variable `r` to a rational value.
    pub fn specialize(&self, r0: &Q) -> Result<ThetaSpec<Q>> {
        let ev = |s: &Scalar| s.eval_at(&Q::one(), r0);
        Ok(ThetaSpec {
            dim: self.dim,
            m: ev(&self.m)?,
            images: self.images.iter().map(|(j, z)| Ok((*j, z.try_map(ev)?))).collect::<Result<_>>()?,
        })
    }
}

/// The one-dimensional character `z_j -> 1/r` with `m = r - 1/r`, written
/// over `Q(r)[l, l^-1]`.
pub fn classical_lk(rs: &RootSystem) -> ThetaSpec<Scalar> {
    let r_inv = Scalar::one().div(&Scalar::m()).expect("r != 0");
    ThetaSpec {
        dim: 1,
        m: Scalar::from_ratfunc(r_minus_inverse()),
        images: rs.c_nodes().iter().map(|&j| (j, DenseMatrix::scalar(1, r_inv.clone()))).collect(),
    }
}

/// The classical character at a fixed rational `r`, keeping `l` symbolic,
/// with the matching map `m -> r - 1/r` on coefficients.
pub fn classical_lk_at(rs: &RootSystem, r0: &Q) -> Result<(ThetaSpec<Scalar>, ScalarMap<Scalar>)> {
    let p = SpecPoint::new(Q::one(), r0.clone())?;
    let m0 = RatFunc::constant(p.m());
    let theta = ThetaSpec {
        dim: 1,
        m: Scalar::from_ratfunc(m0.clone()),
        images: rs.c_nodes().iter().map(|&j| (j, DenseMatrix::scalar(1, Scalar::from_q(r0.recip().expect("r != 0"))))).collect(),
    };
    Ok((theta, Arc::new(move |c: &Scalar| c.substitute_m(&m0))))
}

/// `theta` applied to an element of `Z_0`.
pub fn theta_of_hecke<F: RingConst>(theta: &ThetaSpec<F>, map: &ScalarMap<F>, h: &HeckeElement) -> Result<DenseMatrix<F>> {
    let rs = h.algebra().root_system();
    let mut acc = DenseMatrix::zero(theta.dim, theta.dim);
    for (w, c) in h.terms() {
        let mut t = DenseMatrix::identity(theta.dim);
        for s in rs.reduced_word(w) {
            let z = theta.images.get(&s).ok_or_else(|| Error::InvalidTheta(format!("no image for node {s}")))?;
            t = t.mul(z);
        }
        acc = acc.plus(&t.scale(&map(c)?));
    }
    Ok(acc)
}

fn flatten<F: RingConst>(m: &RepMatrix<DenseMatrix<F>>, d: usize) -> DenseMatrix<F> {
    let n = m.dim();
    let mut out = DenseMatrix::zero(n * d, n * d);
    for c in 0..n {
        for (r, v) in m.column(c) {
            out.set_block(r * d, c * d, v);
        }
    }
    out
}

/// `Gamma_theta(g_i)` for every node, each of size `|Phi^+| * dim(theta)`,
/// obtained by applying `theta` to the entries of the symbolic matrices.
pub fn gamma_theta<F: RingConst>(
    lk: &LkModel<Z0Coeffs>,
    theta: &ThetaSpec<F>,
    map: &ScalarMap<F>,
) -> Result<Vec<DenseMatrix<F>>> {
    theta.validate(lk.root_system())?;
    lk.root_system()
        .nodes()
        .map(|i| {
            let blocks = lk.sigma(i).try_map(|h| theta_of_hecke(theta, map, h))?;
            Ok(flatten(&blocks, theta.dim))
        })
        .collect()
}

/// Coefficients in the matrix algebra of a representation of `Z_0`.
pub struct ThetaCoeffs<F> {
    rs: Arc<RootSystem>,
    theta: ThetaSpec<F>,
    map: ScalarMap<F>,
}

impl<F: RingConst> ThetaCoeffs<F> {
    pub fn new(rs: Arc<RootSystem>, theta: ThetaSpec<F>, map: ScalarMap<F>) -> Result<Self> {
        theta.validate(&rs)?;
        Ok(ThetaCoeffs { rs, theta, map })
    }

    pub fn theta(&self) -> &ThetaSpec<F> {
        &self.theta
    }
}

impl<F: RingConst + std::fmt::Debug> LkModel<ThetaCoeffs<F>> {
    /// The matrices `Gamma_theta(g_i)` with blocks expanded.
    pub fn flattened_sigmas(&self) -> Vec<DenseMatrix<F>> {
        let d = self.algebra().theta.dim;
        self.root_system().nodes().map(|i| flatten(self.sigma(i), d)).collect()
    }
}

fn uniform_word_value<E: Ring>(c: &E, c_inv: &E, one: E, word: &[(Node, bool)]) -> E {
    word.iter().fold(one, |acc, &(_, pos)| acc.times(if pos { c } else { c_inv }))
}

impl<F: RingConst + std::fmt::Debug> CoeffAlgebra for ThetaCoeffs<F> {
    type Elem = DenseMatrix<F>;

    fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }
    fn zero(&self) -> DenseMatrix<F> {
        DenseMatrix::zero(self.theta.dim, self.theta.dim)
    }
    fn one(&self) -> DenseMatrix<F> {
        DenseMatrix::identity(self.theta.dim)
    }
    fn from_scalar(&self, c: &Scalar) -> Result<DenseMatrix<F>> {
        Ok(DenseMatrix::scalar(self.theta.dim, (self.map)(c)?))
    }
    fn generator(&self, j: Node) -> DenseMatrix<F> {
        self.theta.images[&j].clone()
    }
    /// When all generators share one image `c`, sending every `T_s` of the
    /// full type to `c` extends `theta` to the whole Hecke algebra.
    fn closed_form(&self, word: &[(Node, bool)]) -> Option<Result<DenseMatrix<F>>> {
        let c = self.theta.uniform_image()?;
        let c_inv = c.plus(&DenseMatrix::scalar(self.theta.dim, self.theta.m.clone()));
        Some(Ok(uniform_word_value(c, &c_inv, self.one(), word)))
    }
}

/// Coefficients for a one-dimensional representation of `Z_0`, kept as
/// plain field elements.
pub struct CharacterCoeffs<F> {
    rs: Arc<RootSystem>,
    m: F,
    images: BTreeMap<Node, F>,
    map: ScalarMap<F>,
}

impl<F: RingConst> CharacterCoeffs<F> {
    pub fn new(rs: Arc<RootSystem>, theta: &ThetaSpec<F>, map: ScalarMap<F>) -> Result<Self> {
        if theta.dim != 1 {
            return Err(Error::InvalidTheta(format!("character needs dimension 1, got {}", theta.dim)));
        }
        theta.validate(&rs)?;
        let images = theta.images.iter().map(|(j, z)| (*j, z.get(0, 0).clone())).collect();
        Ok(CharacterCoeffs { rs, m: theta.m.clone(), images, map })
    }

    /// The classical character at a rational point.
    pub fn classical(rs: Arc<RootSystem>, p: &SpecPoint) -> Result<CharacterCoeffs<Q>> {
        let theta = classical_lk(&rs).specialize(&p.r)?;
        CharacterCoeffs::new(rs, &theta, q_point_map(p))
    }
}

impl<F: RingConst + std::fmt::Debug> CoeffAlgebra for CharacterCoeffs<F> {
    type Elem = F;

    fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }
    fn zero(&self) -> F {
        F::zero()
    }
    fn one(&self) -> F {
        F::one()
    }
    fn from_scalar(&self, c: &Scalar) -> Result<F> {
        (self.map)(c)
    }
    fn generator(&self, j: Node) -> F {
        self.images[&j].clone()
    }
    fn closed_form(&self, word: &[(Node, bool)]) -> Option<Result<F>> {
        let mut it = self.images.values();
        let c = it.next()?;
        if !it.all(|z| z == c) {
            return None;
        }
        let c_inv = c.plus(&self.m);
        Some(Ok(uniform_word_value(c, &c_inv, F::one(), word)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_character_is_valid() {
        let rs = RootSystem::from_name("D5").unwrap();
        let th = classical_lk(&rs);
        th.validate(&rs).unwrap();
        th.specialize(&Q::new(3, 2)).unwrap().validate(&rs).unwrap();
        // the other root -r
        let minus_r = Scalar::m().neg();
        let mut other = th.clone();
        for z in other.images.values_mut() {
            *z = DenseMatrix::scalar(1, minus_r.clone());
        }
        other.validate(&rs).unwrap();
    }

    #[test]
    fn invalid_theta_rejected() {
        let rs = RootSystem::from_name("D4").unwrap();
        let mut th = classical_lk(&rs);
        th.images.insert(1, DenseMatrix::scalar(1, Scalar::one()));
        assert!(th.validate(&rs).is_err());
        let mut th = classical_lk(&rs);
        th.images.remove(&3);
        assert!(th.validate(&rs).is_err());
    }

    #[test]
    fn spec_point_parsing() {
        let p = SpecPoint::parse("l=5/7,r=3/2").unwrap();
        assert_eq!(p.m(), Q::new(5, 6));
        assert!(SpecPoint::parse("l=0,r=3/2").is_err());
        assert!(SpecPoint::parse("l=1,r=-1").is_err());
        assert!(SpecPoint::parse("l=1").is_err());
    }
}
