//! Iwahori-Hecke algebras of parabolic subsystems.
//!
//! Basis `T_w`, generators `z_s = T_s`, quadratic relation
//! `z_s^2 = 1 - m z_s`, so `z_s^{-1} = z_s + m`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::rootsys::{Node, RootSystem, WeylElement};
use crate::scalar::Scalar;

const PRODUCT_CACHE_LIMIT: usize = 1 << 20;

type Terms = BTreeMap<WeylElement, Scalar>;

/// The Hecke algebra of the parabolic subgroup generated by `nodes`.
pub struct HeckeAlgebra {
    rs: Arc<RootSystem>,
    nodes: Vec<Node>,
    identity: WeylElement,
    products: RwLock<HashMap<(WeylElement, WeylElement), Arc<Vec<(WeylElement, Scalar)>>>>,
}

impl fmt::Debug for HeckeAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeAlgebra({} on {:?})", self.rs.ty(), self.nodes)
    }
}

impl HeckeAlgebra {
    pub fn new(rs: Arc<RootSystem>, nodes: &[Node]) -> Result<Arc<HeckeAlgebra>> {
        let mut nodes = nodes.to_vec();
        for &n in &nodes {
            rs.check_node(n)?;
        }
        nodes.sort_unstable();
        nodes.dedup();
        let identity = rs.identity();
        Ok(Arc::new(HeckeAlgebra { rs, nodes, identity, products: RwLock::new(HashMap::new()) }))
    }

    /// Hecke algebra of the whole Weyl group.
    pub fn full(rs: Arc<RootSystem>) -> Arc<HeckeAlgebra> {
        let nodes: Vec<Node> = rs.nodes().collect();
        HeckeAlgebra::new(rs, &nodes).expect("valid nodes")
    }

    /// `Z_0`, the Hecke algebra of the nodes orthogonal to the highest root.
    pub fn z0(rs: Arc<RootSystem>) -> Arc<HeckeAlgebra> {
        let nodes = rs.c_nodes().to_vec();
        HeckeAlgebra::new(rs, &nodes).expect("valid nodes")
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.rs.in_parabolic(w, &self.nodes)
    }

    fn same(&self, o: &HeckeAlgebra) -> bool {
        std::ptr::eq(self, o) || (self.nodes == o.nodes && self.rs.ty() == o.rs.ty())
    }
}

/// A finite combination of basis elements `T_w` with [`Scalar`] coefficients.
#[derive(Clone)]
pub struct HeckeElement {
    alg: Arc<HeckeAlgebra>,
    terms: Terms,
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for HeckeElement {
    fn eq(&self, o: &Self) -> bool {
        self.alg.same(&o.alg) && self.terms == o.terms
    }
}

impl Eq for HeckeElement {}

fn add_into(terms: &mut Terms, w: WeylElement, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

impl HeckeAlgebra {
    pub fn zero(self: &Arc<Self>) -> HeckeElement {
        HeckeElement { alg: self.clone(), terms: Terms::new() }
    }

    pub fn one(self: &Arc<Self>) -> HeckeElement {
        self.scalar(Scalar::one())
    }

    pub fn scalar(self: &Arc<Self>, c: Scalar) -> HeckeElement {
        let mut terms = Terms::new();
        add_into(&mut terms, self.identity.clone(), c);
        HeckeElement { alg: self.clone(), terms }
    }

    /// `1 * T_w`.
    pub fn basis_elem(self: &Arc<Self>, w: &WeylElement) -> Result<HeckeElement> {
        if !self.contains(w) {
            return Err(Error::OutsideParabolic(self.rs.reduced_word(w)));
        }
        let mut terms = Terms::new();
        terms.insert(w.clone(), Scalar::one());
        Ok(HeckeElement { alg: self.clone(), terms })
    }

    /// The generator `z_j`.
    pub fn generator(self: &Arc<Self>, j: Node) -> Result<HeckeElement> {
        if !self.nodes.contains(&j) {
            return Err(Error::OutsideParabolic(vec![j]));
        }
        self.basis_elem(&self.rs.simple_reflection(j))
    }

    /// `z_j^{-1} = z_j + m`.
    pub fn generator_inv(self: &Arc<Self>, j: Node) -> Result<HeckeElement> {
        Ok(self.generator(j)?.add(&self.scalar(Scalar::m())))
    }

    /// Product of generators along `word`, `(j, true)` giving `z_j` and
    /// `(j, false)` giving `z_j + m`.
    pub fn eval_signed_word(self: &Arc<Self>, word: &[(Node, bool)]) -> Result<HeckeElement> {
        let mut acc = self.one();
        for &(j, positive) in word {
            if !self.nodes.contains(&j) {
                return Err(Error::OutsideParabolic(vec![j]));
            }
            let next = acc.right_mul_generator(j);
            acc = if positive { next } else { next.add(&acc.scale(&Scalar::m())) };
        }
        Ok(acc)
    }

    /// `T_u T_v` as a list of basis terms; cached.
    fn basis_product(&self, u: &WeylElement, v: &WeylElement) -> Arc<Vec<(WeylElement, Scalar)>> {
        let key = (u.clone(), v.clone());
        if let Some(hit) = self.products.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let mut terms = Terms::new();
        terms.insert(u.clone(), Scalar::one());
        for s in self.rs.reduced_word(v) {
            terms = right_mul_gen_terms(&self.rs, &terms, s);
        }
        let out: Arc<Vec<_>> = Arc::new(terms.into_iter().collect());
        let mut cache = self.products.write().expect("cache lock");
        if cache.len() < PRODUCT_CACHE_LIMIT {
            cache.entry(key).or_insert_with(|| out.clone());
        }
        out
    }

    /// Parses the JSON form produced by serializing a [`HeckeElement`].
    pub fn element_from_json(self: &Arc<Self>, v: &serde_json::Value) -> Result<HeckeElement> {
        let j: HeckeJson = serde_json::from_value(v.clone())?;
        let mut out = self.zero();
        for t in j.terms {
            for &n in &t.word {
                self.rs.check_node(n)?;
            }
            let w = self.rs.word_element(&t.word);
            out = out.add(&self.basis_elem(&w)?.scale(&t.coeff));
        }
        Ok(out)
    }
}

fn right_mul_gen_terms(rs: &RootSystem, terms: &Terms, s: Node) -> Terms {
    let mut out = Terms::new();
    let minus_m = Scalar::m().neg();
    for (w, c) in terms {
        let ws = rs.right_mul_simple(w, s);
        if rs.is_ascent(w, s) {
            add_into(&mut out, ws, c.clone());
        } else {
            add_into(&mut out, ws, c.clone());
            add_into(&mut out, w.clone(), c.mul(&minus_m));
        }
    }
    out
}

impl HeckeElement {
    pub fn algebra(&self) -> &Arc<HeckeAlgebra> {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `T_w`.
    pub fn coeff(&self, w: &WeylElement) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The scalar `c` if `self = c * T_1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (w, c) = self.terms.iter().next()?;
                (*w == self.alg.identity).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Whether every coefficient is free of `l`.
    pub fn is_l_free(&self) -> bool {
        self.terms.values().all(Scalar::is_l_free)
    }

    pub fn add(&self, o: &HeckeElement) -> HeckeElement {
        assert!(self.alg.same(&o.alg), "operands belong to different Hecke algebras");
        let (big, small) = if self.terms.len() >= o.terms.len() { (self, o) } else { (o, self) };
        let mut terms = big.terms.clone();
        for (w, c) in &small.terms {
            add_into(&mut terms, w.clone(), c.clone());
        }
        HeckeElement { alg: self.alg.clone(), terms }
    }

    pub fn neg(&self) -> HeckeElement {
        HeckeElement { alg: self.alg.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &HeckeElement) -> HeckeElement {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> HeckeElement {
        if c.is_zero() {
            return self.alg.zero();
        }
        if c.is_one() {
            return self.clone();
        }
        HeckeElement { alg: self.alg.clone(), terms: self.terms.iter().map(|(w, a)| (w.clone(), a.mul(c))).collect() }
    }

    /// `self * z_s`.
    pub fn right_mul_generator(&self, s: Node) -> HeckeElement {
        HeckeElement { alg: self.alg.clone(), terms: right_mul_gen_terms(&self.alg.rs, &self.terms, s) }
    }

    /// Product in the algebra; errors on mismatched parents.
    pub fn multiply(&self, o: &HeckeElement) -> Result<HeckeElement> {
        if !self.alg.same(&o.alg) {
            return Err(Error::ParentMismatch);
        }
        if let Some(c) = o.as_scalar() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.as_scalar() {
            return Ok(o.scale(&c));
        }
        let mut terms = Terms::new();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let ab = a.mul(b);
                for (w, c) in self.alg.basis_product(u, v).iter() {
                    add_into(&mut terms, w.clone(), if c.is_one() { ab.clone() } else { ab.mul(c) });
                }
            }
        }
        Ok(HeckeElement { alg: self.alg.clone(), terms })
    }

    /// Re-parents into the Hecke algebra `target` of a sub-parabolic;
    /// fails if some basis element lies outside it.
    pub fn project(&self, target: &Arc<HeckeAlgebra>) -> Result<HeckeElement> {
        if target.rs.ty() != self.alg.rs.ty() {
            return Err(Error::ParentMismatch);
        }
        for w in self.terms.keys() {
            if !target.contains(w) {
                return Err(Error::OutsideParabolic(target.rs.reduced_word(w)));
            }
        }
        Ok(HeckeElement { alg: target.clone(), terms: self.terms.clone() })
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> HeckeElement {
        let mut terms = Terms::new();
        for (w, c) in &self.terms {
            add_into(&mut terms, w.clone(), f(c));
        }
        HeckeElement { alg: self.alg.clone(), terms }
    }
}

impl Ring for HeckeElement {
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.multiply(o).expect("operands share a parent algebra")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut words: Vec<(Vec<Node>, &Scalar)> = self.terms.iter().map(|(w, c)| (self.alg.rs.reduced_word(w), c)).collect();
        words.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        let parts: Vec<String> = words
            .into_iter()
            .map(|(word, c)| {
                let basis = if word.is_empty() {
                    String::new()
                } else {
                    let s: Vec<String> = word.iter().map(|n| n.to_string()).collect();
                    format!("T[{}]", s.join(","))
                };
                match (basis.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => basis,
                    (false, false) => format!("({c})*{basis}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct HeckeTermJson {
    word: Vec<Node>,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct HeckeJson {
    terms: Vec<HeckeTermJson>,
}

impl Serialize for HeckeElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms: Vec<HeckeTermJson> = self
            .terms
            .iter()
            .map(|(w, c)| HeckeTermJson { word: self.alg.rs.reduced_word(w), coeff: c.clone() })
            .collect();
        terms.sort_by(|a, b| a.word.len().cmp(&b.word.len()).then_with(|| a.word.cmp(&b.word)));
        HeckeJson { terms }.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4() -> (Arc<RootSystem>, Arc<HeckeAlgebra>, Arc<HeckeAlgebra>) {
        let rs = Arc::new(RootSystem::from_name("D4").unwrap());
        (rs.clone(), HeckeAlgebra::z0(rs.clone()), HeckeAlgebra::full(rs))
    }

    #[test]
    fn quadratic_and_inverse() {
        let (_, z0, full) = d4();
        for alg in [&z0, &full] {
            for &j in alg.nodes() {
                let z = alg.generator(j).unwrap();
                let m = alg.scalar(Scalar::m());
                assert_eq!(z.multiply(&z).unwrap(), alg.one().sub(&m.multiply(&z).unwrap()));
                assert_eq!(z.multiply(&alg.generator_inv(j).unwrap()).unwrap(), alg.one());
            }
        }
    }

    #[test]
    fn signed_words() {
        let (_, z0, _) = d4();
        assert_eq!(z0.eval_signed_word(&[(3, true)]).unwrap(), z0.generator(3).unwrap());
        assert_eq!(z0.eval_signed_word(&[(3, false)]).unwrap(), z0.generator_inv(3).unwrap());
        assert_eq!(z0.eval_signed_word(&[(3, true), (3, false)]).unwrap(), z0.one());
        assert!(z0.eval_signed_word(&[(2, true)]).is_err());
    }

    #[test]
    fn reduced_words_evaluate_to_basis() {
        let rs = Arc::new(RootSystem::from_name("A3").unwrap());
        let full = HeckeAlgebra::full(rs.clone());
        let all: Vec<Node> = rs.nodes().collect();
        for w in rs.enumerate_parabolic(&all) {
            let word: Vec<(Node, bool)> = rs.reduced_word(&w).into_iter().map(|s| (s, true)).collect();
            assert_eq!(full.eval_signed_word(&word).unwrap(), full.basis_elem(&w).unwrap());
            let prod = full.basis_elem(&w).unwrap().multiply(&full.basis_elem(&w.invert(&rs)).unwrap()).unwrap();
            assert_eq!(prod.as_scalar().is_some(), w.is_identity());
        }
    }

    #[test]
    fn associativity_in_z0_d4() {
        let (rs, z0, _) = d4();
        let els: Vec<HeckeElement> = rs
            .enumerate_parabolic(z0.nodes())
            .iter()
            .enumerate()
            .map(|(k, w)| {
                let c = Scalar::m().pow(k as u32 % 3).add(&Scalar::from_int(k as i64 - 3));
                z0.basis_elem(w).unwrap().scale(&c).add(&z0.generator(3).unwrap())
            })
            .collect();
        for a in &els {
            for b in els.iter().step_by(3) {
                for c in els.iter().step_by(2) {
                    let l = a.multiply(b).unwrap().multiply(c).unwrap();
                    let r = a.multiply(&b.multiply(c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn projection() {
        let (_, z0, full) = d4();
        assert_eq!(full.one().project(&z0).unwrap(), z0.one());
        assert!(full.generator(2).unwrap().project(&z0).is_err());
        assert!(full.generator(4).unwrap().project(&z0).is_ok());
        assert!(z0.generator(2).is_err());
        assert!(z0.one().multiply(&full.one()).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let (_, z0, _) = d4();
        let x = z0
            .generator(1)
            .unwrap()
            .multiply(&z0.generator(4).unwrap())
            .unwrap()
            .scale(&Scalar::x_value())
            .add(&z0.scalar(Scalar::m()));
        let v = serde_json::to_value(&x).unwrap();
        let back = z0.element_from_json(&v).unwrap();
        assert_eq!(back, x);
        assert_eq!(serde_json::to_string(&back).unwrap(), serde_json::to_string(&x).unwrap());
    }
}
