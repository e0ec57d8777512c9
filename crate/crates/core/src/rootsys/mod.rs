//! Simply laced Dynkin diagrams, positive roots, and Weyl group combinatorics.
//!
//! Nodes are numbered from 1 following Bourbaki:
//!
//! * `A_n`: the path `1 - 2 - ... - n`;
//! * `D_n`: the path `1 - ... - (n-2)`, with `n-1` and `n` both attached to `n-2`;
//! * `E_n`: the chain `1 - 3 - 4 - ... - n`, with `2` attached to `4`.

mod weyl;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use weyl::WeylElement;

use crate::error::{Error, Result};

/// A node of the diagram, numbered from 1.
pub type Node = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

/// A connected simply laced spherical type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<DynkinType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family:?}{rank}")))
        }
    }

    /// Edges of the diagram as pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(Node, Node)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n - 1));
                e.push((n - 2, n));
                e
            }
            Family::E => {
                let mut e = vec![(1, 3), (2, 4)];
                e.extend((3..n).map(|i| (i, i + 1)));
                e
            }
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<DynkinType> {
        let t = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        DynkinType::new(family, rank).map_err(|_| bad())
    }
}

impl Serialize for DynkinType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DynkinType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer coefficients over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Coefficient of `alpha_i`.
    pub fn coeff(&self, i: Node) -> i32 {
        self.0[i - 1]
    }

    pub fn support(&self) -> Vec<Node> {
        (1..=self.0.len()).filter(|&i| self.0[i - 1] != 0).collect()
    }

    pub fn in_support(&self, i: Node) -> bool {
        self.0[i - 1] != 0
    }

    pub fn add(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Root system data of a fixed type, immutable after [`RootSystem::build`].
#[derive(Debug)]
pub struct RootSystem {
    ty: DynkinType,
    cartan: Vec<Vec<i32>>,
    neighbors: Vec<Vec<Node>>,
    dist: Vec<Vec<usize>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    highest: usize,
    c_nodes: Vec<Node>,
    // pairing of alpha_i with each positive root, [i-1][idx]
    simple_pairing: Vec<Vec<i32>>,
    // BFS trees over all roots (positive idx, negative N+idx) rooted at alpha_i
    coset_parent: Vec<Vec<Option<(usize, Node)>>>,
}

impl RootSystem {
    pub fn build(ty: DynkinType) -> RootSystem {
        let n = ty.rank;
        let mut cartan = vec![vec![0i32; n]; n];
        let mut neighbors = vec![Vec::new(); n];
        for i in 0..n {
            cartan[i][i] = 2;
        }
        for (a, b) in ty.edges() {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
            neighbors[a - 1].push(b);
            neighbors[b - 1].push(a);
        }
        for v in &mut neighbors {
            v.sort_unstable();
        }
        let mut dist = vec![vec![usize::MAX; n]; n];
        for s in 0..n {
            dist[s][s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &neighbors[u] {
                    if dist[s][v - 1] == usize::MAX {
                        dist[s][v - 1] = dist[s][u] + 1;
                        q.push_back(v - 1);
                    }
                }
            }
        }

        let pair = |i: usize, c: &[i32]| -> i32 { (0..n).map(|k| cartan[i][k] * c[k]).sum() };
        let mut roots: Vec<Root> = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                Root(c)
            })
            .collect();
        let mut seen: std::collections::HashSet<Root> = roots.iter().cloned().collect();
        let mut k = 0;
        while k < roots.len() {
            let b = roots[k].clone();
            for i in 0..n {
                if pair(i, &b.0) == -1 {
                    let mut c = b.0.clone();
                    c[i] += 1;
                    let r = Root(c);
                    if seen.insert(r.clone()) {
                        roots.push(r);
                    }
                }
            }
            k += 1;
        }
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let highest = roots.len() - 1;
        let simple_pairing: Vec<Vec<i32>> = (0..n).map(|i| roots.iter().map(|r| pair(i, &r.0)).collect()).collect();
        let c_nodes: Vec<Node> = (1..=n).filter(|&j| simple_pairing[j - 1][highest] == 0).collect();

        let mut rs = RootSystem {
            ty,
            cartan,
            neighbors,
            dist,
            roots,
            index,
            highest,
            c_nodes,
            simple_pairing,
            coset_parent: Vec::new(),
        };
        rs.coset_parent = (1..=n).map(|i| rs.coset_tree(i)).collect();
        rs
    }

    /// Parses a type name such as `D4` and builds its root system.
    pub fn from_name(name: &str) -> Result<RootSystem> {
        Ok(RootSystem::build(name.parse()?))
    }

    pub fn ty(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<Node> {
        1..=self.ty.rank
    }

    pub fn check_node(&self, i: Node) -> Result<()> {
        if i >= 1 && i <= self.rank() {
            Ok(())
        } else {
            Err(Error::InvalidNode { node: i, rank: self.rank() })
        }
    }

    pub fn cartan(&self, i: Node, j: Node) -> i32 {
        self.cartan[i - 1][j - 1]
    }

    pub fn adjacent(&self, i: Node, j: Node) -> bool {
        self.cartan[i - 1][j - 1] == -1
    }

    /// Distinct and not adjacent.
    pub fn orthogonal_nodes(&self, i: Node, j: Node) -> bool {
        self.cartan[i - 1][j - 1] == 0
    }

    pub fn neighbors(&self, i: Node) -> &[Node] {
        &self.neighbors[i - 1]
    }

    pub fn distance(&self, i: Node, j: Node) -> usize {
        self.dist[i - 1][j - 1]
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn index_of(&self, b: &Root) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// Index of a positive root, or an error naming the vector.
    pub fn require(&self, b: &Root) -> Result<usize> {
        if b.0.len() != self.rank() {
            return Err(Error::NotARoot(b.0.clone()));
        }
        self.index_of(b).ok_or_else(|| Error::NotARoot(b.0.clone()))
    }

    pub fn simple(&self, i: Node) -> Root {
        let mut c = vec![0; self.rank()];
        c[i - 1] = 1;
        Root(c)
    }

    pub fn simple_index(&self, i: Node) -> usize {
        self.index[&self.simple(i)]
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn highest_index(&self) -> usize {
        self.highest
    }

    /// Nodes orthogonal to the highest root.
    pub fn c_nodes(&self) -> &[Node] {
        &self.c_nodes
    }

    pub fn in_c(&self, j: Node) -> bool {
        self.c_nodes.contains(&j)
    }

    pub fn pairing(&self, b: &Root, g: &Root) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if b.0[i] == 0 {
                continue;
            }
            for k in 0..n {
                s += b.0[i] * self.cartan[i][k] * g.0[k];
            }
        }
        s
    }

    /// `(alpha_i, beta)` for a positive root given by index.
    pub fn pairing_simple(&self, i: Node, idx: usize) -> i32 {
        self.simple_pairing[i - 1][idx]
    }

    /// `(alpha_i, beta)` for any lattice vector.
    pub fn pairing_with_simple(&self, i: Node, b: &Root) -> i32 {
        (0..self.rank()).map(|k| self.cartan[i - 1][k] * b.0[k]).sum()
    }

    pub fn reflect(&self, i: Node, b: &Root) -> Root {
        let p = self.pairing_with_simple(i, b);
        let mut c = b.0.clone();
        c[i - 1] -= p;
        Root(c)
    }

    /// Node of `Supp(beta)` nearest to `i` (smallest such node on ties,
    /// although the diagram being a tree makes it unique).
    pub fn proj(&self, i: Node, b: &Root) -> Node {
        b.support().into_iter().min_by_key(|&j| (self.distance(i, j), j)).expect("nonzero root")
    }

    /// Nodes on the shortest path from `i` to the support of `beta` that are
    /// themselves outside the support.
    pub fn geod(&self, i: Node, b: &Root) -> Vec<Node> {
        let h = self.proj(i, b);
        let mut out: Vec<Node> = self.path(i, h).into_iter().filter(|&v| !b.in_support(v)).collect();
        out.sort_unstable();
        out
    }

    /// The unique path `i = i_1, ..., i_q = j` in the diagram.
    pub fn path(&self, i: Node, j: Node) -> Vec<Node> {
        let mut out = vec![i];
        let mut cur = i;
        while cur != j {
            cur = *self.neighbors(cur).iter().find(|&&v| self.distance(v, j) + 1 == self.distance(cur, j)).expect("tree");
            out.push(cur);
        }
        out
    }

    /// Word `(i_{q-1} i_q) ... (i_1 i_2)` along the path from `i` to `k`.
    /// As a Weyl element it is the minimal element sending `alpha_i` to
    /// `alpha_k`; in the representation it carries `x_{alpha_i}` to
    /// `x_{alpha_k}`.
    pub fn path_word(&self, i: Node, k: Node) -> Vec<Node> {
        let p = self.path(i, k);
        let mut w = Vec::with_capacity(2 * p.len());
        for t in (1..p.len()).rev() {
            w.push(p[t - 1]);
            w.push(p[t]);
        }
        w
    }

    /// Nodes `j` with `(alpha_j, beta) = 1` such that `r_j w_{beta - alpha_j, h}`
    /// is a reduced expression of `w_{beta, h}`, where `h = Proj(k, beta)`.
    pub fn jset(&self, k: Node, b: &Root) -> Result<Vec<Node>> {
        let bi = self.require(b)?;
        let h = self.proj(k, b);
        let target = self.word_element(&self.min_coset_word(b, h)?);
        let tl = target.length(self);
        let mut out = Vec::new();
        for j in self.nodes() {
            if self.pairing_simple(j, bi) != 1 {
                continue;
            }
            let rest = b.sub(&self.simple(j));
            if !rest.is_positive() {
                continue;
            }
            let w = self.word_element(&self.min_coset_word(&rest, h)?);
            let rw = self.left_mul_simple(j, &w);
            if rw == target && w.length(self) + 1 == tl {
                out.push(j);
            }
        }
        Ok(out)
    }

    fn all_root_index(&self, r: &Root) -> Option<usize> {
        if r.is_positive() {
            self.index_of(r)
        } else {
            self.index_of(&r.neg()).map(|k| k + self.roots.len())
        }
    }

    fn all_root(&self, k: usize) -> Root {
        let n = self.roots.len();
        if k < n {
            self.roots[k].clone()
        } else {
            self.roots[k - n].neg()
        }
    }

    fn coset_tree(&self, i: Node) -> Vec<Option<(usize, Node)>> {
        let total = 2 * self.roots.len();
        let start = self.simple_index(i);
        let mut parent: Vec<Option<(usize, Node)>> = vec![None; total];
        let mut seen = vec![false; total];
        seen[start] = true;
        let mut q = VecDeque::from([start]);
        while let Some(u) = q.pop_front() {
            let ru = self.all_root(u);
            for k in self.nodes() {
                let v = self.all_root_index(&self.reflect(k, &ru)).expect("closed under reflections");
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some((u, k));
                    q.push_back(v);
                }
            }
        }
        parent
    }

    /// Reduced word for the unique minimal `w` with `w alpha_i = beta`.
    pub fn min_coset_word(&self, b: &Root, i: Node) -> Result<Vec<Node>> {
        self.check_node(i)?;
        let mut cur = self.require(b)?;
        let tree = &self.coset_parent[i - 1];
        let mut word = Vec::new();
        while let Some((p, k)) = tree[cur] {
            word.push(k);
            cur = p;
        }
        Ok(word)
    }

    /// Word for `w_{alpha_0, beta}^{-1}`, built from the ascending chain
    /// `beta -> alpha_0` that always adds the smallest admissible simple root.
    pub fn d_beta(&self, b: &Root) -> Result<Vec<Node>> {
        self.d_beta_with(b, |cands| cands[0])
    }

    /// Same chain with a caller-chosen tie-break among admissible nodes.
    pub fn d_beta_with(&self, b: &Root, mut pick: impl FnMut(&[Node]) -> Node) -> Result<Vec<Node>> {
        let mut cur = self.require(b)?;
        let mut word = Vec::new();
        while cur != self.highest {
            let cands: Vec<Node> = self.nodes().filter(|&i| self.pairing_simple(i, cur) == -1).collect();
            let i = pick(&cands);
            word.push(i);
            cur = self.index[&self.roots[cur].add(&self.simple(i))];
        }
        Ok(word)
    }

    /// Palindromic reduced word for the reflection in `beta`.
    pub fn s_beta_word(&self, b: &Root) -> Result<Vec<Node>> {
        let k = b.support()[0];
        let u = self.min_coset_word(b, k)?;
        let mut w = u.clone();
        w.push(k);
        w.extend(u.iter().rev());
        debug_assert_eq!(w.len() as i32, 2 * b.height() - 1);
        Ok(w)
    }

    /// The node `j` of `C` with `h_{beta,i} = z_j`; needs `(alpha_i, beta) = 0`.
    pub fn h_beta_i(&self, b: &Root, i: Node) -> Result<Node> {
        self.check_node(i)?;
        let mut cur = self.require(b)?;
        let p = self.pairing_simple(i, cur);
        if p != 0 {
            return Err(Error::PairingMismatch { expected: 0, found: p });
        }
        let mut i = i;
        while cur != self.highest {
            let j = self.nodes().find(|&j| self.pairing_simple(j, cur) == -1).expect("non-highest root has an ascent");
            let mut next = self.roots[cur].add(&self.simple(j));
            if self.adjacent(i, j) {
                next = next.add(&self.simple(i));
                i = j;
            }
            cur = self.index[&next];
        }
        debug_assert!(self.in_c(i));
        Ok(i)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn simple_reflection(&self, s: Node) -> WeylElement {
        self.right_mul_simple(&self.identity(), s)
    }

    /// `w r_s`.
    pub fn right_mul_simple(&self, w: &WeylElement, s: Node) -> WeylElement {
        w.right_mul_simple(s, &self.cartan[s - 1])
    }

    /// `r_s w`.
    pub fn left_mul_simple(&self, s: Node, w: &WeylElement) -> WeylElement {
        w.left_mul_simple(s, &self.cartan[s - 1])
    }

    /// Product of simple reflections read left to right.
    pub fn word_element(&self, word: &[Node]) -> WeylElement {
        word.iter().fold(self.identity(), |w, &s| self.right_mul_simple(&w, s))
    }

    /// Whether `l(w r_s) > l(w)`.
    pub fn is_ascent(&self, w: &WeylElement, s: Node) -> bool {
        w.image_is_positive(s)
    }

    /// Reduced word by repeatedly removing the smallest right descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<Node> {
        let mut w = w.clone();
        let mut out = Vec::new();
        while let Some(s) = self.nodes().find(|&s| !w.image_is_positive(s)) {
            out.push(s);
            w = self.right_mul_simple(&w, s);
        }
        out.reverse();
        out
    }

    /// Whether `w` lies in the parabolic subgroup generated by `nodes`.
    pub fn in_parabolic(&self, w: &WeylElement, nodes: &[Node]) -> bool {
        let mut w = w.clone();
        while let Some(s) = self.nodes().find(|&s| !w.image_is_positive(s)) {
            if !nodes.contains(&s) {
                return false;
            }
            w = self.right_mul_simple(&w, s);
        }
        true
    }

    pub fn act(&self, w: &WeylElement, b: &Root) -> Root {
        w.act(b)
    }

    /// Enumerates the parabolic subgroup on `nodes` by breadth-first search.
    /// Only sensible for small groups.
    pub fn enumerate_parabolic(&self, nodes: &[Node]) -> Vec<WeylElement> {
        let mut seen = std::collections::HashSet::new();
        let id = self.identity();
        seen.insert(id.clone());
        let mut out = vec![id.clone()];
        let mut q = VecDeque::from([id]);
        while let Some(w) = q.pop_front() {
            for &s in nodes {
                let v = self.right_mul_simple(&w, s);
                if seen.insert(v.clone()) {
                    out.push(v.clone());
                    q.push_back(v);
                }
            }
        }
        out
    }

    /// Order of the parabolic subgroup on `nodes`, from the types of its
    /// connected components.
    pub fn parabolic_order(&self, nodes: &[Node]) -> u128 {
        self.components(nodes).iter().map(|c| self.component_type(c).weyl_order()).product()
    }

    pub fn weyl_order(&self) -> u128 {
        self.ty.weyl_order()
    }

    /// Order of `W_C`.
    pub fn wc_order(&self) -> u128 {
        self.parabolic_order(&self.c_nodes)
    }

    /// Types of the connected components of the subdiagram on `nodes`.
    pub fn subdiagram_types(&self, nodes: &[Node]) -> Vec<DynkinType> {
        self.components(nodes).iter().map(|c| self.component_type(c)).collect()
    }

    fn components(&self, nodes: &[Node]) -> Vec<Vec<Node>> {
        let mut left: Vec<Node> = nodes.to_vec();
        left.sort_unstable();
        left.dedup();
        let mut out = Vec::new();
        while let Some(&start) = left.first() {
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                for &v in self.neighbors(comp[k]) {
                    if left.contains(&v) && !comp.contains(&v) {
                        comp.push(v);
                    }
                }
                k += 1;
            }
            left.retain(|v| !comp.contains(v));
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn component_type(&self, comp: &[Node]) -> DynkinType {
        let deg = |v: Node| self.neighbors(v).iter().filter(|u| comp.contains(u)).count();
        let n = comp.len();
        match comp.iter().find(|&&v| deg(v) == 3) {
            None => DynkinType { family: Family::A, rank: n },
            Some(&c) => {
                let mut arms: Vec<usize> = self
                    .neighbors(c)
                    .iter()
                    .filter(|u| comp.contains(u))
                    .map(|&u| comp.iter().filter(|&&v| self.distance(c, v) > self.distance(u, v)).count())
                    .collect();
                arms.sort_unstable();
                let family = if arms[1] == 1 { Family::D } else { Family::E };
                DynkinType { family, rank: n }
            }
        }
    }
}

impl DynkinType {
    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        match self.family {
            Family::A => fact(self.rank + 1),
            Family::D => (1u128 << (self.rank - 1)) * fact(self.rank),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
        }
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    #[test]
    fn parse_types() {
        assert!("X9".parse::<DynkinType>().is_err());
        assert!("D3".parse::<DynkinType>().is_err());
        assert!("E9".parse::<DynkinType>().is_err());
        assert_eq!("e7".parse::<DynkinType>().unwrap().to_string(), "E7");
    }

    #[test]
    fn a2_roots() {
        let r = rs("A2");
        assert_eq!(r.num_positive(), 3);
        assert_eq!(r.highest_root(), &Root(vec![1, 1]));
        assert!(r.c_nodes().is_empty());
        assert_eq!(r.reflect(1, &r.simple(2)), Root(vec![1, 1]));
        assert_eq!(r.reflect(1, &r.simple(1)), Root(vec![-1, 0]));
    }

    #[test]
    fn counts_and_c_sets() {
        for (name, n, c) in [
            ("A5", 15, vec![2, 3, 4]),
            ("D4", 12, vec![1, 3, 4]),
            ("D6", 30, vec![1, 3, 4, 5, 6]),
            ("E6", 36, vec![1, 3, 4, 5, 6]),
            ("E7", 63, vec![2, 3, 4, 5, 6, 7]),
            ("E8", 120, vec![1, 2, 3, 4, 5, 6, 7]),
        ] {
            let r = rs(name);
            assert_eq!(r.num_positive(), n, "{name}");
            assert_eq!(r.ty().num_positive(), n, "{name}");
            assert_eq!(r.c_nodes(), c.as_slice(), "{name}");
        }
    }

    #[test]
    fn reflections_permute_other_positive_roots() {
        for name in ["A4", "D5", "E6"] {
            let r = rs(name);
            for i in r.nodes() {
                for b in r.positive_roots() {
                    if *b != r.simple(i) {
                        assert!(r.index_of(&r.reflect(i, b)).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn proj_and_geod_d4() {
        let r = rs("D4");
        let b = Root(vec![1, 1, 0, 0]);
        assert_eq!(r.proj(4, &b), 2);
        assert_eq!(r.geod(4, &b), vec![4]);
        assert_eq!(r.geod(1, &b), Vec::<Node>::new());
        assert_eq!(r.geod(3, &r.simple(1)), vec![2, 3]);
    }

    #[test]
    fn min_coset_examples() {
        let r = rs("A2");
        assert_eq!(r.min_coset_word(&Root(vec![1, 1]), 1).unwrap(), vec![2]);
        assert!(r.min_coset_word(&r.simple(2), 2).unwrap().is_empty());
        assert_eq!(r.d_beta(&r.simple(1)).unwrap(), vec![2]);
        assert!(r.d_beta(r.highest_root()).unwrap().is_empty());
    }

    #[test]
    fn min_coset_length_formula() {
        for name in ["A4", "D5", "E6"] {
            let r = rs(name);
            for b in r.positive_roots() {
                for i in r.nodes() {
                    let w = r.min_coset_word(b, i).unwrap();
                    let j = r.proj(i, b);
                    let wij = 2 * r.distance(i, j) as i32;
                    assert_eq!(w.len() as i32, b.height() + wij - 1);
                    let el = r.word_element(&w);
                    assert_eq!(el.length(&r), w.len());
                    assert_eq!(el.act(&r.simple(i)), *b);
                }
            }
        }
    }

    #[test]
    fn path_word_is_min_coset_word_element() {
        let r = rs("E6");
        for i in r.nodes() {
            for j in r.nodes() {
                let a = r.word_element(&r.path_word(i, j));
                let b = r.word_element(&r.min_coset_word(&r.simple(j), i).unwrap());
                assert_eq!(a, b);
                // conjugates r_i to r_j
                let conj = a.compose(&r.simple_reflection(i)).compose(&a.invert(&r));
                assert_eq!(conj, r.simple_reflection(j));
            }
        }
    }

    #[test]
    fn d_beta_lengths_and_tie_breaks() {
        for name in ["A3", "D4", "E6"] {
            let r = rs(name);
            let top = r.highest_root().height();
            for b in r.positive_roots() {
                let w = r.d_beta(b).unwrap();
                assert_eq!(w.len() as i32, top - b.height());
                let alt = r.d_beta_with(b, |c| *c.last().unwrap()).unwrap();
                assert_eq!(r.word_element(&w), r.word_element(&alt));
                // w_{alpha_0, beta} = element of d_beta reversed
                assert_eq!(r.word_element(&w).invert(&r).act(b), *r.highest_root());
            }
        }
    }

    #[test]
    fn s_beta_is_reflection() {
        let r = rs("D5");
        for b in r.positive_roots() {
            let w = r.word_element(&r.s_beta_word(b).unwrap());
            assert_eq!(w.act(b), b.neg());
            assert_eq!(w.length(&r) as i32, 2 * b.height() - 1);
            for g in r.positive_roots() {
                let p = r.pairing(b, g);
                let want = Root(g.0.iter().zip(&b.0).map(|(x, y)| x - p * y).collect());
                assert_eq!(w.act(g), want);
            }
        }
    }

    #[test]
    fn h_recursion_stays_in_c() {
        for name in ["A5", "D5", "E7"] {
            let r = rs(name);
            for (bi, b) in r.positive_roots().iter().enumerate() {
                for i in r.nodes() {
                    if r.pairing_simple(i, bi) == 0 {
                        let j = r.h_beta_i(b, i).unwrap();
                        assert!(r.in_c(j));
                        for k in r.nodes() {
                            let bk = b.add(&r.simple(k));
                            if r.orthogonal_nodes(i, k) && r.index_of(&bk).is_some() {
                                assert_eq!(r.h_beta_i(&bk, i).unwrap(), j);
                            }
                        }
                    } else {
                        assert!(r.h_beta_i(b, i).is_err());
                    }
                }
            }
        }
    }

    #[test]
    fn jset_empty_only_for_simple_roots() {
        for name in ["A4", "D4", "E6"] {
            let r = rs(name);
            for b in r.positive_roots() {
                for k in r.nodes() {
                    let j = r.jset(k, b).unwrap();
                    assert_eq!(j.is_empty(), b.height() == 1, "{name} {b} {k}");
                }
            }
        }
    }

    #[test]
    fn parabolic_orders() {
        let r = rs("D5");
        assert_eq!(r.wc_order(), 48);
        assert_eq!(r.enumerate_parabolic(r.c_nodes()).len(), 48);
        let r = rs("E6");
        assert_eq!(r.wc_order(), 720);
        assert_eq!(r.enumerate_parabolic(r.c_nodes()).len(), 720);
        let r = rs("A3");
        let all: Vec<Node> = r.nodes().collect();
        assert_eq!(r.enumerate_parabolic(&all).len() as u128, r.weyl_order());
        assert_eq!(rs("E8").wc_order(), 2_903_040);
        assert_eq!(rs("E7").wc_order(), 23_040);
    }
}
