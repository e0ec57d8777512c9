//! Length-reducing rewriting.
//!
//! Words are processed largest first. Inverses are expanded by
//! `G_i = g_i + m - m e_i`. Otherwise the orbit of the word under
//! length-preserving moves is searched breadth first for a factor that a
//! shortening rule applies to. Moves are commutation of letters on distinct
//! non-adjacent nodes, `g_i g_j g_i = g_j g_i g_j`, and
//! `g_i e_j g_i = g_j e_i g_j + (shorter terms)` for adjacent `i`, `j`.
//! A word whose orbit has no such factor is kept, written as the smallest
//! word of its orbit plus the shorter terms picked up along the way.
//!
//! Every step replaces a word by itself modulo strictly smaller words, so the
//! procedure terminates. The output is not a normal form.

use std::collections::{BTreeMap, HashMap};

use crate::rootsys::RootSystem;
use crate::scalar::Scalar;

use super::{BmwWord, Letter, LetterKind, WordCombination};

/// Orbits larger than this are abandoned and their smallest visited word
/// is kept.
pub const ORBIT_LIMIT: usize = 200_000;

type Terms = Vec<(BmwWord, Scalar)>;

pub fn reduce_word(rs: &RootSystem, w: &BmwWord) -> WordCombination {
    reduce(rs, &WordCombination::word(w.clone()))
}

pub fn reduce(rs: &RootSystem, c: &WordCombination) -> WordCombination {
    let mut pending: BTreeMap<BmwWord, Scalar> = c.terms().clone();
    let mut out = WordCombination::zero();
    while let Some((w, coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        let (kept, rest) = step(rs, &w);
        if let Some(k) = kept {
            out.add_term(k, &coeff);
        }
        for (v, s) in rest {
            debug_assert!(v < w, "rewriting must decrease words");
            let slot = pending.entry(v).or_default();
            *slot = slot.add(&s.mul(&coeff));
        }
    }
    out
}

/// `w = kept + sum(rest)` with every word of `rest` smaller than `w`.
fn step(rs: &RootSystem, w: &BmwWord) -> (Option<BmwWord>, Terms) {
    if let Some(p) = w.0.iter().position(|l| l.kind == LetterKind::GInv) {
        let j = w.0[p].node;
        let m = Scalar::m();
        let rest = vec![
            (w.splice(p, 1, &[Letter::g(j)]), Scalar::one()),
            (w.splice(p, 1, &[]), m.clone()),
            (w.splice(p, 1, &[Letter::e(j)]), m.neg()),
        ];
        return (None, rest);
    }
    let mut orbit = Orbit::new(w.clone());
    let mut head = 0;
    while head < orbit.words.len() {
        let v = orbit.words[head].0.clone();
        if let Some(terms) = find_redex(rs, &v) {
            let mut rest = orbit.path_terms(head);
            rest.extend(terms);
            return (None, rest);
        }
        if orbit.words.len() < ORBIT_LIMIT {
            for (u, mv) in moves(rs, &v) {
                orbit.visit(u, head, mv);
            }
        }
        head += 1;
    }
    let best = (0..orbit.words.len()).min_by(|&a, &b| orbit.words[a].0.cmp(&orbit.words[b].0)).expect("nonempty");
    (Some(orbit.words[best].0.clone()), orbit.path_terms(best))
}

#[derive(Clone, Copy)]
enum Move {
    /// Exact: commutation or the braid relation.
    Exact,
    /// `g_a e_b g_a -> g_b e_a g_b` at a position.
    Geg { pos: usize, a: usize, b: usize },
}

struct Orbit {
    words: Vec<(BmwWord, Option<(usize, Move)>)>,
    seen: HashMap<BmwWord, usize>,
}

impl Orbit {
    fn new(w: BmwWord) -> Orbit {
        Orbit { seen: HashMap::from([(w.clone(), 0)]), words: vec![(w, None)] }
    }

    fn visit(&mut self, u: BmwWord, parent: usize, mv: Move) {
        if !self.seen.contains_key(&u) {
            self.seen.insert(u.clone(), self.words.len());
            self.words.push((u, Some((parent, mv))));
        }
    }

    /// Shorter terms `E` with `start = words[idx] + E`.
    fn path_terms(&self, mut idx: usize) -> Terms {
        let mut out = Vec::new();
        while let Some((parent, mv)) = self.words[idx].1 {
            if let Move::Geg { pos, a, b } = mv {
                out.extend(geg_error(&self.words[parent].0, pos, a, b));
            }
            idx = parent;
        }
        out
    }
}

/// `g_a e_b g_a - g_b e_a g_b = -m(e_b g_a - e_a g_b + g_a e_b - g_b e_a) - m^2(e_b - e_a)`.
fn geg_error(w: &BmwWord, pos: usize, a: usize, b: usize) -> Terms {
    let m = Scalar::m();
    let m2 = m.mul(&m);
    let (ga, gb, ea, eb) = (Letter::g(a), Letter::g(b), Letter::e(a), Letter::e(b));
    let parts: [(&[Letter], Scalar); 6] = [
        (&[eb, ga], m.neg()),
        (&[ea, gb], m.clone()),
        (&[ga, eb], m.neg()),
        (&[gb, ea], m.clone()),
        (&[eb], m2.neg()),
        (&[ea], m2),
    ];
    parts.into_iter().map(|(mid, c)| (w.splice(pos, 3, mid), c)).collect()
}

fn moves(rs: &RootSystem, w: &BmwWord) -> Vec<(BmwWord, Move)> {
    let l = &w.0;
    let mut out = Vec::new();
    for p in 0..l.len().saturating_sub(1) {
        let (x, y) = (l[p], l[p + 1]);
        if x.node != y.node && !rs.adjacent(x.node, y.node) {
            out.push((w.splice(p, 2, &[y, x]), Move::Exact));
        }
    }
    for p in 0..l.len().saturating_sub(2) {
        let (x, y, z) = (l[p], l[p + 1], l[p + 2]);
        if x != z || x.kind != LetterKind::G || !rs.adjacent(x.node, y.node) {
            continue;
        }
        let (a, b) = (x.node, y.node);
        match y.kind {
            LetterKind::G => out.push((w.splice(p, 3, &[Letter::g(b), Letter::g(a), Letter::g(b)]), Move::Exact)),
            LetterKind::E => {
                out.push((w.splice(p, 3, &[Letter::g(b), Letter::e(a), Letter::g(b)]), Move::Geg { pos: p, a, b }))
            }
            LetterKind::GInv => {}
        }
    }
    out
}

/// The first shortening rule that applies, as the terms replacing `w`.
fn find_redex(rs: &RootSystem, w: &BmwWord) -> Option<Terms> {
    use LetterKind::{E, G};
    let l = &w.0;
    let m = Scalar::m();
    let li = Scalar::l_inv();
    for p in 0..l.len() {
        if p + 1 < l.len() && l[p].node == l[p + 1].node {
            let i = l[p].node;
            let at = |mid: &[Letter]| w.splice(p, 2, mid);
            let terms = match (l[p].kind, l[p + 1].kind) {
                (G, G) => vec![(at(&[]), Scalar::one()), (at(&[Letter::g(i)]), m.neg()), (at(&[Letter::e(i)]), m.mul(&li))],
                (G, E) | (E, G) => vec![(at(&[Letter::e(i)]), li.clone())],
                (E, E) => vec![(at(&[Letter::e(i)]), Scalar::x_value())],
                _ => continue,
            };
            return Some(terms);
        }
        if p + 2 < l.len() && l[p].node == l[p + 2].node && rs.adjacent(l[p].node, l[p + 1].node) {
            let (i, j) = (l[p].node, l[p + 1].node);
            let at = |mid: &[Letter]| w.splice(p, 3, mid);
            let (ei, ej, gj) = (Letter::e(i), Letter::e(j), Letter::g(j));
            let terms = match (l[p].kind, l[p + 1].kind, l[p + 2].kind) {
                (G, G, E) => vec![(at(&[ej, ei]), Scalar::one())],
                (E, G, G) => vec![(at(&[ei, ej]), Scalar::one())],
                (E, G, E) => vec![(at(&[ei]), Scalar::l())],
                (E, E, E) => vec![(at(&[ei]), Scalar::one())],
                (G, E, E) => vec![(at(&[gj, ei]), Scalar::one()), (at(&[ei]), m.clone()), (at(&[ej, ei]), m.neg())],
                (E, E, G) => vec![(at(&[ei, gj]), Scalar::one()), (at(&[ei]), m.clone()), (at(&[ei, ej]), m.neg())],
                _ => continue,
            };
            return Some(terms);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordalg::parse_word;

    fn red(rs: &RootSystem, s: &str) -> WordCombination {
        reduce_word(rs, &parse_word(s, rs).unwrap())
    }

    fn comb(rs: &RootSystem, terms: &[(&str, Scalar)]) -> WordCombination {
        WordCombination::from_terms(terms.iter().map(|(s, c)| (parse_word(s, rs).unwrap(), c.clone())))
    }

    #[test]
    fn quadratic() {
        let rs = RootSystem::from_name("A2").unwrap();
        let want = comb(&rs, &[("", Scalar::one()), ("g1", Scalar::m().neg()), ("e1", Scalar::m().mul(&Scalar::l_inv()))]);
        assert_eq!(red(&rs, "g1 g1"), want);
    }

    #[test]
    fn e_rules() {
        let rs = RootSystem::from_name("A2").unwrap();
        assert_eq!(red(&rs, "e1 e2 e1"), comb(&rs, &[("e1", Scalar::one())]));
        assert_eq!(red(&rs, "e1 e1"), comb(&rs, &[("e1", Scalar::x_value())]));
        assert_eq!(red(&rs, "g2 e2"), comb(&rs, &[("e2", Scalar::l_inv())]));
    }

    #[test]
    fn inverse_expands() {
        let rs = RootSystem::from_name("A2").unwrap();
        let want = comb(&rs, &[("g1", Scalar::one()), ("", Scalar::m()), ("e1", Scalar::m().neg())]);
        assert_eq!(red(&rs, "G1"), want);
    }

    #[test]
    fn braid_orbit_is_canonicalized() {
        let rs = RootSystem::from_name("A2").unwrap();
        assert_eq!(red(&rs, "g2 g1 g2"), comb(&rs, &[("g1 g2 g1", Scalar::one())]));
        let rs = RootSystem::from_name("A3").unwrap();
        assert_eq!(red(&rs, "e3 e1"), comb(&rs, &[("e1 e3", Scalar::one())]));
    }

    #[test]
    fn hidden_square_is_found() {
        let rs = RootSystem::from_name("A3").unwrap();
        // g1 g3 g1 = g1 g1 g3 after a commutation
        let c = red(&rs, "g1 g3 g1");
        assert!(c.max_len() <= 2, "{c}");
    }
}
