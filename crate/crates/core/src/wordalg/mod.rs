//! Words in the generators `g_i`, `g_i^-1` and `e_i`, linear combinations
//! of them, a length-reducing rewriting procedure, and evaluation in the
//! Hecke quotient and the Lawrence-Krammer representation.

mod image;
mod rewrite;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use image::{RepImage, WordModel};
pub use rewrite::{reduce, reduce_word, ORBIT_LIMIT};

use crate::error::{Error, Result};
use crate::rootsys::{Node, RootSystem};
use crate::scalar::Scalar;

/// Letter kinds, in the order used to compare words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    G,
    E,
    GInv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub node: Node,
    pub kind: LetterKind,
}

impl Letter {
    pub fn g(node: Node) -> Letter {
        Letter { node, kind: LetterKind::G }
    }
    pub fn g_inv(node: Node) -> Letter {
        Letter { node, kind: LetterKind::GInv }
    }
    pub fn e(node: Node) -> Letter {
        Letter { node, kind: LetterKind::E }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            LetterKind::G => 'g',
            LetterKind::GInv => 'G',
            LetterKind::E => 'e',
        };
        write!(f, "{c}{}", self.node)
    }
}

/// A word, ordered by length first and then letter by letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BmwWord(pub Vec<Letter>);

impl BmwWord {
    pub fn empty() -> BmwWord {
        BmwWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &BmwWord) -> BmwWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        BmwWord(v)
    }

    /// Replaces `len` letters at `pos` by `mid`.
    pub fn splice(&self, pos: usize, len: usize, mid: &[Letter]) -> BmwWord {
        let mut v = Vec::with_capacity(self.0.len() + mid.len() - len);
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(mid);
        v.extend_from_slice(&self.0[pos + len..]);
        BmwWord(v)
    }

    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        self.0.iter().try_for_each(|l| rs.check_node(l.node))
    }
}

impl Ord for BmwWord {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for BmwWord {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for BmwWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated `g<i>`, `G<i>`, `e<i>`. An empty string or a
/// lone `1` is the empty word. Positions in errors are byte offsets.
pub fn parse_word(text: &str, rs: &RootSystem) -> Result<BmwWord> {
    let mut letters = Vec::new();
    let mut offset = 0;
    let trimmed = text.trim();
    if trimmed == "1" {
        return Ok(BmwWord::empty());
    }
    for tok in text.split_whitespace() {
        let position = offset + text[offset..].find(tok).expect("token comes from the text");
        offset = position + tok.len();
        let bad = |reason: String| Error::Parse { position, token: tok.to_string(), reason };
        let mut chars = tok.chars();
        let kind = match chars.next() {
            Some('g') => LetterKind::G,
            Some('G') => LetterKind::GInv,
            Some('e') => LetterKind::E,
            _ => return Err(bad("expected g<i>, G<i> or e<i>".into())),
        };
        let node: Node = chars.as_str().parse().map_err(|_| bad("missing or malformed node number".into()))?;
        if node == 0 || node > rs.rank() {
            return Err(bad(format!("node must be between 1 and {}", rs.rank())));
        }
        letters.push(Letter { node, kind });
    }
    Ok(BmwWord(letters))
}

/// A finite linear combination of words with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WordCombination {
    terms: BTreeMap<BmwWord, Scalar>,
}

impl WordCombination {
    pub fn zero() -> Self {
        WordCombination::default()
    }

    pub fn word(w: BmwWord) -> Self {
        WordCombination { terms: BTreeMap::from([(w, Scalar::one())]) }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BmwWord, Scalar)>) -> Self {
        let mut c = WordCombination::zero();
        for (w, s) in terms {
            c.add_term(w, &s);
        }
        c
    }

    pub fn add_term(&mut self, w: BmwWord, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> &BTreeMap<BmwWord, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(BmwWord::len).max().unwrap_or(0)
    }

    pub fn coeff(&self, w: &BmwWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        WordCombination::from_terms(self.terms.iter().map(|(w, s)| (w.clone(), s.mul(c))))
    }

    /// Concatenation product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = WordCombination::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.concat(b), &x.mul(y));
            }
        }
        out
    }
}

impl fmt::Display for WordCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: String,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct CombinationJson {
    terms: Vec<TermJson>,
}

impl Serialize for WordCombination {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CombinationJson {
            terms: self.terms.iter().map(|(w, c)| TermJson { word: w.to_string(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl WordCombination {
    /// Reads the JSON form back; nodes are checked against `rs`.
    pub fn from_json(v: &serde_json::Value, rs: &RootSystem) -> Result<WordCombination> {
        let raw: CombinationJson = serde_json::from_value(v.clone())?;
        let mut out = WordCombination::zero();
        for t in raw.terms {
            out.add_term(parse_word(&t.word, rs)?, &t.coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::from_name("A2").unwrap()
    }

    #[test]
    fn parse_examples() {
        let rs = a2();
        let w = parse_word("g1 g2 e1", &rs).unwrap();
        assert_eq!(w.0, vec![Letter::g(1), Letter::g(2), Letter::e(1)]);
        assert_eq!(parse_word("G2", &rs).unwrap().0, vec![Letter::g_inv(2)]);
        assert!(parse_word("", &rs).unwrap().is_empty());
        assert!(parse_word("1", &rs).unwrap().is_empty());
    }

    #[test]
    fn parse_errors_carry_position() {
        let rs = a2();
        match parse_word("g1 g9", &rs) {
            Err(Error::Parse { position, token, .. }) => {
                assert_eq!(position, 3);
                assert_eq!(token, "g9");
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_word("x1", &rs).is_err());
        assert!(parse_word("g", &rs).is_err());
        assert!(parse_word("e0", &rs).is_err());
    }

    #[test]
    fn shortlex_order() {
        let rs = a2();
        let a = parse_word("e2", &rs).unwrap();
        let b = parse_word("g1 g1", &rs).unwrap();
        let c = parse_word("g1 e1", &rs).unwrap();
        assert!(a < b && b < c);
        assert!(parse_word("g1", &rs).unwrap() < parse_word("e1", &rs).unwrap());
        assert!(parse_word("e1", &rs).unwrap() < parse_word("G1", &rs).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let rs = a2();
        let c = WordCombination::from_terms([
            (parse_word("g1 e2", &rs).unwrap(), Scalar::m()),
            (BmwWord::empty(), Scalar::l_inv()),
        ]);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(WordCombination::from_json(&v, &rs).unwrap(), c);
        assert_eq!(c.to_string(), "(l^-1)*1 + (m)*g1 e2");
    }
}
