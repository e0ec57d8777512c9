//! The dimension of `B(A_2)`.
//!
//! `B/I_1` is the Hecke algebra of order 6 and `I_1/I_2` acts faithfully
//! through a 3x3 matrix representation over the ground ring, and `I_2 = 0`
//! here. So 15 monomials whose images are independent, together with
//! closure of their span under the generators, give dimension exactly 15.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::lkrep::rank_q;
use crate::rootsys::{DynkinType, Family, WeylElement};
use crate::scalar::Q;
use crate::wordalg::{parse_word, reduce, BmwWord, Letter, RepImage, WordCombination, WordModel};

use super::{default_points, CheckResult, SuiteReport};

/// The 15 spanning monomials.
pub const A2_MONOMIALS: [&str; 15] = [
    "1", "g1", "g2", "e1", "e2", "g1 g2", "g1 e2", "g2 g1", "g2 e1", "e1 g2", "e1 e2", "e2 g1", "e2 e1", "g1 g2 g1",
    "g1 e2 g1",
];

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Coord {
    Hecke(WeylElement),
    Lk(usize, usize, WeylElement),
}

/// Coordinates of an image at a rational point.
fn coords(img: &RepImage, l: &Q, m: &Q) -> Result<BTreeMap<Coord, Q>> {
    let mut out = BTreeMap::new();
    for (w, c) in img.hecke.terms() {
        out.insert(Coord::Hecke(w.clone()), c.eval_at(l, m)?);
    }
    for col in 0..img.lk.dim() {
        for (row, e) in img.lk.column(col) {
            for (w, c) in e.terms() {
                out.insert(Coord::Lk(*row, col, w.clone()), c.eval_at(l, m)?);
            }
        }
    }
    Ok(out)
}

/// Rank of images of several combinations at a rational point.
pub fn image_rank(wm: &WordModel, combos: &[WordCombination], l: &Q, m: &Q) -> Result<usize> {
    let vecs = combos.iter().map(|c| coords(&wm.rep_image(c)?, l, m)).collect::<Result<Vec<_>>>()?;
    let keys: BTreeSet<&Coord> = vecs.iter().flat_map(|v| v.keys()).collect();
    let rows: Vec<Vec<Q>> =
        vecs.iter().map(|v| keys.iter().map(|k| v.get(*k).cloned().unwrap_or_else(Q::zero)).collect()).collect();
    Ok(rank_q(&rows))
}

fn generators() -> Vec<Letter> {
    vec![Letter::g(1), Letter::g(2), Letter::e(1), Letter::e(2)]
}

pub fn a2_dimension_check() -> Result<SuiteReport> {
    let start = std::time::Instant::now();
    let wm = WordModel::build(DynkinType::new(Family::A, 2)?)?;
    let rs = wm.root_system().clone();
    let basis: Vec<BmwWord> = A2_MONOMIALS.iter().map(|s| parse_word(s, &rs)).collect::<Result<_>>()?;
    let basis_set: BTreeSet<&BmwWord> = basis.iter().collect();
    let basis_c: Vec<WordCombination> = basis.iter().cloned().map(WordCombination::word).collect();
    let p = &default_points()[0];
    let (l, m) = (p.l.clone(), p.m());
    let mut checks = Vec::new();

    let rank = image_rank(&wm, &basis_c, &l, &m)?;
    checks.push(CheckResult::from_witness(
        "a2/rank of the 15 monomial images",
        (rank != 15).then(|| format!("rank {rank} at {p}")),
    ));

    let shorter: Vec<WordCombination> = basis_c.iter().filter(|c| c.max_len() < 3).cloned().collect();
    let target = WordCombination::word(parse_word("g1 e2 g1", &rs)?);
    let mut with = shorter.clone();
    with.push(target);
    let (r0, r1) = (image_rank(&wm, &shorter, &l, &m)?, image_rank(&wm, &with, &l, &m)?);
    checks.push(CheckResult::from_witness(
        "a2/g1 e2 g1 independent of the 13 shorter monomials",
        (r0 != 13 || r1 != 14).then(|| format!("ranks {r0} and {r1}")),
    ));

    // closure: generator times monomial, on either side, reduces into the span
    let mut closure = Cases::new("a2/generator products reduce into the span");
    let mut sound = Cases::new("a2/reductions preserve images");
    for b in &basis {
        for g in generators() {
            let gw = BmwWord(vec![g]);
            for prod in [gw.concat(b), b.concat(&gw)] {
                let red = reduce(&rs, &WordCombination::word(prod.clone()));
                closure.count += 1;
                if let Some(w) = red.terms().keys().find(|w| !basis_set.contains(w)) {
                    closure.fail(format!("{prod} reduces to {red}, which uses {w}"));
                }
                sound.count += 1;
                if wm.rep_word(&prod)? != wm.rep_image(&red)? {
                    sound.fail(format!("{prod} -> {red}"));
                }
            }
        }
    }
    checks.push(closure.done());
    checks.push(sound.done());

    // every length 4 word keeps the rank at 15
    let mut len4 = Cases::new("a2/length-4 words lie in the span");
    let gens = generators();
    for k in 0..gens.len().pow(4) {
        let w = BmwWord((0..4).map(|d| gens[(k / gens.len().pow(d)) % gens.len()]).collect());
        let mut all = basis_c.clone();
        all.push(WordCombination::word(w.clone()));
        let r = image_rank(&wm, &all, &l, &m)?;
        len4.count += 1;
        if r != 15 {
            len4.fail(format!("{w} raises the rank to {r}"));
        }
    }
    checks.push(len4.done());

    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let mut report = SuiteReport::new("a2_dimension", "A2", format!("specialized({p}) for ranks, generic otherwise"), checks);
    report.wall_time = start.elapsed();
    Ok(report)
}

struct Cases {
    name: &'static str,
    count: usize,
    failure: Option<String>,
}

impl Cases {
    fn new(name: &'static str) -> Cases {
        Cases { name, count: 0, failure: None }
    }

    fn fail(&mut self, msg: String) {
        self.failure.get_or_insert(msg);
    }

    fn done(self) -> CheckResult {
        let mut r = CheckResult::from_witness(self.name, self.failure);
        r.instances = self.count;
        r
    }
}
