//! Relation checks on an assembled representation.

use std::collections::BTreeMap;
use std::fmt::Debug;

use rayon::prelude::*;

use crate::lkrep::{step3_alternatives, CoeffAlgebra, LkModel, RepMatrix};
use crate::ring::Ring;
use crate::rootsys::{Node, RootSystem};

use super::{CheckResult, Suite};

type Job<'a> = Box<dyn Fn() -> CheckResult + Send + Sync + 'a>;

fn cell_witness<E: Ring + Debug>(rs: &RootSystem, m: &RepMatrix<E>) -> Option<String> {
    m.first_nonzero().map(|(r, c, v)| {
        format!("residual at row {} (x_{}) column {} (x_{}): {:?}", r, rs.root(r), c, rs.root(c), v)
    })
}

fn matrix_eq<E: Ring + Debug>(rs: &RootSystem, name: String, lhs: RepMatrix<E>, rhs: RepMatrix<E>) -> CheckResult {
    let diff = lhs.sub(&rhs);
    CheckResult::from_witness(name, cell_witness(rs, &diff))
}

fn elem_eq<E: Ring + Debug>(lhs: &E, rhs: &E) -> Option<String> {
    let d = lhs.minus(rhs);
    (!d.is_zero()).then(|| format!("{lhs:?} != {rhs:?}"))
}

/// Collects the first failure among many element comparisons.
struct Cases {
    name: String,
    failure: Option<String>,
    count: usize,
}

impl Cases {
    fn new(name: impl Into<String>) -> Cases {
        Cases { name: name.into(), failure: None, count: 0 }
    }

    fn check<E: Ring + Debug>(&mut self, ctx: impl FnOnce() -> String, lhs: &E, rhs: &E) {
        self.count += 1;
        if self.failure.is_none() {
            if let Some(w) = elem_eq(lhs, rhs) {
                self.failure = Some(format!("{}: {w}", ctx()));
            }
        }
    }

    fn fail(&mut self, msg: String) {
        self.count += 1;
        if self.failure.is_none() {
            self.failure = Some(msg);
        }
    }

    fn done(self) -> CheckResult {
        let mut r = CheckResult::from_witness(self.name, self.failure);
        r.instances = self.count;
        r
    }
}

fn pairs(rs: &RootSystem) -> Vec<(Node, Node)> {
    let mut v = Vec::new();
    for i in rs.nodes() {
        for j in rs.nodes() {
            if i < j {
                v.push((i, j));
            }
        }
    }
    v
}

fn braid_jobs<'a, A: CoeffAlgebra>(lk: &'a LkModel<A>, tau: bool) -> Vec<Job<'a>>
where
    A::Elem: Send + Sync,
{
    let rs = lk.root_system();
    let (prefix, letter) = if tau { ("tau_monoid", "t") } else { ("braid", "g") };
    let get = move |i: Node| if tau { lk.tau(i) } else { lk.sigma(i) };
    pairs(rs)
        .into_iter()
        .map(|(i, j)| -> Job<'a> {
            Box::new(move || {
                let rs = lk.root_system();
                let (a, b) = (get(i), get(j));
                if rs.adjacent(i, j) {
                    let name = format!("{prefix}/B1 {letter}{i}{letter}{j}{letter}{i}={letter}{j}{letter}{i}{letter}{j}");
                    matrix_eq(rs, name, a.mul(b).mul(a), b.mul(a).mul(b))
                } else {
                    let name = format!("{prefix}/B2 {letter}{i}{letter}{j}={letter}{j}{letter}{i}");
                    matrix_eq(rs, name, a.mul(b), b.mul(a))
                }
            })
        })
        .collect()
}

fn essential_jobs<'a, A: CoeffAlgebra>(lk: &'a LkModel<A>) -> Vec<Job<'a>>
where
    A::Elem: Send + Sync,
{
    let rs = lk.root_system();
    let mut jobs: Vec<Job<'a>> = Vec::new();
    for i in rs.nodes() {
        jobs.push(Box::new(move || {
            let (g, e) = (lk.sigma(i), lk.e(i));
            let lhs = g.mul(e);
            let rhs = e.scale_left(lk.l_inv());
            let name = format!("essential/R1 g{i}e{i}=l^-1e{i}");
            matrix_eq(lk.root_system(), name, lhs, rhs)
        }));
        jobs.push(Box::new(move || {
            let (g, e) = (lk.sigma(i), lk.e(i));
            let name = format!("essential/R1 e{i}g{i}=l^-1e{i}");
            matrix_eq(lk.root_system(), name, e.mul(g), e.scale_left(lk.l_inv()))
        }));
        jobs.push(Box::new(move || {
            let e = lk.e(i);
            let name = format!("essential/e{i}^2=xe{i}");
            matrix_eq(lk.root_system(), name, e.mul(e), e.scale_left(lk.x()))
        }));
        jobs.push(Box::new(move || {
            let g = lk.sigma(i);
            let id = lk.identity();
            let quad = g.mul(g).add(&g.scale_left(lk.m())).sub(id);
            let lin = g.sub(&RepMatrix::diagonal(id.dim(), lk.l_inv()));
            let name = format!("essential/cubic g{i}");
            matrix_eq(lk.root_system(), name, quad.mul(&lin), RepMatrix::zero(id.dim()))
        }));
        jobs.push(Box::new(move || {
            let g = lk.sigma(i);
            let gi = lk.sigma_inv(i);
            let name = format!("essential/inverse g{i}G{i}=G{i}g{i}=1");
            let rs = lk.root_system();
            let a = matrix_eq(rs, name.clone(), g.mul(&gi), lk.identity().clone());
            if a.passed() {
                matrix_eq(rs, name, gi.mul(g), lk.identity().clone())
            } else {
                a
            }
        }));
        jobs.push(Box::new(move || {
            // m e_i = l (g_i^2 + m g_i - 1)
            let name = format!("essential/D1 me{i}=l(g{i}^2+mg{i}-1)");
            matrix_eq(lk.root_system(), name, lk.e(i).scale_left(lk.m()), lk.f(i).scale_left(lk.l()))
        }));
    }
    for i in rs.nodes() {
        for j in rs.nodes() {
            if !rs.adjacent(i, j) {
                continue;
            }
            jobs.push(Box::new(move || {
                let (ei, gj) = (lk.e(i), lk.sigma(j));
                let name = format!("essential/R2 e{i}g{j}e{i}=le{i}");
                matrix_eq(lk.root_system(), name, ei.mul(gj).mul(ei), ei.scale_left(lk.l()))
            }));
            jobs.push(Box::new(move || {
                let ei = lk.e(i);
                let name = format!("essential/cross e{i}G{j}e{i}=l^-1e{i}");
                matrix_eq(lk.root_system(), name, ei.mul(&lk.sigma_inv(j)).mul(ei), ei.scale_left(lk.l_inv()))
            }));
            jobs.push(Box::new(move || iji_identities(lk, i, j)));
        }
    }
    for (i, j) in pairs(rs) {
        if rs.adjacent(i, j) {
            continue;
        }
        jobs.push(Box::new(move || {
            let name = format!("essential/e{i}e{j}=0");
            matrix_eq(lk.root_system(), name, lk.e(i).mul(lk.e(j)), RepMatrix::zero(lk.dim()))
        }));
        jobs.push(Box::new(move || {
            let name = format!("essential/commute e{i}g{j}=g{j}e{i}");
            let rs = lk.root_system();
            let a = matrix_eq(rs, name.clone(), lk.e(i).mul(lk.sigma(j)), lk.sigma(j).mul(lk.e(i)));
            if !a.passed() {
                return a;
            }
            let b = matrix_eq(rs, name.clone(), lk.e(j).mul(lk.sigma(i)), lk.sigma(i).mul(lk.e(j)));
            if !b.passed() {
                return b;
            }
            matrix_eq(rs, name, lk.e(i).mul(lk.e(j)), lk.e(j).mul(lk.e(i)))
        }));
    }
    jobs
}

/// The identities that hold for adjacent `i`, `j`.
fn iji_identities<A: CoeffAlgebra>(lk: &LkModel<A>, i: Node, j: Node) -> CheckResult {
    let rs = lk.root_system();
    let (gi, gj, ei, ej) = (lk.sigma(i), lk.sigma(j), lk.e(i), lk.e(j));
    let gi_inv = lk.sigma_inv(i);
    let m = lk.m();
    let m2 = m.times(m);
    let name = format!("essential/iji g{i} g{j} e{i} e{j}");
    let eiej = ei.mul(ej);
    let ejei = ej.mul(ei);
    let cases: Vec<(&str, RepMatrix<A::Elem>, RepMatrix<A::Elem>)> = vec![
        ("g_j g_i e_j = e_i e_j", gj.mul(gi).mul(ej), eiej.clone()),
        ("e_i g_j g_i = e_i e_j", ei.mul(gj).mul(gi), eiej.clone()),
        ("g_j e_i g_j = g_i^-1 e_j g_i^-1", gj.mul(ei).mul(gj), gi_inv.mul(ej).mul(&gi_inv)),
        ("g_j e_i g_j = g_i e_j g_i + m(...) + m^2(e_j - e_i)", gj.mul(ei).mul(gj), {
            let t = ej.mul(gi).sub(&ei.mul(gj)).add(&gi.mul(ej)).sub(&gj.mul(ei));
            gi.mul(ej).mul(gi).add(&t.scale_left(m)).add(&ej.sub(ei).scale_left(&m2))
        }),
        ("e_j e_i g_j = e_j g_i^-1", ej.mul(ei).mul(gj), ej.mul(&gi_inv)),
        ("e_j g_i^-1 = e_j g_i + m(e_j - e_j e_i)", ej.mul(&gi_inv), ej.mul(gi).add(&ej.sub(&ejei).scale_left(m))),
        ("g_j e_i e_j = g_i^-1 e_j", gj.mul(ei).mul(ej), gi_inv.mul(ej)),
        ("g_i^-1 e_j = g_i e_j + m(e_j - e_i e_j)", gi_inv.mul(ej), gi.mul(ej).add(&ej.sub(&eiej).scale_left(m))),
        ("e_i e_j e_i = e_i", eiej.mul(ei), ei.clone()),
    ];
    for (label, lhs, rhs) in cases {
        let r = matrix_eq(rs, format!("{name}: {label}"), lhs, rhs);
        if !r.passed() {
            return CheckResult::fail(name, r.witness.unwrap_or_default());
        }
    }
    CheckResult::pass(name)
}

fn eiproj_jobs<'a, A: CoeffAlgebra>(lk: &'a LkModel<A>) -> Vec<Job<'a>>
where
    A::Elem: Send + Sync,
{
    let rs = lk.root_system();
    let mut jobs: Vec<Job<'a>> = Vec::new();
    for i in rs.nodes() {
        jobs.push(Box::new(move || {
            let rs = lk.root_system();
            let alg = lk.algebra();
            let ai = rs.simple_index(i);
            let f = lk.f(i);
            let (m, li) = (lk.m(), lk.l_inv());
            let mut cases = Cases::new(format!("eiproj/f{i} column values"));
            for b in 0..rs.num_positive() {
                let beta = rs.root(b);
                let t = lk.t(i, b);
                let want = match rs.pairing_simple(i, b) {
                    2 => li.times(li).plus(&m.times(li)).minus(&alg.one()),
                    0 => {
                        let h = alg.generator(rs.h_beta_i(beta, i).expect("pairing zero"));
                        li.times(t).times(&h.plus(m).plus(li))
                    }
                    -1 => {
                        let up = rs.index_of(&beta.add(&rs.simple(i))).expect("root");
                        li.times(&lk.t(i, up).plus(&li.times(t)))
                    }
                    _ => {
                        let down = rs.index_of(&beta.sub(&rs.simple(i))).expect("root");
                        li.times(&lk.t(i, down).plus(&m.plus(li).times(t)))
                    }
                };
                let got = f.get(ai, b).cloned().unwrap_or_else(|| alg.zero());
                cases.check(|| format!("i={i} beta={beta}"), &got, &want);
            }
            cases.done()
        }));
        jobs.push(Box::new(move || {
            let rs = lk.root_system();
            let ai = rs.simple_index(i);
            let mut cases = Cases::new(format!("eiproj/f{i} image in row x_alpha{i}"));
            for b in 0..rs.num_positive() {
                for (r, v) in lk.f(i).column(b) {
                    if *r != ai {
                        cases.fail(format!("row {} column {}: {v:?}", rs.root(*r), rs.root(b)));
                    }
                }
                cases.count += 1;
            }
            cases.done()
        }));
    }
    jobs
}

fn table1_jobs<'a, A: CoeffAlgebra>(lk: &'a LkModel<A>, symbolic: Option<&'a crate::lkrep::Z0Coeffs>) -> Vec<Job<'a>>
where
    A::Elem: Send + Sync,
{
    let rs = lk.root_system();
    let mut jobs: Vec<Job<'a>> = Vec::new();
    for i in rs.nodes() {
        jobs.push(Box::new(move || table_rows(lk, i)));
        jobs.push(Box::new(move || step3_crosscheck(lk, i)));
    }
    if let Some(z) = symbolic {
        jobs.push(Box::new(move || h_oracle(z)));
        jobs.push(Box::new(move || {
            let mut cases = Cases::new("table1/T l-free");
            for i in lk.root_system().nodes() {
                for b in 0..lk.dim() {
                    cases.count += 1;
                    if !lk.algebra().is_l_free(lk.t(i, b)) {
                        cases.fail(format!("T_{{{i},{}}} = {:?}", lk.root_system().root(b), lk.t(i, b)));
                    }
                }
            }
            cases.done()
        }));
    }
    jobs
}

fn table_rows<A: CoeffAlgebra>(lk: &LkModel<A>, i: Node) -> CheckResult {
    let rs = lk.root_system();
    let alg = lk.algebra();
    let m = lk.m();
    let mut cases = Cases::new(format!("table1/rows for i={i}"));
    let idx = |r: &crate::rootsys::Root| rs.index_of(r);
    let h = |b: usize, j: Node| alg.generator(rs.h_beta_i(rs.root(b), j).expect("pairing zero"));
    let h_inv = |b: usize, j: Node| alg.generator_inv(rs.h_beta_i(rs.root(b), j).expect("pairing zero")).expect("scalar map");
    let ai = rs.simple(i);
    let ai_idx = rs.simple_index(i);
    for j in rs.nodes() {
        let aj_idx = rs.simple_index(j);
        if i == j {
            cases.check(|| format!("row 2 i={i}"), lk.t(i, aj_idx), &alg.one());
        } else {
            cases.check(|| format!("row 1 i={i} j={j}"), lk.t(i, aj_idx), &alg.zero());
        }
        if rs.adjacent(i, j) {
            let b = idx(&ai.add(&rs.simple(j))).expect("root");
            cases.check(|| format!("row 3 i={i} j={j}"), lk.t(i, b), m);
        }
    }
    for b in 0..rs.num_positive() {
        let beta = rs.root(b);
        let pi = rs.pairing_simple(i, b);
        for j in rs.nodes() {
            let pj = rs.pairing_simple(j, b);
            let ctx = |row: u8| move || format!("row {row} i={i} j={j} beta={beta}");
            if pj == 1 && rs.orthogonal_nodes(i, j) {
                let lower = idx(&beta.sub(&rs.simple(j))).expect("root");
                cases.check(ctx(4), lk.t(i, b), &h_inv(ai_idx, j).times(lk.t(i, lower)));
            }
            if !rs.adjacent(i, j) {
                if pi == 0 && rs.orthogonal_nodes(i, j) {
                    // T_{j,beta} h_{beta,i} = h_{alpha_j,i} T_{j,beta}
                    let lhs = lk.t(j, b).times(&h(b, i));
                    let rhs = h(rs.simple_index(j), i).times(lk.t(j, b));
                    cases.check(|| format!("commuting T/h i={i} j={j} beta={beta}"), &lhs, &rhs);
                }
                continue;
            }
            if pi == 0 && pj == 1 {
                let bj = idx(&beta.sub(&rs.simple(j))).expect("root");
                let rhs = match idx(&beta.sub(&rs.simple(j)).sub(&ai)) {
                    Some(bij) => lk.t(j, bij).plus(&m.times(lk.t(i, bj))),
                    None => m.times(lk.t(i, bj)),
                };
                cases.check(ctx(5), lk.t(i, b), &rhs);
            }
            if pi == -1 && pj == 1 {
                let bj = idx(&beta.sub(&rs.simple(j))).expect("root");
                let rhs = lk.t(j, bj).times(&h(bj, i)).plus(&m.times(lk.t(i, bj)));
                cases.check(ctx(6), lk.t(i, b), &rhs);
            }
            if pi == 1 && pj == 0 {
                if let Some(bi) = idx(&beta.sub(&ai)) {
                    let rhs = lk.t(j, bi).times(&h_inv(b, j));
                    cases.check(ctx(7), lk.t(i, b), &rhs);
                }
            }
            if pi == 0 && pj == 0 {
                let lhs = lk.t(i, b).times(&h(b, j));
                let rhs = lk.t(j, b).times(&h(b, i));
                cases.check(|| format!("T h symmetry i={i} j={j} beta={beta}"), &lhs, &rhs);
            }
        }
    }
    cases.done()
}

/// Where `(alpha_i, beta) = 1`, compares the closed form with every
/// applicable recursion.
fn step3_crosscheck<A: CoeffAlgebra>(lk: &LkModel<A>, i: Node) -> CheckResult {
    let rs = lk.root_system();
    let alg = lk.algebra();
    let mut cases = Cases::new(format!("table1/closed form vs recursions i={i}"));
    for b in 0..rs.num_positive() {
        if rs.pairing_simple(i, b) != 1 || rs.root(b).height() < 3 {
            continue;
        }
        let alts = match step3_alternatives(alg, lk.t_table(), i, b) {
            Ok(a) => a,
            Err(e) => {
                cases.fail(format!("beta={}: {e}", rs.root(b)));
                continue;
            }
        };
        if alts.is_empty() {
            cases.fail(format!("beta={}: no recursion applies", rs.root(b)));
        }
        for (label, v) in &alts {
            cases.check(|| format!("beta={} via {label}", rs.root(b)), lk.t(i, b), v);
        }
    }
    cases.done()
}

/// `h_{beta,i}` against the projection of `d_beta^{-1} s_i d_beta` computed
/// in the Hecke algebra of the full type.
pub(crate) fn h_oracle(z: &crate::lkrep::Z0Coeffs) -> CheckResult {
    let rs = z.root_system();
    let mut cases = Cases::new("table1/h recursion vs full-type oracle");
    for b in 0..rs.num_positive() {
        let beta = rs.root(b);
        let d = rs.d_beta(beta).expect("root");
        for i in rs.nodes() {
            if rs.pairing_simple(i, b) != 0 {
                continue;
            }
            let mut word: Vec<(Node, bool)> = d.iter().rev().map(|&s| (s, false)).collect();
            word.push((i, true));
            word.extend(d.iter().map(|&s| (s, true)));
            let got = z.full().eval_signed_word(&word).and_then(|v| v.project(z.z0()));
            match got {
                Ok(v) => {
                    let want = z.generator(rs.h_beta_i(beta, i).expect("pairing zero"));
                    cases.check(|| format!("beta={beta} i={i}"), &v, &want);
                }
                Err(e) => cases.fail(format!("beta={beta} i={i}: {e}")),
            }
        }
    }
    cases.done()
}

fn zaction_jobs<'a, A: CoeffAlgebra>(lk: &'a LkModel<A>) -> Vec<Job<'a>>
where
    A::Elem: Send + Sync,
{
    let rs = lk.root_system();
    let mut jobs: Vec<Job<'a>> = Vec::new();
    for i in rs.nodes() {
        jobs.push(Box::new(move || {
            let rs = lk.root_system();
            let mut cases = Cases::new(format!("zaction/path words carry x_alpha{i}"));
            let xi = unit_vector(lk, rs.simple_index(i));
            for k in rs.nodes() {
                let got = lk.sigma_word(&rs.path_word(i, k)).apply(&xi);
                let want = unit_vector(lk, rs.simple_index(k));
                cases.count += 1;
                if got != want {
                    cases.fail(format!("path {i}->{k}: {got:?}"));
                }
            }
            cases.done()
        }));
        jobs.push(Box::new(move || {
            let rs = lk.root_system();
            let alg = lk.algebra();
            let ai = rs.simple_index(i);
            let mut cases = Cases::new(format!("zaction/Z_{i} acts on x_alpha{i} through Z_0"));
            let xi = unit_vector(lk, ai);
            let exi = lk.e(i).apply(&xi);
            cases.check(|| format!("e{i} x_alpha{i} = x x_alpha{i}"), &vec_of(&exi, ai, alg), lk.x());
            cases.count += 1;
            if exi.len() > 1 {
                cases.fail(format!("e{i} x_alpha{i} leaves the line: {exi:?}"));
            }
            for j in rs.nodes() {
                for k in rs.nodes() {
                    if !rs.orthogonal_nodes(j, k) {
                        continue;
                    }
                    let there = lk.sigma_word(&rs.path_word(i, k));
                    let back = lk.sigma_word(&rs.path_word(k, i));
                    let v = back.apply(&lk.sigma(j).apply(&there.apply(&exi)));
                    let h = alg.generator(rs.h_beta_i(&rs.simple(k), j).expect("orthogonal"));
                    let want = lk.x().times(&h);
                    cases.count += 1;
                    if v.len() > 1 || v.keys().any(|&r| r != ai) {
                        cases.fail(format!("j={j} k={k}: result leaves the line"));
                    }
                    cases.check(|| format!("j={j} k={k}"), &vec_of(&v, ai, alg), &want);
                }
            }
            cases.done()
        }));
    }
    jobs
}

fn unit_vector<A: CoeffAlgebra>(lk: &LkModel<A>, b: usize) -> BTreeMap<usize, A::Elem> {
    BTreeMap::from([(b, lk.algebra().one())])
}

fn vec_of<A: CoeffAlgebra>(v: &BTreeMap<usize, A::Elem>, b: usize, alg: &A) -> A::Elem {
    v.get(&b).cloned().unwrap_or_else(|| alg.zero())
}

/// Runs one suite on a built model. `symbolic` enables the checks that only
/// make sense over `Z_0` itself.
pub(crate) fn run_checks<A: CoeffAlgebra>(
    lk: &LkModel<A>,
    suite: Suite,
    symbolic: Option<&crate::lkrep::Z0Coeffs>,
) -> Vec<CheckResult>
where
    A::Elem: Send + Sync,
{
    let mut jobs: Vec<Job<'_>> = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Braid) {
        jobs.extend(braid_jobs(lk, false));
    }
    if want(Suite::TauMonoid) {
        jobs.extend(braid_jobs(lk, true));
    }
    if want(Suite::Essential) {
        jobs.extend(essential_jobs(lk));
    }
    if want(Suite::Eiproj) {
        jobs.extend(eiproj_jobs(lk));
    }
    if want(Suite::Table1) {
        jobs.extend(table1_jobs(lk, symbolic));
    }
    if want(Suite::Zaction) {
        jobs.extend(zaction_jobs(lk));
    }
    let mut out: Vec<CheckResult> = jobs.par_iter().map(|j| j()).collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}
