//! The coefficients `T_{i,beta}`.
//!
//! Values are filled bottom-up in height order, so each recursion only
//! reads entries that are already final. Every entry is written once.

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::rootsys::{Node, RootSystem};
use crate::scalar::Scalar;

use super::CoeffAlgebra;

/// Signed word `d_{alpha_i}^{-1} s_beta^{-1} s_i s_beta d_beta`, whose
/// value times `m` is `T_{i,beta}` when `(alpha_i, beta) = 1`.
pub fn closed_form_word(rs: &RootSystem, i: Node, b: usize) -> Result<Vec<(Node, bool)>> {
    let beta = rs.root(b).clone();
    let d_ai = rs.d_beta(&rs.simple(i))?;
    let s_b = rs.s_beta_word(&beta)?;
    let d_b = rs.d_beta(&beta)?;
    let mut w: Vec<(Node, bool)> = Vec::new();
    w.extend(d_ai.iter().rev().map(|&s| (s, false)));
    w.extend(s_b.iter().rev().map(|&s| (s, false)));
    w.push((i, true));
    w.extend(s_b.iter().map(|&s| (s, true)));
    w.extend(d_b.iter().map(|&s| (s, true)));
    Ok(w)
}

/// `h_{beta,i}` as an algebra element.
fn h_elem<A: CoeffAlgebra>(alg: &A, b: usize, i: Node) -> Result<A::Elem> {
    let rs = alg.root_system();
    Ok(alg.generator(rs.h_beta_i(rs.root(b), i)?))
}

fn h_inv_elem<A: CoeffAlgebra>(alg: &A, b: usize, i: Node) -> Result<A::Elem> {
    let rs = alg.root_system();
    alg.generator_inv(rs.h_beta_i(rs.root(b), i)?)
}

fn minus_simple(rs: &RootSystem, b: usize, js: &[Node]) -> usize {
    let mut r = rs.root(b).clone();
    for &j in js {
        r = r.sub(&rs.simple(j));
    }
    rs.index_of(&r).expect("difference is a positive root")
}

/// Candidate values of `T_{i,beta}` for `(alpha_i, beta) = 1`, height at
/// least 3, from the two recursions that apply in that case. Each entry is
/// labelled with the rule and auxiliary node used. `table` must already
/// hold all lower heights.
pub fn step3_alternatives<A: CoeffAlgebra>(
    alg: &A,
    table: &[Vec<A::Elem>],
    i: Node,
    b: usize,
) -> Result<Vec<(String, A::Elem)>> {
    let rs = alg.root_system();
    let mut out = Vec::new();
    for j in rs.nodes() {
        if rs.orthogonal_nodes(i, j) && rs.pairing_simple(j, b) == 1 {
            let h = h_inv_elem(alg, rs.simple_index(i), j)?;
            out.push((format!("orth j={j}"), h.times(&table[i - 1][minus_simple(rs, b, &[j])])));
        }
    }
    for &j in rs.neighbors(i) {
        if rs.pairing_simple(j, b) == 0 {
            let v = table[j - 1][minus_simple(rs, b, &[i])].times(&h_inv_elem(alg, b, j)?);
            out.push((format!("adj j={j}"), v));
        }
    }
    Ok(out)
}

fn step<A: CoeffAlgebra>(alg: &A, table: &[Vec<A::Elem>], i: Node, b: usize) -> Result<A::Elem> {
    let rs = alg.root_system();
    let beta = rs.root(b);
    if !beta.in_support(i) {
        return Ok(alg.zero());
    }
    match beta.height() {
        1 => return Ok(alg.one()),
        2 => return alg.from_scalar(&Scalar::m()),
        _ => {}
    }
    let m = alg.from_scalar(&Scalar::m())?;
    let p = rs.pairing_simple(i, b);
    if p == 1 {
        if let Some(v) = alg.closed_form(&closed_form_word(rs, i, b)?) {
            return Ok(m.times(&v?));
        }
        return step3_alternatives(alg, table, i, b)?
            .into_iter()
            .next()
            .map(|(_, v)| v)
            .ok_or_else(|| Error::Internal(format!("no recursion applies to T_{{{i},{beta}}}")));
    }
    if let Some(j) = rs.nodes().find(|&j| rs.orthogonal_nodes(i, j) && rs.pairing_simple(j, b) == 1) {
        let h = h_inv_elem(alg, rs.simple_index(i), j)?;
        return Ok(h.times(&table[i - 1][minus_simple(rs, b, &[j])]));
    }
    let j = *rs
        .neighbors(i)
        .iter()
        .find(|&&j| rs.pairing_simple(j, b) == 1)
        .ok_or_else(|| Error::Internal(format!("no admissible node for T_{{{i},{beta}}}")))?;
    let lower = m.times(&table[i - 1][minus_simple(rs, b, &[j])]);
    match p {
        0 => Ok(table[j - 1][minus_simple(rs, b, &[i, j])].plus(&lower)),
        -1 => {
            let bj = minus_simple(rs, b, &[j]);
            Ok(table[j - 1][bj].times(&h_elem(alg, bj, i)?).plus(&lower))
        }
        _ => Err(Error::Internal(format!("unexpected pairing {p}"))),
    }
}

/// All `T_{i,beta}`, indexed `[i-1][root index]`.
pub fn t_table<A: CoeffAlgebra>(alg: &A) -> Result<Vec<Vec<A::Elem>>> {
    let rs = alg.root_system();
    let n = rs.num_positive();
    let mut table: Vec<Vec<A::Elem>> = vec![Vec::with_capacity(n); rs.rank()];
    let mut b = 0;
    while b < n {
        // one height level at a time; entries of equal height never refer to
        // each other
        let h = rs.root(b).height();
        let mut end = b;
        while end < n && rs.root(end).height() == h {
            end += 1;
        }
        let level: Vec<Vec<A::Elem>> = (b..end)
            .map(|bb| rs.nodes().map(|i| step(alg, &table, i, bb)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        for row in level {
            for (k, v) in row.into_iter().enumerate() {
                table[k].push(v);
            }
        }
        b = end;
    }
    Ok(table)
}
