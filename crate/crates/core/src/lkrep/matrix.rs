//! Sparse column matrices over a noncommutative ring, and small dense
//! matrices over a commutative one.

use std::collections::BTreeMap;
use std::fmt;

use crate::ring::{Ring, RingConst};
use crate::scalar::Q;

/// Square matrix indexed by positive roots.
///
/// Column `b` lists the nonzero entries `(row, value)`; the operator sends
/// `x_b` to `sum_g x_g * entry[g][b]`, with coefficients on the right, so
/// products are ordinary matrix products with factors kept in order.
#[derive(Clone, PartialEq)]
pub struct RepMatrix<E> {
    n: usize,
    cols: Vec<BTreeMap<usize, E>>,
}

impl<E: Ring> RepMatrix<E> {
    pub fn zero(n: usize) -> Self {
        RepMatrix { n, cols: vec![BTreeMap::new(); n] }
    }

    pub fn identity(n: usize, one: &E) -> Self {
        let mut m = RepMatrix::zero(n);
        for k in 0..n {
            m.cols[k].insert(k, one.clone());
        }
        m
    }

    /// Scalar matrix `c * I`.
    pub fn diagonal(n: usize, c: &E) -> Self {
        let mut m = RepMatrix::zero(n);
        if !c.is_zero() {
            for k in 0..n {
                m.cols[k].insert(k, c.clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&E> {
        self.cols[col].get(&row)
    }

    pub fn column(&self, col: usize) -> &BTreeMap<usize, E> {
        &self.cols[col]
    }

    /// Adds `v` to entry `(row, col)`.
    pub fn add_entry(&mut self, row: usize, col: usize, v: E) {
        if v.is_zero() {
            return;
        }
        let c = &mut self.cols[col];
        match c.get_mut(&row) {
            Some(e) => {
                let s = e.plus(&v);
                if s.is_zero() {
                    c.remove(&row);
                } else {
                    *e = s;
                }
            }
            None => {
                c.insert(row, v);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (c, col) in o.cols.iter().enumerate() {
            for (r, v) in col {
                out.add_entry(*r, c, v.clone());
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        RepMatrix { n: self.n, cols: self.cols.iter().map(|c| c.iter().map(|(r, v)| (*r, v.negated())).collect()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Entrywise `c * entry`.
    pub fn scale_left(&self, c: &E) -> Self {
        let mut out = RepMatrix::zero(self.n);
        for (k, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out.add_entry(*r, k, c.times(v));
            }
        }
        out
    }

    /// Entrywise `entry * c`.
    pub fn scale_right(&self, c: &E) -> Self {
        let mut out = RepMatrix::zero(self.n);
        for (k, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out.add_entry(*r, k, v.times(c));
            }
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let cols = o
            .cols
            .iter()
            .map(|ocol| {
                let mut acc: BTreeMap<usize, E> = BTreeMap::new();
                for (g, b) in ocol {
                    for (d, a) in &self.cols[*g] {
                        let p = a.times(b);
                        if p.is_zero() {
                            continue;
                        }
                        match acc.get_mut(d) {
                            Some(e) => *e = e.plus(&p),
                            None => {
                                acc.insert(*d, p);
                            }
                        }
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                acc
            })
            .collect();
        RepMatrix { n: self.n, cols }
    }

    /// Product of several matrices, left to right.
    pub fn product<'a>(ms: impl IntoIterator<Item = &'a Self>) -> Option<Self>
    where
        E: 'a,
    {
        let mut it = ms.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| acc.mul(m)))
    }

    /// Applies the operator to a column vector given as `(row, value)` pairs.
    pub fn apply(&self, v: &BTreeMap<usize, E>) -> BTreeMap<usize, E> {
        let mut acc: BTreeMap<usize, E> = BTreeMap::new();
        for (g, b) in v {
            for (d, a) in &self.cols[*g] {
                let p = a.times(b);
                match acc.get_mut(d) {
                    Some(e) => *e = e.plus(&p),
                    None => {
                        acc.insert(*d, p);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    /// First nonzero cell `(row, col)` in column-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &E)> {
        self.cols.iter().enumerate().find_map(|(c, col)| col.iter().next().map(|(r, v)| (*r, c, v)))
    }

    pub fn map<F: Ring>(&self, f: impl Fn(&E) -> F) -> RepMatrix<F> {
        let mut out = RepMatrix::zero(self.n);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out.add_entry(*r, c, f(v));
            }
        }
        out
    }

    pub fn try_map<F: Ring, X>(&self, f: impl Fn(&E) -> Result<F, X>) -> Result<RepMatrix<F>, X> {
        let mut out = RepMatrix::zero(self.n);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out.add_entry(*r, c, f(v)?);
            }
        }
        Ok(out)
    }

    /// All entries in column-major order, `zero` filling the gaps.
    pub fn dense_entries(&self, zero: &E) -> Vec<E> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for col in &self.cols {
            for r in 0..self.n {
                out.push(col.get(&r).cloned().unwrap_or_else(|| zero.clone()));
            }
        }
        out
    }
}

impl<E: Ring + fmt::Display> fmt::Display for RepMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                writeln!(f, "[{r},{c}] {v}")?;
            }
        }
        Ok(())
    }
}

/// Dense matrix over a commutative ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: RingConst> DenseMatrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zero(n, n);
        for k in 0..n {
            m.data[k * n + k] = F::one();
        }
        m
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = DenseMatrix::zero(n, n);
        for k in 0..n {
            m.data[k * n + k] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        DenseMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn map<G: RingConst>(&self, f: impl Fn(&F) -> G) -> DenseMatrix<G> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<G: RingConst, X>(&self, f: impl Fn(&F) -> Result<G, X>) -> Result<DenseMatrix<G>, X> {
        let data = self.data.iter().map(f).collect::<Result<Vec<G>, X>>()?;
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &F) -> Self {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| c.times(v)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out: DenseMatrix<F> = DenseMatrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = out.data[idx].plus(&a.times(b));
                    }
                }
            }
        }
        out
    }

    fn zip(&self, o: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "dimension mismatch");
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect() }
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &DenseMatrix<F>) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }
}

impl<F: RingConst> Ring for DenseMatrix<F> {
    fn plus(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.plus(b))
    }
    fn minus(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.minus(b))
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negated(&self) -> Self {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(Ring::negated).collect() }
    }
    fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }
}

impl Ring for Q {
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        Q::is_zero(self)
    }
}

impl RingConst for Q {
    fn zero() -> Self {
        Q::zero()
    }
    fn one() -> Self {
        Q::one()
    }
}

/// Rank of a matrix over `Q` by Gaussian elimination.
pub fn rank_q(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for r in 0..m.len() {
            if r == rank || m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].div(&piv).expect("nonzero pivot");
            for k in c..ncols {
                let v = m[r][k].sub(&f.mul(&m[rank][k]));
                m[r][k] = v;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn sparse_product_matches_dense() {
        let mut a = RepMatrix::<Scalar>::zero(3);
        let mut b = RepMatrix::<Scalar>::zero(3);
        a.add_entry(0, 1, Scalar::m());
        a.add_entry(2, 0, Scalar::l());
        a.add_entry(1, 1, Scalar::from_int(2));
        b.add_entry(1, 2, Scalar::from_int(3));
        b.add_entry(0, 0, Scalar::l_inv());
        let p = a.mul(&b);
        assert_eq!(p.get(0, 2), Some(&Scalar::m().scale_q(&Q::from_int(3))));
        assert_eq!(p.get(2, 0), Some(&Scalar::one()));
        assert_eq!(p.get(1, 2), Some(&Scalar::from_int(6)));
        assert_eq!(p.nnz(), 3);
    }

    #[test]
    fn rank_of_small_matrices() {
        let q = |v: &[i64]| v.iter().map(|&x| Q::from_int(x)).collect::<Vec<_>>();
        assert_eq!(rank_q(&[q(&[1, 2]), q(&[2, 4])]), 1);
        assert_eq!(rank_q(&[q(&[1, 2, 3]), q(&[0, 1, 1]), q(&[1, 3, 5])]), 3);
    }
}
