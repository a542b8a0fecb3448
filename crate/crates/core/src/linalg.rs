//! Sparse exact linear algebra over the rationals.
//!
//! Elimination runs on primitive integer rows: every rational input row is
//! cleared of denominators, and after each elimination step the row is
//! divided by the gcd of its entries. No rational arithmetic happens inside
//! the elimination loop. Pivots are always chosen by smallest column index, so
//! echelon forms, kernels and decompositions are deterministic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Sparse vector: `(index, value)` pairs sorted by index, no zero values.
pub type SparseVec = Vec<(usize, Rational)>;

type IntRow = Vec<(usize, BigInt)>;

/// Bijection between keys and column (or row) indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis<K: Ord + Clone> {
    keys: Vec<K>,
    index: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Basis<K> {
    pub fn new(keys: impl IntoIterator<Item = K>) -> Self {
        let mut b = Basis { keys: Vec::new(), index: BTreeMap::new() };
        for k in keys {
            b.insert(k);
        }
        b
    }

    /// Index of `k`, appending it if new.
    pub fn insert(&mut self, k: K) -> usize {
        if let Some(&i) = self.index.get(&k) {
            return i;
        }
        let i = self.keys.len();
        self.keys.push(k.clone());
        self.index.insert(k, i);
        i
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }
}

/// Row-major sparse rational matrix.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        let mut m = SparseMatrix::new(ncols);
        for r in rows {
            m.push_row(r);
        }
        m
    }

    /// Builds the matrix whose `c`-th column is `columns[c]`.
    pub fn from_columns(nrows: usize, columns: &[SparseVec]) -> Self {
        let mut rows: Vec<SparseVec> = (0..nrows).map(|_| Vec::new()).collect();
        for (c, col) in columns.iter().enumerate() {
            for (r, x) in col {
                rows[*r].push((c, x.clone()));
            }
        }
        SparseMatrix { ncols: columns.len(), rows }
    }

    /// Dense constructor, mostly for tests.
    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .map(|(c, x)| (c, Rational::from_integer(BigInt::from(*x))))
                    .collect()
            })
            .collect();
        SparseMatrix { ncols, rows }
    }

    pub fn push_row(&mut self, mut row: SparseVec) {
        row.retain(|(_, x)| !x.is_zero());
        row.sort_by_key(|e| e.0);
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        self.rows.push(row);
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn mul_vec(&self, x: &SparseVec) -> SparseVec {
        let dense: BTreeMap<usize, &Rational> = x.iter().map(|(i, v)| (*i, v)).collect();
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = Rational::zero();
            for (c, a) in row {
                if let Some(v) = dense.get(c) {
                    acc += a * *v;
                }
            }
            if !acc.is_zero() {
                out.push((r, acc));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for r in &self.rows {
            e.insert(r);
        }
        e.rank()
    }

    /// Reduced row echelon form: `(pivot column, row)` pairs with each row
    /// scaled so its pivot entry is 1.
    pub fn rref(&self) -> Vec<(usize, SparseVec)> {
        let mut e = Echelon::new();
        for r in &self.rows {
            e.insert(r);
        }
        e.reduced()
            .into_iter()
            .map(|(lead, row)| {
                let p = Rational::from_integer(row[0].1.clone());
                (lead, row.into_iter().map(|(c, x)| (c, Rational::from_integer(x) / &p)).collect())
            })
            .collect()
    }

    /// Exact basis of `{x : Mx = 0}`, one vector per non-pivot column in
    /// increasing column order, with a 1 in that column.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new();
        for r in &self.rows {
            e.insert(r);
        }
        let reduced = e.reduced();
        let mut is_pivot = alloc::vec![false; self.ncols];
        for (lead, _) in &reduced {
            is_pivot[*lead] = true;
        }
        let mut by_free: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (lead, row) in &reduced {
            let p = &row[0].1;
            for (c, x) in &row[1..] {
                by_free.entry(*c).or_default().push((*lead, -Rational::new(x.clone(), p.clone())));
            }
        }
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|c| !is_pivot[*c]) {
            let mut v = by_free.remove(&f).unwrap_or_default();
            v.push((f, Rational::one()));
            v.sort_by_key(|e| e.0);
            out.push(v);
        }
        out
    }
}

/// Incremental row echelon form over primitive integer rows.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, row: &SparseVec) -> bool {
        let r = reduce_leading(to_int_row(row), &self.pivots, usize::MAX);
        match r.first() {
            Some(&(lead, _)) => {
                self.pivots.insert(lead, r);
                true
            }
            None => false,
        }
    }

    /// `true` if `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &SparseVec) -> bool {
        reduce_leading(to_int_row(row), &self.pivots, usize::MAX).is_empty()
    }

    /// Fully reduced rows, keyed by pivot column in increasing order.
    fn reduced(self) -> Vec<(usize, IntRow)> {
        let mut done: BTreeMap<usize, IntRow> = BTreeMap::new();
        for (lead, mut row) in self.pivots.into_iter().rev() {
            let mut pos = 1;
            while pos < row.len() {
                let c = row[pos].0;
                if let Some(p) = done.get(&c) {
                    row = eliminate(&row, p, c);
                    // entries before `c` are untouched by the elimination
                    pos = row.partition_point(|e| e.0 < c);
                } else {
                    pos += 1;
                }
            }
            done.insert(lead, row);
        }
        done.into_iter().collect()
    }
}

/// Repeated span-membership queries against a fixed list of vectors.
///
/// Each basis vector `b_i` is augmented by a tag column so that a successful
/// reduction of a query vector records its decomposition.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    data_dim: usize,
    count: usize,
    pivots: BTreeMap<usize, IntRow>,
}

impl SpanSolver {
    pub fn new(basis: &[SparseVec]) -> Self {
        let data_dim = basis.iter().filter_map(|b| b.last().map(|e| e.0 + 1)).max().unwrap_or(0);
        let mut pivots = BTreeMap::new();
        for (i, b) in basis.iter().enumerate() {
            let mut row = b.clone();
            row.push((data_dim + i, Rational::one()));
            let r = reduce_leading(to_int_row(&row), &pivots, data_dim);
            if let Some(&(lead, _)) = r.first() {
                if lead < data_dim {
                    pivots.insert(lead, r);
                }
            }
        }
        SpanSolver { data_dim, count: basis.len(), pivots }
    }

    /// Dimension of the span of the basis vectors.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Coefficients `c` with `v = Σ c_i b_i`, or `None` if `v` is not in the
    /// span.
    pub fn solve(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        if v.iter().any(|(c, x)| *c >= self.data_dim && !x.is_zero()) {
            return None;
        }
        let tag = self.data_dim + self.count;
        let mut row = v.clone();
        row.push((tag, Rational::one()));
        let r = reduce_leading(to_int_row(&row), &self.pivots, self.data_dim);
        if r.first().is_some_and(|e| e.0 < self.data_dim) {
            return None;
        }
        let scale = &r.iter().find(|e| e.0 == tag).expect("query tag survives elimination").1;
        let mut coeffs = alloc::vec![Rational::zero(); self.count];
        for (c, x) in &r {
            if *c < tag {
                coeffs[*c - self.data_dim] = -Rational::new(x.clone(), scale.clone());
            }
        }
        Some(coeffs)
    }
}

/// Decomposes `v` over `basis`; `None` certifies that `v` is not in the span.
pub fn span_membership(v: &SparseVec, basis: &[SparseVec]) -> Option<Vec<Rational>> {
    SpanSolver::new(basis).solve(v)
}

/// Rank of a list of sparse vectors.
pub fn rank_of(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

fn to_int_row(row: &SparseVec) -> IntRow {
    let mut den = BigInt::one();
    for (_, x) in row {
        den = den.lcm(x.denom());
    }
    let mut out: IntRow = row
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (*c, x.numer() * (&den / x.denom())))
        .collect();
    out.sort_by_key(|e| e.0);
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut IntRow) {
    let Some(first) = row.first() else { return };
    let negate = first.1.is_negative();
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if g.is_one() && !negate {
        return;
    }
    if negate {
        g = -g;
    }
    for (_, x) in row.iter_mut() {
        *x /= &g;
    }
}

/// `(p/g)·target - (t/g)·pivot`, where `t`, `p` are the entries of `target`
/// and `pivot` at `col` and `g = gcd(t, p)`; the result vanishes at `col`.
fn eliminate(target: &IntRow, pivot: &IntRow, col: usize) -> IntRow {
    let t = &target.iter().find(|e| e.0 == col).expect("target has entry at col").1;
    let p = &pivot.iter().find(|e| e.0 == col).expect("pivot has entry at col").1;
    let g = t.gcd(p);
    let a = p / &g;
    let b = t / &g;
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ci = target.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, &a * &target[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&b * &pivot[j].1)));
            j += 1;
        } else {
            let x = &a * &target[i].1 - &b * &pivot[j].1;
            if !x.is_zero() {
                out.push((ci, x));
            }
            i += 1;
            j += 1;
        }
    }
    make_primitive(&mut out);
    out
}

/// Clears leading entries against existing pivots until the lead is a new
/// pivot column, lies at or beyond `limit`, or the row vanishes.
fn reduce_leading(mut row: IntRow, pivots: &BTreeMap<usize, IntRow>, limit: usize) -> IntRow {
    while let Some(&(c, _)) = row.first() {
        if c >= limit {
            break;
        }
        match pivots.get(&c) {
            Some(p) => row = eliminate(&row, p, c),
            None => break,
        }
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(a: i64) -> Rational {
        Rational::from_integer(BigInt::from(a))
    }

    fn qq(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn rank_one_nullspace() {
        let m = SparseMatrix::from_dense(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.nullspace(), vec![vec![(0, q(-1)), (1, q(1))]]);
    }

    #[test]
    fn identity_has_trivial_nullspace() {
        let m = SparseMatrix::from_dense(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(m.nullspace().is_empty());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn zero_matrix_nullspace_is_everything() {
        let m = SparseMatrix::new(3);
        assert_eq!(m.nullspace().len(), 3);
    }

    #[test]
    fn rref_has_unit_pivots() {
        let m = SparseMatrix::from_dense(&[vec![2, 4, 6], vec![1, 3, 5]]);
        let r = m.rref();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0], (0, vec![(0, q(1)), (2, q(-1))]));
        assert_eq!(r[1], (1, vec![(1, q(1)), (2, q(2))]));
    }

    #[test]
    fn membership_decomposes() {
        let b1 = vec![(0, q(1)), (2, q(1))];
        let b2 = vec![(1, q(1)), (2, q(-1))];
        let v = vec![(0, q(1)), (1, q(2)), (2, q(-1))];
        assert_eq!(span_membership(&v, &[b1.clone(), b2.clone()]), Some(vec![q(1), q(2)]));
        assert_eq!(span_membership(&vec![], &[b1.clone(), b2.clone()]), Some(vec![q(0), q(0)]));
        let w = vec![(0, q(1))];
        assert_eq!(span_membership(&w, &[b1, b2]), None);
    }

    #[test]
    fn membership_with_fractions() {
        let b = vec![vec![(0, q(3)), (1, q(6))]];
        let v = vec![(0, q(1)), (1, q(2))];
        assert_eq!(span_membership(&v, &b), Some(vec![qq(1, 3)]));
        let outside = vec![(5, q(1))];
        assert_eq!(span_membership(&outside, &b), None);
    }

    #[test]
    fn from_columns_transposes() {
        let cols = vec![vec![(0, q(1)), (2, q(3))], vec![(1, q(2))]];
        let m = SparseMatrix::from_columns(3, &cols);
        assert_eq!(m.ncols(), 2);
        assert_eq!(m.rows()[2], vec![(0, q(3))]);
    }
}
