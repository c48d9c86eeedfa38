//! Exact linear algebra: sparse reduced echelon forms and small dense matrices.

use std::collections::BTreeMap;

use crate::field::{Field, Scalar};

/// Sparse vector as sorted `(index, nonzero value)` pairs.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize, field: Field) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a + c * b`
pub fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

fn entry(v: &SparseVec, col: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&col, |(i, _)| *i).ok().map(|k| &v[k].1)
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    comb: SparseVec,
}

/// Incrementally maintained fully reduced row echelon form.
///
/// Each inserted generator gets an index; every stored row remembers which
/// combination of generators produced it, so membership queries can return
/// coordinates with respect to the inserted (independent) generators.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: Vec<Row>,
    pivot_of: BTreeMap<usize, usize>,
    generators: usize,
    track: bool,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            pivot_of: BTreeMap::new(),
            generators: 0,
            track: false,
        }
    }

    /// Same as [`Echelon::new`] but records generator combinations.
    pub fn tracking(field: Field) -> Self {
        Echelon {
            track: true,
            ..Echelon::new(field)
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_of.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of.contains_key(&col)
    }

    /// Reduced row having its pivot at `col`.
    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_of.get(&col).map(|&r| &self.rows[r].vec)
    }

    fn reduce_full(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut out = v.clone();
        let mut comb = Vec::new();
        for (col, x) in v.iter() {
            if let Some(&r) = self.pivot_of.get(col) {
                // rows are fully reduced, so later pivots of `v` are untouched
                let cur = match entry(&out, *col) {
                    Some(c) => c.clone(),
                    None => continue,
                };
                let _ = x;
                let neg = -&cur;
                out = axpy(&out, &neg, &self.rows[r].vec);
                if self.track {
                    comb = axpy(&comb, &neg, &self.rows[r].comb);
                }
            }
        }
        (out, comb)
    }

    /// Remainder of `v` modulo the current row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_full(v).0
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns true when it enlarged the span. Every call
    /// consumes one generator index, independent or not.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let gen = self.generators;
        self.generators += 1;
        let (mut red, mut comb) = self.reduce_full(v);
        if red.is_empty() {
            return false;
        }
        if self.track {
            comb = axpy(&comb, &self.field.one(), &vec![(gen, self.field.one())]);
        }
        let (pcol, lead) = red[0].clone();
        let inv = lead.inv().expect("nonzero lead");
        red = scale(&red, &inv);
        if self.track {
            comb = scale(&comb, &inv);
        }
        for row in self.rows.iter_mut() {
            if let Some(c) = entry(&row.vec, pcol) {
                let neg = -c;
                row.vec = axpy(&row.vec, &neg, &red);
                if self.track {
                    row.comb = axpy(&row.comb, &neg, &comb);
                }
            }
        }
        self.pivot_of.insert(pcol, self.rows.len());
        self.rows.push(Row { vec: red, comb });
        true
    }

    /// Coordinates of `v` in terms of the inserted generators, when `v` lies
    /// in the span. Requires tracking.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.track, "coordinates need a tracking echelon");
        let (red, comb) = self.reduce_full(v);
        if !red.is_empty() {
            return None;
        }
        Some(scale(&comb, &self.field.from_i64(-1)))
    }

    /// Basis of the null space `{x : row · x = 0 for every row}` over `ncols` columns.
    pub fn null_space(&self, ncols: usize) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for free in 0..ncols {
            if self.pivot_of.contains_key(&free) {
                continue;
            }
            let mut v: SparseVec = vec![(free, self.field.one())];
            for (&pc, &r) in self.pivot_of.iter() {
                if let Some(c) = entry(&self.rows[r].vec, free) {
                    v.push((pc, -c));
                }
            }
            v.sort_by_key(|(i, _)| *i);
            out.push(v);
        }
        out
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.iter().map(|r| &r.vec)
    }
}

/// Null space of the system with the given sparse equation rows.
pub fn kernel(field: Field, rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.null_space(ncols)
}

/// Small dense matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: usize, cols: usize, vals: Vec<Vec<Scalar>>) -> Self {
        let mut m = Mat::zeros(field, rows, cols);
        for (i, r) in vals.into_iter().enumerate() {
            for (j, x) in r.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &Mat, field: Field) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self, field: Field) -> Mat {
        let mut t = Mat::zeros(field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn row_echelon(&self, field: Field) -> Echelon {
        let mut e = Echelon::new(field);
        for i in 0..self.rows {
            e.insert(&sparse_from_dense(self.row(i)));
        }
        e
    }

    pub fn rank(&self, field: Field) -> usize {
        self.row_echelon(field).rank()
    }

    /// Basis of `{x : self · x = 0}` as column vectors.
    pub fn kernel(&self, field: Field) -> Vec<Vec<Scalar>> {
        self.row_echelon(field)
            .null_space(self.cols)
            .iter()
            .map(|v| sparse_to_dense(v, self.cols, field))
            .collect()
    }

    pub fn inverse(&self, field: Field) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut e = Echelon::tracking(field);
        for i in 0..n {
            e.insert(&sparse_from_dense(self.row(i)));
        }
        if e.rank() < n {
            return None;
        }
        // row j of the inverse expresses the unit vector e_j in the rows of self
        let mut inv = Mat::zeros(field, n, n);
        for j in 0..n {
            let c = e.coordinates(&vec![(j, field.one())])?;
            for (i, x) in c {
                inv.set(j, i, x);
            }
        }
        Some(inv)
    }
}
