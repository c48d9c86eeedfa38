//! Matrices with entries in the algebra.
//!
//! Rows index source summands and columns index target summands, so the
//! entry `(r, c)` lies in `1_{v_r} Λ 1_{u_c}` and acts by right
//! multiplication. Composition "f then g" is the product `f · g`.

use crate::field::Scalar;
use crate::linalg::Mat;
use crate::pathalg::{Algebra, Elem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Elem>,
}

impl ElemMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ElemMat {
            rows,
            cols,
            data: vec![Vec::new(); rows * cols],
        }
    }

    pub fn identity(alg: &Algebra, vertices: &[usize]) -> Self {
        let n = vertices.len();
        let mut m = ElemMat::zeros(n, n);
        for (i, &v) in vertices.iter().enumerate() {
            m.set(i, i, alg.unit(v));
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        self.data[r * self.cols + c] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_empty())
    }

    pub fn mul(&self, other: &ElemMat, alg: &Algebra) -> ElemMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = ElemMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_empty() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_empty() {
                        continue;
                    }
                    let p = alg.mul(a, b);
                    if !p.is_empty() {
                        let s = alg.add(out.get(i, j), &p);
                        out.set(i, j, s);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ElemMat, alg: &Algebra) -> ElemMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ElemMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| alg.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &ElemMat, alg: &Algebra) -> ElemMat {
        self.add(&other.scaled(&alg.field.from_i64(-1), alg), alg)
    }

    pub fn scaled(&self, c: &Scalar, alg: &Algebra) -> ElemMat {
        ElemMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| alg.scale(a, c)).collect(),
        }
    }

    pub fn neg(&self, alg: &Algebra) -> ElemMat {
        self.scaled(&alg.field.from_i64(-1), alg)
    }

    /// Sub-matrix on the given rows and columns, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ElemMat {
        let mut out = ElemMat::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &ElemMat, b: &ElemMat, c: &ElemMat, d: &ElemMat) -> ElemMat {
        let (r1, c1) = (a.rows, a.cols);
        let rows = r1 + c.rows;
        let cols = c1 + b.cols;
        let mut out = ElemMat::zeros(rows, cols);
        for (m, ro, co) in [(a, 0, 0), (b, 0, c1), (c, r1, 0), (d, r1, c1)] {
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.set(ro + i, co + j, m.get(i, j).clone());
                }
            }
        }
        out
    }

    /// True when every entry lies in the radical.
    pub fn is_radical(&self, alg: &Algebra) -> bool {
        self.data.iter().all(|x| alg.is_radical(x))
    }

    /// Scalar matrix of coefficients at trivial paths; entries between
    /// different vertices are zero.
    pub fn top(&self, alg: &Algebra, row_vertices: &[usize], col_vertices: &[usize]) -> Mat {
        let mut m = Mat::zeros(alg.field, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if row_vertices[i] == col_vertices[j] {
                    m.set(i, j, alg.unit_coefficient(self.get(i, j), row_vertices[i]));
                }
            }
        }
        m
    }

    /// Inverse of a square matrix whose top is invertible.
    pub fn inverse(&self, alg: &Algebra, vertices: &[usize]) -> Option<ElemMat> {
        self.inverse_between(alg, vertices, vertices)
    }

    /// Inverse of a square matrix from summands `row_vertices` to summands
    /// `col_vertices`, when its top is invertible.
    pub fn inverse_between(&self, alg: &Algebra, row_vertices: &[usize], col_vertices: &[usize]) -> Option<ElemMat> {
        let n = self.rows;
        if self.cols != n {
            return None;
        }
        let top = self.top(alg, row_vertices, col_vertices);
        let tinv = top.inverse(alg.field)?;
        // the top only links equal vertices, and so does its inverse
        let mut lift = ElemMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let c = tinv.get(i, j);
                if !c.is_zero() {
                    lift.set(i, j, alg.scale(&alg.unit(col_vertices[i]), c));
                }
            }
        }
        // lift self = 1 + R with R radical, so self^{-1} = (Σ (-R)^k) lift
        let id = ElemMat::identity(alg, col_vertices);
        let r = lift.mul(self, alg).sub(&id, alg);
        let neg_r = r.neg(alg);
        let mut acc = id.clone();
        let mut pw = id;
        for _ in 0..=alg.bound() {
            pw = pw.mul(&neg_r, alg);
            if pw.is_zero() {
                break;
            }
            acc = acc.add(&pw, alg);
        }
        Some(acc.mul(&lift, alg))
    }
}
