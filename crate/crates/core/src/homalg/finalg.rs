//! Finite-dimensional algebras given by structure constants.

use super::HomalgError;
use crate::field::{Field, Scalar};
use crate::linalg::{Mat, SparseVec};

#[derive(Clone, Debug)]
pub struct FinAlgebra {
    pub field: Field,
    /// `table[i][j]` is `e_i e_j` in the basis.
    pub table: Vec<Vec<SparseVec>>,
}

impl FinAlgebra {
    pub fn new(field: Field, table: Vec<Vec<SparseVec>>) -> Self {
        FinAlgebra { field, table }
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    fn coeff(&self, i: usize, j: usize, l: usize) -> Scalar {
        self.table[i][j]
            .iter()
            .find(|(k, _)| *k == l)
            .map(|(_, s)| s.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// The form `(x, y) ↦ tr(L_{xy})`.
    pub fn trace_form(&self) -> Mat {
        let n = self.dim();
        let traces: Vec<Scalar> = (0..n)
            .map(|l| (0..n).fold(self.field.zero(), |acc, k| &acc + &self.coeff(l, k, k)))
            .collect();
        let mut m = Mat::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                let v = self.table[i][j]
                    .iter()
                    .fold(self.field.zero(), |acc, (l, s)| &acc + &(s * &traces[*l]));
                m.set(i, j, v);
            }
        }
        m
    }

    /// Dimension of the algebra modulo its radical. The trace form only sees
    /// the radical reliably when the characteristic exceeds the dimension.
    pub fn semisimple_dim(&self) -> Result<usize, HomalgError> {
        let p = self.field.characteristic();
        if p != 0 && p as usize <= self.dim() {
            return Err(HomalgError::Characteristic {
                required: self.dim() + 1,
                p,
            });
        }
        Ok(self.trace_form().rank(self.field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_are_local() {
        let f = Field::Rational;
        let one = f.one();
        // basis 1, e with e^2 = 0
        let table = vec![
            vec![vec![(0, one.clone())], vec![(1, one.clone())]],
            vec![vec![(1, one)], vec![]],
        ];
        assert_eq!(FinAlgebra::new(f, table).semisimple_dim().unwrap(), 1);
    }

    #[test]
    fn product_of_fields_is_not_local() {
        let f = Field::Rational;
        let one = f.one();
        let table = vec![
            vec![vec![(0, one.clone())], vec![]],
            vec![vec![], vec![(1, one)]],
        ];
        assert_eq!(FinAlgebra::new(f, table).semisimple_dim().unwrap(), 2);
    }
}
