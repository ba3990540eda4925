use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::Gf2Vector;
use crate::error::{Error, Result};

/// A dense matrix over GF(2), stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf2Vector>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u8>>,
}

impl TryFrom<MatrixRepr> for Gf2Matrix {
    type Error = Error;
    fn try_from(r: MatrixRepr) -> Result<Self> {
        if r.rows == 0 || r.cols == 0 {
            return Err(Error::Malformed("matrix needs rows, cols >= 1".into()));
        }
        if r.data.len() != r.rows || r.data.iter().any(|row| row.len() != r.cols) {
            return Err(Error::Malformed(format!(
                "data does not have shape {}x{}",
                r.rows, r.cols
            )));
        }
        Gf2Matrix::from_rows(&r.data)
    }
}

impl From<Gf2Matrix> for MatrixRepr {
    fn from(m: Gf2Matrix) -> Self {
        MatrixRepr {
            rows: m.rows,
            cols: m.cols,
            data: m.to_rows(),
        }
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            data: vec![Gf2Vector::zero(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Gf2Matrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| Gf2Vector::unit(n, i)).collect(),
        }
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let data = rows
            .iter()
            .map(|r| Gf2Vector::from_bits(r.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_row_vectors(data)
    }

    pub fn from_row_vectors(data: Vec<Gf2Vector>) -> Result<Self> {
        let cols = data.first().map_or(0, Gf2Vector::dim);
        if data.iter().any(|r| r.dim() != cols) {
            return Err(Error::Malformed("rows have different lengths".into()));
        }
        Ok(Gf2Matrix {
            rows: data.len(),
            cols,
            data,
        })
    }

    /// The matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Gf2Vector]) -> Result<Self> {
        let rows = columns.first().map_or(0, Gf2Vector::dim);
        if columns.iter().any(|c| c.dim() != rows) {
            return Err(Error::Malformed("columns have different lengths".into()));
        }
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in c.support() {
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value)
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        let mut c = Gf2Vector::zero(self.rows);
        for i in 0..self.rows {
            if self.get(i, j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn columns(&self) -> Vec<Gf2Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.data.iter().map(Gf2Vector::bits).collect()
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.support() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = Gf2Vector::zero(rhs.cols);
                for k in row.support() {
                    acc.xor_assign(&rhs.data[k]);
                }
                acc
            })
            .collect();
        Ok(Gf2Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &Gf2Vector) -> Result<Gf2Vector> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} matrix to vector of dim {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        let mut out = Gf2Vector::zero(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Gf2Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// `self − Id` (equal to `self + Id` over GF(2)).
    pub fn minus_identity(&self) -> Gf2Matrix {
        assert!(self.is_square(), "minus_identity needs a square matrix");
        let mut m = self.clone();
        for i in 0..self.rows {
            m.data[i].flip(i);
        }
        m
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    /// Inverse by Gauss–Jordan elimination; `None` if singular or not square.
    pub fn inverse(&self) -> Option<Gf2Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r].get(col))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r].get(col) {
                    let (pa, pi) = (a[col].clone(), inv[col].clone());
                    a[r].xor_assign(&pa);
                    inv[r].xor_assign(&pi);
                }
            }
        }
        Some(Gf2Matrix {
            rows: n,
            cols: n,
            data: inv,
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Row rank over GF(2) by forward elimination; the pivot for each column is the
/// lowest-index remaining row with a one there.
pub fn rank(m: &Gf2Matrix) -> usize {
    let mut rows = m.data.clone();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Matrix product over GF(2).
pub fn mat_mul(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<Gf2Matrix> {
    a.mul(b)
}

impl Mul for &Gf2Matrix {
    type Output = Gf2Matrix;

    /// Panics on a dimension mismatch; use [`Gf2Matrix::mul`] to get an error.
    fn mul(self, rhs: &Gf2Matrix) -> Gf2Matrix {
        Gf2Matrix::mul(self, rhs).expect("matrix dimensions do not match")
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.data).finish()
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.bits().iter().map(u8::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> Gf2Matrix {
        Gf2Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Gf2Matrix::identity(3)), 3);
        assert_eq!(rank(&Gf2Matrix::zeros(4, 4)), 0);
        assert_eq!(rank(&m(&[&[1, 1], &[1, 1]])), 1);
        assert_eq!(rank(&m(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])), 2);
    }

    #[test]
    fn mat_mul_examples() {
        let x = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(mat_mul(&Gf2Matrix::identity(2), &x).unwrap(), x);
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(&swap * &swap, Gf2Matrix::identity(2));
        let u = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(&u * &u, Gf2Matrix::identity(2));
    }

    #[test]
    fn mat_mul_dimension_mismatch() {
        let a = Gf2Matrix::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn mul_vec_matches_columns() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(a.mul_vec(&Gf2Vector::unit(3, 1)).unwrap(), a.column(1));
        assert_eq!(Gf2Matrix::from_columns(&a.columns()).unwrap(), a);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn json_shape() {
        let a = m(&[&[1, 0], &[1, 1]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"rows":2,"cols":2,"data":[[1,0],[1,1]]}"#);
        assert_eq!(serde_json::from_str::<Gf2Matrix>(&s).unwrap(), a);
        assert!(
            serde_json::from_str::<Gf2Matrix>(r#"{"rows":2,"cols":2,"data":[[1,0]]}"#).is_err()
        );
        assert!(serde_json::from_str::<Gf2Matrix>(r#"{"rows":1,"cols":1,"data":[[3]]}"#).is_err());
    }
}
