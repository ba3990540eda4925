use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Sign;

/// A square matrix of arbitrary-precision integers.
///
/// Used for actions on rational homology, where only the sign of the
/// determinant matters and must be exact. The `0×0` matrix is allowed and has
/// determinant 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IntMatrixRepr", into = "IntMatrixRepr")]
pub struct IntMatrix {
    n: usize,
    data: Vec<Vec<BigInt>>,
}

#[derive(Serialize, Deserialize)]
struct IntMatrixRepr {
    rows: usize,
    cols: usize,
    data: Vec<Vec<String>>,
}

impl TryFrom<IntMatrixRepr> for IntMatrix {
    type Error = Error;
    fn try_from(r: IntMatrixRepr) -> Result<Self> {
        if r.rows != r.cols {
            return Err(Error::Malformed(format!(
                "integer matrix must be square, got {}x{}",
                r.rows, r.cols
            )));
        }
        if r.data.len() != r.rows || r.data.iter().any(|row| row.len() != r.cols) {
            return Err(Error::Malformed(format!(
                "data does not have shape {}x{}",
                r.rows, r.cols
            )));
        }
        let data = r
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| {
                        s.trim()
                            .parse::<BigInt>()
                            .map_err(|_| Error::Malformed(format!("not an integer: {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix { n: r.rows, data })
    }
}

impl From<IntMatrix> for IntMatrixRepr {
    fn from(m: IntMatrix) -> Self {
        IntMatrixRepr {
            rows: m.n,
            cols: m.n,
            data: m
                .data
                .iter()
                .map(|row| row.iter().map(BigInt::to_string).collect())
                .collect(),
        }
    }
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let data = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        IntMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("integer matrix must be square".into()));
        }
        Ok(IntMatrix { n, data: rows })
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.n, rhs.n
            )));
        }
        let n = self.n;
        let data = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.data[i][k] * &rhs.data[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(IntMatrix { n, data })
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    // Exact by Sylvester's identity.
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

/// Sign of the determinant, computed exactly.
pub fn det_sign(m: &IntMatrix) -> Result<Sign> {
    let det = m.determinant();
    if det.is_zero() {
        Err(Error::SingularMatrix)
    } else if det.is_negative() {
        Ok(Sign::Minus)
    } else {
        Ok(Sign::Plus)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.data).finish()
    }
}
