//! Exact linear algebra over GF(2), and integer matrices for rational
//! homology actions.
//!
//! Vectors pack their entries into `u64` words. Matrices are row-major and act
//! on column vectors, so column `j` of a matrix is the image of the `j`-th
//! basis vector.

mod integer;
mod matrix;
mod vector;

pub use integer::{det_sign, IntMatrix};
pub use matrix::{mat_mul, rank, Gf2Matrix};
pub use vector::Gf2Vector;
