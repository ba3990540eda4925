//! H-forms on GF(2) vector spaces and their orthogonal groups.
//!
//! An H-form is a map `g: E → H = (½Z)/2Z` with
//! `g(x + y) = g(x) + g(y) + C(x, y)` for a non-degenerate symmetric bilinear
//! form `C`, taking at least one value `±½`. Values are stored in quarter
//! units, see [`HValue`].
//!
//! A form is given by a Gram matrix of `C` on some basis together with the
//! values of `g` on that basis; the basis need not be orthonormal.
//! [`HForm::orthonormalize`] produces a basis with `C(eᵢ, eⱼ) = δᵢⱼ`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// Largest dimension [`HForm::enumerate_group`] accepts.
pub const MAX_ENUMERATION_DIM: usize = 6;

/// An element of `H = (½Z)/2Z ≅ Z/4`, stored in quarter units:
/// `0 ↦ 0`, `½ ↦ 1`, `1 ↦ 2`, `−½ ↦ 3`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HValue(u8);

impl HValue {
    pub const ZERO: HValue = HValue(0);
    pub const HALF: HValue = HValue(1);
    pub const ONE: HValue = HValue(2);
    pub const MINUS_HALF: HValue = HValue(3);

    /// Reduces `q` mod 4.
    pub fn from_quarter_units(q: u8) -> Self {
        HValue(q % 4)
    }

    pub fn quarter_units(self) -> u8 {
        self.0
    }

    /// `±½`, i.e. not in the subgroup `Z/2 = {0, 1}`.
    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }

    /// The value `C(x, y) ∈ Z/2 ⊂ H`.
    pub fn from_z2(bit: bool) -> Self {
        if bit {
            HValue::ONE
        } else {
            HValue::ZERO
        }
    }
}

impl Add for HValue {
    type Output = HValue;
    fn add(self, rhs: HValue) -> HValue {
        HValue((self.0 + rhs.0) % 4)
    }
}

impl AddAssign for HValue {
    fn add_assign(&mut self, rhs: HValue) {
        *self = *self + rhs;
    }
}

impl Neg for HValue {
    type Output = HValue;
    fn neg(self) -> HValue {
        HValue((4 - self.0) % 4)
    }
}

impl Sum for HValue {
    fn sum<I: Iterator<Item = HValue>>(iter: I) -> HValue {
        iter.fold(HValue::ZERO, Add::add)
    }
}

impl fmt::Display for HValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1/2",
            2 => "1",
            _ => "-1/2",
        })
    }
}

impl fmt::Debug for HValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HValue({self})")
    }
}

impl Serialize for HValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.0)
    }
}

impl<'de> Deserialize<'de> for HValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let q = u8::deserialize(d)?;
        if q > 3 {
            return Err(serde::de::Error::custom(format!(
                "quarter units must be in 0..=3, got {q}"
            )));
        }
        Ok(HValue(q))
    }
}

/// The first condition an H-form candidate fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum Violation {
    Asymmetric { row: usize, col: usize },
    Degenerate { rank: usize },
    ParityMismatch { index: usize },
    NoOddVector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Asymmetric { row, col } => {
                write!(f, "asymmetric: gram[{row}][{col}] != gram[{col}][{row}]")
            }
            Violation::Degenerate { rank } => write!(f, "degenerate: gram has rank {rank}"),
            Violation::ParityMismatch { index } => write!(
                f,
                "parity mismatch: value on basis vector {index} must be odd iff gram[{index}][{index}] = 1"
            ),
            Violation::NoOddVector => write!(f, "no odd vector: the form is alternating"),
        }
    }
}

/// An H-form on `GF(2)^dim`, given on a stored basis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "HFormRepr", into = "HFormRepr")]
pub struct HForm {
    gram: Gf2Matrix,
    values: Vec<HValue>,
}

#[derive(Serialize, Deserialize)]
struct HFormRepr {
    dim: usize,
    gram: Vec<Vec<u8>>,
    values: Vec<HValue>,
}

impl TryFrom<HFormRepr> for HForm {
    type Error = Error;
    fn try_from(r: HFormRepr) -> Result<Self> {
        if r.gram.len() != r.dim || r.gram.iter().any(|row| row.len() != r.dim) {
            return Err(Error::Malformed(format!("gram is not {0}x{0}", r.dim)));
        }
        HForm::from_parts(Gf2Matrix::from_rows(&r.gram)?, r.values)
    }
}

impl From<HForm> for HFormRepr {
    fn from(g: HForm) -> Self {
        HFormRepr {
            dim: g.dim(),
            gram: g.gram.to_rows(),
            values: g.values,
        }
    }
}

/// An orthonormal basis of an H-form, with the change-of-basis matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthonormalBasis {
    /// `eᵢ` in stored-basis coordinates.
    pub vectors: Vec<Gf2Vector>,
    /// `dᵢ = g(eᵢ)`, each `±½`.
    pub values: Vec<HValue>,
    /// Columns are the `eᵢ`: maps orthonormal coordinates to stored ones.
    pub to_stored: Gf2Matrix,
    /// Inverse of `to_stored`.
    pub to_orthonormal: Gf2Matrix,
}

impl OrthonormalBasis {
    /// Rewrites a matrix given in stored coordinates in orthonormal ones.
    pub fn matrix_to_orthonormal(&self, m: &Gf2Matrix) -> Gf2Matrix {
        &(&self.to_orthonormal * m) * &self.to_stored
    }

    pub fn matrix_to_stored(&self, m: &Gf2Matrix) -> Gf2Matrix {
        &(&self.to_stored * m) * &self.to_orthonormal
    }

    pub fn vector_to_stored(&self, v: &Gf2Vector) -> Gf2Vector {
        self.to_stored
            .mul_vec(v)
            .expect("dimension checked by caller")
    }

    pub fn vector_to_orthonormal(&self, v: &Gf2Vector) -> Gf2Vector {
        self.to_orthonormal
            .mul_vec(v)
            .expect("dimension checked by caller")
    }
}

/// A transvection generator: `T_a(x) = x + C(x,a)a` or
/// `S_{a,b}(x) = x + C(x,b)a + C(x,a)b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Transvection {
    T { a: Gf2Vector },
    S { a: Gf2Vector, b: Gf2Vector },
}

impl Transvection {
    pub fn dim(&self) -> usize {
        match self {
            Transvection::T { a } | Transvection::S { a, .. } => a.dim(),
        }
    }

    pub fn is_s(&self) -> bool {
        matches!(self, Transvection::S { .. })
    }
}

impl HForm {
    /// Assembles a form after checking shapes only; see [`HForm::validate`].
    pub fn from_parts(gram: Gf2Matrix, values: Vec<HValue>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Malformed("gram must be square".into()));
        }
        if gram.rows() == 0 {
            return Err(Error::Malformed("dimension must be >= 1".into()));
        }
        if values.len() != gram.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for a {}-dimensional gram",
                values.len(),
                gram.rows()
            )));
        }
        Ok(HForm { gram, values })
    }

    /// Assembles and validates a form.
    pub fn new(gram: Gf2Matrix, values: Vec<HValue>) -> Result<Self> {
        let g = Self::from_parts(gram, values)?;
        g.validate().map_err(Error::InvalidForm)?;
        Ok(g)
    }

    /// The form with identity Gram matrix and the given values `dᵢ`.
    pub fn orthonormal(values: &[HValue]) -> Result<Self> {
        Self::new(Gf2Matrix::identity(values.len()), values.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn gram(&self) -> &Gf2Matrix {
        &self.gram
    }

    pub fn values(&self) -> &[HValue] {
        &self.values
    }

    fn check_dim(&self, v: &Gf2Vector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of dim {} for a form of dim {}",
                v.dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `C(x, y)`.
    pub fn bilinear(&self, x: &Gf2Vector, y: &Gf2Vector) -> bool {
        x.dot(&self.gram.mul_vec(y).expect("dimension checked by caller"))
    }

    /// `g(x)`.
    pub fn evaluate(&self, x: &Gf2Vector) -> Result<HValue> {
        self.check_dim(x)?;
        Ok(self.eval(x))
    }

    pub(crate) fn eval(&self, x: &Gf2Vector) -> HValue {
        let support: Vec<usize> = x.support().collect();
        let mut total: HValue = support.iter().map(|&i| self.values[i]).sum();
        for (k, &i) in support.iter().enumerate() {
            for &j in &support[k + 1..] {
                if self.gram.get(i, j) {
                    total += HValue::ONE;
                }
            }
        }
        total
    }

    /// Checks, in order: symmetry, non-degeneracy, `2g(bᵢ) = C(bᵢ,bᵢ)` on the
    /// stored basis, and existence of a vector with `g(x) = ±½`.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                if self.gram.get(i, j) != self.gram.get(j, i) {
                    return Err(Violation::Asymmetric { row: i, col: j });
                }
            }
        }
        let rank = self.gram.rank();
        if rank < n {
            return Err(Violation::Degenerate { rank });
        }
        if let Some(index) = (0..n).find(|&i| self.values[i].is_odd() != self.gram.get(i, i)) {
            return Err(Violation::ParityMismatch { index });
        }
        // C(x,x) = Σ xᵢ C(bᵢ,bᵢ), so an odd vector exists iff the diagonal is nonzero.
        if (0..n).all(|i| !self.gram.get(i, i)) {
            return Err(Violation::NoOddVector);
        }
        Ok(())
    }

    /// An orthonormal basis `e₁…eₙ` with `C(eᵢ,eⱼ) = δᵢⱼ`.
    ///
    /// Greedy diagonalisation: take the lowest-index remaining vector with
    /// `C(w,w) = 1` and project the rest onto its complement. When only an
    /// alternating block is left, split off a hyperbolic pair `u, w` and trade
    /// it together with an already chosen `e` for `e+u, e+w, e+u+w`.
    pub fn orthonormalize(&self) -> Result<OrthonormalBasis> {
        self.validate().map_err(Error::InvalidForm)?;
        let n = self.dim();
        let mut rest: Vec<Gf2Vector> = (0..n).map(|i| Gf2Vector::unit(n, i)).collect();
        let mut basis: Vec<Gf2Vector> = Vec::with_capacity(n);

        while !rest.is_empty() {
            if let Some(pos) = rest.iter().position(|w| self.bilinear(w, w)) {
                let e = rest.remove(pos);
                for w in rest.iter_mut() {
                    if self.bilinear(w, &e) {
                        *w += &e;
                    }
                }
                basis.push(e);
                continue;
            }

            // `rest` spans an alternating, non-degenerate block.
            let u = rest.remove(0);
            let pos = rest
                .iter()
                .position(|w| self.bilinear(&u, w))
                .expect("non-degenerate alternating block has a hyperbolic partner");
            let w = rest.remove(pos);
            for x in rest.iter_mut() {
                let cu = self.bilinear(x, &u);
                if self.bilinear(x, &w) {
                    *x += &u;
                }
                if cu {
                    *x += &w;
                }
            }
            let e = basis
                .pop()
                .expect("validated form has an odd vector before any alternating block");
            let eu = &e + &u;
            let ew = &e + &w;
            let euw = &eu + &w;
            basis.extend([eu, ew, euw]);
        }

        let values = basis.iter().map(|e| self.eval(e)).collect();
        let to_stored = Gf2Matrix::from_columns(&basis)?;
        let to_orthonormal = to_stored
            .inverse()
            .expect("orthonormal vectors are linearly independent");
        Ok(OrthonormalBasis {
            vectors: basis,
            values,
            to_stored,
            to_orthonormal,
        })
    }

    /// Matrix of `T_a` in the stored basis, without checking legality.
    pub fn transvection_matrix(&self, a: &Gf2Vector) -> Gf2Matrix {
        let ga = self.gram.mul_vec(a).expect("dimension checked by caller");
        let rows = (0..self.dim())
            .map(|i| {
                let mut row = Gf2Vector::unit(self.dim(), i);
                if a.get(i) {
                    row += &ga;
                }
                row
            })
            .collect();
        Gf2Matrix::from_row_vectors(rows).expect("rows share a dimension")
    }

    /// Matrix of `S_{a,b}` in the stored basis, without checking legality.
    pub fn s_matrix(&self, a: &Gf2Vector, b: &Gf2Vector) -> Gf2Matrix {
        let ga = self.gram.mul_vec(a).expect("dimension checked by caller");
        let gb = self.gram.mul_vec(b).expect("dimension checked by caller");
        let rows = (0..self.dim())
            .map(|i| {
                let mut row = Gf2Vector::unit(self.dim(), i);
                if a.get(i) {
                    row += &gb;
                }
                if b.get(i) {
                    row += &ga;
                }
                row
            })
            .collect();
        Gf2Matrix::from_row_vectors(rows).expect("rows share a dimension")
    }

    /// Checks that `t` lies in `O(E, g)`: `g(a) = 1` or `a = 0` for `T_a`, and
    /// `g(a) = g(b) = g(a+b) = 0` for `S_{a,b}`.
    pub fn check_generator(&self, t: &Transvection) -> Result<()> {
        match t {
            Transvection::T { a } => {
                self.check_dim(a)?;
                let ga = self.eval(a);
                if !a.is_zero() && ga != HValue::ONE {
                    return Err(Error::IllegalGenerator(format!(
                        "T_a needs g(a) = 1 or a = 0, got g(a) = {ga}"
                    )));
                }
            }
            Transvection::S { a, b } => {
                self.check_dim(a)?;
                self.check_dim(b)?;
                let (ga, gb, gab) = (self.eval(a), self.eval(b), self.eval(&(a + b)));
                if ga != HValue::ZERO || gb != HValue::ZERO || gab != HValue::ZERO {
                    return Err(Error::IllegalGenerator(format!(
                        "S_(a,b) needs g(a) = g(b) = g(a+b) = 0, got {ga}, {gb}, {gab}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Matrix of a legal generator in the stored basis.
    pub fn apply_transvection(&self, t: &Transvection) -> Result<Gf2Matrix> {
        self.check_generator(t)?;
        Ok(self.generator_matrix(t))
    }

    pub(crate) fn generator_matrix(&self, t: &Transvection) -> Gf2Matrix {
        match t {
            Transvection::T { a } => self.transvection_matrix(a),
            Transvection::S { a, b } => self.s_matrix(a, b),
        }
    }

    /// Whether `m` preserves `g`. Checking `g` on basis images and `C` on
    /// pairs of basis images suffices.
    pub fn is_orthogonal(&self, m: &Gf2Matrix) -> bool {
        let n = self.dim();
        if m.rows() != n || m.cols() != n {
            return false;
        }
        let images = m.columns();
        for i in 0..n {
            if self.eval(&images[i]) != self.values[i] {
                return false;
            }
            for j in i + 1..n {
                if self.bilinear(&images[i], &images[j]) != self.gram.get(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Every element of `O(E, g)`, sorted.
    ///
    /// Backtracks over images of an orthonormal basis: `eᵢ` must go to a vector
    /// with the same value `dᵢ`, orthogonal to the images already chosen.
    pub fn enumerate_group(&self) -> Result<Vec<Gf2Matrix>> {
        let n = self.dim();
        if n > MAX_ENUMERATION_DIM {
            return Err(Error::DimensionTooLarge {
                dim: n,
                max: MAX_ENUMERATION_DIM,
            });
        }
        let frame = self.orthonormalize()?;
        let d: Vec<u8> = frame.values.iter().map(|v| v.quarter_units()).collect();
        let value_of = |mask: u64| -> u8 {
            (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| d[i])
                .sum::<u8>()
                % 4
        };
        let candidates: Vec<Vec<u64>> = (0..n)
            .map(|i| (1..1u64 << n).filter(|&x| value_of(x) == d[i]).collect())
            .collect();

        let mut found = Vec::new();
        let mut images = Vec::with_capacity(n);
        backtrack(&candidates, &mut images, &mut found);

        let mut group: Vec<Gf2Matrix> = found
            .into_iter()
            .map(|imgs| {
                let cols: Vec<Gf2Vector> =
                    imgs.iter().map(|&x| Gf2Vector::from_mask(n, x)).collect();
                let local = Gf2Matrix::from_columns(&cols).expect("columns share a dimension");
                frame.matrix_to_stored(&local)
            })
            .collect();
        group.sort();
        Ok(group)
    }
}

fn backtrack(candidates: &[Vec<u64>], images: &mut Vec<u64>, found: &mut Vec<Vec<u64>>) {
    let i = images.len();
    if i == candidates.len() {
        found.push(images.clone());
        return;
    }
    for &x in &candidates[i] {
        if images.iter().all(|&y| (x & y).count_ones() % 2 == 0) {
            images.push(x);
            backtrack(candidates, images, found);
            images.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const H: HValue = HValue::HALF;
    const MH: HValue = HValue::MINUS_HALF;

    fn v(bits: &[u8]) -> Gf2Vector {
        Gf2Vector::from_bits(bits).unwrap()
    }

    fn swap() -> Gf2Matrix {
        Gf2Matrix::from_rows(&[[0u8, 1], [1, 0]]).unwrap()
    }

    #[test]
    fn hvalue_arithmetic() {
        assert_eq!(H + H, HValue::ONE);
        assert_eq!(H + MH, HValue::ZERO);
        assert_eq!(-H, MH);
        assert_eq!(HValue::from_quarter_units(6), HValue::ONE);
        assert_eq!(MH.to_string(), "-1/2");
    }

    #[test]
    fn evaluate_examples() {
        let g = HForm::orthonormal(&[H, H]).unwrap();
        assert_eq!(g.evaluate(&v(&[0, 0])).unwrap(), HValue::ZERO);
        assert_eq!(g.evaluate(&v(&[1, 1])).unwrap(), HValue::ONE);
        assert!(matches!(
            g.evaluate(&v(&[1, 0, 0])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn evaluate_uses_off_diagonal_gram() {
        // hyperbolic ⊕ [1]: g(b₀) = g(b₁) = 0, g(b₂) = ½
        let gram = Gf2Matrix::from_rows(&[[0u8, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        let g = HForm::new(gram, vec![HValue::ZERO, HValue::ZERO, H]).unwrap();
        assert_eq!(g.evaluate(&v(&[1, 1, 0])).unwrap(), HValue::ONE);
        assert_eq!(g.evaluate(&v(&[1, 1, 1])).unwrap(), MH);
    }

    #[test]
    fn validate_examples() {
        let ok = HForm::from_parts(Gf2Matrix::identity(2), vec![H, H]).unwrap();
        assert_eq!(ok.validate(), Ok(()));

        let singular = Gf2Matrix::from_rows(&[[1u8, 1], [1, 1]]).unwrap();
        let g = HForm::from_parts(singular, vec![H, H]).unwrap();
        assert_eq!(g.validate(), Err(Violation::Degenerate { rank: 1 }));

        let hyper = Gf2Matrix::from_rows(&[[0u8, 1], [1, 0]]).unwrap();
        let g = HForm::from_parts(hyper, vec![HValue::ZERO, HValue::ONE]).unwrap();
        assert_eq!(g.validate(), Err(Violation::NoOddVector));

        let g = HForm::from_parts(Gf2Matrix::identity(2), vec![H, HValue::ONE]).unwrap();
        assert_eq!(g.validate(), Err(Violation::ParityMismatch { index: 1 }));

        let asym = Gf2Matrix::from_rows(&[[1u8, 1], [0, 1]]).unwrap();
        let g = HForm::from_parts(asym, vec![H, H]).unwrap();
        assert_eq!(g.validate(), Err(Violation::Asymmetric { row: 0, col: 1 }));
    }

    #[test]
    fn orthonormalize_identity_is_fixed() {
        let g = HForm::orthonormal(&[H, MH, H]).unwrap();
        let ob = g.orthonormalize().unwrap();
        assert_eq!(
            ob.vectors,
            (0..3).map(|i| Gf2Vector::unit(3, i)).collect::<Vec<_>>()
        );
        assert_eq!(ob.values, vec![H, MH, H]);
    }

    #[test]
    fn orthonormalize_hyperbolic_block() {
        let gram = Gf2Matrix::from_rows(&[[0u8, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        let g = HForm::new(gram, vec![HValue::ZERO, HValue::ONE, H]).unwrap();
        let ob = g.orthonormalize().unwrap();
        for (i, e) in ob.vectors.iter().enumerate() {
            assert!(ob.values[i].is_odd());
            assert_eq!(g.evaluate(e).unwrap(), ob.values[i]);
            for (j, f) in ob.vectors.iter().enumerate() {
                assert_eq!(g.bilinear(e, f), i == j);
            }
        }
        assert!((&ob.to_stored * &ob.to_orthonormal).is_identity());
    }

    #[test]
    fn orthonormalize_rejects_alternating() {
        let hyper = Gf2Matrix::from_rows(&[[0u8, 1], [1, 0]]).unwrap();
        let g = HForm::from_parts(hyper, vec![HValue::ZERO, HValue::ZERO]).unwrap();
        assert!(matches!(
            g.orthonormalize(),
            Err(Error::InvalidForm(Violation::NoOddVector))
        ));
    }

    #[test]
    fn transvection_examples() {
        let g = HForm::orthonormal(&[H, H]).unwrap();
        let t0 = Transvection::T { a: v(&[0, 0]) };
        assert!(g.apply_transvection(&t0).unwrap().is_identity());
        let t = Transvection::T { a: v(&[1, 1]) };
        assert_eq!(g.apply_transvection(&t).unwrap(), swap());
        let bad = Transvection::T { a: v(&[1, 0]) };
        assert!(matches!(
            g.apply_transvection(&bad),
            Err(Error::IllegalGenerator(_))
        ));
    }

    #[test]
    fn s_generator_with_null_support_is_identity() {
        // C is non-degenerate, so C(x,a) = C(x,b) = 0 for all x forces a = b = 0.
        let g = HForm::orthonormal(&[H, MH, H, MH]).unwrap();
        let zero = Gf2Vector::zero(4);
        let s = Transvection::S {
            a: zero.clone(),
            b: zero,
        };
        assert!(g.apply_transvection(&s).unwrap().is_identity());
        let legal = Transvection::S {
            a: v(&[1, 1, 0, 0]),
            b: v(&[0, 0, 1, 1]),
        };
        assert!(g.is_orthogonal(&g.apply_transvection(&legal).unwrap()));
        let illegal = Transvection::S {
            a: v(&[1, 0, 1, 0]),
            b: v(&[0, 0, 1, 1]),
        };
        assert!(g.apply_transvection(&illegal).is_err());
    }

    #[test]
    fn is_orthogonal_examples() {
        let g = HForm::orthonormal(&[H, H]).unwrap();
        assert!(g.is_orthogonal(&Gf2Matrix::identity(2)));
        assert!(g.is_orthogonal(&swap()));
        let g = HForm::orthonormal(&[H, MH]).unwrap();
        assert!(!g.is_orthogonal(&swap()));
        assert!(!g.is_orthogonal(&Gf2Matrix::identity(3)));
    }

    #[test]
    fn enumerate_group_examples() {
        let g = HForm::orthonormal(&[H]).unwrap();
        assert_eq!(g.enumerate_group().unwrap(), vec![Gf2Matrix::identity(1)]);

        let g = HForm::orthonormal(&[H, H]).unwrap();
        let group = g.enumerate_group().unwrap();
        assert_eq!(group.len(), 2);
        assert!(group.contains(&swap()));

        let g = HForm::orthonormal(&[H, H, H]).unwrap();
        assert_eq!(g.enumerate_group().unwrap().len(), 6);

        let g = HForm::orthonormal(&[H; 7]).unwrap();
        assert!(matches!(
            g.enumerate_group(),
            Err(Error::DimensionTooLarge { dim: 7, max: 6 })
        ));
    }

    #[test]
    fn enumerate_group_matches_brute_force_dim_2_and_3() {
        for values in [vec![H, H], vec![H, MH], vec![H, MH, MH], vec![MH, MH, MH]] {
            let g = HForm::orthonormal(&values).unwrap();
            let n = g.dim();
            let mut brute = Vec::new();
            for bits in 0..1u64 << (n * n) {
                let rows: Vec<Vec<u8>> = (0..n)
                    .map(|i| (0..n).map(|j| (bits >> (i * n + j) & 1) as u8).collect())
                    .collect();
                let m = Gf2Matrix::from_rows(&rows).unwrap();
                let all_x = (0..1u64 << n).all(|x| {
                    let x = Gf2Vector::from_mask(n, x);
                    g.eval(&m.mul_vec(&x).unwrap()) == g.eval(&x)
                });
                if all_x {
                    brute.push(m);
                }
            }
            brute.sort();
            assert_eq!(g.enumerate_group().unwrap(), brute, "values {values:?}");
        }
    }

    #[test]
    fn json_round_trip() {
        let s = r#"{"dim":2,"gram":[[1,0],[0,1]],"values":[1,3]}"#;
        let g: HForm = serde_json::from_str(s).unwrap();
        assert_eq!(g.values(), &[H, MH]);
        assert_eq!(serde_json::to_string(&g).unwrap(), s);
        assert!(
            serde_json::from_str::<HForm>(r#"{"dim":2,"gram":[[1,0],[0,1]],"values":[1,4]}"#)
                .is_err()
        );
        let t = Transvection::S {
            a: v(&[1, 0]),
            b: v(&[0, 1]),
        };
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"kind":"S","a":[1,0],"b":[0,1]}"#
        );
    }
}
