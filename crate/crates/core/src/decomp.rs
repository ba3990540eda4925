//! Words in the transvection generators of `O(E, g)` and the parity `ψ`.
//!
//! Letters of a [`GeneratorWord`] apply left to right: the first letter acts
//! first, so the word `[L₁, …, L_k]` is the map `L_k ∘ ⋯ ∘ L₁` and its matrix
//! is `M(L_k) ⋯ M(L₁)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::hform::{HForm, HValue, OrthonormalBasis, Transvection};
use crate::scalar::Z2;

/// Smallest dimension in which `T`-letters alone generate `O(E, g)`.
pub const S_FREE_MIN_DIM: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorWord {
    pub letters: Vec<Transvection>,
    pub dim: usize,
}

impl GeneratorWord {
    pub fn empty(dim: usize) -> Self {
        GeneratorWord {
            letters: Vec::new(),
            dim,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_s_free(&self) -> bool {
        !self.letters.iter().any(Transvection::is_s)
    }

    /// Checks dimensions and that every letter is a legal generator for `g`.
    pub fn check(&self, g: &HForm) -> Result<()> {
        if self.dim != g.dim() {
            return Err(Error::DimensionMismatch(format!(
                "word of dim {} for a form of dim {}",
                self.dim,
                g.dim()
            )));
        }
        for letter in &self.letters {
            if letter.dim() != self.dim {
                return Err(Error::DimensionMismatch(format!(
                    "letter of dim {} in a word of dim {}",
                    letter.dim(),
                    self.dim
                )));
            }
            g.check_generator(letter)?;
        }
        Ok(())
    }

    /// The matrix of the word in the stored basis of `g`.
    pub fn product(&self, g: &HForm) -> Result<Gf2Matrix> {
        self.check(g)?;
        Ok(self
            .letters
            .iter()
            .fold(Gf2Matrix::identity(self.dim), |acc, l| {
                &g.generator_matrix(l) * &acc
            }))
    }
}

/// Writes an orthogonal map as a word in `T`- and `S`-generators.
///
/// Works in an orthonormal basis `e₁…eₙ`. For `k = n` down to `1` the current
/// map fixes `e_{k+1}…eₙ`; left-composing generators that also fix those makes
/// it fix `e_k`. At most two letters are spent per basis vector.
pub fn decompose(g: &HForm, m: &Gf2Matrix) -> Result<GeneratorWord> {
    if m.rows() != g.dim() || m.cols() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for a form of dim {}",
            m.rows(),
            m.cols(),
            g.dim()
        )));
    }
    if !g.is_orthogonal(m) {
        return Err(Error::NotOrthogonal);
    }
    let frame = g.orthonormalize()?;
    let local = HForm::orthonormal(&frame.values)?;
    let mut current = frame.matrix_to_orthonormal(m);

    // Generators applied to `current` from the left, in order.
    let mut applied = Vec::new();
    for k in (0..g.dim()).rev() {
        let v = current.column(k);
        for letter in fix_column(&frame.values, k, &v) {
            current = &local.generator_matrix(&letter) * &current;
            applied.push(letter);
        }
        debug_assert_eq!(current.column(k), Gf2Vector::unit(g.dim(), k));
    }
    debug_assert!(current.is_identity());

    // applied_j ∘ ⋯ ∘ applied_1 ∘ m = Id and every generator is an involution,
    // so m = applied_1 ∘ ⋯ ∘ applied_j: apply them in reverse order.
    let letters = applied
        .into_iter()
        .rev()
        .map(|l| letter_to_stored(&frame, &l))
        .collect();
    Ok(GeneratorWord {
        letters,
        dim: g.dim(),
    })
}

fn letter_to_stored(frame: &OrthonormalBasis, l: &Transvection) -> Transvection {
    match l {
        Transvection::T { a } => Transvection::T {
            a: frame.vector_to_stored(a),
        },
        Transvection::S { a, b } => Transvection::S {
            a: frame.vector_to_stored(a),
            b: frame.vector_to_stored(b),
        },
    }
}

fn basis_sum(n: usize, indices: &[usize]) -> Gf2Vector {
    let mut x = Gf2Vector::zero(n);
    for &i in indices {
        x.flip(i);
    }
    x
}

/// Generators (orthonormal coordinates) that move `v = T e_k` back to `e_k`
/// while fixing every `e_j` with `j > k`.
fn fix_column(d: &[HValue], k: usize, v: &Gf2Vector) -> Vec<Transvection> {
    let n = d.len();
    let e_k = Gf2Vector::unit(n, k);
    if *v == e_k {
        return Vec::new();
    }
    let t = |a: Gf2Vector| Transvection::T { a };

    if !v.get(k) {
        // C(v, e_k) = 0: g(e_k + v) = 2 g(e_k) = 1.
        return vec![t(&e_k + v)];
    }

    // C(v, e_k) = 1. supp(v) ⊆ {e_0..e_k} and is not all of it.
    let outside: Vec<usize> = (0..k).filter(|&j| !v.get(j)).collect();
    assert!(
        !outside.is_empty(),
        "internal exhaustion: supp(v) covers e_0..e_k for k = {k}"
    );
    if let Some(&j) = outside.iter().find(|&&j| d[j] == d[k]) {
        let e_j = Gf2Vector::unit(n, j);
        return vec![t(v + &e_j), t(&e_j + &e_k)];
    }

    // Every basis vector outside supp(v) has value -d_k; route through S_{a,b}.
    let j = outside[0];
    let inside: Vec<usize> = (0..k).filter(|&i| v.get(i)).collect();
    let same: Vec<usize> = inside.iter().copied().filter(|&i| d[i] == d[k]).collect();
    let opposite: Vec<usize> = inside.iter().copied().filter(|&i| d[i] != d[k]).collect();
    let (a, b) = if let (Some(&x), Some(&y)) = (same.first(), opposite.first()) {
        (basis_sum(n, &[j, x]), basis_sum(n, &[y, k]))
    } else if same.len() >= 4 {
        (
            basis_sum(n, &[j, same[0]]),
            basis_sum(n, &[same[1], same[2], same[3], k]),
        )
    } else if opposite.len() >= 4 {
        (
            basis_sum(n, &[j, opposite[0], opposite[1], opposite[2]]),
            basis_sum(n, &[opposite[3], k]),
        )
    } else {
        panic!("internal exhaustion: no S-configuration for column {k}, v = {v:?}, d = {d:?}");
    };
    // S_{a,b}(v) = v + b, and C(v + b, e_k) = 0.
    let moved = v + &b;
    vec![Transvection::S { a, b }, t(&e_k + &moved)]
}

/// Replaces every `S_{a,b}` by four `T`-letters, using
/// `S_{a,b} = T_s ∘ T_{s+a} ∘ T_{s+b} ∘ T_{s+a+b}` for some `s` with
/// `g(s) = 1` spanned by three orthonormal vectors outside
/// `supp(a) ∪ supp(b)`.
pub fn rewrite_s_free(g: &HForm, w: &GeneratorWord) -> Result<GeneratorWord> {
    if g.dim() < S_FREE_MIN_DIM {
        return Err(Error::DimensionTooSmall {
            dim: g.dim(),
            min: S_FREE_MIN_DIM,
        });
    }
    w.check(g)?;
    let frame = g.orthonormalize()?;
    let n = g.dim();
    let mut letters = Vec::with_capacity(w.len());
    for letter in &w.letters {
        let Transvection::S { a, b } = letter else {
            letters.push(letter.clone());
            continue;
        };
        let la = frame.vector_to_orthonormal(a);
        let lb = frame.vector_to_orthonormal(b);
        let free: Vec<usize> = (0..n).filter(|&i| !la.get(i) && !lb.get(i)).collect();
        if free.len() < 3 {
            return Err(Error::NoSupportRoom { free: free.len() });
        }
        let local_s = (1u8..8)
            .map(|mask| {
                let picked: Vec<usize> = (0..3)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| free[i])
                    .collect();
                basis_sum(n, &picked)
            })
            .find(|s| s.support().map(|i| frame.values[i]).sum::<HValue>() == HValue::ONE)
            .expect("three values ±½ always contain two equal ones");
        let s = frame.vector_to_stored(&local_s);
        let sa = &s + a;
        let sb = &s + b;
        let sab = &sa + b;
        for a in [sab, sb, sa, s] {
            letters.push(Transvection::T { a });
        }
    }
    Ok(GeneratorWord { letters, dim: n })
}

/// `ψ(m) = rank(m − Id) mod 2`.
///
/// # Panics
///
/// If `m` is not square.
pub fn psi(m: &Gf2Matrix) -> Z2 {
    Z2::from_parity(m.minus_identity().rank() as u64)
}
