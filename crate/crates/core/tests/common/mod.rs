#![allow(dead_code)]

use nonorientable::decomp::GeneratorWord;
use nonorientable::gf2::{Gf2Matrix, Gf2Vector};
use nonorientable::hform::{HForm, HValue, Transvection};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The orthonormal form of dim `n` with `g(eᵢ) = −½` exactly when bit `i`
/// of `mask` is set.
pub fn odd_form(n: usize, mask: u64) -> HForm {
    let values: Vec<HValue> = (0..n)
        .map(|i| {
            if mask >> i & 1 == 1 {
                HValue::MINUS_HALF
            } else {
                HValue::HALF
            }
        })
        .collect();
    HForm::orthonormal(&values).unwrap()
}

pub fn random_odd_form(rng: &mut impl Rng, n: usize) -> HForm {
    odd_form(n, rng.gen::<u64>() & ((1 << n) - 1))
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Gf2Vector {
    let mut v = Gf2Vector::zero(n);
    for i in 0..n {
        v.set(i, rng.gen());
    }
    v
}

/// A legal `T_a`; falls back to `T_0 = Id` for forms without a vector of
/// value 1, such as `(½, −½)`.
pub fn random_t(rng: &mut impl Rng, g: &HForm) -> Transvection {
    for _ in 0..10_000 {
        let a = random_vector(rng, g.dim());
        if g.evaluate(&a).unwrap() == HValue::ONE {
            return Transvection::T { a };
        }
    }
    Transvection::T {
        a: Gf2Vector::zero(g.dim()),
    }
}

/// `(a, b)` with `g(a) = g(b) = g(a+b) = 0`, so `C(a, b) = 0`; `None` when
/// sampling keeps failing (tiny dims).
pub fn random_s_pair(rng: &mut impl Rng, g: &HForm) -> Option<(Gf2Vector, Gf2Vector)> {
    for _ in 0..10_000 {
        let a = random_vector(rng, g.dim());
        let b = random_vector(rng, g.dim());
        let zero = |x: &Gf2Vector| g.evaluate(x).unwrap() == HValue::ZERO;
        if zero(&a) && zero(&b) && zero(&(&a + &b)) {
            return Some((a, b));
        }
    }
    None
}

pub fn random_letter(rng: &mut impl Rng, g: &HForm) -> Transvection {
    if rng.gen_bool(0.5) {
        if let Some((a, b)) = random_s_pair(rng, g) {
            return Transvection::S { a, b };
        }
    }
    random_t(rng, g)
}

pub fn random_word(rng: &mut impl Rng, g: &HForm, len: usize) -> GeneratorWord {
    GeneratorWord {
        letters: (0..len).map(|_| random_letter(rng, g)).collect(),
        dim: g.dim(),
    }
}

pub fn random_element(rng: &mut impl Rng, g: &HForm, len: usize) -> Gf2Matrix {
    random_word(rng, g, len).product(g).unwrap()
}
