use num_bigint::BigInt;
use num_traits::One;

use super::events::{f1u, CEEvent, UniversalValue};
use super::module::{KSeries, MElement};
use super::monomial::MonomialClass;

/// `F(s)` for `s ∈ {0, p, q, p+q}`, truncated at `degree`.
fn f_torsion(p: bool, q: bool, degree: u32) -> MElement {
    let one = BigInt::one();
    let mut terms = vec![(MonomialClass::ONE, one.clone())];
    for n in 1..=degree {
        match (p, q) {
            (false, false) => {}
            (true, false) => terms.push((MonomialClass::new(0, n, 0), one.clone())),
            (false, true) => terms.push((MonomialClass::new(0, 0, n), one.clone())),
            (true, true) => {
                terms.push((MonomialClass::new(0, n, 0), one.clone()));
                terms.push((MonomialClass::new(0, 0, n), one.clone()));
                if n >= 2 {
                    terms.push((MonomialClass::new(0, 1, n - 1), one.clone()));
                }
            }
        }
    }
    MElement::from_terms(degree, terms)
}

/// `F(n₁t)`: the truncated power of `Σ tⁿ` or of `1 − t`.
pub fn f_k(n1: i64, degree: u32) -> KSeries {
    let base = if n1 >= 0 {
        KSeries::geometric(degree)
    } else {
        KSeries::one_minus_t(degree)
    };
    base.pow(n1.unsigned_abs())
}

/// The universal series `F(v) = F(n₁t)·F(s)` truncated at `degree`.
pub fn f_series(v: UniversalValue, degree: u32) -> MElement {
    let s = f_torsion(!v.p.is_zero(), !v.q.is_zero(), degree);
    s.k_mul(&f_k(v.t, degree))
}

/// `F_n(v)`, the degree-`n` part of `F(v)`.
pub fn f_n(v: UniversalValue, n: u32) -> MElement {
    f_series(v, n).homogeneous(n)
}

/// `F_n ∘ f₁ᵁ` on an event log, relative to the start of the log.
pub fn universal_invariant(events: &[CEEvent], n: u32) -> MElement {
    f_n(f1u(events), n)
}
