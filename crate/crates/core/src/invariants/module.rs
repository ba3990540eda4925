use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::events::UniversalValue;
use super::monomial::MonomialClass;
use crate::error::{Error, Result};
use crate::scalar::Z2;

/// Largest degree accepted by [`m_structure`].
pub const MAX_STRUCTURE_DEGREE: u32 = 12;

/// A truncated element of `M`.
///
/// Each non-pure-`t` class carries the coefficient of its generator `ζ`,
/// reduced into `0..2^{r+1}`; pure-`t` classes carry integers. Classes of
/// degree above `degree` are discarded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MElementRepr", into = "MElementRepr")]
pub struct MElement {
    degree: u32,
    terms: BTreeMap<MonomialClass, BigInt>,
}

fn zeta_modulus(cls: &MonomialClass) -> Option<BigInt> {
    (!cls.is_pure_t()).then(|| BigInt::one() << (cls.repetition() + 1))
}

fn reduce_coeff(cls: &MonomialClass, c: BigInt) -> BigInt {
    match zeta_modulus(cls) {
        Some(m) => c.mod_floor(&m),
        None => c,
    }
}

impl MElement {
    pub fn zero(degree: u32) -> Self {
        MElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: u32) -> Self {
        Self::zeta(MonomialClass::ONE, degree)
    }

    /// The generator `ζ` of a class (for pure-`t` classes, the monomial).
    pub fn zeta(cls: MonomialClass, degree: u32) -> Self {
        Self::from_terms(degree, [(cls, BigInt::one())])
    }

    /// The monomial itself, `2^r·ζ`.
    pub fn monomial(cls: MonomialClass, degree: u32) -> Self {
        Self::from_terms(degree, [(cls, BigInt::one() << cls.repetition())])
    }

    /// Sums the given `ζ`-coefficients, reducing and truncating.
    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (MonomialClass, BigInt)>,
    ) -> Self {
        let mut out = MElement::zero(degree);
        for (cls, c) in terms {
            out.add_term(cls, c);
        }
        out
    }

    fn add_term(&mut self, cls: MonomialClass, c: BigInt) {
        if cls.degree() > self.degree {
            return;
        }
        let sum = self.terms.remove(&cls).unwrap_or_default() + c;
        let sum = reduce_coeff(&cls, sum);
        if !sum.is_zero() {
            self.terms.insert(cls, sum);
        }
    }

    /// The element of `M₁ = G_U` given by a universal value.
    pub fn from_universal(v: UniversalValue, degree: u32) -> Self {
        Self::from_terms(
            degree,
            [
                (MonomialClass::t_pow(1), BigInt::from(v.t)),
                (MonomialClass::new(0, 1, 0), BigInt::from(v.p.value())),
                (MonomialClass::new(0, 0, 1), BigInt::from(v.q.value())),
            ],
        )
    }

    /// Reads off the degree-one part as a universal value; `None` if the
    /// `t`-coefficient does not fit in an `i64`.
    pub fn degree_one_part(&self) -> Option<UniversalValue> {
        let t = self.coefficient(&MonomialClass::t_pow(1)).to_i64()?;
        let bit = |c: MonomialClass| Z2::from(!self.coefficient(&c).is_zero());
        Some(UniversalValue {
            t,
            p: bit(MonomialClass::new(0, 1, 0)),
            q: bit(MonomialClass::new(0, 0, 1)),
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in class order.
    pub fn terms(&self) -> impl Iterator<Item = (&MonomialClass, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, cls: &MonomialClass) -> BigInt {
        self.terms.get(cls).cloned().unwrap_or_default()
    }

    /// Drops every class of degree above `degree`.
    pub fn truncate(&self, degree: u32) -> MElement {
        let degree = degree.min(self.degree);
        Self::from_terms(degree, self.terms.iter().map(|(k, v)| (*k, v.clone())))
    }

    /// The part of degree exactly `n`, as an element of `M_n` truncated at `n`.
    pub fn homogeneous(&self, n: u32) -> MElement {
        Self::from_terms(
            n,
            self.terms
                .iter()
                .filter(|(k, _)| k.degree() == n)
                .map(|(k, v)| (*k, v.clone())),
        )
    }

    /// Sum; the result is truncated at the smaller of the two degrees.
    pub fn add(&self, other: &MElement) -> MElement {
        let mut out = self.truncate(other.degree);
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn neg(&self) -> MElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &MElement) -> MElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> MElement {
        Self::from_terms(self.degree, self.terms.iter().map(|(c, v)| (*c, v * k)))
    }

    /// `t^m · self`.
    pub fn shift_t(&self, m: u32) -> MElement {
        Self::from_terms(
            self.degree,
            self.terms.iter().map(|(c, v)| (c.shift_t(m), v.clone())),
        )
    }

    /// The action of `K` on `M`; truncated at the smaller degree.
    pub fn k_mul(&self, k: &KSeries) -> MElement {
        let degree = self.degree.min(k.degree());
        let mut out = MElement::zero(degree);
        for (i, ki) in k.coeffs.iter().enumerate() {
            if ki.is_zero() {
                continue;
            }
            for (cls, v) in &self.terms {
                out.add_term(cls.shift_t(i as u32), ki * v);
            }
        }
        out
    }
}

/// `t^m · elem`.
pub fn k_action(m: u32, elem: &MElement) -> MElement {
    elem.shift_t(m)
}

impl fmt::Display for MElement {
    /// Terms in class order. Classes with `r ≥ 1` print as
    /// `zeta[class]*c (mod 2^{r+1})`, the others as `c*class`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (cls, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = (c.is_negative(), c.abs());
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let r = cls.repetition();
            if r == 0 {
                write!(f, "{mag}*{cls}")?;
            } else {
                write!(f, "zeta[{cls}]*{mag} (mod {})", 1u64 << (r + 1))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MElementRepr {
    degree: u32,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    a: u32,
    b: u32,
    c: u32,
    coeff: String,
}

impl From<MElement> for MElementRepr {
    fn from(m: MElement) -> Self {
        MElementRepr {
            degree: m.degree,
            terms: m
                .terms
                .iter()
                .map(|(cls, v)| {
                    let (a, b, c) = cls.exponents();
                    TermRepr {
                        a,
                        b,
                        c,
                        coeff: v.to_string(),
                    }
                })
                .collect(),
        }
    }
}

impl TryFrom<MElementRepr> for MElement {
    type Error = Error;

    fn try_from(r: MElementRepr) -> Result<Self> {
        let mut terms = Vec::with_capacity(r.terms.len());
        for t in r.terms {
            let cls = MonomialClass::new(t.a, t.b, t.c);
            if cls.degree() > r.degree {
                return Err(Error::Malformed(format!(
                    "term {cls} exceeds truncation degree {}",
                    r.degree
                )));
            }
            let coeff: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Malformed(format!("bad coefficient {:?}", t.coeff)))?;
            terms.push((cls, coeff));
        }
        Ok(MElement::from_terms(r.degree, terms))
    }
}

/// A power series in `t` truncated at `degree` (the ring `K`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSeries {
    coeffs: Vec<BigInt>,
}

impl KSeries {
    pub fn from_coeffs(degree: u32, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(degree as usize + 1, BigInt::zero());
        KSeries { coeffs }
    }

    pub fn one(degree: u32) -> Self {
        Self::from_coeffs(degree, vec![BigInt::one()])
    }

    /// `Σ tⁿ`.
    pub fn geometric(degree: u32) -> Self {
        KSeries {
            coeffs: vec![BigInt::one(); degree as usize + 1],
        }
    }

    /// `1 − t`.
    pub fn one_minus_t(degree: u32) -> Self {
        Self::from_coeffs(degree, vec![BigInt::one(), BigInt::from(-1)])
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Truncated product.
    pub fn mul(&self, other: &KSeries) -> KSeries {
        let d = self.degree().min(other.degree()) as usize;
        let mut out = vec![BigInt::zero(); d + 1];
        for (i, a) in self.coeffs.iter().take(d + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(d + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        KSeries { coeffs: out }
    }

    /// Truncated power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> KSeries {
        let mut base = self.clone();
        let mut acc = KSeries::one(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn to_element(&self) -> MElement {
        MElement::from_terms(
            self.degree(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (MonomialClass::t_pow(i as u32), c.clone())),
        )
    }
}

/// One cyclic summand of `M_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    /// Order of the generator; 0 for `Z`.
    pub modulus: u64,
    pub generator: MonomialClass,
}

/// `M_n` as a direct sum of cyclic groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MStructure {
    pub degree: u32,
    pub summands: Vec<Summand>,
}

impl MStructure {
    /// The orders of the summands, 0 for `Z`.
    pub fn factors(&self) -> Vec<u64> {
        self.summands.iter().map(|s| s.modulus).collect()
    }
}

impl fmt::Display for MStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| match s.modulus {
                0 => "Z".to_string(),
                m => format!("Z/{m}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The summands of `M_n`: `Z` on `tⁿ`, and `Z/2^{r+1}` on `ζ` of every other
/// class of degree `n`. Sorted with `Z` first, then by increasing order.
pub fn m_structure(n: u32) -> Result<MStructure> {
    if n > MAX_STRUCTURE_DEGREE {
        return Err(Error::Guard(format!(
            "m_structure degree {n} exceeds {MAX_STRUCTURE_DEGREE}"
        )));
    }
    let mut summands = vec![Summand {
        modulus: 0,
        generator: MonomialClass::t_pow(n),
    }];
    for a in 0..n {
        let m = n - a;
        let mut push = |cls: MonomialClass| {
            summands.push(Summand {
                modulus: 1 << (cls.repetition() + 1),
                generator: cls,
            })
        };
        push(MonomialClass::new(a, m, 0));
        push(MonomialClass::new(a, 0, m));
        if m >= 2 {
            push(MonomialClass::new(a, 1, m - 1));
        }
    }
    summands.sort_by(|x, y| {
        let key = |s: &Summand| (s.modulus != 0, s.modulus);
        key(x).cmp(&key(y)).then(x.generator.cmp(&y.generator))
    });
    Ok(MStructure {
        degree: n,
        summands,
    })
}
