use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finitely generated abelian group `⊕ Z/dᵢ`, where `dᵢ = 0` stands for `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FinAbGroup {
    factors: Vec<u64>,
}

/// Components of an element, one per cyclic factor, each reduced mod its
/// factor (into `0..d`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<i64>);

impl FinAbGroup {
    /// Factors equal to 1 are dropped.
    pub fn new(factors: Vec<u64>) -> Self {
        FinAbGroup {
            factors: factors.into_iter().filter(|&d| d != 1).collect(),
        }
    }

    pub fn cyclic(d: u64) -> Self {
        Self::new(vec![d])
    }

    /// `G_U = Z ⊕ Z/2 ⊕ Z/2`, components ordered `(t, p, q)`.
    pub fn universal() -> Self {
        FinAbGroup {
            factors: vec![0, 2, 2],
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_finite(&self) -> bool {
        !self.factors.contains(&0)
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.factors.iter().product())
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.factors.len()])
    }

    /// Reduces raw components into canonical range.
    pub fn element(&self, raw: &[i64]) -> Result<GroupElement> {
        if raw.len() != self.factors.len() {
            return Err(Error::DimensionMismatch(format!(
                "element with {} components in a group with {} factors",
                raw.len(),
                self.factors.len()
            )));
        }
        Ok(self.reduce(raw.to_vec()))
    }

    fn reduce(&self, mut c: Vec<i64>) -> GroupElement {
        for (x, &d) in c.iter_mut().zip(&self.factors) {
            if d != 0 {
                *x = x.rem_euclid(d as i64);
            }
        }
        GroupElement(c)
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.0.len() == self.factors.len()
            && x.0
                .iter()
                .zip(&self.factors)
                .all(|(&v, &d)| d == 0 || (0..d as i64).contains(&v))
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.reduce(x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self, x: &GroupElement) -> GroupElement {
        self.scale(x, -1)
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, x: &GroupElement, k: i64) -> GroupElement {
        self.reduce(x.0.iter().map(|a| a * k).collect())
    }

    /// Sum of `k·x` over the given pairs.
    pub fn combine(&self, terms: &[(i64, &GroupElement)]) -> GroupElement {
        terms.iter().fold(self.zero(), |acc, (k, x)| {
            self.add(&acc, &self.scale(x, *k))
        })
    }

    pub fn is_zero(&self, x: &GroupElement) -> bool {
        x.0.iter().all(|&v| v == 0)
    }

    /// `2x = 0`.
    pub fn is_two_torsion(&self, x: &GroupElement) -> bool {
        self.is_zero(&self.scale(x, 2))
    }

    /// Whether `x = 2^r · a` for some `a`. In `Z/d` the multiples of `m` are
    /// the multiples of `gcd(m, d)`.
    pub fn is_divisible_by_pow2(&self, x: &GroupElement, r: u32) -> bool {
        let m = 1i64 << r;
        x.0.iter().zip(&self.factors).all(|(&v, &d)| {
            let step = if d == 0 { m } else { m.gcd(&(d as i64)) };
            v % step == 0
        })
    }

    /// All elements, in lexicographic order; `None` for infinite groups.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &d in &self.factors {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (0..d as i64).map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        Some(out.into_iter().map(GroupElement).collect())
    }

    /// `|Hom(A, self)|` where `A = ⊕ Z/aⱼ` (0 for `Z`); `None` if infinite.
    pub fn hom_count_from(&self, source: &[u64]) -> Option<u128> {
        let mut total: u128 = 1;
        for &a in source {
            for &d in &self.factors {
                let term = match (a, d) {
                    (0, 0) => return None,
                    (0, d) => d,
                    (_, 0) => 1,
                    (a, d) => a.gcd(&d),
                };
                total = total.checked_mul(term as u128)?;
            }
        }
        Some(total)
    }
}

impl FromStr for FinAbGroup {
    type Err = Error;

    /// Parses comma-separated factors such as `"2,4"`; `0` means `Z`.
    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Malformed(format!("bad group factor {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FinAbGroup::new(factors))
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&d| {
                if d == 0 {
                    "Z".to_string()
                } else {
                    format!("Z/{d}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
