use std::cmp::{Ordering, Reverse};
use std::fmt;

use serde::{Deserialize, Serialize};

/// The class of the monomial `t^a p^b q^c` under `p²q = pq²`.
///
/// Mixed monomials (`b, c ≥ 1`) of the same `a` and total `p,q`-degree are all
/// equivalent; they are stored as `(a, 1, b + c − 1)`.
///
/// Classes order by degree, then by decreasing `t`-degree, then by decreasing
/// `p`-degree, which is also the rendering order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Exponents", into = "Exponents")]
pub struct MonomialClass {
    a: u32,
    b: u32,
    c: u32,
}

#[derive(Serialize, Deserialize)]
struct Exponents {
    a: u32,
    b: u32,
    c: u32,
}

impl From<Exponents> for MonomialClass {
    fn from(e: Exponents) -> Self {
        canonicalize(e.a, e.b, e.c)
    }
}

impl From<MonomialClass> for Exponents {
    fn from(m: MonomialClass) -> Self {
        Exponents {
            a: m.a,
            b: m.b,
            c: m.c,
        }
    }
}

/// The canonical representative of `t^a p^b q^c`.
pub fn canonicalize(a: u32, b: u32, c: u32) -> MonomialClass {
    if b >= 1 && c >= 1 {
        MonomialClass {
            a,
            b: 1,
            c: b + c - 1,
        }
    } else {
        MonomialClass { a, b, c }
    }
}

/// `r = max(0, m_p − 1) + max(0, m_q − 1)`, constant on each class.
pub fn repetition(cls: MonomialClass) -> u32 {
    cls.b.saturating_sub(1) + cls.c.saturating_sub(1)
}

impl MonomialClass {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        canonicalize(a, b, c)
    }

    pub const ONE: MonomialClass = MonomialClass { a: 0, b: 0, c: 0 };

    pub fn t_pow(a: u32) -> Self {
        MonomialClass { a, b: 0, c: 0 }
    }

    pub fn exponents(&self) -> (u32, u32, u32) {
        (self.a, self.b, self.c)
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c
    }

    /// No `p` or `q` factor: lives in `K`.
    pub fn is_pure_t(&self) -> bool {
        self.b == 0 && self.c == 0
    }

    pub fn repetition(&self) -> u32 {
        repetition(*self)
    }

    /// `t^m · self`.
    pub fn shift_t(&self, m: u32) -> Self {
        MonomialClass {
            a: self.a + m,
            ..*self
        }
    }

    /// Additive order of `ζ` of this class in `M`, `2^{r+1}`; `None` for
    /// pure `t` classes, which are free.
    pub fn zeta_order(&self) -> Option<u64> {
        (!self.is_pure_t()).then(|| 1u64 << (self.repetition() + 1))
    }
}

impl Ord for MonomialClass {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), Reverse(self.a), Reverse(self.b), self.c).cmp(&(
            other.degree(),
            Reverse(other.a),
            Reverse(other.b),
            other.c,
        ))
    }
}

impl PartialOrd for MonomialClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        for (var, e) in [("t", self.a), ("p", self.b), ("q", self.c)] {
            match e {
                0 => {}
                1 => f.write_str(var)?,
                e => write!(f, "{var}^{e}")?,
            }
        }
        Ok(())
    }
}
