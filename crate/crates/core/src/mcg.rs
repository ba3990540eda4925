//! Mapping classes of a non-orientable surface `N_k`, seen through their
//! actions on `H₁(F; Z/2)` (dimension `k`) and `H₁(F; Q)` (dimension `k − 1`).
//!
//! The rational action is supplied by the caller; nothing here checks that a
//! pair of actions comes from an actual diffeomorphism.

use serde::{Deserialize, Serialize};

use crate::decomp::psi;
use crate::error::{Error, Result};
use crate::gf2::{det_sign, Gf2Matrix, Gf2Vector, IntMatrix};
use crate::hform::{HForm, HValue};
use crate::scalar::Z2;

/// A closed non-orientable surface of genus `k ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceDescriptor {
    genus: u32,
    euler_char_parity: Z2,
}

impl SurfaceDescriptor {
    /// `N_k`, with `c = χ(N_k) mod 2 = k mod 2`.
    pub fn non_orientable(genus: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Malformed("non-orientable genus must be >= 1".into()));
        }
        Ok(SurfaceDescriptor {
            genus,
            euler_char_parity: Z2::from_parity(genus as u64),
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// `c`: 0 if `χ(F)` is even, 1 if odd.
    pub fn euler_char_parity(&self) -> Z2 {
        self.euler_char_parity
    }

    pub fn z2_homology_dim(&self) -> usize {
        self.genus as usize
    }

    pub fn rational_homology_dim(&self) -> usize {
        self.genus as usize - 1
    }
}

/// The pair `(h_*, h_**)` of homology actions of a mapping class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MappingClassRepr", into = "MappingClassRepr")]
pub struct MappingClassData {
    h_star: Gf2Matrix,
    h_starstar: Option<IntMatrix>,
}

#[derive(Serialize, Deserialize)]
struct MappingClassRepr {
    genus: usize,
    h_star: Gf2Matrix,
    #[serde(default)]
    h_starstar: Option<IntMatrix>,
}

impl TryFrom<MappingClassRepr> for MappingClassData {
    type Error = Error;
    fn try_from(r: MappingClassRepr) -> Result<Self> {
        if r.h_star.rows() != r.genus {
            return Err(Error::DimensionMismatch(format!(
                "h_star is {}x{} but genus is {}",
                r.h_star.rows(),
                r.h_star.cols(),
                r.genus
            )));
        }
        MappingClassData::new(r.h_star, r.h_starstar)
    }
}

impl From<MappingClassData> for MappingClassRepr {
    fn from(m: MappingClassData) -> Self {
        MappingClassRepr {
            genus: m.genus(),
            h_star: m.h_star,
            h_starstar: m.h_starstar,
        }
    }
}

impl MappingClassData {
    /// `h_star` must be invertible; `h_starstar`, when given, must be
    /// `(k−1)×(k−1)` with nonzero determinant.
    pub fn new(h_star: Gf2Matrix, h_starstar: Option<IntMatrix>) -> Result<Self> {
        if !h_star.is_invertible() {
            return Err(Error::Malformed(
                "h_star must be invertible over GF(2)".into(),
            ));
        }
        if let Some(q) = &h_starstar {
            if q.size() + 1 != h_star.rows() {
                return Err(Error::DimensionMismatch(format!(
                    "h_starstar must be {0}x{0} for genus {1}, got {2}x{2}",
                    h_star.rows() - 1,
                    h_star.rows(),
                    q.size()
                )));
            }
            det_sign(q)?;
        }
        Ok(MappingClassData { h_star, h_starstar })
    }

    pub fn identity(genus: usize) -> Self {
        MappingClassData {
            h_star: Gf2Matrix::identity(genus),
            h_starstar: Some(IntMatrix::identity(genus.saturating_sub(1))),
        }
    }

    pub fn genus(&self) -> usize {
        self.h_star.rows()
    }

    pub fn h_star(&self) -> &Gf2Matrix {
        &self.h_star
    }

    pub fn h_starstar(&self) -> Option<&IntMatrix> {
        self.h_starstar.as_ref()
    }

    /// `self ∘ other`: both actions multiply.
    pub fn compose(&self, other: &MappingClassData) -> Result<MappingClassData> {
        let h_star = self.h_star.mul(&other.h_star)?;
        let h_starstar = match (&self.h_starstar, &other.h_starstar) {
            (Some(a), Some(b)) => Some(a.mul(b)?),
            _ => None,
        };
        Ok(MappingClassData { h_star, h_starstar })
    }
}

/// Whether `h` lies in `N_g`, i.e. `h_*` preserves `g`; equivalently `i` and
/// `i ∘ h` are regularly homotopic when `g` is the form of `i`.
pub fn is_in_ng(g: &HForm, h: &MappingClassData) -> Result<bool> {
    if g.dim() != h.genus() {
        return Err(Error::DimensionMismatch(format!(
            "form of dim {} for a surface of genus {}",
            g.dim(),
            h.genus()
        )));
    }
    Ok(g.is_orthogonal(&h.h_star))
}

/// `Ω(h) = ψ(h_*) + ε(det h_**)`: the parity of tangencies, and of quadruple
/// points, in any generic regular homotopy from `i` to `i ∘ h`.
pub fn omega(h: &MappingClassData) -> Result<Z2> {
    let q = h.h_starstar.as_ref().ok_or(Error::MissingRationalAction)?;
    Ok(psi(&h.h_star) + det_sign(q)?.epsilon())
}

/// The five kinds of good maps, with the homology classes of their circles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GoodMap {
    /// `(T_c)²` for an A-circle `c`.
    SquaredTwist { c: Gf2Vector },
    /// `T_c` for an A-circle with `g([c]) = 1`.
    Twist { c: Gf2Vector },
    /// `T_c` for a separating circle, `[c] = 0`.
    SeparatingTwist { c: Gf2Vector },
    /// `S_P` for a pair of pants with boundary classes `c, d, c + d`.
    Pants { c: Gf2Vector, d: Gf2Vector },
    /// A Y-map (crosscap slide).
    YMap,
}

impl GoodMap {
    /// 1 through 5.
    pub fn kind(&self) -> u8 {
        match self {
            GoodMap::SquaredTwist { .. } => 1,
            GoodMap::Twist { .. } => 2,
            GoodMap::SeparatingTwist { .. } => 3,
            GoodMap::Pants { .. } => 4,
            GoodMap::YMap => 5,
        }
    }
}

/// The action on `H₁(F; Z/2)` of a good map.
pub fn good_map_z2_action(g: &HForm, map: &GoodMap) -> Result<Gf2Matrix> {
    let check = |v: &Gf2Vector| -> Result<()> {
        if v.dim() != g.dim() {
            return Err(Error::DimensionMismatch(format!(
                "class of dim {} for a form of dim {}",
                v.dim(),
                g.dim()
            )));
        }
        Ok(())
    };
    let illegal = |what: &str| {
        Err(Error::IllegalGenerator(format!(
            "good map of type {}: {what}",
            map.kind()
        )))
    };
    match map {
        GoodMap::SquaredTwist { c } => {
            check(c)?;
            if g.bilinear(c, c) {
                return illegal("[c]·[c] must be 0");
            }
            Ok(Gf2Matrix::identity(g.dim()))
        }
        GoodMap::Twist { c } => {
            check(c)?;
            if g.evaluate(c)? != HValue::ONE {
                return illegal("g([c]) must be 1");
            }
            Ok(g.transvection_matrix(c))
        }
        GoodMap::SeparatingTwist { c } => {
            check(c)?;
            if !c.is_zero() {
                return illegal("[c] must be 0");
            }
            Ok(Gf2Matrix::identity(g.dim()))
        }
        GoodMap::Pants { c, d } => {
            check(c)?;
            check(d)?;
            if g.evaluate(c)? != HValue::ZERO || g.evaluate(d)? != HValue::ZERO || g.bilinear(c, d)
            {
                return illegal("needs g([c]) = g([d]) = 0 and [c]·[d] = 0");
            }
            Ok(g.s_matrix(c, d))
        }
        GoodMap::YMap => Ok(Gf2Matrix::identity(g.dim())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KleinEntry {
    pub name: String,
    pub data: MappingClassData,
    pub omega: Z2,
}

/// The four mapping classes of the Klein bottle, in the orthonormal basis
/// `e₁, e₂` of `H₁(Kl; Z/2)`: `id`, the Y-map `u`, the rotation `v` and `vu`.
pub fn klein_bottle_catalog() -> Vec<KleinEntry> {
    let swap = Gf2Matrix::from_rows(&[[0u8, 1], [1, 0]]).expect("2x2");
    let plus = IntMatrix::from_i64(&[[1]]).expect("1x1");
    let minus = IntMatrix::from_i64(&[[-1]]).expect("1x1");
    let entry = |name: &str, h_star: Gf2Matrix, h_starstar: IntMatrix, omega: Z2| KleinEntry {
        name: name.to_string(),
        data: MappingClassData {
            h_star,
            h_starstar: Some(h_starstar),
        },
        omega,
    };
    vec![
        entry("id", Gf2Matrix::identity(2), plus.clone(), Z2::ZERO),
        entry("u", Gf2Matrix::identity(2), minus.clone(), Z2::ONE),
        entry("v", swap.clone(), minus, Z2::ZERO),
        entry("vu", swap, plus, Z2::ONE),
    ]
}

/// Looks up a Klein-bottle mapping class by name.
pub fn klein_bottle(name: &str) -> Option<MappingClassData> {
    klein_bottle_catalog()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.data)
}

/// The triple-point invariant `T(i) = (N − c)/2` of a stable immersion with
/// `N` triple points, up to the additive constant fixed by a base immersion.
pub fn triple_invariant(n_triple: u64, surface: &SurfaceDescriptor) -> Result<u64> {
    let c = surface.euler_char_parity().value();
    if Z2::from_parity(n_triple) != surface.euler_char_parity() {
        return Err(Error::ParityViolation {
            triples: n_triple,
            c,
        });
    }
    Ok((n_triple - c as u64) / 2)
}
