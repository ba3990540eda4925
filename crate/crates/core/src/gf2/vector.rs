use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(dim: usize) -> usize {
    dim.div_ceil(WORD)
}

/// A vector in `GF(2)^dim`, packed 64 entries per word.
///
/// Bits above `dim` in the last word are always zero, so derived equality and
/// ordering are exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    dim: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zero(dim: usize) -> Self {
        Gf2Vector {
            dim,
            words: vec![0; words_for(dim)],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.set(i, true);
        v
    }

    /// Builds a vector from 0/1 entries.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::Malformed("vector must have dimension >= 1".into()));
        }
        let mut v = Self::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => v.set(i, true),
                _ => return Err(Error::Malformed(format!("entry {i} is {b}, not 0 or 1"))),
            }
        }
        Ok(v)
    }

    /// Builds a vector of dimension `dim <= 64` whose entry `i` is bit `i` of
    /// `mask`.
    pub fn from_mask(dim: usize, mask: u64) -> Self {
        assert!(dim <= WORD, "from_mask needs dim <= 64");
        let mut v = Self::zero(dim);
        if dim > 0 {
            let keep = if dim == WORD {
                u64::MAX
            } else {
                (1u64 << dim) - 1
            };
            v.words[0] = mask & keep;
        }
        v
    }

    /// Inverse of [`Gf2Vector::from_mask`]; `None` above 64 entries.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.dim, "index {i} out of range for dim {}", self.dim);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.dim, "index {i} out of range for dim {}", self.dim);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.dim, "index {i} out of range for dim {}", self.dim);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the nonzero entries, in increasing order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim).filter(move |&i| self.get(i))
    }

    /// Lowest index with a nonzero entry.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    /// The standard dot product `Σ xᵢyᵢ` over GF(2).
    pub fn dot(&self, other: &Gf2Vector) -> bool {
        debug_assert_eq!(self.dim, other.dim);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.dim).map(|i| self.get(i) as u8).collect()
    }

    pub(crate) fn xor_assign(&mut self, other: &Gf2Vector) {
        debug_assert_eq!(self.dim, other.dim);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

impl Add for &Gf2Vector {
    type Output = Gf2Vector;
    fn add(self, rhs: &Gf2Vector) -> Gf2Vector {
        assert_eq!(self.dim, rhs.dim, "vector dimensions differ");
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl Add for Gf2Vector {
    type Output = Gf2Vector;
    fn add(mut self, rhs: Gf2Vector) -> Gf2Vector {
        self += &rhs;
        self
    }
}

impl AddAssign<&Gf2Vector> for Gf2Vector {
    fn add_assign(&mut self, rhs: &Gf2Vector) {
        assert_eq!(self.dim, rhs.dim, "vector dimensions differ");
        self.xor_assign(rhs);
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Gf2Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.bits().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gf2Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let bits = Vec::<u8>::deserialize(d)?;
        Gf2Vector::from_bits(&bits).map_err(serde::de::Error::custom)
    }
}
