use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg};

use serde::{Deserialize, Serialize};

/// An element of `Z/2`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z2(bool);

impl Z2 {
    pub const ZERO: Z2 = Z2(false);
    pub const ONE: Z2 = Z2(true);

    pub fn from_parity(n: u64) -> Self {
        Z2(n % 2 == 1)
    }

    pub fn is_zero(self) -> bool {
        !self.0
    }

    pub fn value(self) -> u8 {
        self.0 as u8
    }
}

impl From<bool> for Z2 {
    fn from(b: bool) -> Self {
        Z2(b)
    }
}

impl Add for Z2 {
    type Output = Z2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Z2) -> Z2 {
        Z2(self.0 ^ rhs.0)
    }
}

impl AddAssign for Z2 {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Z2) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for Z2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.value())
    }
}

impl<'de> Deserialize<'de> for Z2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match u8::deserialize(d)? {
            0 => Ok(Z2::ZERO),
            1 => Ok(Z2::ONE),
            v => Err(serde::de::Error::custom(format!(
                "expected 0 or 1, got {v}"
            ))),
        }
    }
}

/// `+1` or `−1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `ε`: 0 for positive, 1 for negative.
    pub fn epsilon(self) -> Z2 {
        Z2::from(self == Sign::Minus)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i64() as i8)
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match i8::deserialize(d)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            v => Err(serde::de::Error::custom(format!(
                "expected 1 or -1, got {v}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_arithmetic() {
        assert_eq!(Z2::ONE + Z2::ONE, Z2::ZERO);
        assert_eq!(Z2::from_parity(7), Z2::ONE);
        assert_eq!(Z2::from_parity(0), Z2::ZERO);
    }

    #[test]
    fn sign_product() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::Minus.epsilon(), Z2::ONE);
    }
}
