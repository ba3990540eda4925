//! Computational algebra for immersions of closed non-orientable surfaces
//! into 3-space.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf2`]: bit-packed vectors and matrices over GF(2), plus exact integer
//!   matrices with a fraction-free determinant sign.
//! * [`hform`]: H-forms `g: E → (½Z)/2Z`, orthonormal bases, transvections
//!   and the orthogonal group `O(E, g)`.
//! * [`decomp`]: words in the transvection generators `T_a`, `S_{a,b}` and
//!   the parity homomorphism `ψ(T) = rank(T − Id) mod 2`.
//! * [`mcg`]: mapping classes through their homology actions, the
//!   regular-homotopy criterion and the parity invariant `Ω`.
//! * [`invariants`]: codimension-one events, the universal order-one value
//!   group, the graded module `M` and the universal power series `F`.
//!
//! Values of an H-form are stored in quarter units (`Z/4`): `½ ↦ 1`,
//! `1 ↦ 2`, `−½ ↦ 3`. Generator words apply their letters left to right.

pub mod decomp;
pub mod error;
pub mod gf2;
pub mod hform;
pub mod invariants;
pub mod mcg;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Sign, Z2};

// Runs every snippet of the guide under `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/gf2.md")]
    mod gf2 {}
    #[doc = include_str!("../../../book/src/hforms.md")]
    mod hforms {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/omega.md")]
    mod omega {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
