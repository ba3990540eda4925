//! The universal invariant calculus.
//!
//! * [`events`]: codimension-one events and the order-one value `f₁ᵁ` in
//!   `G_U = Z t ⊕ (Z/2) p ⊕ (Z/2) q`.
//! * [`monomial`] and [`module`]: classes of monomials under `p²q = pq²`, the
//!   graded module `M` with its generators `ζ`, and the ring `K` of series in
//!   `t` acting on it.
//! * [`series`]: the universal series `F` and its projections `F_n`.
//! * [`symbols`]: functions on tuples of event symbols, membership in `E_n`,
//!   and the codimension-two relation checker.
//! * [`group`]: the finite abelian coefficient groups.

pub mod events;
pub mod group;
pub mod module;
pub mod monomial;
pub mod series;
pub mod symbols;

pub use events::{f1u, CEEvent, CeKind, EventLog, UniversalValue};
pub use group::{FinAbGroup, GroupElement};
pub use module::{k_action, m_structure, KSeries, MElement, MStructure, Summand};
pub use monomial::{canonicalize, repetition, MonomialClass};
pub use series::{f_k, f_n, f_series, universal_invariant};
pub use symbols::{
    all_tuples, codim2_relations_check, count_en, delta_reduce, hom_count, tuple_repetition,
    C1Assignment, C1Symbol, SymbolFunction, SymbolTuple,
};
