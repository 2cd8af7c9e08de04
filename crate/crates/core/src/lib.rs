//! Finite hemiimplicative semilattices.
//!
//! A *hemiimplicative semilattice* is a bounded meet-semilattice
//! `(A, ∧, 1)` with a binary operation `→` such that `a → a = 1` and
//! `a ∧ (a → b) ≤ b`. Implicative semilattices (where `→` is the residuum of
//! `∧`) are the familiar examples, but any bounded semilattice carries many
//! other such operations.
//!
//! This crate works with finite algebras given by operation tables:
//!
//! * [`semilattice`] and [`algebra`] validate tables and hold the two core
//!   types, [`FiniteSemilattice`] and [`HemiAlgebra`].
//! * [`classify`] decides membership in the subvarieties cut out by
//!   `a → (a ∧ b) = a → b`, `(a ∧ b) → b = 1`, symmetry, condition (S),
//!   residuation and the equivalential axioms.
//! * [`constructions`] builds the six canonical implications on any bounded
//!   semilattice.
//! * [`symmetry`] symmetrizes `→` into `↔` and goes back through
//!   `a ⇒ b := a ∼ (a ∧ b)`.
//! * [`congruence`] computes filters, congruent filters, congruence lattices
//!   and principal congruences, with brute-force oracles alongside.
//! * [`search`] enumerates small models, forms products and hunts for
//!   counterexamples.
//!
//! ```
//! use hemilat::{build_implication, classify, FiniteSemilattice, ImplicationKind};
//!
//! let b4 = FiniteSemilattice::boolean4();
//! let alg = build_implication(&b4, ImplicationKind::OrderConsequent).unwrap();
//! let report = classify(&alg);
//! assert!(report.h5.holds());
//! assert_eq!(report.h4.witness, Some(vec![1, 2])); // x → (x ∧ y) ≠ x → y
//! ```
//!
//! The accompanying book in `book/` explains the concepts chapter by
//! chapter; its code listings are compiled as doctests of this crate.

pub mod algebra;
pub mod classify;
pub mod congruence;
pub mod constructions;
pub mod dot;
pub mod fixtures;
pub mod format;
pub mod search;
pub mod semilattice;
pub mod symmetry;

pub use algebra::{rla, validate_hemi, Check, HemiAlgebra, HemiError};
pub use classify::{check_order_reflection, classify, ClassReport};
pub use congruence::{
    congruence_lattice, congruent_filter_generated, enumerate_filters, is_congruent_filter, principal_congruence,
    t_term, theta_of_filter, CongruencePartition, FilterSet,
};
pub use constructions::{build_implication, membership_in_kind, ImplicationKind};
pub use search::{EnumerationBound, Witness};
pub use semilattice::{validate_semilattice, Elem, FiniteSemilattice, SemilatticeError};
pub use symmetry::{derive_arrow, symmetrize, SymmetricAlgebra};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/implications.md")]
    mod implications {}
    #[doc = include_str!("../../../book/src/symmetrization.md")]
    mod symmetrization {}
    #[doc = include_str!("../../../book/src/congruences.md")]
    mod congruences {}
    #[doc = include_str!("../../../book/src/principal.md")]
    mod principal {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
