//! Named algebras used throughout the tests, the book and the CLI.
//!
//! * `trivial`: the one-element algebra.
//! * `chain2` … `chain6`: chains with their Heyting implication.
//! * `B4`: the four-element Boolean algebra `0, x, y, 1`.
//! * `B4-<kind>`, `chain2-<kind>` … `chain6-<kind>`: the same semilattices
//!   with one of the six canonical implications.
//! * `paper5`: the five-element lattice `0 < c < a, b < 1` with a symmetric
//!   implication that fails condition (S).

use crate::algebra::{validate_hemi, HemiAlgebra};
use crate::constructions::{build_implication, ImplicationKind};
use crate::semilattice::{validate_semilattice, FiniteSemilattice};

pub fn trivial() -> HemiAlgebra {
    HemiAlgebra::heyting(FiniteSemilattice::chain(1)).expect("trivial algebra")
}

/// The `n`-element Heyting chain.
pub fn chain(n: usize) -> HemiAlgebra {
    HemiAlgebra::heyting(FiniteSemilattice::chain(n)).expect("chains are Heyting")
}

pub fn boolean4() -> HemiAlgebra {
    HemiAlgebra::heyting(FiniteSemilattice::boolean4()).expect("B4 is Boolean")
}

/// The five-element symmetric algebra outside the (S) subvariety.
pub fn paper5() -> HemiAlgebra {
    let meet =
        vec![vec![0, 0, 0, 0, 0], vec![0, 1, 3, 3, 1], vec![0, 3, 2, 3, 2], vec![0, 3, 3, 3, 3], vec![0, 1, 2, 3, 4]];
    let sim =
        vec![vec![4, 0, 0, 0, 0], vec![0, 4, 0, 3, 1], vec![0, 0, 4, 3, 2], vec![0, 3, 3, 4, 3], vec![0, 1, 2, 3, 4]];
    let base = validate_semilattice(&meet, 4, Some(0))
        .and_then(|s| s.with_labels(["0", "a", "b", "c", "1"].map(String::from).to_vec()))
        .expect("paper5 lattice");
    validate_hemi(base, &sim).expect("paper5 implication")
}

fn with_kind(s: &FiniteSemilattice, kind: ImplicationKind) -> HemiAlgebra {
    build_implication(s, kind).expect("fixture semilattices carry a bottom")
}

/// All fixture names, in a stable order.
pub fn names() -> Vec<String> {
    corpus().into_iter().map(|(n, _)| n).collect()
}

/// Looks a fixture up by name.
pub fn get(name: &str) -> Option<HemiAlgebra> {
    corpus().into_iter().find(|(n, _)| n == name).map(|(_, a)| a)
}

/// The whole corpus.
pub fn corpus() -> Vec<(String, HemiAlgebra)> {
    let mut out = vec![("trivial".to_owned(), trivial())];
    for n in 2..=6 {
        out.push((format!("chain{n}"), chain(n)));
    }
    out.push(("B4".to_owned(), boolean4()));
    let b4 = FiniteSemilattice::boolean4();
    for kind in ImplicationKind::ALL {
        out.push((format!("B4-{kind}"), with_kind(&b4, kind)));
    }
    for n in 2..=6 {
        let c = FiniteSemilattice::chain(n);
        for kind in ImplicationKind::ALL {
            out.push((format!("chain{n}-{kind}"), with_kind(&c, kind)));
        }
    }
    out.push(("paper5".to_owned(), paper5()));
    out
}
