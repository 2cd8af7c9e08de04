//! The six canonical implications that turn any bounded semilattice into a
//! hemiimplicative one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::HemiAlgebra;
use crate::semilattice::{Elem, FiniteSemilattice};

/// Which case split defines `a → b`. Every kind returns `1` on the
/// diagonal (or on the whole order, for the `Order*` kinds).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImplicationKind {
    /// `1` if `a = b`, else `0`.
    DiscreteZero,
    /// `1` if `a ≤ b`, else `b`.
    OrderConsequent,
    /// `1` if `a = b`, else `b`.
    EqConsequent,
    /// `1` if `a ≤ b`, else `a ∧ b`.
    OrderMeet,
    /// `1` if `a = b`, else `a ∧ b`.
    EqMeet,
    /// `1` if `a ≤ b`, else `0`.
    OrderZero,
}

impl ImplicationKind {
    pub const ALL: [ImplicationKind; 6] = [
        ImplicationKind::DiscreteZero,
        ImplicationKind::OrderConsequent,
        ImplicationKind::EqConsequent,
        ImplicationKind::OrderMeet,
        ImplicationKind::EqMeet,
        ImplicationKind::OrderZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ImplicationKind::DiscreteZero => "discrete-zero",
            ImplicationKind::OrderConsequent => "order-consequent",
            ImplicationKind::EqConsequent => "eq-consequent",
            ImplicationKind::OrderMeet => "order-meet",
            ImplicationKind::EqMeet => "eq-meet",
            ImplicationKind::OrderZero => "order-zero",
        }
    }

    /// Kinds whose "otherwise" branch is the constant `0`.
    pub fn requires_bottom(self) -> bool {
        matches!(self, ImplicationKind::DiscreteZero | ImplicationKind::OrderZero)
    }

    /// Whether the `1` branch is taken on `a ≤ b` (rather than `a = b`).
    pub fn order_guarded(self) -> bool {
        matches!(self, ImplicationKind::OrderConsequent | ImplicationKind::OrderMeet | ImplicationKind::OrderZero)
    }

    /// Value of `a → b` on `s`. `bottom` is only consulted by the kinds
    /// that need it.
    fn eval(self, s: &FiniteSemilattice, bottom: Elem, a: Elem, b: Elem) -> Elem {
        let guard = if self.order_guarded() { s.leq(a, b) } else { a == b };
        if guard {
            return s.top();
        }
        match self {
            ImplicationKind::DiscreteZero | ImplicationKind::OrderZero => bottom,
            ImplicationKind::OrderConsequent | ImplicationKind::EqConsequent => b,
            ImplicationKind::OrderMeet | ImplicationKind::EqMeet => s.meet(a, b),
        }
    }
}

impl fmt::Display for ImplicationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown implication kind `{0}`")]
pub struct UnknownKind(pub String);

impl FromStr for ImplicationKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ImplicationKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| UnknownKind(s.to_owned()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("implication `{0}` needs a designated bottom element")]
    BottomRequired(ImplicationKind),
}

/// Equips `s` with the implication of the given kind.
pub fn build_implication(s: &FiniteSemilattice, kind: ImplicationKind) -> Result<HemiAlgebra, ConstructionError> {
    let bottom = match (kind.requires_bottom(), s.bottom()) {
        (true, None) => return Err(ConstructionError::BottomRequired(kind)),
        (_, b) => b.unwrap_or_else(|| s.least()),
    };
    let alg = HemiAlgebra::from_fn(s.clone(), |a, b| kind.eval(s, bottom, a, b))
        .unwrap_or_else(|e| panic!("{kind} produced an invalid algebra: {e}"));
    Ok(alg)
}

/// Whether the implication of `a` is exactly the `kind` construction on its
/// own base, i.e. whether `a` lies in the class of that kind.
pub fn membership_in_kind(a: &HemiAlgebra, kind: ImplicationKind) -> bool {
    first_kind_mismatch(a, kind).is_none()
}

/// First cell `(x, y)` where `a`'s implication differs from the `kind`
/// construction. A missing bottom on a bottom-requiring kind reports the
/// empty tuple.
pub fn first_kind_mismatch(a: &HemiAlgebra, kind: ImplicationKind) -> Option<Vec<Elem>> {
    let s = a.base();
    let bottom = match (kind.requires_bottom(), s.bottom()) {
        (true, None) => return Some(Vec::new()),
        (_, b) => b.unwrap_or_else(|| s.least()),
    };
    crate::algebra::first_pair(a.size(), |x, y| a.imp(x, y) != kind.eval(s, bottom, x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;

    const X: Elem = 1;
    const Y: Elem = 2;

    #[test]
    fn names_roundtrip() {
        for k in ImplicationKind::ALL {
            assert_eq!(k.name().parse::<ImplicationKind>().unwrap(), k);
        }
        assert!("bogus".parse::<ImplicationKind>().is_err());
    }

    #[test]
    fn kinds_on_two_chain() {
        // Oracle: the two hemiimplications on 0 < 1 differ only at 0 → 1.
        let chain = FiniteSemilattice::chain(2);
        let classical = HemiAlgebra::heyting(chain.clone()).unwrap();
        let other = HemiAlgebra::from_flat(chain.clone(), vec![1, 0, 0, 1]).unwrap();
        for k in ImplicationKind::ALL {
            let built = build_implication(&chain, k).unwrap();
            let expected = match k {
                ImplicationKind::DiscreteZero | ImplicationKind::EqMeet => &other,
                _ => &classical,
            };
            assert_eq!(&built, expected, "{k}");
            assert_eq!(membership_in_kind(&classical, k), expected == &classical, "{k}");
        }
        assert_eq!(build_implication(&chain, ImplicationKind::OrderConsequent).unwrap(), classical);
    }

    #[test]
    fn eq_consequent_on_b4_breaks_h4() {
        let a = build_implication(&FiniteSemilattice::boolean4(), ImplicationKind::EqConsequent).unwrap();
        assert_eq!(a.imp(3, 0), 0);
        assert_eq!(a.imp(3, 3), 3);
        assert!(!classify(&a).h4.holds());
    }

    #[test]
    fn order_meet_and_order_zero_satisfy_h4_on_b4() {
        for k in [ImplicationKind::OrderMeet, ImplicationKind::OrderZero] {
            let a = build_implication(&FiniteSemilattice::boolean4(), k).unwrap();
            assert!(classify(&a).h4.holds(), "{k}");
        }
    }

    #[test]
    fn bottom_required() {
        let s = FiniteSemilattice::boolean4().without_bottom();
        for k in ImplicationKind::ALL {
            let r = build_implication(&s, k);
            if k.requires_bottom() {
                assert_eq!(r.unwrap_err(), ConstructionError::BottomRequired(k));
            } else {
                assert!(r.is_ok());
            }
        }
        let a = build_implication(&FiniteSemilattice::boolean4(), ImplicationKind::OrderZero).unwrap();
        let stripped = a.clone().with_base(a.base().clone().without_bottom());
        assert!(!membership_in_kind(&stripped, ImplicationKind::OrderZero));
        assert!(membership_in_kind(&a, ImplicationKind::OrderZero));
    }

    #[test]
    fn pointwise_square_of_two_chain_is_not_order_zero() {
        // Oracle: evaluate the componentwise classical implication on pairs
        // directly. x = (1,0), y = (0,1).
        let c = |a: usize, b: usize| if a <= b { 1 } else { 0 };
        let x = (1usize, 0usize);
        let y = (0usize, 1usize);
        let pointwise = (c(x.0, y.0), c(x.1, y.1));
        assert_eq!(pointwise, y);

        let b4 = FiniteSemilattice::boolean4();
        let heyting = HemiAlgebra::heyting(b4.clone()).unwrap();
        assert_eq!(heyting.imp(X, Y), Y);
        assert!(!membership_in_kind(&heyting, ImplicationKind::OrderZero));
        let oz = build_implication(&b4, ImplicationKind::OrderZero).unwrap();
        assert_eq!(oz.imp(X, Y), 0);
    }

    #[test]
    fn order_consequent_equals_order_meet_on_chains() {
        for n in 1..=6 {
            let s = FiniteSemilattice::chain(n);
            let a = build_implication(&s, ImplicationKind::OrderConsequent).unwrap();
            let b = build_implication(&s, ImplicationKind::OrderMeet).unwrap();
            assert_eq!(a.imp_flat(), b.imp_flat());
        }
    }
}
