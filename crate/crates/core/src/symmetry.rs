//! Symmetrization `a ∼ b := (a → b) ∧ (b → a)`, the derived implication
//! `a ⇒ b := a ∼ (a ∧ b)`, and instance-wise checks of the two term
//! equivalences built from them.

use thiserror::Error;

use crate::algebra::{first_pair, Check, HemiAlgebra};
use crate::classify::{classify, es_conditions};
use crate::semilattice::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("implication is not symmetric: {a} → {b} ≠ {b} → {a}")]
    NotSymmetric { a: Elem, b: Elem },
    /// Neither an implicative semilattice nor a member of the equivalential
    /// variety. Carries the witnesses against both.
    #[error("algebra is neither implicative (witness {implicative:?}) nor equivalential (witness {equivalential:?})")]
    NotApplicable { implicative: Vec<Elem>, equivalential: Vec<Elem> },
}

/// A hemiimplicative semilattice whose implication is symmetric. The
/// implication of such an algebra is usually written `∼`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricAlgebra(HemiAlgebra);

impl SymmetricAlgebra {
    pub fn new(alg: HemiAlgebra) -> Result<Self, SymmetryError> {
        match first_pair(alg.size(), |a, b| alg.imp(a, b) != alg.imp(b, a)) {
            Some(w) => Err(SymmetryError::NotSymmetric { a: w[0], b: w[1] }),
            None => Ok(SymmetricAlgebra(alg)),
        }
    }

    pub fn algebra(&self) -> &HemiAlgebra {
        &self.0
    }

    pub fn into_inner(self) -> HemiAlgebra {
        self.0
    }

    /// `a ∼ b`.
    #[inline]
    pub fn sim(&self, a: Elem, b: Elem) -> Elem {
        self.0.imp(a, b)
    }
}

impl TryFrom<HemiAlgebra> for SymmetricAlgebra {
    type Error = SymmetryError;

    fn try_from(alg: HemiAlgebra) -> Result<Self, Self::Error> {
        SymmetricAlgebra::new(alg)
    }
}

/// Replaces `→` by `↔`. The result is always a symmetric hemiimplicative
/// semilattice.
pub fn symmetrize(alg: &HemiAlgebra) -> SymmetricAlgebra {
    let sym = HemiAlgebra::from_fn(alg.base().clone(), |a, b| alg.rla(a, b))
        .unwrap_or_else(|e| panic!("↔ must be a hemiimplication: {e}"));
    SymmetricAlgebra::new(sym).expect("↔ is symmetric")
}

/// `a ⇒ b := a ∼ (a ∧ b)`. The result satisfies `a ⇒ (a ∧ b) = a ⇒ b` and
/// agrees with `∼` whenever `b ≤ a`.
pub fn derive_arrow(sym: &SymmetricAlgebra) -> HemiAlgebra {
    let alg = sym.algebra();
    let derived = HemiAlgebra::from_fn(alg.base().clone(), |a, b| sym.sim(a, alg.meet(a, b)))
        .unwrap_or_else(|e| panic!("⇒ must be a hemiimplication: {e}"));
    let n = alg.size();
    assert!(
        first_pair(n, |a, b| derived.imp(a, derived.meet(a, b)) != derived.imp(a, b)).is_none(),
        "⇒ must satisfy (H4)"
    );
    assert!(
        first_pair(n, |a, b| alg.leq(b, a) && derived.imp(a, b) != sym.sim(a, b)).is_none(),
        "⇒ must agree with ∼ below the antecedent"
    );
    derived
}

fn first_difference(x: &HemiAlgebra, y: &HemiAlgebra) -> Option<Vec<Elem>> {
    first_pair(x.size(), |a, b| x.imp(a, b) != y.imp(a, b))
}

/// Whether `alg` is recovered from its symmetrization by `⇒`. This holds
/// exactly on the algebras satisfying `a → (a ∧ b) = a → b`.
pub fn check_roundtrip_h4(alg: &HemiAlgebra) -> Check {
    let back = derive_arrow(&symmetrize(alg));
    let check = Check::from_first("roundtrip_h4", first_difference(&back, alg));
    let h4 = first_pair(alg.size(), |a, b| alg.imp(a, alg.meet(a, b)) != alg.imp(a, b)).is_none();
    assert_eq!(h4, check.holds(), "round trip through ∼ must succeed exactly under (H4)");
    check
}

/// Whether a symmetric algebra is recovered by symmetrizing its `⇒`. This
/// equation is condition (S).
pub fn check_roundtrip_s(sym: &SymmetricAlgebra) -> Check {
    let back = symmetrize(&derive_arrow(sym));
    Check::from_first("roundtrip_s", first_difference(back.algebra(), sym.algebra()))
}

/// The largest `c` with `a ∧ c = b ∧ c`, if that set has a maximum.
pub fn max_agreement(alg: &HemiAlgebra, a: Elem, b: Elem) -> Option<Elem> {
    let agreeing: Vec<Elem> = alg.elements().filter(|&c| alg.meet(a, c) == alg.meet(b, c)).collect();
    agreeing.iter().copied().find(|&m| agreeing.iter().all(|&c| alg.leq(c, m)))
}

fn check_max_formula(sym: &HemiAlgebra) -> Check {
    Check::from_first("max_formula", first_pair(sym.size(), |a, b| max_agreement(sym, a, b) != Some(sym.imp(a, b))))
}

fn first_failure(checks: impl IntoIterator<Item = Check>, name: &str) -> Check {
    checks.into_iter().find(|c| !c.holds()).unwrap_or_else(|| Check::pass(name))
}

/// Checks the correspondence between implicative semilattices and their
/// equivalential counterparts on one instance.
///
/// For an implicative `alg`: the symmetrization satisfies the equivalential
/// axioms and the max formula, `⇒` gives back `alg`, and that `⇒` is a
/// residuum. For a symmetric `alg` satisfying the equivalential axioms:
/// `⇒` is a residuum and its `↔` gives back `alg`.
pub fn check_is_es_equivalence(alg: &HemiAlgebra) -> Result<Check, SymmetryError> {
    let report = classify(alg);
    if report.implicative.holds() {
        let sym = symmetrize(alg);
        let es = es_conditions(sym.algebra());
        let es_check = match es.first_failure() {
            Some(c) => Check::fail(format!("symmetrized_{}", c.property), c.witness.clone().unwrap_or_default()),
            None => Check::pass("symmetrized_es"),
        };
        let derived = derive_arrow(&sym);
        let roundtrip = Check::from_first("roundtrip", first_difference(&derived, alg));
        let mut residuation = classify(&derived).implicative;
        residuation.property = "residuation".into();
        // a → b = a ↔ (a ∧ b)
        let rla_form =
            Check::from_first("rla_form", first_pair(alg.size(), |a, b| alg.imp(a, b) != alg.rla(a, alg.meet(a, b))));
        return Ok(first_failure(
            [es_check, check_max_formula(sym.algebra()), roundtrip, residuation, rla_form],
            "is_es_equivalence",
        ));
    }
    if report.es_member.holds() && report.symmetric.holds() {
        let sym = SymmetricAlgebra::new(alg.clone())?;
        let derived = derive_arrow(&sym);
        let mut implicative = classify(&derived).implicative;
        implicative.property = "derived_implicative".into();
        let rla_back =
            Check::from_first("rla_of_derived", first_pair(alg.size(), |a, b| sym.sim(a, b) != derived.rla(a, b)));
        return Ok(first_failure([implicative, rla_back, check_max_formula(alg)], "is_es_equivalence"));
    }
    Err(SymmetryError::NotApplicable {
        implicative: report.implicative.witness.unwrap_or_default(),
        equivalential: report.es_member.witness.or(report.symmetric.witness).unwrap_or_default(),
    })
}
