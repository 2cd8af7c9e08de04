//! Exhaustive membership checks for the subvarieties of interest.

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::algebra::{first_pair, first_triple, Check, HemiAlgebra};
use crate::semilattice::Elem;

/// Equational and quasi-equational flags of one algebra.
///
/// Each field holds a [`Check`]; a failing check carries the
/// lexicographically first violating tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    /// `a → a = 1`
    pub h2: Check,
    /// `a ∧ (a → b) ≤ b`
    pub h3: Check,
    /// `a → (a ∧ b) = a → b`
    pub h4: Check,
    /// `(a ∧ b) → b = 1`
    pub h5: Check,
    /// `a → b = b → a`
    pub symmetric: Check,
    /// `a → b = (a → (a ∧ b)) ∧ (b → (a ∧ b))`
    pub condition_s: Check,
    /// `a ∧ b ≤ c` iff `a ≤ b → c`
    pub implicative: Check,
    /// The implication, read as an equivalence, satisfies the axioms of the
    /// variety term-equivalent to implicative semilattices.
    pub es_member: Check,
}

impl ClassReport {
    pub fn flags(&self) -> [(&'static str, &Check); 8] {
        [
            ("h2", &self.h2),
            ("h3", &self.h3),
            ("h4", &self.h4),
            ("h5", &self.h5),
            ("symmetric", &self.symmetric),
            ("condition_s", &self.condition_s),
            ("implicative", &self.implicative),
            ("es_member", &self.es_member),
        ]
    }

    pub fn flag(&self, name: &str) -> Option<&Check> {
        self.flags().into_iter().find(|(n, _)| *n == name).map(|(_, c)| c)
    }
}

impl Serialize for ClassReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let flags = self.flags();
        let mut map = serializer.serialize_map(Some(flags.len() + 1))?;
        for (name, check) in flags {
            map.serialize_entry(name, &check.holds())?;
        }
        let witnesses: std::collections::BTreeMap<&str, &Vec<Elem>> =
            flags.iter().filter_map(|(name, c)| c.witness.as_ref().map(|w| (*name, w))).collect();
        map.serialize_entry("witnesses", &witnesses)?;
        map.end()
    }
}

/// The conditions defining the equivalential counterpart of implicative
/// semilattices, evaluated with `→` read as the equivalence `∼`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsConditions {
    /// `a ∼ a = 1`
    pub reflexive: Check,
    /// `a ∧ (a ∼ b) = b ∧ (a ∼ b)`
    pub agrees: Check,
    /// if `a ∧ c = b ∧ c` then `c ≤ a ∼ b`
    pub maximal: Check,
    /// `c ∧ ((a ∧ c) ∼ (b ∧ c)) ≤ a ∼ b`
    pub maximal_inequality: Check,
}

impl EsConditions {
    pub fn holds(&self) -> bool {
        self.reflexive.holds() && self.agrees.holds() && self.maximal_inequality.holds()
    }

    /// The first failing condition, in the order listed.
    pub fn first_failure(&self) -> Option<&Check> {
        [&self.reflexive, &self.agrees, &self.maximal_inequality].into_iter().find(|c| !c.holds())
    }
}

pub fn es_conditions(alg: &HemiAlgebra) -> EsConditions {
    let n = alg.size();
    let eq = |a, b| alg.imp(a, b);
    let reflexive = Check::from_first("es_reflexive", (0..n).find(|&a| eq(a, a) != alg.top()).map(|a| vec![a]));
    let agrees = Check::from_first("es_agrees", first_pair(n, |a, b| alg.meet(a, eq(a, b)) != alg.meet(b, eq(a, b))));
    let maximal = Check::from_first(
        "es_maximal",
        first_triple(n, |a, b, c| alg.meet(a, c) == alg.meet(b, c) && !alg.leq(c, eq(a, b))),
    );
    let maximal_inequality = Check::from_first(
        "es_maximal_inequality",
        first_triple(n, |a, b, c| {
            let lhs = alg.meet(c, eq(alg.meet(a, c), alg.meet(b, c)));
            !alg.leq(lhs, eq(a, b))
        }),
    );
    if reflexive.holds() && agrees.holds() {
        assert_eq!(
            maximal.holds(),
            maximal_inequality.holds(),
            "the conditional and inequational maximality conditions disagree"
        );
    }
    EsConditions { reflexive, agrees, maximal, maximal_inequality }
}

/// Computes every flag of the report by exhaustive quantification.
pub fn classify(alg: &HemiAlgebra) -> ClassReport {
    let n = alg.size();
    let top = alg.top();
    let h2 = Check::from_first("h2", (0..n).find(|&a| alg.imp(a, a) != top).map(|a| vec![a]));
    let h3 = Check::from_first("h3", first_pair(n, |a, b| !alg.leq(alg.meet(a, alg.imp(a, b)), b)));
    let h4 = Check::from_first("h4", first_pair(n, |a, b| alg.imp(a, alg.meet(a, b)) != alg.imp(a, b)));
    let h5 = Check::from_first("h5", first_pair(n, |a, b| alg.imp(alg.meet(a, b), b) != top));
    let symmetric = Check::from_first("symmetric", first_pair(n, |a, b| alg.imp(a, b) != alg.imp(b, a)));
    let condition_s = Check::from_first(
        "condition_s",
        first_pair(n, |a, b| {
            let ab = alg.meet(a, b);
            alg.imp(a, b) != alg.meet(alg.imp(a, ab), alg.imp(b, ab))
        }),
    );
    let implicative = Check::from_first(
        "implicative",
        first_triple(n, |a, b, c| alg.leq(alg.meet(a, b), c) != alg.leq(a, alg.imp(b, c))),
    );
    let es = es_conditions(alg);
    let es_member = match es.first_failure() {
        None => Check::pass("es_member"),
        Some(c) => Check::fail("es_member", c.witness.clone().unwrap_or_default()),
    };

    if implicative.holds() {
        assert!(h4.holds() && h5.holds(), "an implicative semilattice must satisfy (H4) and (H5)");
        let sym = crate::symmetry::symmetrize(alg);
        assert!(
            es_conditions(sym.algebra()).holds(),
            "the symmetrization of an implicative semilattice must satisfy the equivalential axioms"
        );
    }

    ClassReport { h2, h3, h4, h5, symmetric, condition_s, implicative, es_member }
}

/// Whether `a ≤ b` iff `a → b = 1` for all pairs. The direction
/// `a → b = 1 ⇒ a ≤ b` holds in every algebra; the witness, if any, is a
/// pair with `a ≤ b` but `a → b ≠ 1`.
pub fn check_order_reflection(alg: &HemiAlgebra) -> Check {
    let top = alg.top();
    let n = alg.size();
    debug_assert!(
        first_pair(n, |a, b| alg.imp(a, b) == top && !alg.leq(a, b)).is_none(),
        "a → b = 1 without a ≤ b contradicts a ∧ (a → b) ≤ b"
    );
    Check::from_first("order_reflection", first_pair(n, |a, b| alg.leq(a, b) != (alg.imp(a, b) == top)))
}
