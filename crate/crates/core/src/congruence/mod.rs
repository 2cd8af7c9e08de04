//! Filters, congruent filters and congruences.
//!
//! Congruences of a hemiimplicative semilattice correspond to its
//! *congruent* filters: filters `F` closed under the term
//!
//! ```text
//! t(a, b, f) = (a → b) ↔ ((a ∧ f) → (b ∧ f)),   f ∈ F.
//! ```
//!
//! A congruent filter `F` yields the congruence `Θ(F)` relating `a` and `b`
//! when `a ∧ f = b ∧ f` for some `f ∈ F`; the congruence `θ` gives back the
//! filter `1/θ`. The functions here compute both sides of that
//! correspondence, the per-kind shortcuts for the six canonical
//! implications, and principal congruences through the least congruent
//! filter containing an element.

mod filter;
pub mod oracle;
mod partition;

use thiserror::Error;

pub use filter::{enumerate_filters, is_filter, upset, ElemSet, FilterSet};
pub use oracle::brute_force_generated_congruence;
pub use partition::CongruencePartition;

use crate::algebra::{Check, HemiAlgebra};
use crate::constructions::{membership_in_kind, ImplicationKind};
use crate::semilattice::{Elem, FiniteSemilattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("the algebra's implication is not the `{0}` construction")]
    KindMismatch(ImplicationKind),
    #[error("the order is not total: {a} and {b} are incomparable")]
    NotAChain { a: Elem, b: Elem },
    #[error("filter is not congruent: t({}, {}, {}) is outside it", .witness[0], .witness[1], .witness[2])]
    NotCongruentFilter { witness: Vec<Elem> },
}

/// `t(x, y, f) = (x → y) ↔ ((x ∧ f) → (y ∧ f))`.
#[inline]
pub fn t_term(alg: &HemiAlgebra, x: Elem, y: Elem, f: Elem) -> Elem {
    alg.rla(alg.imp(x, y), alg.imp(alg.meet(x, f), alg.meet(y, f)))
}

/// Whether `t(a, b, f) ∈ F` for all `a, b` and all `f ∈ F`.
///
/// On failure the witness is the first `(a, b, f)`, in lexicographic order,
/// whose `t` value is the least element of the algebra; only when no
/// violation reaches the bottom is it the first violating triple outright.
/// A bottom-valued witness shows at once that the congruent filter
/// generated by `F` is the whole algebra.
pub fn is_congruent_filter(alg: &HemiAlgebra, filter: FilterSet) -> Check {
    let least = alg.base().least();
    let mut first = None;
    for a in alg.elements() {
        for b in alg.elements() {
            for f in filter.iter() {
                let t = t_term(alg, a, b, f);
                if filter.contains(t) {
                    continue;
                }
                if t == least {
                    return Check::fail("congruent_filter", vec![a, b, f]);
                }
                first.get_or_insert_with(|| vec![a, b, f]);
            }
        }
    }
    Check::from_first("congruent_filter", first)
}

/// First `(x, y, f)` with `f ∈ F` for which `cond` fails.
fn first_failing(
    alg: &HemiAlgebra,
    filter: FilterSet,
    mut cond: impl FnMut(Elem, Elem, Elem) -> bool,
) -> Option<Vec<Elem>> {
    for x in alg.elements() {
        for y in alg.elements() {
            for f in filter.iter() {
                if !cond(x, y, f) {
                    return Some(vec![x, y, f]);
                }
            }
        }
    }
    None
}

/// Decides congruence of `filter` by the characterization specific to the
/// algebra's implication kind, without evaluating the `t` term.
///
/// * `discrete-zero`, `order-zero`: `F = {1}` or `F = A`.
/// * `order-consequent`: for `x ≰ y`, `y ∈ F` whenever `x ∧ f ≤ y ∧ f`, or
///   `x ∧ f ≰ y ∧ f` and `y ≰ f`; for `x ≤ y` with `x ∧ f ≰ y ∧ f`, `y ∈ F`.
/// * `eq-consequent`: for `x ≠ y`, `y ∈ F` whenever `x ∧ f = y ∧ f`, or
///   `x ∧ f ≠ y ∧ f` and `y ≰ f`.
/// * `order-meet`: for `x ≰ y`, `x ∧ y ∈ F` whenever `x ∧ f ≤ y ∧ f`, or
///   `x ∧ f ≰ y ∧ f` and `x ∧ y ≰ f`.
/// * `eq-meet`: for `x ≠ y`, `x ∧ y ∈ F` whenever `x ∧ f = y ∧ f`, or
///   `x ∧ f ≠ y ∧ f` and `x ∧ y ≰ f`.
pub fn is_congruent_filter_specialized(
    alg: &HemiAlgebra,
    filter: FilterSet,
    kind: ImplicationKind,
) -> Result<Check, CongruenceError> {
    if !membership_in_kind(alg, kind) {
        return Err(CongruenceError::KindMismatch(kind));
    }
    let s = alg.base();
    let leq = |a, b| s.leq(a, b);
    let m = |a, b| s.meet(a, b);
    let inf = filter.contains_fn();
    let property = format!("congruent_filter[{kind}]");
    let witness = match kind {
        ImplicationKind::DiscreteZero | ImplicationKind::OrderZero => {
            let trivial = filter.len() == 1 || filter.len() == s.size();
            (!trivial).then(|| vec![filter.generator(s)])
        }
        ImplicationKind::OrderConsequent => first_failing(alg, filter, |x, y, f| {
            let (xf, yf) = (m(x, f), m(y, f));
            let c1 = !(!leq(x, y) && leq(xf, yf)) || inf(y);
            let c2 = !(!leq(x, y) && !leq(xf, yf) && !leq(y, f)) || inf(y);
            let c3 = !(leq(x, y) && !leq(xf, yf)) || inf(y);
            c1 && c2 && c3
        }),
        ImplicationKind::EqConsequent => first_failing(alg, filter, |x, y, f| {
            let (xf, yf) = (m(x, f), m(y, f));
            let c1 = !(x != y && xf == yf) || inf(y);
            let c2 = !(x != y && xf != yf && !leq(y, f)) || inf(y);
            c1 && c2
        }),
        ImplicationKind::OrderMeet => first_failing(alg, filter, |x, y, f| {
            let (xf, yf, xy) = (m(x, f), m(y, f), m(x, y));
            let c1 = !(!leq(x, y) && leq(xf, yf)) || inf(xy);
            let c2 = !(!leq(x, y) && !leq(xf, yf) && !leq(xy, f)) || inf(xy);
            c1 && c2
        }),
        ImplicationKind::EqMeet => first_failing(alg, filter, |x, y, f| {
            let (xf, yf, xy) = (m(x, f), m(y, f), m(x, y));
            let c1 = !(x != y && xf == yf) || inf(xy);
            let c2 = !(x != y && xf != yf && !leq(xy, f)) || inf(xy);
            c1 && c2
        }),
    };
    Ok(Check::from_first(property, witness))
}

/// Decides congruence of `filter` on a totally ordered algebra by the three
/// positions of `f` relative to `x` and `y`:
///
/// * `f ≤ x ∧ y`: `(x → y) ↔ 1 ∈ F`;
/// * `y ≤ f ≤ x`: `(x → y) ↔ (f → y) ∈ F`;
/// * `x ≤ f ≤ y`: `(x → y) ↔ (x → f) ∈ F`.
pub fn is_congruent_filter_chain(alg: &HemiAlgebra, filter: FilterSet) -> Result<Check, CongruenceError> {
    let s = alg.base();
    if let Some(w) = crate::algebra::first_pair(s.size(), |a, b| !s.leq(a, b) && !s.leq(b, a)) {
        return Err(CongruenceError::NotAChain { a: w[0], b: w[1] });
    }
    let top = alg.top();
    let inf = filter.contains_fn();
    let witness = first_failing(alg, filter, |x, y, f| {
        let xy = alg.imp(x, y);
        let a = !s.leq(f, s.meet(x, y)) || inf(alg.rla(xy, top));
        let b = !(s.leq(y, f) && s.leq(f, x)) || inf(alg.rla(xy, alg.imp(f, y)));
        let c = !(s.leq(x, f) && s.leq(f, y)) || inf(alg.rla(xy, alg.imp(x, f)));
        a && b && c
    });
    Ok(Check::from_first("congruent_filter[chain]", witness))
}

impl FilterSet {
    fn contains_fn(self) -> impl Fn(Elem) -> bool {
        move |a| self.contains(a)
    }
}

/// `a ∧ f = b ∧ f` for some `f ∈ F`: the semilattice congruence of any
/// filter, with no compatibility check against `→`.
pub fn filter_relation(s: &FiniteSemilattice, filter: FilterSet) -> CongruencePartition {
    CongruencePartition::from_relation(s.size(), |a, b| filter.iter().any(|f| s.meet(a, f) == s.meet(b, f)))
}

/// `Θ(F)` of a congruent filter.
pub fn theta_of_filter(alg: &HemiAlgebra, filter: FilterSet) -> Result<CongruencePartition, CongruenceError> {
    let check = is_congruent_filter(alg, filter);
    if let Some(witness) = check.witness {
        return Err(CongruenceError::NotCongruentFilter { witness });
    }
    let theta = filter_relation(alg.base(), filter);
    let compat = theta.check_compatible(alg);
    assert!(compat.holds(), "Θ of a congruent filter must be a congruence: {:?}", compat.witness);
    Ok(theta)
}

/// The class of the top element, `1/θ`.
pub fn top_class(alg: &HemiAlgebra, theta: &CongruencePartition) -> ElemSet {
    theta.class_of(alg.top())
}

/// One entry per congruent filter, in filter order, paired with its
/// congruence.
pub fn congruence_lattice(alg: &HemiAlgebra) -> Vec<(FilterSet, CongruencePartition)> {
    let entries: Vec<(FilterSet, CongruencePartition)> = enumerate_filters(alg.base())
        .into_iter()
        .filter(|&f| is_congruent_filter(alg, f).holds())
        .map(|f| {
            let theta = theta_of_filter(alg, f).expect("filter was checked congruent");
            (f, theta)
        })
        .collect();
    for (f, theta) in &entries {
        assert_eq!(top_class(alg, theta), f.set(), "1/Θ(F) must be F");
        for (g, phi) in &entries {
            assert_eq!(f.is_subset(*g), theta.refines(phi), "Θ must be an order isomorphism");
        }
    }
    entries
}

/// The stages `T_0 = X, T_1, …` of the generated congruent filter, ending
/// at the first repeated stage. Each step takes the filter generated by the
/// previous stage together with every `t(x, y, w)` for `w` in it.
pub fn generation_stages(alg: &HemiAlgebra, seed: ElemSet) -> Vec<ElemSet> {
    let s = alg.base();
    let mut stages = vec![seed];
    loop {
        let current = *stages.last().expect("non-empty");
        let mut next = current;
        for w in current.iter() {
            for x in alg.elements() {
                for y in alg.elements() {
                    next.insert(t_term(alg, x, y, w));
                }
            }
        }
        let next = FilterSet::generated_by(s, next).set().union(current);
        if next == current {
            return stages;
        }
        stages.push(next);
    }
}

/// The least congruent filter containing `a`.
pub fn congruent_filter_generated(alg: &HemiAlgebra, a: Elem) -> FilterSet {
    let stages = generation_stages(alg, ElemSet::singleton(a));
    let last = *stages.last().expect("non-empty");
    let filter = FilterSet::new(alg.base(), last).expect("the generation fixpoint is a filter");
    debug_assert!(is_congruent_filter(alg, filter).holds());
    filter
}

/// `θ(a, b)`: `x θ y` iff `x ↔ y` lies in the congruent filter generated by
/// `a ↔ b`.
pub fn principal_congruence(alg: &HemiAlgebra, a: Elem, b: Elem) -> CongruencePartition {
    let filter = congruent_filter_generated(alg, alg.rla(a, b));
    let theta = CongruencePartition::from_relation(alg.size(), |x, y| filter.contains(alg.rla(x, y)));
    debug_assert_eq!(Ok(&theta), theta_of_filter(alg, filter).as_ref());
    theta
}
