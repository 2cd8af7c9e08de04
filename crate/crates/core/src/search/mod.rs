//! Exhaustive enumeration of small models and counterexample hunts.
//!
//! Enumeration order is fixed: semilattices by size, then by meet table;
//! implications on one semilattice by their row-major table. "First
//! witness" therefore means the same thing on every run and every thread
//! count.

mod canonical;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeMap, Serializer};

pub use canonical::{canonical_form, canonical_form_semilattice};

use crate::algebra::HemiAlgebra;
use crate::classify::classify;
use crate::constructions::{build_implication, first_kind_mismatch, ImplicationKind};
use crate::format::to_json;
use crate::semilattice::{Elem, FiniteSemilattice};

/// How far an enumeration goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBound {
    max_size: usize,
    pub modulo_isomorphism: bool,
}

impl EnumerationBound {
    /// # Panics
    /// If `max_size` is zero.
    pub fn new(max_size: usize, modulo_isomorphism: bool) -> Self {
        assert!(max_size >= 1, "enumeration bound must be at least 1");
        EnumerationBound { max_size, modulo_isomorphism }
    }

    pub fn max_size(self) -> usize {
        self.max_size
    }
}

impl Default for EnumerationBound {
    fn default() -> Self {
        EnumerationBound::new(5, true)
    }
}

/// Largest factor size tried by the default product search.
pub const DEFAULT_FACTOR_SIZE: usize = 3;

/// Naturally labeled bounded semilattices of exactly `n` elements: index
/// order extends the partial order, `0` is the bottom and `n-1` the top.
/// Sorted by meet table.
pub fn naturally_labeled_semilattices(n: usize) -> Vec<FiniteSemilattice> {
    assert!((1..=crate::semilattice::MAX_SIZE).contains(&n));
    if n == 1 {
        return vec![FiniteSemilattice::chain(1)];
    }
    let interior: Vec<(Elem, Elem)> = (1..n - 1).flat_map(|i| (i + 1..n - 1).map(move |j| (i, j))).collect();
    assert!(interior.len() < 32, "semilattice enumeration beyond desk scale");
    let mut out = Vec::new();
    for mask in 0u32..(1 << interior.len()) {
        // le[i][j] iff i ≤ j
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
            row[n - 1] = true;
        }
        le[0].fill(true);
        for (k, &(i, j)) in interior.iter().enumerate() {
            if mask >> k & 1 == 1 {
                le[i][j] = true;
            }
        }
        let transitive = (0..n).all(|a| (0..n).all(|b| !le[a][b] || (0..n).all(|c| !le[b][c] || le[a][c])));
        if !transitive {
            continue;
        }
        let mut meet = Vec::with_capacity(n * n);
        let mut ok = true;
        'pairs: for a in 0..n {
            for b in 0..n {
                let lower: Vec<Elem> = (0..n).filter(|&c| le[c][a] && le[c][b]).collect();
                match lower.iter().copied().find(|&m| lower.iter().all(|&c| le[c][m])) {
                    Some(m) => meet.push(m),
                    None => {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
        }
        if ok {
            out.push(FiniteSemilattice::from_flat(n, meet, n - 1, Some(0)).expect("meet of a lattice order"));
        }
    }
    out.sort_by(|x, y| x.meet_flat().cmp(y.meet_flat()));
    out
}

/// Semilattices of exactly `n` elements in enumeration order, one per
/// isomorphism class when requested.
pub fn semilattices_of_size(n: usize, modulo_isomorphism: bool) -> Vec<FiniteSemilattice> {
    let all = naturally_labeled_semilattices(n);
    if !modulo_isomorphism {
        return all;
    }
    let mut seen = HashSet::new();
    all.into_iter().filter(|s| seen.insert(canonical_form_semilattice(s))).collect()
}

/// Every bounded semilattice up to the bound, smallest first.
///
/// Without `modulo_isomorphism` the stream holds every naturally labeled
/// semilattice, so isomorphic copies with different labelings appear.
pub fn enumerate_semilattices(bound: EnumerationBound) -> impl Iterator<Item = FiniteSemilattice> {
    (1..=bound.max_size).flat_map(move |n| semilattices_of_size(n, bound.modulo_isomorphism))
}

/// Allowed values of `a → b`: the top on the diagonal, otherwise every `c`
/// with `a ∧ c ≤ b`.
fn implication_candidates(s: &FiniteSemilattice) -> Vec<Vec<Elem>> {
    let n = s.size();
    (0..n * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            if a == b {
                vec![s.top()]
            } else {
                s.elements().filter(|&c| s.leq(s.meet(a, c), b)).collect()
            }
        })
        .collect()
}

/// Number of hemiimplications on `s`.
pub fn count_hemi_implications(s: &FiniteSemilattice) -> u128 {
    implication_candidates(s).iter().map(|c| c.len() as u128).product()
}

/// Streams every hemiimplicative structure on a semilattice.
pub struct HemiImplications {
    base: FiniteSemilattice,
    candidates: Vec<Vec<Elem>>,
    digits: Option<Vec<usize>>,
}

impl Iterator for HemiImplications {
    type Item = HemiAlgebra;

    fn next(&mut self) -> Option<HemiAlgebra> {
        let digits = self.digits.as_mut()?;
        let imp: Vec<Elem> = digits.iter().zip(&self.candidates).map(|(&d, c)| c[d]).collect();
        // Advance the odometer; the last cell moves fastest.
        let mut i = digits.len();
        loop {
            if i == 0 {
                self.digits = None;
                break;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < self.candidates[i].len() {
                break;
            }
            digits[i] = 0;
        }
        Some(HemiAlgebra::from_flat(self.base.clone(), imp).expect("candidates satisfy the laws"))
    }
}

/// Every implication table with `a → a = 1` and `a ∧ (a → b) ≤ b`, each
/// exactly once, in lexicographic order.
pub fn enumerate_hemi_implications(s: &FiniteSemilattice) -> HemiImplications {
    let candidates = implication_candidates(s);
    HemiImplications { base: s.clone(), digits: Some(vec![0; candidates.len()]), candidates }
}

/// Every hemiimplicative semilattice on every semilattice up to the bound.
pub fn enumerate_algebras(bound: EnumerationBound) -> impl Iterator<Item = HemiAlgebra> {
    enumerate_semilattices(bound).flat_map(|s| enumerate_hemi_implications(&s))
}

fn pair_label(s: &FiniteSemilattice, t: &FiniteSemilattice, i: Elem, j: Elem) -> String {
    format!("{},{}", s.label(i), t.label(j))
}

/// Direct product of semilattices; `(i, j)` is stored at `i * |t| + j`.
pub fn product_semilattice(s: &FiniteSemilattice, t: &FiniteSemilattice) -> FiniteSemilattice {
    let (n, m) = (s.size(), t.size());
    let size = n * m;
    let mut meet = Vec::with_capacity(size * size);
    for x in 0..size {
        for y in 0..size {
            meet.push(s.meet(x / m, y / m) * m + t.meet(x % m, y % m));
        }
    }
    let bottom = s.bottom().zip(t.bottom()).map(|(a, b)| a * m + b);
    let p = FiniteSemilattice::from_flat(size, meet, s.top() * m + t.top(), bottom)
        .expect("products of semilattices are semilattices");
    let p = if bottom.is_none() { p.without_bottom() } else { p };
    if s.labels().is_some() || t.labels().is_some() {
        let labels = (0..size).map(|x| pair_label(s, t, x / m, x % m)).collect();
        p.with_labels(labels).expect("one label per pair")
    } else {
        p
    }
}

/// Direct product with pointwise operations.
pub fn product(a: &HemiAlgebra, b: &HemiAlgebra) -> HemiAlgebra {
    let base = product_semilattice(a.base(), b.base());
    let m = b.size();
    HemiAlgebra::from_fn(base, |x, y| a.imp(x / m, y / m) * m + b.imp(x % m, y % m))
        .expect("pointwise operations preserve the laws")
}

/// A concrete violation found by a search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub property: String,
    pub tuple: Vec<Elem>,
    pub algebra: HemiAlgebra,
    /// For product searches, the two factors of `algebra`.
    pub factors: Vec<HemiAlgebra>,
}

impl Witness {
    /// Re-evaluates the property on the witness; `true` when the recorded
    /// violation is reproduced.
    pub fn reproduces(&self) -> bool {
        if let Some(kind) = self.property.strip_prefix("membership:") {
            let Ok(kind) = kind.parse::<ImplicationKind>() else { return false };
            let product_ok = match self.factors.as_slice() {
                [x, y] => product(x, y) == self.algebra,
                [] => true,
                _ => false,
            };
            return product_ok && first_kind_mismatch(&self.algebra, kind).as_ref() == Some(&self.tuple);
        }
        classify(&self.algebra).flag(&self.property).is_some_and(|c| c.witness.as_ref() == Some(&self.tuple))
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("property", &self.property)?;
        map.serialize_entry("tuple", &self.tuple)?;
        map.serialize_entry("algebra", &to_json(&self.algebra))?;
        if !self.factors.is_empty() {
            let factors: Vec<_> = self.factors.iter().map(to_json).collect();
            map.serialize_entry("factors", &factors)?;
        }
        map.end()
    }
}

/// The members of the class of `kind` on every semilattice up to the bound.
pub fn kind_members(kind: ImplicationKind, bound: EnumerationBound) -> Vec<HemiAlgebra> {
    enumerate_semilattices(bound).filter_map(|s| build_implication(&s, kind).ok()).collect()
}

/// Searches pairs of members of the class of `kind` (factors up to the
/// bound) for a product outside the class.
pub fn find_product_escape(kind: ImplicationKind, bound: EnumerationBound) -> Option<Witness> {
    let members = kind_members(kind, bound);
    let pairs: Vec<(usize, usize)> = (0..members.len()).flat_map(|i| (0..members.len()).map(move |j| (i, j))).collect();
    pairs.into_par_iter().find_map_first(|(i, j)| {
        let p = product(&members[i], &members[j]);
        first_kind_mismatch(&p, kind).map(|tuple| Witness {
            property: format!("membership:{kind}"),
            tuple,
            algebra: p,
            factors: vec![members[i].clone(), members[j].clone()],
        })
    })
}

/// First enumerated algebra for which `found` returns a tuple.
fn find_first(
    bound: EnumerationBound,
    property: &str,
    found: impl Fn(&HemiAlgebra) -> Option<Vec<Elem>> + Sync,
) -> Option<Witness> {
    enumerate_semilattices(bound).find_map(|s| {
        enumerate_hemi_implications(&s).find_map(|a| {
            found(&a).map(|tuple| Witness { property: property.to_owned(), tuple, algebra: a, factors: Vec::new() })
        })
    })
}

/// The first enumerated algebra violating the named flag of
/// [`classify`](crate::classify::classify).
pub fn find_violation(flag: &str, bound: EnumerationBound) -> Option<Witness> {
    find_first(bound, flag, |a| classify(a).flag(flag).and_then(|c| c.witness.clone()))
}

/// Minimal algebras separating the nested varieties defined by (H4) and
/// (H5): first one satisfying (H5) but not (H4), then one failing (H5).
/// Either may be missing if the bound is too small.
pub fn find_variety_separators(bound: EnumerationBound) -> Vec<Witness> {
    let h5_not_h4 = find_first(bound, "h4", |a| {
        let r = classify(a);
        if r.h5.holds() {
            r.h4.witness
        } else {
            None
        }
    });
    let not_h5 = find_violation("h5", bound);
    h5_not_h4.into_iter().chain(not_h5).collect()
}
