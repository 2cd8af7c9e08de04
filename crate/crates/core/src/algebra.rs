//! Hemiimplicative semilattices `(A, ∧, →, 1)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semilattice::{flatten_table, Elem, FiniteSemilattice, SemilatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "error", rename_all = "snake_case")]
pub enum HemiError {
    #[error(transparent)]
    Table(#[from] SemilatticeError),
    #[error("{a} → {a} is not the top element")]
    H2Violation { a: Elem },
    #[error("{a} ∧ ({a} → {b}) is not below {b}")]
    H3Violation { a: Elem, b: Elem },
}

impl HemiError {
    pub fn witness(&self) -> Option<Vec<Elem>> {
        match self {
            HemiError::Table(e) => e.witness(),
            HemiError::H2Violation { a } => Some(vec![*a]),
            HemiError::H3Violation { a, b } => Some(vec![*a, *b]),
        }
    }
}

/// Outcome of an exhaustive check of some property: the property name and,
/// when it fails, the lexicographically first violating tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub property: String,
    pub witness: Option<Vec<Elem>>,
}

impl Check {
    pub fn pass(property: impl Into<String>) -> Self {
        Check { property: property.into(), witness: None }
    }

    pub fn fail(property: impl Into<String>, witness: Vec<Elem>) -> Self {
        Check { property: property.into(), witness: Some(witness) }
    }

    /// Builds a check from the first failing tuple, if any.
    pub fn from_first(property: impl Into<String>, first: Option<Vec<Elem>>) -> Self {
        Check { property: property.into(), witness: first }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Lexicographically first pair `(a, b)` in `0..n` satisfying `pred`.
pub(crate) fn first_pair(n: usize, mut pred: impl FnMut(Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for a in 0..n {
        for b in 0..n {
            if pred(a, b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// Lexicographically first triple `(a, b, c)` in `0..n` satisfying `pred`.
pub(crate) fn first_triple(n: usize, mut pred: impl FnMut(Elem, Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if pred(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// A validated hemiimplicative semilattice.
///
/// A value of this type always satisfies `a → a = 1` and
/// `a ∧ (a → b) ≤ b`; nothing downstream re-checks them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HemiAlgebra {
    base: FiniteSemilattice,
    imp: Vec<Elem>,
}

/// Validates an implication table over an already validated semilattice.
pub fn validate_hemi(base: FiniteSemilattice, imp: &[Vec<Elem>]) -> Result<HemiAlgebra, HemiError> {
    let flat = flatten_table(imp, base.size())?;
    HemiAlgebra::from_flat(base, flat)
}

impl HemiAlgebra {
    /// Validates a row-major implication table.
    pub fn from_flat(base: FiniteSemilattice, imp: Vec<Elem>) -> Result<Self, HemiError> {
        let n = base.size();
        assert_eq!(imp.len(), n * n, "flat implication table has the wrong length");
        if let Some(i) = imp.iter().position(|&v| v >= n) {
            return Err(SemilatticeError::IndexOutOfRange { row: i / n, col: i % n, value: imp[i] }.into());
        }
        let top = base.top();
        let arrow = |a: Elem, b: Elem| imp[a * n + b];

        if let Some(a) = (0..n).find(|&a| arrow(a, a) != top) {
            return Err(HemiError::H2Violation { a });
        }

        // a ∧ (a → b) ≤ b, and separately the conditional form:
        // a ≤ b → c implies a ∧ b ≤ c.
        let pointwise = first_pair(n, |a, b| !base.leq(base.meet(a, arrow(a, b)), b));
        let conditional = first_triple(n, |a, b, c| base.leq(a, arrow(b, c)) && !base.leq(base.meet(a, b), c));
        assert_eq!(pointwise.is_none(), conditional.is_none(), "the two forms of the hemiresiduation law disagree");
        if let Some(w) = pointwise {
            return Err(HemiError::H3Violation { a: w[0], b: w[1] });
        }
        Ok(HemiAlgebra { base, imp })
    }

    /// Builds the algebra from a closure, validating the result.
    pub fn from_fn(base: FiniteSemilattice, mut f: impl FnMut(Elem, Elem) -> Elem) -> Result<Self, HemiError> {
        let n = base.size();
        let imp = (0..n * n).map(|i| f(i / n, i % n)).collect();
        HemiAlgebra::from_flat(base, imp)
    }

    #[inline]
    pub fn base(&self) -> &FiniteSemilattice {
        &self.base
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.base.size()
    }

    #[inline]
    pub fn top(&self) -> Elem {
        self.base.top()
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.base.meet(a, b)
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.base.leq(a, b)
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a * self.size() + b]
    }

    /// `a ↔ b = (a → b) ∧ (b → a)`.
    #[inline]
    pub fn rla(&self, a: Elem, b: Elem) -> Elem {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        self.base.elements()
    }

    pub fn imp_flat(&self) -> &[Elem] {
        &self.imp
    }

    pub fn imp_rows(&self) -> Vec<Vec<Elem>> {
        self.imp.chunks(self.size()).map(<[Elem]>::to_vec).collect()
    }

    /// Whether `a → b = b → a` everywhere.
    pub fn is_symmetric(&self) -> bool {
        first_pair(self.size(), |a, b| self.imp(a, b) != self.imp(b, a)).is_none()
    }

    /// Replaces the underlying semilattice's metadata (labels, designated
    /// bottom) while keeping the tables.
    pub fn with_base(mut self, base: FiniteSemilattice) -> Self {
        debug_assert_eq!(base.meet_flat(), self.base.meet_flat());
        self.base = base;
        self
    }

    /// Relabels the carrier: element `a` becomes `perm[a]`.
    pub fn relabel(&self, perm: &[Elem]) -> HemiAlgebra {
        let n = self.size();
        let base = self.base.relabel(perm);
        let mut imp = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                imp[perm[a] * n + perm[b]] = perm[self.imp(a, b)];
            }
        }
        HemiAlgebra { base, imp }
    }

    /// The relative pseudocomplement on the base, when it exists (it always
    /// does on a finite distributive lattice).
    pub fn heyting(base: FiniteSemilattice) -> Option<HemiAlgebra> {
        let n = base.size();
        let mut imp = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let below: Vec<Elem> = (0..n).filter(|&c| base.leq(base.meet(a, c), b)).collect();
                let max = below.iter().copied().find(|&m| below.iter().all(|&c| base.leq(c, m)))?;
                imp.push(max);
            }
        }
        HemiAlgebra::from_flat(base, imp).ok()
    }
}

/// `a ↔ b` of an algebra.
pub fn rla(algebra: &HemiAlgebra, a: Elem, b: Elem) -> Elem {
    algebra.rla(a, b)
}
