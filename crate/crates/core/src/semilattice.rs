//! Finite bounded meet-semilattices stored as operation tables.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An element of a finite algebra, given by its dense index `0..size`.
pub type Elem = usize;

/// Largest carrier the crate accepts. Element sets are packed into `u64`
/// bitsets throughout the congruence machinery.
pub const MAX_SIZE: usize = 64;

/// Reasons a meet table fails to describe a bounded semilattice.
///
/// Every law violation carries the lexicographically first offending tuple.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "error", rename_all = "snake_case")]
pub enum SemilatticeError {
    #[error("the carrier must have at least one element")]
    Empty,
    #[error("carrier of size {0} exceeds the supported maximum of {MAX_SIZE}")]
    TooLarge(usize),
    #[error("table row {row} has length {len}, expected {expected}")]
    RaggedTable { row: usize, len: usize, expected: usize },
    #[error("table entry ({row}, {col}) = {value} is not an element index")]
    IndexOutOfRange { row: usize, col: usize, value: usize },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("labels has {len} entries, expected {expected}")]
    LabelCount { len: usize, expected: usize },
    #[error("meet is not commutative: {a} ∧ {b} ≠ {b} ∧ {a}")]
    NotCommutative { a: Elem, b: Elem },
    #[error("meet is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    #[error("meet is not idempotent: {a} ∧ {a} ≠ {a}")]
    NotIdempotent { a: Elem },
    #[error("{top} is not the greatest element: {a} ∧ {top} ≠ {a}")]
    TopNotGreatest { a: Elem, top: Elem },
    #[error("{bottom} is not the least element: {a} ∧ {bottom} ≠ {bottom}")]
    BottomNotLeast { a: Elem, bottom: Elem },
}

impl SemilatticeError {
    /// The offending element tuple, if the error is a law violation.
    pub fn witness(&self) -> Option<Vec<Elem>> {
        use SemilatticeError::*;
        match *self {
            NotCommutative { a, b } => Some(vec![a, b]),
            NotAssociative { a, b, c } => Some(vec![a, b, c]),
            NotIdempotent { a } => Some(vec![a]),
            TopNotGreatest { a, top } => Some(vec![a, top]),
            BottomNotLeast { a, bottom } => Some(vec![a, bottom]),
            _ => None,
        }
    }
}

/// A validated finite bounded semilattice `(A, ∧, 1)`.
///
/// The order is the one induced by the meet: `a ≤ b` iff `a ∧ b = a`.
/// A finite bounded semilattice always has a least element (the meet of
/// the whole carrier); validation records it unless the caller explicitly
/// drops it with [`FiniteSemilattice::without_bottom`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemilattice {
    size: usize,
    meet: Vec<Elem>,
    top: Elem,
    bottom: Option<Elem>,
    labels: Option<Vec<String>>,
}

/// Checks that `table` is a square table over `0..n` and flattens it.
pub(crate) fn flatten_table(table: &[Vec<Elem>], n: usize) -> Result<Vec<Elem>, SemilatticeError> {
    if table.len() != n {
        return Err(SemilatticeError::RaggedTable { row: table.len(), len: 0, expected: n });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, cells) in table.iter().enumerate() {
        if cells.len() != n {
            return Err(SemilatticeError::RaggedTable { row, len: cells.len(), expected: n });
        }
        for (col, &value) in cells.iter().enumerate() {
            if value >= n {
                return Err(SemilatticeError::IndexOutOfRange { row, col, value });
            }
            flat.push(value);
        }
    }
    Ok(flat)
}

/// Validates a meet table with a designated top (and optionally bottom).
///
/// When `bottom` is `None` the least element is computed and stored.
pub fn validate_semilattice(
    meet: &[Vec<Elem>],
    top: Elem,
    bottom: Option<Elem>,
) -> Result<FiniteSemilattice, SemilatticeError> {
    let n = meet.len();
    if n == 0 {
        return Err(SemilatticeError::Empty);
    }
    if n > MAX_SIZE {
        return Err(SemilatticeError::TooLarge(n));
    }
    let flat = flatten_table(meet, n)?;
    FiniteSemilattice::from_flat(n, flat, top, bottom)
}

impl FiniteSemilattice {
    /// Validates a row-major meet table of `size * size` entries.
    pub fn from_flat(size: usize, meet: Vec<Elem>, top: Elem, bottom: Option<Elem>) -> Result<Self, SemilatticeError> {
        if size == 0 {
            return Err(SemilatticeError::Empty);
        }
        if size > MAX_SIZE {
            return Err(SemilatticeError::TooLarge(size));
        }
        assert_eq!(meet.len(), size * size, "flat meet table has the wrong length");
        if let Some(i) = meet.iter().position(|&v| v >= size) {
            return Err(SemilatticeError::IndexOutOfRange { row: i / size, col: i % size, value: meet[i] });
        }
        for e in [Some(top), bottom].into_iter().flatten() {
            if e >= size {
                return Err(SemilatticeError::ElementOutOfRange(e));
            }
        }
        let m = |a: Elem, b: Elem| meet[a * size + b];

        for a in 0..size {
            if m(a, a) != a {
                return Err(SemilatticeError::NotIdempotent { a });
            }
        }
        for a in 0..size {
            for b in 0..size {
                if m(a, b) != m(b, a) {
                    return Err(SemilatticeError::NotCommutative { a, b });
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(SemilatticeError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        for a in 0..size {
            if m(a, top) != a {
                return Err(SemilatticeError::TopNotGreatest { a, top });
            }
        }
        let least = (0..size).fold(top, &m);
        let bottom = match bottom {
            Some(b) => {
                if let Some(a) = (0..size).find(|&a| m(a, b) != b) {
                    return Err(SemilatticeError::BottomNotLeast { a, bottom: b });
                }
                b
            }
            None => least,
        };
        Ok(FiniteSemilattice { size, meet, top, bottom: Some(bottom), labels: None })
    }

    /// Attaches display names for the elements.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, SemilatticeError> {
        if labels.len() != self.size {
            return Err(SemilatticeError::LabelCount { len: labels.len(), expected: self.size });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Forgets the designated bottom, so that constructions which need a
    /// constant `0` in the signature refuse this semilattice.
    pub fn without_bottom(mut self) -> Self {
        self.bottom = None;
        self
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn top(&self) -> Elem {
        self.top
    }

    #[inline]
    pub fn bottom(&self) -> Option<Elem> {
        self.bottom
    }

    /// The least element of the carrier, whether or not it is designated.
    pub fn least(&self) -> Elem {
        self.elements().fold(self.top, |acc, a| self.meet(acc, a))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `a`: its label when present, else its index.
    pub fn label(&self, a: Elem) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Looks an element up by label, falling back to a decimal index.
    pub fn resolve(&self, name: &str) -> Option<Elem> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Some(i);
            }
        }
        name.parse().ok().filter(|&i| i < self.size)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size + b]
    }

    /// `a ≤ b` in the order induced by the meet.
    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.meet(a, b) == a
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    /// Row-major meet table.
    pub fn meet_flat(&self) -> &[Elem] {
        &self.meet
    }

    pub fn meet_rows(&self) -> Vec<Vec<Elem>> {
        self.meet.chunks(self.size).map(<[Elem]>::to_vec).collect()
    }

    /// Whether the induced order is total.
    pub fn is_chain(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Relabels the carrier: element `a` becomes `perm[a]`.
    pub fn relabel(&self, perm: &[Elem]) -> FiniteSemilattice {
        let n = self.size;
        assert_eq!(perm.len(), n);
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[perm[a] * n + perm[b]] = perm[self.meet(a, b)];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for a in 0..n {
                out[perm[a]] = l[a].clone();
            }
            out
        });
        FiniteSemilattice { size: n, meet, top: perm[self.top], bottom: self.bottom.map(|b| perm[b]), labels }
    }

    /// The `n`-element chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> FiniteSemilattice {
        assert!((1..=MAX_SIZE).contains(&n), "chain length out of range");
        let meet = (0..n * n).map(|i| (i / n).min(i % n)).collect();
        FiniteSemilattice::from_flat(n, meet, n - 1, Some(0)).expect("chains are semilattices")
    }

    /// The four-element Boolean lattice with elements `0, x, y, 1` at
    /// indices `0..4`.
    pub fn boolean4() -> FiniteSemilattice {
        let meet = vec![vec![0, 0, 0, 0], vec![0, 1, 0, 1], vec![0, 0, 2, 2], vec![0, 1, 2, 3]];
        validate_semilattice(&meet, 3, Some(0))
            .expect("B4 is a semilattice")
            .with_labels(["0", "x", "y", "1"].map(String::from).to_vec())
            .expect("four labels")
    }
}
