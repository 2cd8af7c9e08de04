use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::semilattice::{Elem, FiniteSemilattice};

/// A subset of a carrier of at most 64 elements, packed into a `u64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(a: Elem) -> Self {
        ElemSet(1 << a)
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        if n == 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, a: Elem) -> bool {
        self.0 >> a & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: Elem) {
        self.0 |= 1 << a;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Elem> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let a = bits.trailing_zeros() as Elem;
            bits &= bits - 1;
            Some(a)
        })
    }

    pub fn to_vec(self) -> Vec<Elem> {
        self.iter().collect()
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<Elem>::deserialize(deserializer)?;
        if let Some(&bad) = v.iter().find(|&&a| a >= 64) {
            return Err(serde::de::Error::custom(format!("element {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// Upset of `a`.
pub fn upset(s: &FiniteSemilattice, a: Elem) -> ElemSet {
    s.elements().filter(|&b| s.leq(a, b)).collect()
}

/// A filter: contains the top, closed under meets, upward closed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FilterSet(ElemSet);

impl fmt::Debug for FilterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FilterSet{:?}", self.0)
    }
}

/// Whether `set` satisfies the three filter conditions.
pub fn is_filter(s: &FiniteSemilattice, set: ElemSet) -> bool {
    set.contains(s.top())
        && set.iter().all(|a| set.iter().all(|b| set.contains(s.meet(a, b))))
        && set.iter().all(|a| s.elements().all(|b| !s.leq(a, b) || set.contains(b)))
}

impl FilterSet {
    /// Checks the filter conditions.
    pub fn new(s: &FiniteSemilattice, set: ElemSet) -> Option<FilterSet> {
        is_filter(s, set).then_some(FilterSet(set))
    }

    /// `↑a`.
    pub fn principal(s: &FiniteSemilattice, a: Elem) -> FilterSet {
        FilterSet(upset(s, a))
    }

    /// The least filter containing `set`.
    pub fn generated_by(s: &FiniteSemilattice, set: ElemSet) -> FilterSet {
        let m = set.iter().fold(s.top(), |acc, a| s.meet(acc, a));
        FilterSet::principal(s, m)
    }

    pub fn top_only(s: &FiniteSemilattice) -> FilterSet {
        FilterSet(ElemSet::singleton(s.top()))
    }

    pub fn whole(s: &FiniteSemilattice) -> FilterSet {
        FilterSet(ElemSet::full(s.size()))
    }

    pub fn set(self) -> ElemSet {
        self.0
    }

    #[inline]
    pub fn contains(self, a: Elem) -> bool {
        self.0.contains(a)
    }

    pub fn iter(self) -> impl Iterator<Item = Elem> {
        self.0.iter()
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn is_subset(self, other: FilterSet) -> bool {
        self.0.is_subset(other.0)
    }

    /// The least element of the filter. Every filter of a finite
    /// semilattice is the upset of this element.
    pub fn generator(self, s: &FiniteSemilattice) -> Elem {
        self.iter().fold(s.top(), |acc, a| s.meet(acc, a))
    }
}

/// All filters, sorted by bitset value.
pub fn enumerate_filters(s: &FiniteSemilattice) -> Vec<FilterSet> {
    let mut out: Vec<FilterSet> = s.elements().map(|a| FilterSet::principal(s, a)).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle_filters(s: &FiniteSemilattice) -> Vec<ElemSet> {
        let n = s.size();
        let mut out = Vec::new();
        for bits in 0u64..(1 << n) {
            let set = ElemSet::from_bits(bits);
            let has_top = set.contains(s.top());
            let meet_closed =
                (0..n).all(|a| (0..n).all(|b| !(set.contains(a) && set.contains(b)) || set.contains(s.meet(a, b))));
            let up_closed = (0..n).all(|a| (0..n).all(|b| !(set.contains(a) && s.leq(a, b)) || set.contains(b)));
            if has_top && meet_closed && up_closed {
                out.push(set);
            }
        }
        out
    }

    #[test]
    fn trivial_has_one_filter() {
        let s = FiniteSemilattice::chain(1);
        assert_eq!(enumerate_filters(&s), vec![FilterSet::top_only(&s)]);
    }

    #[test]
    fn boolean4_filters() {
        let s = FiniteSemilattice::boolean4();
        let got: Vec<Vec<Elem>> = enumerate_filters(&s).iter().map(|f| f.set().to_vec()).collect();
        let mut expected = vec![vec![3], vec![1, 3], vec![2, 3], vec![0, 1, 2, 3]];
        expected.sort_by_key(|v| v.iter().map(|&a| 1u64 << a).sum::<u64>());
        assert_eq!(got, expected);
        let oracle = oracle_filters(&s);
        assert_eq!(got.len(), oracle.len());
        for f in enumerate_filters(&s) {
            assert!(oracle.contains(&f.set()));
        }
    }

    #[test]
    fn chains_have_n_filters() {
        for n in 1..=6 {
            let s = FiniteSemilattice::chain(n);
            let filters: Vec<ElemSet> = enumerate_filters(&s).iter().map(|f| f.set()).collect();
            assert_eq!(filters.len(), n);
            assert_eq!(filters, oracle_filters(&s));
        }
    }

    #[test]
    fn elemset_basics() {
        let s: ElemSet = [0, 3, 5].into_iter().collect();
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(ElemSet::singleton(3).is_subset(s));
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,3,5]");
        let back: ElemSet = serde_json::from_str("[5,0,3]").unwrap();
        assert_eq!(back, s);
        assert!(FilterSet::new(&FiniteSemilattice::boolean4(), ElemSet::singleton(1)).is_none());
    }
}
