use serde::{Serialize, Serializer};

use super::filter::ElemSet;
use crate::algebra::{Check, HemiAlgebra};
use crate::semilattice::Elem;

/// Union-find whose roots are always the smallest element of their class.
#[derive(Debug, Clone)]
pub(crate) struct MinUnionFind {
    parent: Vec<Elem>,
}

impl MinUnionFind {
    pub fn new(n: usize) -> Self {
        MinUnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut a: Elem) -> Elem {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Returns whether the two classes were distinct.
    pub fn union(&mut self, a: Elem, b: Elem) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn into_partition(mut self) -> CongruencePartition {
        let rep = (0..self.parent.len()).map(|a| self.find(a)).collect();
        CongruencePartition { rep }
    }
}

/// An equivalence relation on the carrier, stored as the smallest member of
/// each element's class. Equal partitions have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CongruencePartition {
    rep: Vec<Elem>,
}

impl CongruencePartition {
    pub fn identity(n: usize) -> Self {
        CongruencePartition { rep: (0..n).collect() }
    }

    pub fn full(n: usize) -> Self {
        CongruencePartition { rep: vec![0; n] }
    }

    /// Equivalence closure of a relation given as a predicate on pairs.
    pub fn from_relation(n: usize, mut related: impl FnMut(Elem, Elem) -> bool) -> Self {
        let mut uf = MinUnionFind::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if related(a, b) {
                    uf.union(a, b);
                }
            }
        }
        uf.into_partition()
    }

    /// Builds a partition from a class label per element.
    pub fn from_labels(labels: &[usize]) -> Self {
        CongruencePartition::from_relation(labels.len(), |a, b| labels[a] == labels[b])
    }

    pub fn size(&self) -> usize {
        self.rep.len()
    }

    /// Smallest member of `a`'s class.
    #[inline]
    pub fn representative(&self, a: Elem) -> Elem {
        self.rep[a]
    }

    #[inline]
    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.rep[a] == self.rep[b]
    }

    pub fn class_of(&self, a: Elem) -> ElemSet {
        (0..self.size()).filter(|&b| self.related(a, b)).collect()
    }

    /// Classes in order of their smallest member, each sorted.
    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut slot = vec![usize::MAX; self.size()];
        let mut out: Vec<Vec<Elem>> = Vec::new();
        for a in 0..self.size() {
            let r = self.rep[a];
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(a);
        }
        out
    }

    pub fn num_blocks(&self) -> usize {
        (0..self.size()).filter(|&a| self.rep[a] == a).count()
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.size()
    }

    /// Whether every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &CongruencePartition) -> bool {
        (0..self.size()).all(|a| other.related(a, self.rep[a]))
    }

    /// Checks compatibility with `∧` and `→`; the witness `(a, a', b, b')`
    /// has `a θ a'`, `b θ b'` but unrelated results.
    pub fn check_compatible(&self, alg: &HemiAlgebra) -> Check {
        self.check_with(alg, true)
    }

    /// Checks compatibility with `∧` alone.
    pub fn check_meet_compatible(&self, alg: &HemiAlgebra) -> Check {
        self.check_with(alg, false)
    }

    fn check_with(&self, alg: &HemiAlgebra, with_imp: bool) -> Check {
        let n = self.size();
        let property = if with_imp { "compatible" } else { "meet_compatible" };
        for a in 0..n {
            for a2 in (0..n).filter(|&x| self.related(a, x)) {
                for b in 0..n {
                    for b2 in (0..n).filter(|&x| self.related(b, x)) {
                        let bad = !self.related(alg.meet(a, b), alg.meet(a2, b2))
                            || (with_imp && !self.related(alg.imp(a, b), alg.imp(a2, b2)));
                        if bad {
                            return Check::fail(property, vec![a, a2, b, b2]);
                        }
                    }
                }
            }
        }
        Check::pass(property)
    }
}

impl Serialize for CongruencePartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.blocks().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        let p = CongruencePartition::from_labels(&[7, 3, 7, 3, 9]);
        assert_eq!(p.blocks(), vec![vec![0, 2], vec![1, 3], vec![4]]);
        assert_eq!(p.representative(3), 1);
        assert_eq!(p, CongruencePartition::from_relation(5, |a, b| a % 2 == b % 2 && a != 4 && b != 4));
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[0,2],[1,3],[4]]");
    }

    #[test]
    fn refinement() {
        let id = CongruencePartition::identity(4);
        let full = CongruencePartition::full(4);
        let mid = CongruencePartition::from_labels(&[0, 0, 1, 1]);
        assert!(id.refines(&mid) && mid.refines(&full) && id.refines(&full));
        assert!(!full.refines(&mid));
        assert!(id.is_identity());
        assert_eq!(full.num_blocks(), 1);
    }
}
