//! Brute-force congruence computations that do not go through filters.
//! They serve as the independent side of every filter-based result.

use super::partition::{CongruencePartition, MinUnionFind};
use crate::algebra::HemiAlgebra;
use crate::semilattice::Elem;

/// The least congruence containing `pairs`: merge, then keep merging the
/// images under every basic translation until nothing changes.
pub fn brute_force_generated_congruence(alg: &HemiAlgebra, pairs: &[(Elem, Elem)]) -> CongruencePartition {
    let n = alg.size();
    let mut uf = MinUnionFind::new(n);
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            let r = uf.find(a);
            if r == a {
                continue;
            }
            for b in 0..n {
                changed |= uf.union(alg.meet(a, b), alg.meet(r, b));
                changed |= uf.union(alg.imp(a, b), alg.imp(r, b));
                changed |= uf.union(alg.imp(b, a), alg.imp(b, r));
            }
        }
        if !changed {
            return uf.into_partition();
        }
    }
}

/// Every partition of `0..n`, via restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<CongruencePartition> {
    fn go(labels: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<CongruencePartition>) {
        if labels.len() == n {
            out.push(CongruencePartition::from_labels(labels));
            return;
        }
        for l in 0..=max + 1 {
            labels.push(l);
            go(labels, max.max(l), n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut labels = vec![0];
    go(&mut labels, 0, n, &mut out);
    out
}

/// All congruences, found by testing every partition for compatibility.
/// Sorted by representation.
pub fn brute_force_congruences(alg: &HemiAlgebra) -> Vec<CongruencePartition> {
    let mut out: Vec<_> = all_partitions(alg.size()).into_iter().filter(|p| p.check_compatible(alg).holds()).collect();
    out.sort();
    out
}
