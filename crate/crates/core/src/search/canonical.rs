use crate::algebra::HemiAlgebra;
use crate::semilattice::{Elem, FiniteSemilattice};

/// Canonical byte string of a semilattice, optionally with an implication
/// table. Two inputs get the same string iff they are isomorphic.
///
/// Elements are first sorted by isomorphism invariants (sizes of down- and
/// upsets, how often they reach the top under `→`); only permutations that
/// keep that sort are tried, which pins top and bottom in place.
fn canonical_bytes(s: &FiniteSemilattice, imp: Option<&[Elem]>) -> Vec<u8> {
    let n = s.size();
    let top = s.top();
    let key = |a: Elem| {
        let down = (0..n).filter(|&b| s.leq(b, a)).count();
        let up = (0..n).filter(|&b| s.leq(a, b)).count();
        let (out_top, in_top) = match imp {
            Some(t) => {
                ((0..n).filter(|&b| t[a * n + b] == top).count(), (0..n).filter(|&b| t[b * n + a] == top).count())
            }
            None => (0, 0),
        };
        (down, up, out_top, in_top)
    };
    let mut order: Vec<Elem> = (0..n).collect();
    order.sort_by_key(|&a| key(a));
    let mut groups: Vec<Vec<Elem>> = Vec::new();
    for &a in &order {
        match groups.last_mut() {
            Some(g) if key(g[0]) == key(a) => g.push(a),
            _ => groups.push(vec![a]),
        }
    }

    // new_of[old] is the position an element receives.
    let mut best: Option<Vec<u8>> = None;
    let mut new_of = vec![usize::MAX; n];
    let encode = |new_of: &[usize]| {
        let mut old_of = vec![0; n];
        for (old, &new) in new_of.iter().enumerate() {
            old_of[new] = old;
        }
        let mut bytes = Vec::with_capacity(2 + 2 * n * n);
        bytes.push(n as u8);
        bytes.push(new_of[top] as u8);
        for i in 0..n {
            for j in 0..n {
                bytes.push(new_of[s.meet(old_of[i], old_of[j])] as u8);
            }
        }
        if let Some(t) = imp {
            for i in 0..n {
                for j in 0..n {
                    bytes.push(new_of[t[old_of[i] * n + old_of[j]]] as u8);
                }
            }
        }
        bytes
    };

    fn assign(
        groups: &[Vec<Elem>],
        g: usize,
        offset: usize,
        used: &mut [bool],
        placed: usize,
        new_of: &mut [usize],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if g == groups.len() {
            visit(new_of);
            return;
        }
        let group = &groups[g];
        if placed == group.len() {
            let mut fresh = vec![false; groups.get(g + 1).map_or(0, Vec::len)];
            assign(groups, g + 1, offset + group.len(), &mut fresh, 0, new_of, visit);
            return;
        }
        for i in 0..group.len() {
            if !used[i] {
                used[i] = true;
                new_of[group[i]] = offset + placed;
                assign(groups, g, offset, used, placed + 1, new_of, visit);
                used[i] = false;
            }
        }
    }

    let mut used = vec![false; groups[0].len()];
    assign(&groups, 0, 0, &mut used, 0, &mut new_of, &mut |perm| {
        let bytes = encode(perm);
        if best.as_ref().is_none_or(|b| bytes < *b) {
            best = Some(bytes);
        }
    });
    best.expect("at least one labeling")
}

/// Canonical form of an algebra, invariant under relabeling.
pub fn canonical_form(a: &HemiAlgebra) -> Vec<u8> {
    canonical_bytes(a.base(), Some(a.imp_flat()))
}

/// Canonical form of a bare semilattice.
pub fn canonical_form_semilattice(s: &FiniteSemilattice) -> Vec<u8> {
    canonical_bytes(s, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_implication, ImplicationKind};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn invariant_under_every_relabeling_of_b4() {
        for kind in ImplicationKind::ALL {
            let a = build_implication(&FiniteSemilattice::boolean4(), kind).unwrap();
            let c = canonical_form(&a);
            for p in permutations(4) {
                assert_eq!(canonical_form(&a.relabel(&p)), c, "{kind} {p:?}");
            }
        }
    }

    #[test]
    fn distinguishes_order_and_eq_consequent() {
        let s = FiniteSemilattice::boolean4();
        let oc = build_implication(&s, ImplicationKind::OrderConsequent).unwrap();
        let ec = build_implication(&s, ImplicationKind::EqConsequent).unwrap();
        assert_ne!(canonical_form(&oc), canonical_form(&ec));
        // Oracle: neither labeling of the atoms makes the tables equal.
        for p in [[0, 1, 2, 3], [0, 2, 1, 3]] {
            assert_ne!(oc.relabel(&p).imp_flat(), ec.imp_flat());
        }
    }

    #[test]
    fn chains_vs_b4() {
        assert_ne!(
            canonical_form_semilattice(&FiniteSemilattice::chain(4)),
            canonical_form_semilattice(&FiniteSemilattice::boolean4())
        );
    }
}
