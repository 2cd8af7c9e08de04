use std::sync::OnceLock;

use hemilat::congruence::oracle::{brute_force_congruences, brute_force_generated_congruence};
use hemilat::format::{parse_algebra, to_json};
use hemilat::search::{canonical_form, enumerate_semilattices, product};
use hemilat::symmetry::check_roundtrip_h4;
use hemilat::{
    classify, congruence_lattice, derive_arrow, principal_congruence, symmetrize, Elem, EnumerationBound,
    FiniteSemilattice, HemiAlgebra,
};
use proptest::prelude::*;

fn semilattices() -> &'static [FiniteSemilattice] {
    static ALL: OnceLock<Vec<FiniteSemilattice>> = OnceLock::new();
    ALL.get_or_init(|| enumerate_semilattices(EnumerationBound::new(5, false)).collect())
}

/// A random hemiimplication on a random semilattice of size ≤ 5: each cell
/// off the diagonal picks some `c` with `a ∧ c ≤ b`.
fn algebra() -> impl Strategy<Value = HemiAlgebra> {
    (0..semilattices().len(), proptest::collection::vec(any::<u32>(), 25)).prop_map(|(i, picks)| {
        let s = semilattices()[i].clone();
        let n = s.size();
        HemiAlgebra::from_fn(s.clone(), |a, b| {
            if a == b {
                return s.top();
            }
            let options: Vec<Elem> = s.elements().filter(|&c| s.leq(s.meet(a, c), b)).collect();
            options[picks[a * n + b] as usize % options.len()]
        })
        .unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<Elem>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn algebra_and_perm() -> impl Strategy<Value = (HemiAlgebra, Vec<Elem>)> {
    algebra().prop_flat_map(|a| {
        let n = a.size();
        (Just(a), permutation(n))
    })
}

fn holds_flags(a: &HemiAlgebra) -> Vec<bool> {
    classify(a).flags().iter().map(|(_, c)| c.holds()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn json_roundtrip(a in algebra()) {
        let back = parse_algebra(&to_json(&a).to_string()).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(classify(&back), classify(&a));
    }

    #[test]
    fn rla_detects_equality(a in algebra()) {
        for x in a.elements() {
            for y in a.elements() {
                prop_assert_eq!(x == y, a.rla(x, y) == a.top());
            }
        }
    }

    #[test]
    fn relabeling_is_invisible((a, perm) in algebra_and_perm()) {
        let b = a.relabel(&perm);
        prop_assert_eq!(canonical_form(&a), canonical_form(&b));
        prop_assert_eq!(holds_flags(&a), holds_flags(&b));
        prop_assert_eq!(congruence_lattice(&a).len(), congruence_lattice(&b).len());
    }

    #[test]
    fn products_preserve_equations(a in algebra(), b in algebra()) {
        prop_assume!(a.size() * b.size() <= 16);
        let p = product(&a, &b);
        let (ra, rb, rp) = (classify(&a), classify(&b), classify(&p));
        for (name, check) in rp.flags() {
            let both = ra.flag(name).unwrap().holds() && rb.flag(name).unwrap().holds();
            // Equations transfer to products; so does residuation.
            if both && name != "es_member" {
                prop_assert!(check.holds(), "{} lost in the product", name);
            }
        }
    }

    #[test]
    fn symmetrization_is_idempotent(a in algebra()) {
        let s = symmetrize(&a);
        prop_assert!(s.algebra().is_symmetric());
        let again = symmetrize(s.algebra());
        prop_assert_eq!(again.algebra(), s.algebra());
        let d = derive_arrow(&s);
        prop_assert!(classify(&d).h4.holds());
        prop_assert_eq!(check_roundtrip_h4(&a).holds(), classify(&a).h4.holds());
    }

    #[test]
    fn congruences_match_brute_force(a in algebra()) {
        let mut ours: Vec<_> = congruence_lattice(&a).into_iter().map(|(_, t)| t).collect();
        ours.sort();
        prop_assert_eq!(ours, brute_force_congruences(&a));
    }

    #[test]
    fn principal_matches_brute_force(a in algebra(), x in 0usize..5, y in 0usize..5) {
        let (x, y) = (x % a.size(), y % a.size());
        prop_assert_eq!(principal_congruence(&a, x, y), brute_force_generated_congruence(&a, &[(x, y)]));
    }
}
