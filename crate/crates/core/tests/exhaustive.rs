//! Whole-space sweeps over small models, checked against counts and facts
//! that do not depend on this crate.

use std::collections::HashSet;

use hemilat::classify::es_conditions;
use hemilat::congruence::oracle::all_partitions;
use hemilat::congruence::{generation_stages, ElemSet};
use hemilat::search::{
    canonical_form, count_hemi_implications, enumerate_algebras, enumerate_hemi_implications, semilattices_of_size,
};
use hemilat::{
    classify, congruent_filter_generated, enumerate_filters, is_congruent_filter, symmetrize, EnumerationBound,
    FilterSet,
};

#[test]
fn lattice_counts_up_to_isomorphism() {
    // Unlabeled lattices on n elements (OEIS A006966).
    let expected = [1, 1, 1, 2, 5, 15, 53];
    for (i, &want) in expected.iter().enumerate() {
        assert_eq!(semilattices_of_size(i + 1, true).len(), want, "n = {}", i + 1);
    }
}

#[test]
fn partitions_are_counted_by_bell_numbers() {
    let bell = [1, 2, 5, 15, 52, 203];
    for (i, &b) in bell.iter().enumerate() {
        assert_eq!(all_partitions(i + 1).len(), b);
    }
}

#[test]
fn every_filter_is_principal() {
    for n in 1..=6 {
        for s in semilattices_of_size(n, false) {
            let filters = enumerate_filters(&s);
            assert_eq!(filters.len(), n);
            let generators: HashSet<_> = filters.iter().map(|f| f.generator(&s)).collect();
            assert_eq!(generators.len(), n);
            for f in filters {
                assert_eq!(FilterSet::principal(&s, f.generator(&s)), f);
            }
        }
    }
}

#[test]
fn stream_matches_count() {
    for n in 1..=4 {
        for s in semilattices_of_size(n, true) {
            let tables: HashSet<Vec<usize>> = enumerate_hemi_implications(&s).map(|a| a.imp_flat().to_vec()).collect();
            assert_eq!(tables.len() as u128, count_hemi_implications(&s));
        }
    }
}

#[test]
fn isomorphism_classes_on_small_semilattices() {
    // 0 < 1 carries two hemiimplications, neither with a non-trivial
    // automorphism to merge them.
    let two = &semilattices_of_size(2, true)[0];
    let classes: HashSet<_> = enumerate_hemi_implications(two).map(|a| canonical_form(&a)).collect();
    assert_eq!(classes.len(), 2);
    // On B4 swapping the atoms is the only automorphism, so every class has
    // one or two members.
    let b4 = semilattices_of_size(4, true).into_iter().find(|s| !s.is_chain()).unwrap();
    let mut sizes = std::collections::HashMap::<Vec<u8>, usize>::new();
    for a in enumerate_hemi_implications(&b4) {
        *sizes.entry(canonical_form(&a)).or_default() += 1;
    }
    assert!(sizes.values().all(|&k| k == 1 || k == 2));
    let fixed = enumerate_hemi_implications(&b4).filter(|a| a.relabel(&[0, 2, 1, 3]) == *a).count();
    // Burnside over the two-element automorphism group.
    assert_eq!(sizes.len(), (65536 + fixed) / 2);
}

#[test]
fn class_inclusions_hold_everywhere() {
    for a in enumerate_algebras(EnumerationBound::new(4, true)) {
        let r = classify(&a);
        if r.implicative.holds() {
            assert!(r.h4.holds() && r.h5.holds());
            assert!(es_conditions(symmetrize(&a).algebra()).holds());
        }
        if r.h4.holds() {
            assert!(r.h5.holds(), "(H4) implies (H5)");
        }
        if r.symmetric.holds() && r.condition_s.holds() {
            assert!(symmetrize(&a).algebra() == &a);
        }
    }
}

#[test]
fn generated_congruent_filters_are_least() {
    for a in enumerate_algebras(EnumerationBound::new(4, true)) {
        let congruent: Vec<FilterSet> =
            enumerate_filters(a.base()).into_iter().filter(|&f| is_congruent_filter(&a, f).holds()).collect();
        for x in a.elements() {
            let g = congruent_filter_generated(&a, x);
            let least = congruent.iter().filter(|f| f.contains(x)).min_by_key(|f| f.len()).unwrap();
            assert_eq!(g, *least);
            assert!(congruent.iter().filter(|f| f.contains(x)).all(|f| g.is_subset(*f)));
            let stages = generation_stages(&a, ElemSet::singleton(x));
            assert_eq!(*stages.last().unwrap(), g.set());
        }
    }
}
