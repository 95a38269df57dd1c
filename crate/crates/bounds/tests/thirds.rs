use apcore::known::known_table;
use apcore::{is_three_free, ApSet};
use bounds::{base_family, fill_middle, record_witnesses, thirds_search, FamilyOptions};
use proptest::prelude::*;

#[test]
fn nine_from_one_three() {
    let a = ApSet::new(3, vec![1, 3]).unwrap();
    let best = thirds_search(9, &[a], 20).unwrap().unwrap();
    assert_eq!(best.elements(), &[1, 3, 7, 9]);
}

#[test]
fn record_sets_verify() {
    let w = record_witnesses().unwrap();
    let got: Vec<(u64, usize)> = w.iter().map(|s| (s.universe(), s.len())).collect();
    assert_eq!(got, vec![(204, 42), (227, 45), (233, 46)]);
    assert!(w.iter().all(is_three_free));
}

#[test]
fn family_members_are_tight_and_large() {
    let t = known_table();
    let fam = base_family(60, &t, &FamilyOptions::default()).unwrap();
    assert!(!fam.is_empty());
    for a in &fam {
        let m = a.universe();
        assert!((16..=24).contains(&m), "m={m}");
        assert!(is_three_free(a));
        assert_eq!(a.elements()[0], 1);
        assert_eq!(*a.elements().last().unwrap(), m);
        assert!(a.len() as u64 + 1 >= t.exact(m).unwrap());
    }
}

#[test]
fn reaches_exact_values_on_samples() {
    let t = known_table();
    for n in [30u64, 45, 58, 72, 90] {
        let fam = base_family(n, &t, &FamilyOptions::default()).unwrap();
        let best = thirds_search(n, &fam, 20).unwrap().unwrap();
        assert!(is_three_free(&best));
        assert_eq!(best.len() as u64, t.exact(n).unwrap(), "n={n}");
    }
}

#[test]
fn deterministic() {
    let t = known_table();
    let fam = base_family(50, &t, &FamilyOptions::default()).unwrap();
    let a = thirds_search(50, &fam, 20).unwrap();
    let mut rev = fam.clone();
    rev.reverse();
    assert_eq!(a, thirds_search(50, &rev, 20).unwrap());
}

#[test]
fn empty_family() {
    assert_eq!(thirds_search(40, &[], 20).unwrap(), None);
    let opts = FamilyOptions { m_max: 5, ..Default::default() };
    assert!(base_family(100, &known_table(), &opts).unwrap().is_empty());
}

fn best_by_brute_force(base: &[usize], cands: &[usize]) -> usize {
    let mut best = 0;
    for mask in 0u32..1 << cands.len() {
        let mut all: Vec<u64> = base.iter().map(|&x| x as u64).collect();
        all.extend(cands.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c as u64));
        let n = *all.iter().max().unwrap();
        if is_three_free(&ApSet::from_unsorted(n, all).unwrap()) {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

proptest! {
    #[test]
    fn fill_is_optimal_and_valid(base in proptest::collection::btree_set(1usize..40, 1..6), extra in proptest::collection::btree_set(1usize..40, 0..12)) {
        let b: Vec<usize> = base.iter().copied().collect();
        prop_assume!(is_three_free(&ApSet::new(40, b.iter().map(|&x| x as u64).collect()).unwrap()));
        // candidates compatible with the base on their own
        let cands: Vec<usize> = extra
            .into_iter()
            .filter(|c| !base.contains(c))
            .filter(|&c| {
                let mut v: Vec<u64> = b.iter().map(|&x| x as u64).collect();
                v.push(c as u64);
                is_three_free(&ApSet::from_unsorted(40, v).unwrap())
            })
            .collect();
        let got = fill_middle(&b, &cands, 20);
        let mut all: Vec<u64> = b.iter().chain(&got).map(|&x| x as u64).collect();
        all.sort_unstable();
        prop_assert!(is_three_free(&ApSet::new(40, all).unwrap()));
        prop_assert_eq!(got.len(), best_by_brute_force(&b, &cands));
        let greedy = fill_middle(&b, &cands, 0);
        prop_assert!(greedy.len() <= got.len());
    }
}
