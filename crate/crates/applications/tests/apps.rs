use apcore::known::known_table;
use apcore::{find_progression, is_three_free, ApSet, SzTable};
use applications::{matching_graph, queens_diag, AppError, Diag};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn queens_examples() {
    let t = known_table();
    assert_eq!(queens_diag(2, &t).unwrap(), Diag::Exact { value: 1 });
    assert_eq!(queens_diag(8, &t).unwrap(), Diag::Exact { value: 5 });
    assert_eq!(queens_diag(200, &t).unwrap(), Diag::Exact { value: 173 });
    assert_eq!(queens_diag(9, &t).unwrap(), Diag::Exact { value: 9 - 4 });
    assert!(matches!(queens_diag(1, &t), Err(AppError::TooSmall(1))));
}

#[test]
fn queens_outside_exact_range() {
    let t = known_table();
    // sz(190) is only bracketed
    let (lo, hi) = (t.lower(190).unwrap(), t.upper(190).unwrap());
    assert_eq!(queens_diag(380, &t).unwrap(), Diag::Between { lo: 380 - hi, hi: 380 - lo });
    let small = SzTable::from_exact(&apcore::known::SZ_EXACT[..10], "exact");
    assert!(matches!(queens_diag(40, &small), Err(AppError::OutOfTable(20))));
}

fn queens_brute(n: usize) -> usize {
    // fewest diagonal queens (q, q) covering every square
    let covers = |q: usize, r: usize, c: usize| r == q || c == q || r == c || r + c == 2 * q;
    (0..=n)
        .find(|&size| {
            (0u32..1 << n).filter(|m| m.count_ones() as usize == size).any(|m| {
                (0..n).all(|r| (0..n).all(|c| (0..n).any(|q| m >> q & 1 == 1 && covers(q, r, c))))
            })
        })
        .unwrap()
}

#[test]
fn queens_against_brute_force() {
    let t = known_table();
    for n in 2..=12 {
        assert_eq!(queens_diag(n as u64, &t).unwrap(), Diag::Exact { value: queens_brute(n) as u64 }, "n={n}");
    }
}

#[test]
fn single_edge() {
    let g = matching_graph(&ApSet::new(1, vec![1]).unwrap(), 1).unwrap();
    assert_eq!(g.matchings, vec![vec![(2, 3)]]);
    assert!(g.is_induced());
    assert_eq!(g.to_text(), "1 2 3\n");
}

#[test]
fn five_from_one_two_four_five() {
    let g = matching_graph(&ApSet::new(5, vec![1, 2, 4, 5]).unwrap(), 5).unwrap();
    assert_eq!(g.edge_count(), 20);
    assert!(g.is_induced());
    assert!(g.matchings.iter().flatten().all(|&(u, v)| (1..=15).contains(&u) && (1..=15).contains(&v)));
}

#[test]
fn progression_breaks_induction() {
    let g = matching_graph(&ApSet::new(3, vec![1, 2, 3]).unwrap(), 3).unwrap();
    assert!(!g.is_induced());
}

#[test]
fn rejects_sets_outside_k() {
    let a = ApSet::new(10, vec![1, 9]).unwrap();
    assert!(matches!(matching_graph(&a, 5), Err(AppError::NotInK { .. })));
}

#[test]
fn random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let (mut free, mut with_ap, mut detected) = (0, 0, 0);
    while free < 200 || with_ap < 200 {
        let k = rng.gen_range(3..=30u64);
        let p = rng.gen_range(0.1..0.6);
        let elems: Vec<u64> = (1..=k).filter(|_| rng.gen_bool(p)).collect();
        if elems.is_empty() {
            continue;
        }
        let a = ApSet::new(k, elems.clone()).unwrap();
        let g = matching_graph(&a, k).unwrap();
        if is_three_free(&a) {
            assert!(g.is_induced(), "{elems:?}");
            free += 1;
        } else {
            assert!(find_progression(&elems).is_some());
            with_ap += 1;
            detected += !g.is_induced() as usize;
        }
    }
    // empirical converse: progressions almost always show up as violations
    assert!(detected * 100 >= with_ap * 95, "{detected}/{with_ap}");
}
