use sphere::*;

fn excluded_by(a: i64, b: i64, c: i64, clause: Clause) -> bool {
    obstruction_check(a, b, c, 5, 6).violated.contains(&clause)
}

#[test]
fn examples() {
    let r = obstruction_check(0, 1, 0, 3, 4);
    assert_eq!(r.d, 2);
    assert!(r.violated.contains(&Clause::Mod4));

    let r = obstruction_check(1, 1, 0, 3, 4);
    assert_eq!(r.d, 4);
    assert!(!r.excluded());
    assert_eq!(r.decompositions.len(), 1);
    assert_eq!(r.decompositions[0].parts, vec![2]);
    assert_eq!(r.decompositions[0].single_case, Some(SingleSquareCase::MiddleZero));

    let r = obstruction_check(2, 2, 0, 3, 4);
    assert_eq!(r.d, 8);
    assert_eq!(r.decompositions.iter().map(|x| x.parts.clone()).collect::<Vec<_>>(), vec![vec![2, 2]]);
    assert!(!r.excluded());
}

// Rows of the case tables: (a, b, c, excluded by the clauses alone?)
#[test]
fn two_sphere_tables() {
    for (a, b, c) in [(0, 1, 0), (1, 0, 0)] {
        assert!(excluded_by(a, b, c, Clause::Mod4));
    }
    // (1,1,0) survives the clauses and needs a zero middle coordinate or a
    // negative x coordinate, which the digit condition rules out
    let r = obstruction_check(1, 1, 0, 5, 6);
    assert!(!r.excluded());
    assert!(r.decompositions.iter().all(|d| d.parts == [2]));
    // cases with c = 1 or a = b = 0 fall to c < max(a, b)
    for (a, b, c) in [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)] {
        assert!(excluded_by(a, b, c, Clause::CBelowMax));
    }
}

#[test]
fn three_sphere_table() {
    assert!(excluded_by(0, 2, 0, Clause::EvenSquares));
    assert!(excluded_by(0, 2, 1, Clause::Positive));
    assert!(excluded_by(1, 2, 0, Clause::Mod4));
    let r = obstruction_check(2, 2, 0, 5, 6);
    assert!(!r.excluded());
    assert!(r.decompositions.iter().all(|d| d.parts == [2, 2]));
    for c in 0..=2 {
        for a in 0..=2 {
            for b in 0..=2 {
                if c == 2 {
                    assert!(excluded_by(a, b, c, Clause::CBelowMax));
                }
            }
        }
    }
}

#[test]
fn far_table() {
    for s in 1..50 {
        let far = 9 * s;
        assert!(obstruction_check(0, far, 0, s, 8).violated.contains(&Clause::Cauchy), "s={s}");
        assert!(obstruction_check(far, 0, 0, s, 8).violated.contains(&Clause::Cauchy), "s={s}");
        // the third row is ruled out by signs, not by the clauses
        assert!(!obstruction_check(far, far, 0, s, 4).violated.contains(&Clause::Cauchy));
        // with 2s in place of 10s the third row is equally fine, the first two are not excluded
        assert!(!obstruction_check(s, s, 0, s, 4).violated.contains(&Clause::Cauchy));
        assert!(!obstruction_check(0, s, 0, s, 4).violated.contains(&Clause::Cauchy));
    }
}

#[test]
fn report_is_consistent() {
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let r = obstruction_check(a, b, c, 7, 5);
                assert_eq!(r.d, 2 * a + 2 * b - 4 * c);
                for dec in &r.decompositions {
                    assert_eq!(dec.parts.iter().map(|p| p * p).sum::<i64>(), r.d);
                    assert!(dec.parts.iter().all(|p| p % 2 == 0 && *p > 0));
                }
            }
        }
    }
}
