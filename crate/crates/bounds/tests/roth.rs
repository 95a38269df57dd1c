use bounds::{roth_min_n, BoundsError, RothQuery};
use proptest::prelude::*;

const C: &str = "0.26733";

// (N, M, eps, bound)
const ROWS: [(u64, u64, &str, u64); 10] = [
    (139570, 120, "0.001429", 37111),
    (143096, 121, "0.002144", 37947),
    (146767, 122, "0.002859", 38815),
    (150592, 123, "0.003573", 39719),
    (154577, 125, "0.004288", 40660),
    (158733, 126, "0.005003", 41640),
    (163071, 127, "0.005717", 42661),
    (167603, 128, "0.006432", 43727),
    (172342, 129, "0.007147", 44840),
    (177302, 130, "0.007861", 46004),
];

#[test]
fn tabulated_rows() {
    for (n, big_m, eps, bound) in ROWS {
        let r = roth_min_n(&RothQuery::new(50, C, big_m, eps).unwrap()).unwrap();
        assert!(r.n.abs_diff(n) <= 5, "M={big_m}: N={} vs {n}", r.n);
        assert!(r.bound.abs_diff(bound) <= 2, "M={big_m}: bound={} vs {bound}", r.bound);
    }
}

#[test]
fn large_row() {
    // the printed eps is rounded to 6 places; N moves ~50 per 1e-7 here
    let r = roth_min_n(&RothQuery::new(50, C, 226, "0.033589").unwrap()).unwrap();
    assert_eq!((r.n, r.bound), (925849, 216408));
    let lo = roth_min_n(&RothQuery::new(50, C, 226, "0.0335885").unwrap()).unwrap();
    let hi = roth_min_n(&RothQuery::new(50, C, 226, "0.0335895").unwrap()).unwrap();
    assert!((lo.n..=hi.n).contains(&925817), "{lo:?} {hi:?}");
    assert!((lo.bound..=hi.bound).contains(&216401));
}

#[test]
fn bound_is_floor_of_density() {
    let r = roth_min_n(&RothQuery::new(50, C, 120, "0.001429").unwrap()).unwrap();
    // floor((c - eps) N) checked in integers
    let num = (26733 - 143) * r.n;
    assert_eq!(r.bound, num / 100_000);
}

#[test]
fn infeasible_inputs() {
    assert!(matches!(roth_min_n(&RothQuery::new(50, C, 120, "0.3").unwrap()), Err(BoundsError::Infeasible)));
    assert!(matches!(roth_min_n(&RothQuery::new(50, C, 120, C).unwrap()), Err(BoundsError::Infeasible)));
    // M too small for the m^2/2M^2 term
    assert!(matches!(roth_min_n(&RothQuery::new(50, C, 60, "0.001").unwrap()), Err(BoundsError::Infeasible)));
    assert!(RothQuery::new(50, "0.2x", 60, "0.001").is_err());
    assert!(matches!(roth_min_n(&RothQuery::new(50, "1.5", 60, "0.001").unwrap()), Err(BoundsError::Parameters(_))));
}

#[test]
fn minimality() {
    // N satisfies the strict inequality and N - 1 does not
    use num_rational::BigRational;
    let q = RothQuery::new(50, C, 124, "0.0035").unwrap();
    let r = roth_min_n(&q).unwrap();
    let holds = |n: u64| {
        let int = |v: u64| BigRational::from_integer(v.into());
        let lhs = (int(2500) * int(n) / int(2 * 124 * 124) + int(4) * &q.epsilon * int(n) + int(4 * 50 * 124 + 1)) * (&q.c + &q.epsilon);
        lhs < &q.c * (&q.c - &q.epsilon) * int(n)
    };
    assert!(holds(r.n));
    assert!(!holds(r.n - 1));
}

proptest! {
    #[test]
    fn larger_eps_needs_larger_n(big_m in 120u64..400, e in 1u32..30, de in 1u32..10) {
        let lo = format!("0.{:06}", e * 100);
        let hi = format!("0.{:06}", (e + de) * 100);
        let a = roth_min_n(&RothQuery::new(50, C, big_m, &lo).unwrap());
        let b = roth_min_n(&RothQuery::new(50, C, big_m, &hi).unwrap());
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert!(b.n >= a.n);
        }
    }
}
