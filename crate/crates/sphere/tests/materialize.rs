use apcore::{find_progression, is_three_free};
use num_bigint::BigUint;
use sphere::*;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

const SOUND: [Variant; 6] = [Variant::Plain, Variant::NzInner, Variant::Nn, Variant::NnSigned, Variant::CondInner, Variant::Far];

#[test]
fn small_examples() {
    let p = SphereParams { d: 1, k: 2, s: 1, variant: Variant::Plain };
    let set = materialize_sphere(&p, 25, false).unwrap();
    assert_eq!(set.len(), 4);
    assert!(is_three_free(&set));
    let p = SphereParams { d: 2, k: 3, s: 0, variant: Variant::Plain };
    assert_eq!(materialize_sphere(&p, 200, false).unwrap().elements(), &[101]);
}

#[test]
fn best_sets_are_three_free_and_sized() {
    for n in [10u64, 30, 100, 316, 1000, 3162, 10_000, 31_623, 100_000] {
        for v in SOUND {
            let (p, size) = best_sphere(&big(n), v, SearchBox::for_n(&big(n))).unwrap();
            let set = materialize_sphere(&p, n, false).unwrap();
            assert_eq!(big(set.len() as u64), size, "{} n={n}", v.name());
            assert!(is_three_free(&set), "{} n={n} {:?}", v.name(), find_progression(set.elements()));
        }
    }
}

#[test]
fn every_small_instance_is_three_free() {
    for v in SOUND {
        for d in 1..=3 {
            for k in 1..=4 {
                for n in [50u64, 700, 4000] {
                    for s in 0..=k * d * d {
                        let p = SphereParams { d, k, s, variant: v };
                        let set = materialize_sphere(&p, n, false).unwrap();
                        assert_eq!(big(set.len() as u64), variant_size(&p, &big(n)));
                        assert!(is_three_free(&set), "{} d={d} k={k} s={s} n={n}", v.name());
                    }
                }
            }
        }
    }
}

// The literal unions leave the middle term on the unconditioned sphere.
#[test]
fn literal_unions_can_contain_progressions() {
    // x = (-1, 1), y = (0, 1), z = (1, 1) in base 5: values 4, 5, 6
    let p = SphereParams { d: 1, k: 2, s: 1, variant: Variant::Nz };
    let set = materialize_sphere(&p, 25, false).unwrap();
    let shift = offset(Embed::Balanced, 25) as u64;
    for v in [4, 5, 6] {
        assert!(set.contains(v + shift));
    }
    let (p, _) = best_sphere(&big(100), Variant::Nz, SearchBox::for_n(&big(100))).unwrap();
    assert!(!is_three_free(&materialize_sphere(&p, 100, false).unwrap()));
}

#[test]
fn cap_is_enforced() {
    let p = SphereParams { d: 1, k: 2, s: 1, variant: Variant::Plain };
    assert!(matches!(materialize_sphere(&p, MATERIALIZE_CAP + 1, false), Err(SphereError::Cap(_))));
}
