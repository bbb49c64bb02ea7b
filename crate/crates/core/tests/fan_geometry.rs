mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use toric_core::{CharacterPoint, Divisor, Fan, NamedSurface};

fn k_squared(fan: &Fan) -> i64 {
    let k = fan.canonical_divisor();
    k.intersect(&k).unwrap()
}

#[test]
fn noether_on_builtins() {
    for (name, fan) in common::surfaces() {
        assert_eq!(k_squared(&fan) + fan.len() as i64, 12, "{name}");
    }
    for a in 0..6 {
        let fan = NamedSurface::Hirzebruch(a).build();
        assert_eq!(k_squared(&fan) + fan.len() as i64, 12, "F_{a}");
    }
}

#[test]
fn noether_on_random_blowup_chains() {
    let mut rng = StdRng::seed_from_u64(2024);
    let starts = [
        NamedSurface::P2,
        NamedSurface::P1P1,
        NamedSurface::Hirzebruch(2),
        NamedSurface::Hirzebruch(3),
    ];
    for chain in 0..50 {
        let mut fan = starts[chain % starts.len()].build();
        for _ in 0..rng.gen_range(1..=6) {
            let edge = rng.gen_range(0..fan.len());
            fan = fan.blowup(edge);
            assert_eq!(k_squared(&fan) + fan.len() as i64, 12, "{fan}");
            assert_eq!(
                common::intersection_matrix(&fan)[0][0],
                fan.self_intersection(0)
            );
        }
    }
}

#[test]
fn intersection_numbers_match_ray_relations() {
    for (name, fan) in common::surfaces() {
        let m = common::intersection_matrix(&fan);
        for (i, row) in m.iter().enumerate() {
            for (j, &expected) in row.iter().enumerate() {
                assert_eq!(
                    fan.intersection_number(i, j),
                    expected,
                    "{name} D_{i}.D_{j}"
                );
            }
        }
    }
}

fn pair_of_divisors() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>)> {
    (0..4usize).prop_flat_map(|i| {
        let n = common::surfaces()[i].1.len();
        let v = || prop::collection::vec(-9i64..=9, n);
        (Just(i), v(), v(), v())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn intersection_is_symmetric_and_bilinear((i, a, b, c) in pair_of_divisors(), s in -4i64..=4) {
        let fan = common::surfaces().swap_remove(i).1;
        let (a, b, c) = (
            Divisor::new(&fan, a).unwrap(),
            Divisor::new(&fan, b).unwrap(),
            Divisor::new(&fan, c).unwrap(),
        );
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        let lhs = a.scale(s).unwrap().add(&b).unwrap().intersect(&c).unwrap();
        prop_assert_eq!(lhs, s * a.intersect(&c).unwrap() + b.intersect(&c).unwrap());
    }

    #[test]
    fn principal_divisors_are_numerically_trivial((i, a, _, _) in pair_of_divisors(), u in -7i64..=7, v in -7i64..=7) {
        let fan = common::surfaces().swap_remove(i).1;
        let a = Divisor::new(&fan, a).unwrap();
        let p = fan.principal_divisor(CharacterPoint::new(u, v));
        prop_assert_eq!(p.intersect(&a).unwrap(), 0);
        prop_assert!(p.normalize().free_coeffs().iter().all(|&x| x == 0));
    }
}
