mod common;

use proptest::prelude::*;
use toric_core::cohomology::{
    cohomology_in, cohomology_pointwise, euler_char_rr, scan_region, scan_region_with_margin,
    signature_at,
};
use toric_core::{cohomology, CharacterPoint, Divisor, Fan, NamedSurface, Sign};

fn surface(index: usize) -> Fan {
    common::surfaces().swap_remove(index).1
}

fn coeffs_for(index: usize, bound: i64) -> impl Strategy<Value = (usize, Vec<i64>)> {
    let n = surface(index).len();
    prop::collection::vec(-bound..=bound, n).prop_map(move |c| (index, c))
}

fn any_surface_coeffs(bound: i64) -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0..4usize).prop_flat_map(move |i| coeffs_for(i, bound))
}

fn serre_and_rr(index: usize, c: Vec<i64>) -> Result<(), TestCaseError> {
    let fan = surface(index);
    let d = Divisor::new(&fan, c).unwrap();
    let h = cohomology(&d);
    let dual = fan.canonical_divisor().sub(&d).unwrap();
    let hd = cohomology(&dual);
    prop_assert_eq!((h.h0, h.h1, h.h2), (hd.h2, hd.h1, hd.h0));
    prop_assert_eq!(h.euler(), euler_char_rr(&d));
    prop_assert_eq!(h, common::oracle_dims(&fan, d.coeffs()));
    Ok(())
}

macro_rules! serre_suite {
    ($name:ident, $index:expr) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]
            #[test]
            fn $name((i, c) in coeffs_for($index, 6)) {
                serre_and_rr(i, c)?;
            }
        }
    };
}

serre_suite!(serre_duality_and_rr_king, 0);
serre_suite!(serre_duality_and_rr_p2, 1);
serre_suite!(serre_duality_and_rr_p1p1, 2);
serre_suite!(serre_duality_and_rr_f2, 3);

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dual_signature_is_flipped((i, c) in any_surface_coeffs(8), u in -15i64..=15, v in -15i64..=15) {
        let fan = surface(i);
        let d = Divisor::new(&fan, c).unwrap();
        let m = CharacterPoint::new(u, v);
        prop_assert_eq!(signature_at(&-&d, -m), signature_at(&d, m).flipped());
    }

    #[test]
    fn doubling_the_box_changes_nothing((i, c) in any_surface_coeffs(6)) {
        let fan = surface(i);
        let d = Divisor::new(&fan, c).unwrap();
        let region = scan_region(&d);
        prop_assert_eq!(cohomology_in(&d, &region.doubled()), cohomology(&d));
    }

    #[test]
    fn margin_zero_suffices((i, c) in any_surface_coeffs(6)) {
        let fan = surface(i);
        let d = Divisor::new(&fan, c).unwrap();
        let tight = scan_region_with_margin(&fan, d.coeffs(), 0);
        prop_assert_eq!(cohomology_in(&d, &tight), cohomology(&d));
    }

    #[test]
    fn run_compression_matches_pointwise((i, c) in any_surface_coeffs(6)) {
        let fan = surface(i);
        let d = Divisor::new(&fan, c).unwrap();
        let region = scan_region(&d);
        prop_assert_eq!(cohomology_pointwise(&d, &region), cohomology_in(&d, &region));
    }

    #[test]
    fn translation_invariance((i, c) in any_surface_coeffs(6), u in -5i64..=5, v in -5i64..=5) {
        let fan = surface(i);
        let d = Divisor::new(&fan, c).unwrap();
        let moved = d.translate(CharacterPoint::new(u, v)).unwrap();
        prop_assert_eq!(cohomology(&moved), cohomology(&d));
        prop_assert_eq!(moved.normalize(), d.normalize());
    }

    #[test]
    fn normalize_is_idempotent((i, c) in any_surface_coeffs(9)) {
        let fan = surface(i);
        let d = Divisor::new(&fan, c).unwrap();
        let once = d.normalize();
        let twice = once.divisor().normalize();
        prop_assert_eq!(&once, &twice);
        let n = fan.len();
        prop_assert_eq!(&once.coeffs()[n - 2..], &[0, 0]);
        prop_assert_eq!(cohomology(once.divisor()), cohomology(&d));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    /// Outside the arrangement's vertex box every lattice point sits in an
    /// unbounded chamber and contributes nothing.
    #[test]
    fn far_points_contribute_nothing(
        (i, c) in any_surface_coeffs(8),
        side in 0..4u8,
        offset in 3i64..40,
        along in -60i64..=60,
    ) {
        let fan = surface(i);
        let d = Divisor::new(&fan, c).unwrap();
        let r = scan_region_with_margin(&fan, d.coeffs(), 0);
        let m = match side {
            0 => CharacterPoint::new(r.u_max + offset, along),
            1 => CharacterPoint::new(r.u_min - offset, along),
            2 => CharacterPoint::new(along, r.v_max + offset),
            _ => CharacterPoint::new(along, r.v_min - offset),
        };
        let s = signature_at(&d, m);
        prop_assert!(s.minus_interval_count() <= 1, "{} at {}", s, m);
        prop_assert!(s.entries().contains(&Sign::Plus), "{} at {}", s, m);
        prop_assert!(s.contribution().is_zero(), "{} at {}", s, m);
    }
}

#[test]
fn structure_sheaf_on_builtins() {
    for (name, fan) in common::surfaces() {
        let h = cohomology(&fan.zero_divisor());
        assert_eq!((h.h0, h.h1, h.h2), (1, 0, 0), "{name}");
    }
    let f5 = NamedSurface::Hirzebruch(5).build();
    assert_eq!(cohomology(&f5.zero_divisor()).h0, 1);
}

#[test]
fn large_coefficients_agree_with_oracle() {
    use rand::{rngs::StdRng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(7);
    for (_, fan) in common::surfaces() {
        for _ in 0..40 {
            let c = common::random_coeffs(&mut rng, fan.len(), 25);
            let d = Divisor::new(&fan, c).unwrap();
            assert_eq!(cohomology(&d), common::oracle_dims(&fan, d.coeffs()), "{d}");
        }
    }
}
