mod common;

use proptest::prelude::*;
use toric_core::classify::{ClassificationTable, A_LIST, B_SERIES, C_LIST, SERIES_STEP};
use toric_core::{compatible, is_biacyclic, solve_offsets, Divisor, NamedSurface, PicClass};

#[test]
fn every_finite_entry_is_biacyclic_by_lattice_count() {
    let x = NamedSurface::KingCounterexample.build();
    for c in A_LIST.iter().chain(&C_LIST) {
        let d = Divisor::from_free(&x, c).unwrap();
        assert!(common::oracle_biacyclic(&x, d.coeffs()), "{c:?}");
    }
}

#[test]
fn extra_c_class_by_lattice_count() {
    let x = NamedSurface::KingCounterexample.build();
    let d = Divisor::from_free(&x, &[2, 6, 9, 4, 2]).unwrap();
    for c in [d.coeffs().to_vec(), (-&d).coeffs().to_vec()] {
        let h = common::oracle_dims(&x, &c);
        assert_eq!((h.h1, h.h2), (0, 0), "{c:?}");
    }
    assert!(is_biacyclic(&d));
}

#[test]
fn series_members_by_lattice_count() {
    let x = NamedSurface::KingCounterexample.build();
    for sd in &B_SERIES {
        for k in sd.k_min..sd.k_min + 6 {
            let d = Divisor::from_free(&x, &sd.member(k)).unwrap();
            assert!(
                common::oracle_biacyclic(&x, d.coeffs()),
                "B_{{{},{k}}}",
                sd.series
            );
        }
        if sd.k_min > -3 {
            let below = Divisor::from_free(&x, &sd.member(sd.k_min - 1)).unwrap();
            let listed = ClassificationTable::king().label_of(below.normalize().free_coeffs());
            assert_eq!(
                common::oracle_biacyclic(&x, below.coeffs()),
                listed.is_some(),
                "B_{} below k_min",
                sd.series
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn offsets_agree_with_the_engine(
        base in prop::collection::vec(-6i64..=6, 5),
        step_kind in 0..3u8,
        step in prop::collection::vec(-3i64..=3, 5),
        pick in 0..7usize,
    ) {
        let step: Vec<i64> = match step_kind {
            0 => SERIES_STEP.to_vec(),
            1 => {
                let mut s = step;
                s[4] = 0;
                s
            }
            _ => step,
        };
        // bias the base towards known classes so solutions actually occur
        let base: Vec<i64> = if pick < 5 {
            (0..5).map(|i| B_SERIES[pick].base[i] - base[i] / 3).collect()
        } else {
            base
        };
        let x = NamedSurface::KingCounterexample.build();
        let table = ClassificationTable::king();
        let sols = solve_offsets(&base, &step).unwrap();
        for n in -12..=12 {
            let free: Vec<i64> = (0..5).map(|i| base[i] + n * step[i]).collect();
            let d = Divisor::from_free(&x, &free).unwrap();
            prop_assert_eq!(sols.label_at(n), table.label_of(&free), "n = {}", n);
            prop_assert_eq!(sols.label_at(n).is_some(), is_biacyclic(&d), "n = {}", n);
        }
    }

    #[test]
    fn compatibility_is_symmetric_and_negation_invariant(
        a in prop::collection::vec(-4i64..=4, 5),
        b in prop::collection::vec(-4i64..=4, 5),
    ) {
        let x = NamedSurface::KingCounterexample.build();
        let (p, q) = (PicClass::from_free(&x, &a).unwrap(), PicClass::from_free(&x, &b).unwrap());
        let forward = compatible(&p, &q).unwrap();
        prop_assert_eq!(forward, compatible(&q, &p).unwrap());
        prop_assert_eq!(forward, compatible(&-&p, &-&q).unwrap());
        let diff = q.sub(&p).unwrap();
        prop_assert_eq!(forward, common::oracle_biacyclic(&x, diff.coeffs()));
    }
}
