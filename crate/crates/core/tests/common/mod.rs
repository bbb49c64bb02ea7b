//! Helpers shared by the integration tests: the built-in surfaces, random
//! divisors, and an independent cohomology oracle.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use toric_core::{CohomologyDims, Fan, NamedSurface};

pub fn surfaces() -> Vec<(&'static str, Fan)> {
    vec![
        ("king", NamedSurface::KingCounterexample.build()),
        ("p2", NamedSurface::P2.build()),
        ("p1p1", NamedSurface::P1P1.build()),
        ("f2", NamedSurface::Hirzebruch(2).build()),
    ]
}

pub fn random_coeffs(rng: &mut StdRng, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

fn rays(fan: &Fan) -> Vec<(i64, i64)> {
    fan.rays().iter().map(|r| (r.x, r.y)).collect()
}

/// Number of characters `m` with `<l_i, m> + c_i >= 0` for every ray.
pub fn sections(fan: &Fan, c: &[i64]) -> u64 {
    let ls = rays(fan);
    // The polytope's vertices are among the pairwise wall intersections.
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for i in 0..ls.len() {
        for j in i + 1..ls.len() {
            let ((a, b), (p, q)) = (ls[i], ls[j]);
            let det = (a * q - b * p) as f64;
            if det == 0.0 {
                continue;
            }
            let u = (-c[i] * q + c[j] * b) as f64 / det;
            let v = (-c[j] * a + c[i] * p) as f64 / det;
            lo = (lo.0.min(u), lo.1.min(v));
            hi = (hi.0.max(u), hi.1.max(v));
        }
    }
    let mut count = 0;
    for u in lo.0.floor() as i64 - 1..=hi.0.ceil() as i64 + 1 {
        for v in lo.1.floor() as i64 - 1..=hi.1.ceil() as i64 + 1 {
            if ls
                .iter()
                .zip(c)
                .all(|(&(a, b), &ci)| a * u + b * v + ci >= 0)
            {
                count += 1;
            }
        }
    }
    count
}

/// `D_i . D_j` from the ray relations `l_{i-1} + l_{i+1} = a_i l_i`.
pub fn intersection_matrix(fan: &Fan) -> Vec<Vec<i64>> {
    let ls = rays(fan);
    let n = ls.len();
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        let (prev, next, here) = (ls[(i + n - 1) % n], ls[(i + 1) % n], ls[i]);
        let sum = (prev.0 + next.0, prev.1 + next.1);
        let a = if here.0 != 0 {
            sum.0 / here.0
        } else {
            sum.1 / here.1
        };
        assert_eq!((a * here.0, a * here.1), sum);
        m[i][i] = -a;
        m[i][(i + 1) % n] = 1;
        m[(i + 1) % n][i] = 1;
    }
    m
}

pub fn pair(m: &[Vec<i64>], c: &[i64], d: &[i64]) -> i64 {
    (0..c.len())
        .map(|i| (0..d.len()).map(|j| c[i] * m[i][j] * d[j]).sum::<i64>())
        .sum()
}

/// `(h0, h1, h2)` from lattice-point counts, duality and Riemann-Roch.
pub fn oracle_dims(fan: &Fan, c: &[i64]) -> CohomologyDims {
    let h0 = sections(fan, c);
    let dual: Vec<i64> = c.iter().map(|x| -1 - x).collect();
    let h2 = sections(fan, &dual);
    let m = intersection_matrix(fan);
    let k = vec![-1; c.len()];
    let twice = pair(&m, c, c) - pair(&m, c, &k);
    let chi = 1 + twice / 2;
    let h1 = h0 as i64 + h2 as i64 - chi;
    assert!(h1 >= 0, "oracle produced negative h1 for {c:?}");
    CohomologyDims::new(h0, h1 as u64, h2)
}

pub fn oracle_biacyclic(fan: &Fan, c: &[i64]) -> bool {
    let neg: Vec<i64> = c.iter().map(|x| -x).collect();
    oracle_dims(fan, c).higher_vanish() && oracle_dims(fan, &neg).higher_vanish()
}
