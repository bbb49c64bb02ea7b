//! Cohomology of invariant line bundles from lattice-point signatures.
//!
//! For a divisor `D = sum c_i D_i` and a character `m`, entry `i` of the
//! signature is the sign of `l_i(m) + c_i`. The `m`-graded piece of
//! `H^*(X, O(D))` depends only on which rays carry a minus:
//!
//! * no minus: contributes 1 to `h^0`;
//! * every ray minus: contributes 1 to `h^2`;
//! * otherwise: contributes (number of circular minus-runs) - 1 to `h^1`.
//!
//! Only finitely many characters contribute. They all lie in the bounding
//! box of the vertices of the line arrangement `l_i(m) = -c_i`; beyond it
//! every point sits in an unbounded chamber whose minus set is a single
//! proper arc. [`ScanRegion`] is that box with a margin of 2.
//!
//! Two scans are provided. [`cohomology_pointwise`] visits every lattice
//! point. [`cohomology`] walks each row of the box in runs on which no
//! `l_i(m) + c_i` changes sign, evaluating one representative per run.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::fan::{pairing, CharacterPoint, Divisor, Fan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    pub fn of(value: i64) -> Sign {
        match value.signum() {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => Sign::Zero,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }
}

/// Per-ray signs of a character with respect to a divisor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Signature(Vec<Sign>);

impl Signature {
    pub fn new(entries: Vec<Sign>) -> Self {
        Signature(entries)
    }

    pub fn entries(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Plus and minus exchanged, zeros kept.
    pub fn flipped(&self) -> Signature {
        Signature(self.0.iter().map(|s| s.flip()).collect())
    }

    pub fn minus_interval_count(&self) -> usize {
        minus_interval_count(&self.0)
    }

    pub fn contribution(&self) -> CohomologyDims {
        chamber_contribution(&self.0)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid signature character {0:?}")]
pub struct ParseSignatureError(char);

impl FromStr for Signature {
    type Err = ParseSignatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                '0' => Ok(Sign::Zero),
                other => Err(ParseSignatureError(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Signature)
    }
}

impl TryFrom<String> for Signature {
    type Error = ParseSignatureError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Signature> for String {
    fn from(s: Signature) -> String {
        s.to_string()
    }
}

/// Maximal runs of minus in circular order. An all-minus signature is one run.
pub fn minus_interval_count(entries: &[Sign]) -> usize {
    let n = entries.len();
    let starts = (0..n)
        .filter(|&i| entries[i] == Sign::Minus && entries[(i + n - 1) % n] != Sign::Minus)
        .count();
    if starts == 0 && n > 0 && entries.iter().all(|&s| s == Sign::Minus) {
        1
    } else {
        starts
    }
}

/// `(h^0, h^1, h^2)` contributed by one lattice point.
pub fn chamber_contribution(entries: &[Sign]) -> CohomologyDims {
    let minus = entries.iter().filter(|&&s| s == Sign::Minus).count();
    if minus == 0 {
        CohomologyDims::new(1, 0, 0)
    } else if minus == entries.len() {
        CohomologyDims::new(0, 0, 1)
    } else {
        CohomologyDims::new(0, minus_interval_count(entries) as u64 - 1, 0)
    }
}

/// Dimensions of `H^0`, `H^1`, `H^2`. Serializes as `[h0, h1, h2]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[u64; 3]", into = "[u64; 3]")]
pub struct CohomologyDims {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

impl CohomologyDims {
    pub const fn new(h0: u64, h1: u64, h2: u64) -> Self {
        Self { h0, h1, h2 }
    }

    pub fn euler(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }

    pub fn higher_vanish(&self) -> bool {
        self.h1 == 0 && self.h2 == 0
    }

    pub fn is_zero(&self) -> bool {
        self.h0 == 0 && self.h1 == 0 && self.h2 == 0
    }

    fn add_scaled(&mut self, other: CohomologyDims, weight: u64) {
        self.h0 += other.h0 * weight;
        self.h1 += other.h1 * weight;
        self.h2 += other.h2 * weight;
    }
}

impl std::ops::Add for CohomologyDims {
    type Output = CohomologyDims;

    fn add(mut self, rhs: CohomologyDims) -> CohomologyDims {
        self.add_scaled(rhs, 1);
        self
    }
}

impl From<[u64; 3]> for CohomologyDims {
    fn from([h0, h1, h2]: [u64; 3]) -> Self {
        Self { h0, h1, h2 }
    }
}

impl From<CohomologyDims> for [u64; 3] {
    fn from(d: CohomologyDims) -> Self {
        [d.h0, d.h1, d.h2]
    }
}

impl fmt::Display for CohomologyDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h0={} h1={} h2={}", self.h0, self.h1, self.h2)
    }
}

pub fn signature_at(d: &Divisor<'_>, m: CharacterPoint) -> Signature {
    Signature(
        d.fan()
            .rays()
            .iter()
            .zip(d.coeffs())
            .map(|(&l, &c)| Sign::of(pairing(l, m) + c))
            .collect(),
    )
}

/// Inclusive integer box of characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScanRegion {
    pub u_min: i64,
    pub u_max: i64,
    pub v_min: i64,
    pub v_max: i64,
}

/// Margin added around the arrangement vertices by [`scan_region`].
pub const SCAN_MARGIN: i64 = 2;

impl ScanRegion {
    pub fn contains(&self, m: CharacterPoint) -> bool {
        (self.u_min..=self.u_max).contains(&m.u) && (self.v_min..=self.v_max).contains(&m.v)
    }

    pub fn point_count(&self) -> u64 {
        ((self.u_max - self.u_min + 1) * (self.v_max - self.v_min + 1)) as u64
    }

    /// Same centre, twice the side lengths (rounded outward).
    pub fn doubled(&self) -> ScanRegion {
        let du = (self.u_max - self.u_min + 2) / 2;
        let dv = (self.v_max - self.v_min + 2) / 2;
        self.expanded_by(du, dv)
    }

    pub fn expanded(&self, margin: i64) -> ScanRegion {
        self.expanded_by(margin, margin)
    }

    fn expanded_by(&self, du: i64, dv: i64) -> ScanRegion {
        ScanRegion {
            u_min: self.u_min - du,
            u_max: self.u_max + du,
            v_min: self.v_min - dv,
            v_max: self.v_max + dv,
        }
    }

    pub fn points(&self) -> impl Iterator<Item = CharacterPoint> + '_ {
        (self.v_min..=self.v_max)
            .flat_map(move |v| (self.u_min..=self.u_max).map(move |u| CharacterPoint::new(u, v)))
    }

    /// The point-wise negated box.
    pub fn negated(&self) -> ScanRegion {
        ScanRegion {
            u_min: -self.u_max,
            u_max: -self.u_min,
            v_min: -self.v_max,
            v_max: -self.v_min,
        }
    }
}

/// Bounding box of the pairwise intersections of the lines
/// `l_i(m) = -c_i`, rounded outward, plus `margin` on every side.
pub fn scan_region_with_margin(fan: &Fan, coeffs: &[i64], margin: i64) -> ScanRegion {
    let rays = fan.rays();
    let (mut u_min, mut u_max, mut v_min, mut v_max) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            let (a, b) = (rays[i], rays[j]);
            let det = a.det(b);
            if det == 0 {
                continue;
            }
            let (ci, cj) = (coeffs[i], coeffs[j]);
            // l_i(m) = -c_i, l_j(m) = -c_j
            let (mut un, mut vn, mut den) = (cj * a.y - ci * b.y, b.x * ci - a.x * cj, det);
            if den < 0 {
                un = -un;
                vn = -vn;
                den = -den;
            }
            u_min = u_min.min(Integer::div_floor(&un, &den));
            u_max = u_max.max(Integer::div_ceil(&un, &den));
            v_min = v_min.min(Integer::div_floor(&vn, &den));
            v_max = v_max.max(Integer::div_ceil(&vn, &den));
        }
    }
    ScanRegion {
        u_min: u_min - margin,
        u_max: u_max + margin,
        v_min: v_min - margin,
        v_max: v_max + margin,
    }
}

pub fn scan_region(d: &Divisor<'_>) -> ScanRegion {
    scan_region_with_margin(d.fan(), d.coeffs(), SCAN_MARGIN)
}

/// A lattice point with nonzero contribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyWitness {
    pub m: CharacterPoint,
    pub signature: Signature,
    #[serde(rename = "h")]
    pub contribution: CohomologyDims,
}

impl CohomologyWitness {
    /// Recomputes the signature at the stored point.
    pub fn check(&self, d: &Divisor<'_>) -> bool {
        let s = signature_at(d, self.m);
        s == self.signature && s.contribution() == self.contribution
    }
}

/// Minus and plus sets of one lattice point, as bitmasks over the rays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Masks {
    minus: u64,
    plus: u64,
}

/// Precomputed per-fan data for the bitmask scans.
#[derive(Debug, Clone)]
struct Arrangement<'a> {
    xs: Vec<i64>,
    ys: Vec<i64>,
    coeffs: &'a [i64],
    full: u64,
    n: u32,
}

impl<'a> Arrangement<'a> {
    fn new(fan: &Fan, coeffs: &'a [i64]) -> Self {
        let n = fan.len() as u32;
        Arrangement {
            xs: fan.rays().iter().map(|r| r.x).collect(),
            ys: fan.rays().iter().map(|r| r.y).collect(),
            coeffs,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            n,
        }
    }

    /// Masks at `(u, v)` given the row offsets `y_i v + c_i`.
    #[inline]
    fn masks(&self, row: &[i64], u: i64) -> Masks {
        let mut minus = 0u64;
        let mut plus = 0u64;
        for (i, (&x, &r)) in self.xs.iter().zip(row).enumerate() {
            let value = x * u + r;
            minus |= u64::from(value < 0) << i;
            plus |= u64::from(value > 0) << i;
        }
        Masks { minus, plus }
    }

    #[inline]
    fn runs(&self, set: u64) -> u32 {
        let prev = ((set << 1) | (set >> (self.n - 1))) & self.full;
        (set & !prev).count_ones()
    }

    /// Contribution of a point whose minus set is `minus`.
    #[inline]
    fn contribution(&self, minus: u64) -> CohomologyDims {
        if minus == 0 {
            CohomologyDims::new(1, 0, 0)
        } else if minus == self.full {
            CohomologyDims::new(0, 0, 1)
        } else {
            CohomologyDims::new(0, u64::from(self.runs(minus) - 1), 0)
        }
    }

    /// Whether a point with this minus set contributes to `h^1` or `h^2`.
    #[inline]
    fn is_bad(&self, set: u64) -> bool {
        set != 0 && (set == self.full || self.runs(set) > 1)
    }

    fn row_offsets(&self, v: i64, row: &mut Vec<i64>) {
        row.clear();
        row.extend(self.ys.iter().zip(self.coeffs).map(|(&y, &c)| y * v + c));
    }

    /// Visits the row `v` of `region` as maximal runs of constant signature,
    /// calling `visit(masks, first_u, count)`; stops early when `visit`
    /// returns `false`.
    fn walk_row(
        &self,
        region: &ScanRegion,
        row: &[i64],
        crit: &mut Vec<i64>,
        mut visit: impl FnMut(Masks, i64, u64) -> bool,
    ) -> bool {
        crit.clear();
        crit.push(region.u_min);
        crit.push(region.u_max);
        for (&x, &r) in self.xs.iter().zip(row) {
            if x == 0 {
                continue;
            }
            // root of x u + r = 0
            let (num, den) = if x > 0 { (-r, x) } else { (r, -x) };
            for u in [
                Integer::div_floor(&num, &den),
                Integer::div_ceil(&num, &den),
            ] {
                if u > region.u_min && u < region.u_max {
                    crit.push(u);
                }
            }
        }
        crit.sort_unstable();
        crit.dedup();
        let mut prev: Option<i64> = None;
        for &u in crit.iter() {
            if let Some(p) = prev {
                if u - p > 1 && !visit(self.masks(row, p + 1), p + 1, (u - p - 1) as u64) {
                    return false;
                }
            }
            if !visit(self.masks(row, u), u, 1) {
                return false;
            }
            prev = Some(u);
        }
        true
    }
}

/// Cohomology of `O(D)` by the run-compressed row scan over [`scan_region`].
pub fn cohomology(d: &Divisor<'_>) -> CohomologyDims {
    cohomology_in(d, &scan_region(d))
}

/// As [`cohomology`], over an explicit region (which must contain the
/// arrangement vertices for the result to be the true cohomology).
pub fn cohomology_in(d: &Divisor<'_>, region: &ScanRegion) -> CohomologyDims {
    let arr = Arrangement::new(d.fan(), d.coeffs());
    let mut total = CohomologyDims::default();
    let (mut row, mut crit) = (Vec::new(), Vec::new());
    for v in region.v_min..=region.v_max {
        arr.row_offsets(v, &mut row);
        arr.walk_row(region, &row, &mut crit, |masks, _, count| {
            total.add_scaled(arr.contribution(masks.minus), count);
            true
        });
    }
    total
}

/// Cohomology by visiting every lattice point of `region` individually.
pub fn cohomology_pointwise(d: &Divisor<'_>, region: &ScanRegion) -> CohomologyDims {
    region
        .points()
        .map(|m| signature_at(d, m).contribution())
        .fold(CohomologyDims::default(), |a, b| a + b)
}

/// Cohomology together with every contributing lattice point, in row-major
/// order (`v` ascending, then `u`).
pub fn cohomology_with_witnesses(d: &Divisor<'_>) -> (CohomologyDims, Vec<CohomologyWitness>) {
    let region = scan_region(d);
    let mut total = CohomologyDims::default();
    let mut witnesses = Vec::new();
    for m in region.points() {
        let signature = signature_at(d, m);
        let contribution = signature.contribution();
        if !contribution.is_zero() {
            total = total + contribution;
            witnesses.push(CohomologyWitness {
                m,
                signature,
                contribution,
            });
        }
    }
    (total, witnesses)
}

/// `h^1(D) = h^2(D) = 0`, stopping at the first offending lattice point.
pub fn higher_cohomology_vanishes(d: &Divisor<'_>) -> bool {
    first_bad_point(d.fan(), d.coeffs(), false).is_none()
}

/// Finds a character contributing to `h^1` or `h^2` of `D` (or, with
/// `check_dual`, of `-D` at the negated character, which shares the scan:
/// the signature of `-D` at `-m` is the flip of that of `D` at `m`, and the
/// region of `-D` is the negation of the region of `D`).
///
/// Returns the point in `D`'s coordinates and whether it was the dual that
/// failed.
pub(crate) fn first_bad_point(
    fan: &Fan,
    coeffs: &[i64],
    check_dual: bool,
) -> Option<(CharacterPoint, bool)> {
    let arr = Arrangement::new(fan, coeffs);
    let region = scan_region_with_margin(fan, coeffs, SCAN_MARGIN);
    let (mut row, mut crit) = (Vec::new(), Vec::new());
    let mut found = None;
    // Rows from the middle outward: offending points cluster near the
    // arrangement vertices.
    let mid = region.v_min + (region.v_max - region.v_min) / 2;
    let rows = (0..=(region.v_max - region.v_min)).map(|k| {
        if k % 2 == 0 {
            mid + k / 2
        } else {
            mid - (k + 1) / 2
        }
    });
    for v in rows.filter(|v| (region.v_min..=region.v_max).contains(v)) {
        arr.row_offsets(v, &mut row);
        let complete = arr.walk_row(&region, &row, &mut crit, |masks, u, _| {
            if arr.is_bad(masks.minus) {
                found = Some((CharacterPoint::new(u, v), false));
                false
            } else if check_dual && arr.is_bad(masks.plus) {
                found = Some((CharacterPoint::new(u, v), true));
                false
            } else {
                true
            }
        });
        if !complete {
            break;
        }
    }
    found
}

/// `chi(O(D)) = 1 + D.(D - K) / 2`.
pub fn euler_char_rr(d: &Divisor<'_>) -> i64 {
    let k = d.fan().canonical_divisor();
    let d_minus_k = d.sub(&k).expect("same fan");
    let twice = d.intersect(&d_minus_k).expect("same fan");
    assert!(twice % 2 == 0, "D.(D-K) is even on a smooth surface");
    1 + twice / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::NamedSurface;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn interval_counts() {
        assert_eq!(sig("+--++-+").minus_interval_count(), 2);
        assert_eq!(sig("--+++--").minus_interval_count(), 1);
        assert_eq!(sig("+++++++").minus_interval_count(), 0);
        assert_eq!(sig("-------").minus_interval_count(), 1);
        assert_eq!(sig("-0-0-0-").minus_interval_count(), 3);
    }

    #[test]
    fn contributions() {
        assert_eq!(sig("-------").contribution(), CohomologyDims::new(0, 0, 1));
        assert_eq!(sig("0---0-+").contribution(), CohomologyDims::new(0, 1, 0));
        assert_eq!(sig("0000000").contribution(), CohomologyDims::new(1, 0, 0));
        assert_eq!(sig("0-0-0-0").contribution(), CohomologyDims::new(0, 2, 0));
    }

    #[test]
    fn signature_parse_and_display() {
        assert_eq!(sig("0−+").to_string(), "0-+");
        assert!("0x+".parse::<Signature>().is_err());
        assert_eq!(sig("+-0").flipped().to_string(), "-+0");
    }

    #[test]
    fn signature_examples_on_king() {
        let x = NamedSurface::KingCounterexample.build();
        let d = Divisor::from_free(&x, &[0, 0, 0, 0, 1]).unwrap();
        let s = signature_at(&d, CharacterPoint::new(-1, -1));
        assert_eq!(s.to_string(), "0---0-+");
        assert_eq!(&s.entries()[4..], &[Sign::Zero, Sign::Minus, Sign::Plus]);
        let zero = x.zero_divisor();
        assert_eq!(
            signature_at(&zero, CharacterPoint::ORIGIN).to_string(),
            "0000000"
        );
    }

    #[test]
    fn region_of_zero_divisor_is_centered() {
        let x = NamedSurface::KingCounterexample.build();
        let r = scan_region(&x.zero_divisor());
        assert_eq!(
            r,
            ScanRegion {
                u_min: -2,
                u_max: 2,
                v_min: -2,
                v_max: 2
            }
        );
    }

    #[test]
    fn basic_cohomology_on_king() {
        let x = NamedSurface::KingCounterexample.build();
        assert_eq!(cohomology(&x.zero_divisor()), CohomologyDims::new(1, 0, 0));
        let k = x.canonical_divisor();
        assert_eq!(cohomology(&k), CohomologyDims::new(0, 0, 1));
        let (_, w) = cohomology_with_witnesses(&k);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].m, CharacterPoint::ORIGIN);
    }

    #[test]
    fn row_runs_match_pointwise() {
        let x = NamedSurface::KingCounterexample.build();
        for free in [
            [4, 7, 11, 4, 2],
            [-4, -7, -11, -4, -2],
            [2, 4, 8, 3, 2],
            [1, -3, 5, 0, -2],
        ] {
            let d = Divisor::from_free(&x, &free).unwrap();
            let r = scan_region(&d);
            assert_eq!(cohomology(&d), cohomology_pointwise(&d, &r), "{free:?}");
        }
    }

    #[test]
    fn early_exit_agrees_with_dims() {
        let x = NamedSurface::KingCounterexample.build();
        let good = Divisor::from_free(&x, &[2, 4, 7, 3, 2]).unwrap();
        assert!(higher_cohomology_vanishes(&good));
        assert!(higher_cohomology_vanishes(&-&good));
        assert!(!higher_cohomology_vanishes(&x.canonical_divisor()));
    }

    #[test]
    fn rr_basics() {
        let x = NamedSurface::KingCounterexample.build();
        assert_eq!(euler_char_rr(&x.zero_divisor()), 1);
        assert_eq!(euler_char_rr(&x.canonical_divisor()), 1);
        let a7 = Divisor::from_free(&x, &[1, 2, 3, 1, 0]).unwrap();
        assert_eq!(euler_char_rr(&a7), cohomology(&a7).euler());
    }

    #[test]
    fn witness_json_shape() {
        let x = NamedSurface::KingCounterexample.build();
        let d = Divisor::from_free(&x, &[0, 0, 0, 0, 1]).unwrap();
        let w = CohomologyWitness {
            m: CharacterPoint::new(-1, -1),
            signature: signature_at(&d, CharacterPoint::new(-1, -1)),
            contribution: CohomologyDims::new(0, 1, 0),
        };
        assert!(w.check(&d));
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"m":[-1,-1],"signature":"0---0-+","h":[0,1,0]}"#
        );
    }
}
