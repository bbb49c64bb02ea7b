//! Bi-acyclic line bundles: classes `D` with `h^1 = h^2 = 0` for both `D`
//! and `-D`.
//!
//! [`enumerate_biacyclic`] finds them by brute force inside a coefficient
//! box on any fan. [`ClassificationTable`] is the closed-form description of
//! the whole (infinite) set on the king-counterexample surface: zero, seven
//! sporadic classes `A_i` with `c_5 = 0`, seven arithmetic series
//! `B_{r,k} = base_r + k (1,2,3,1,0)` with `c_5 = 1`, eleven sporadic classes
//! `C_j` with `c_5 = 2`, and the negatives of all of these.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::{first_bad_point, signature_at, CohomologyDims, Signature};
use crate::error::{Error, Result};
use crate::fan::{CharacterPoint, Divisor, Fan, PicClass, KING_RAYS};

/// Whether `D` and `-D` both have vanishing higher cohomology.
///
/// Scans the lattice once: a point `m` is checked for `D` through its minus
/// set and for `-D` (at `-m`) through its plus set.
pub fn is_biacyclic(d: &Divisor<'_>) -> bool {
    first_bad_point(d.fan(), d.coeffs(), true).is_none()
}

fn is_biacyclic_coeffs(fan: &Fan, coeffs: &[i64]) -> bool {
    first_bad_point(fan, coeffs, true).is_none()
}

/// A lattice point showing that `D` (or `-D`) has higher cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicityFailure {
    /// `true` when the failing bundle is the dual `-D`.
    pub dual: bool,
    /// The character, in the coordinates of the failing bundle.
    pub m: CharacterPoint,
    pub signature: Signature,
    #[serde(rename = "h")]
    pub contribution: CohomologyDims,
}

/// `None` when `D` is bi-acyclic, otherwise the first offending point found.
pub fn biacyclic_failure(d: &Divisor<'_>) -> Option<AcyclicityFailure> {
    let (m, dual) = first_bad_point(d.fan(), d.coeffs(), true)?;
    let (bundle, m) = if dual { (-d, -m) } else { (d.clone(), m) };
    let signature = signature_at(&bundle, m);
    let contribution = signature.contribution();
    Some(AcyclicityFailure {
        dual,
        m,
        signature,
        contribution,
    })
}

/// Inclusive per-coefficient bounds on the free coefficients `c_0..c_{n-3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoeffBox {
    ranges: Vec<(i64, i64)>,
}

impl CoeffBox {
    pub fn new(ranges: Vec<(i64, i64)>) -> Self {
        CoeffBox { ranges }
    }

    /// `|c_i| <= bound` for every free coefficient.
    pub fn symmetric(dims: usize, bound: i64) -> Self {
        CoeffBox::new(vec![(-bound, bound); dims])
    }

    /// The box on the king-counterexample surface: `|c_i| <= bound` for the
    /// first four coefficients and `|c_5| <= c5_bound`.
    pub fn king(bound: i64, c5_bound: i64) -> Self {
        CoeffBox::symmetric(5, bound).with_range(4, -c5_bound, c5_bound)
    }

    /// Default validation box: `|c_1..c_4| <= 12`, `|c_5| <= 4`.
    pub fn king_default() -> Self {
        CoeffBox::king(12, 4)
    }

    pub fn with_range(mut self, index: usize, lo: i64, hi: i64) -> Self {
        self.ranges[index] = (lo, hi);
        self
    }

    pub fn with_fixed(self, index: usize, value: i64) -> Self {
        self.with_range(index, value, value)
    }

    pub fn ranges(&self) -> &[(i64, i64)] {
        &self.ranges
    }

    pub fn dims(&self) -> usize {
        self.ranges.len()
    }

    /// Number of coefficient tuples in the box.
    pub fn len(&self) -> u64 {
        self.ranges
            .iter()
            .map(|&(lo, hi)| if hi < lo { 0 } else { (hi - lo + 1) as u64 })
            .product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, coeffs: &[i64]) -> bool {
        coeffs.len() == self.ranges.len()
            && coeffs
                .iter()
                .zip(&self.ranges)
                .all(|(c, &(lo, hi))| (lo..=hi).contains(c))
    }

    /// Closed under negation.
    pub fn is_symmetric(&self) -> bool {
        self.ranges.iter().all(|&(lo, hi)| lo == -hi)
    }

    /// Every range scaled by 2.
    pub fn doubled(&self) -> CoeffBox {
        CoeffBox::new(
            self.ranges
                .iter()
                .map(|&(lo, hi)| (2 * lo, 2 * hi))
                .collect(),
        )
    }

    /// The `index`-th tuple in mixed-radix order (last coefficient fastest).
    fn nth(&self, mut index: u64, out: &mut [i64]) {
        for (slot, &(lo, hi)) in out.iter_mut().zip(&self.ranges).rev() {
            let width = (hi - lo + 1) as u64;
            *slot = lo + (index % width) as i64;
            index /= width;
        }
    }
}

impl fmt::Display for CoeffBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ranges
            .iter()
            .map(|(lo, hi)| format!("[{lo},{hi}]"))
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// All bi-acyclic classes whose free coefficients lie in `bx` (and, with
/// `c5_filter`, whose last free coefficient equals it), sorted.
pub fn enumerate_biacyclic<'f>(
    fan: &'f Fan,
    bx: &CoeffBox,
    c5_filter: Option<i64>,
) -> Result<Vec<PicClass<'f>>> {
    let rank = fan.picard_rank();
    if bx.dims() != rank {
        return Err(Error::CoefficientCount {
            expected: rank,
            got: bx.dims(),
        });
    }
    let bx = match c5_filter {
        Some(k) => {
            let (lo, hi) = bx.ranges()[rank - 1];
            if !(lo..=hi).contains(&k) {
                return Ok(Vec::new());
            }
            bx.clone().with_fixed(rank - 1, k)
        }
        None => bx.clone(),
    };
    Ok(enumerate_free(fan, &bx)
        .into_iter()
        .map(|free| PicClass::from_free(fan, &free).expect("box coefficients are in range"))
        .collect())
}

/// Free-coefficient tuples of the bi-acyclic classes in `bx`, sorted.
fn enumerate_free(fan: &Fan, bx: &CoeffBox) -> Vec<Vec<i64>> {
    let n = fan.len();
    // Bi-acyclicity is invariant under D -> -D, so on a symmetric box only
    // one of each pair needs a scan.
    let symmetric = bx.is_symmetric();
    let mut found: Vec<Vec<i64>> = (0..bx.len())
        .into_par_iter()
        .map_init(
            || vec![0i64; n],
            |coeffs, index| {
                bx.nth(index, &mut coeffs[..n - 2]);
                let free = &coeffs[..n - 2];
                if symmetric && free.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
                    return None;
                }
                is_biacyclic_coeffs(fan, coeffs).then(|| free.to_vec())
            },
        )
        .flatten()
        .collect();
    if symmetric {
        let negatives: Vec<Vec<i64>> = found
            .iter()
            .filter(|c| c.iter().any(|&x| x != 0))
            .map(|c| c.iter().map(|x| -x).collect())
            .collect();
        found.extend(negatives);
    }
    found.sort();
    found
}

/// `+` or `-` in front of a label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    Plus,
    Minus,
}

impl Polarity {
    pub fn sign(self) -> i64 {
        match self {
            Polarity::Plus => 1,
            Polarity::Minus => -1,
        }
    }

    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Plus => Polarity::Minus,
            Polarity::Minus => Polarity::Plus,
        }
    }

    pub(crate) fn from_sign(s: i64) -> Polarity {
        if s < 0 {
            Polarity::Minus
        } else {
            Polarity::Plus
        }
    }
}

/// Name of a bi-acyclic class on the king-counterexample surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum BiacyclicLabel {
    Zero,
    /// `index` in 1..=7.
    A {
        index: u8,
        polarity: Polarity,
    },
    /// `series` in 1..=7, `k >= k_min(series)`.
    B {
        series: u8,
        k: i64,
        polarity: Polarity,
    },
    /// `index` in 1..=10.
    C {
        index: u8,
        polarity: Polarity,
    },
}

impl BiacyclicLabel {
    pub fn a(index: u8) -> Self {
        BiacyclicLabel::A {
            index,
            polarity: Polarity::Plus,
        }
    }

    pub fn b(series: u8, k: i64) -> Self {
        BiacyclicLabel::B {
            series,
            k,
            polarity: Polarity::Plus,
        }
    }

    pub fn c(index: u8) -> Self {
        BiacyclicLabel::C {
            index,
            polarity: Polarity::Plus,
        }
    }

    pub fn negated(self) -> Self {
        match self {
            BiacyclicLabel::Zero => BiacyclicLabel::Zero,
            BiacyclicLabel::A { index, polarity } => BiacyclicLabel::A {
                index,
                polarity: polarity.flip(),
            },
            BiacyclicLabel::B {
                series,
                k,
                polarity,
            } => BiacyclicLabel::B {
                series,
                k,
                polarity: polarity.flip(),
            },
            BiacyclicLabel::C { index, polarity } => BiacyclicLabel::C {
                index,
                polarity: polarity.flip(),
            },
        }
    }

    pub fn polarity(&self) -> Option<Polarity> {
        match *self {
            BiacyclicLabel::Zero => None,
            BiacyclicLabel::A { polarity, .. }
            | BiacyclicLabel::B { polarity, .. }
            | BiacyclicLabel::C { polarity, .. } => Some(polarity),
        }
    }
}

impl fmt::Display for BiacyclicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |p: Polarity| if p == Polarity::Minus { "-" } else { "" };
        match *self {
            BiacyclicLabel::Zero => write!(f, "0"),
            BiacyclicLabel::A { index, polarity } => write!(f, "{}A_{index}", sign(polarity)),
            BiacyclicLabel::B {
                series,
                k,
                polarity,
            } => write!(f, "{}B_{{{series},{k}}}", sign(polarity)),
            BiacyclicLabel::C { index, polarity } => write!(f, "{}C_{index}", sign(polarity)),
        }
    }
}

impl From<BiacyclicLabel> for String {
    fn from(l: BiacyclicLabel) -> String {
        l.to_string()
    }
}

impl TryFrom<String> for BiacyclicLabel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for BiacyclicLabel {
    type Err = Error;

    /// Parses `0`, `A_3`, `-C_10`, `B_{4,2}` (braces optional).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownName(s.to_string());
        let t = s.trim();
        if t == "0" {
            return Ok(BiacyclicLabel::Zero);
        }
        let (polarity, t) = match t.strip_prefix('-') {
            Some(rest) => (Polarity::Minus, rest),
            None => (Polarity::Plus, t.strip_prefix('+').unwrap_or(t)),
        };
        let (kind, rest) = t.split_once('_').ok_or_else(bad)?;
        let rest = rest.trim_start_matches('{').trim_end_matches('}');
        let label = match kind {
            "A" => BiacyclicLabel::A {
                index: rest.parse().map_err(|_| bad())?,
                polarity,
            },
            "C" => BiacyclicLabel::C {
                index: rest.parse().map_err(|_| bad())?,
                polarity,
            },
            "B" => {
                let (r, k) = rest.split_once(',').ok_or_else(bad)?;
                BiacyclicLabel::B {
                    series: r.trim().parse().map_err(|_| bad())?,
                    k: k.trim().parse().map_err(|_| bad())?,
                    polarity,
                }
            }
            _ => return Err(bad()),
        };
        Ok(label)
    }
}

/// Common step of every `B`-series; equal to `A_7`.
pub const SERIES_STEP: [i64; 5] = [1, 2, 3, 1, 0];

/// The sporadic classes with `c_5 = 0`, `A_1..A_7`.
pub const A_LIST: [[i64; 5]; 7] = [
    [0, 0, 1, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 1, 2, 1, 0],
    [1, 1, 1, 0, 0],
    [1, 1, 2, 1, 0],
    [1, 2, 2, 1, 0],
    [1, 2, 3, 1, 0],
];

/// The sporadic classes with `c_5 = 2`.
///
/// `C_1..C_10` are the classical list. `C_11 = (2,6,9,4,2)` is missing from
/// it; the signature scan and the Riemann-Roch lattice count both give
/// `h(C_11) = (5,0,0)` and `h(-C_11) = (0,0,0)`.
pub const C_LIST: [[i64; 5]; 11] = [
    [2, 4, 7, 3, 2],
    [2, 5, 7, 3, 2],
    [2, 5, 8, 3, 2],
    [2, 5, 9, 4, 2],
    [2, 6, 10, 4, 2],
    [3, 5, 7, 3, 2],
    [3, 5, 8, 3, 2],
    [3, 5, 9, 4, 2],
    [3, 6, 8, 3, 2],
    [3, 6, 9, 3, 2],
    [2, 6, 9, 4, 2],
];

/// Number of `C` classes in the classical list (`C_1..C_10`).
pub const CLASSICAL_C_COUNT: usize = 10;

/// One arithmetic family `base + k * step`, `k >= k_min`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDescriptor {
    #[serde(skip)]
    pub series: u8,
    pub base: [i64; 5],
    pub step: [i64; 5],
    pub k_min: i64,
}

impl SeriesDescriptor {
    pub fn member(&self, k: i64) -> [i64; 5] {
        std::array::from_fn(|i| self.base[i] + k * self.step[i])
    }

    /// The `k` with `member(k) == coeffs`, if any (ignoring `k_min`).
    pub fn solve(&self, coeffs: &[i64]) -> Option<i64> {
        // every base has c_1 = 0 and the step has c_1 = 1
        let k = coeffs.first()? - self.base[0];
        (coeffs == self.member(k)).then_some(k)
    }
}

/// `B_1..B_7` as `(k, 2k-1, 3k-2, k, 1)`, ..., `(k, 2k+1, 3k+2, k+1, 1)`.
pub const B_SERIES: [SeriesDescriptor; 7] = [
    series(1, [0, -1, -2, 0, 1], 2),
    series(2, [0, -1, -1, 0, 1], 1),
    series(3, [0, 0, -1, 0, 1], 1),
    series(4, [0, 0, 0, 0, 1], 1),
    series(5, [0, 0, 1, 1, 1], 1),
    series(6, [0, 1, 1, 1, 1], 1),
    series(7, [0, 1, 2, 1, 1], 0),
];

const fn series(series: u8, base: [i64; 5], k_min: i64) -> SeriesDescriptor {
    SeriesDescriptor {
        series,
        base,
        step: SERIES_STEP,
        k_min,
    }
}

/// The complete list of bi-acyclic classes on the king-counterexample
/// surface, in closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationTable {
    pub a_list: Vec<[i64; 5]>,
    pub c_list: Vec<[i64; 5]>,
    pub b_series: Vec<SeriesDescriptor>,
}

fn neg5(c: [i64; 5]) -> [i64; 5] {
    c.map(|x| -x)
}

impl ClassificationTable {
    pub fn king() -> Self {
        ClassificationTable {
            a_list: A_LIST.to_vec(),
            c_list: C_LIST.to_vec(),
            b_series: B_SERIES.to_vec(),
        }
    }

    pub fn series(&self, r: u8) -> Option<&SeriesDescriptor> {
        self.b_series.get(usize::from(r).checked_sub(1)?)
    }

    /// Free coefficients of a label, or `None` for an out-of-range label.
    pub fn class_of(&self, label: &BiacyclicLabel) -> Option<[i64; 5]> {
        let signed = |c: [i64; 5], p: Polarity| if p == Polarity::Minus { neg5(c) } else { c };
        match *label {
            BiacyclicLabel::Zero => Some([0; 5]),
            BiacyclicLabel::A { index, polarity } => {
                let c = *self.a_list.get(usize::from(index).checked_sub(1)?)?;
                Some(signed(c, polarity))
            }
            BiacyclicLabel::C { index, polarity } => {
                let c = *self.c_list.get(usize::from(index).checked_sub(1)?)?;
                Some(signed(c, polarity))
            }
            BiacyclicLabel::B {
                series,
                k,
                polarity,
            } => {
                let s = self.series(series)?;
                (k >= s.k_min).then(|| signed(s.member(k), polarity))
            }
        }
    }

    /// Pattern-matches free coefficients against the table.
    pub fn label_of(&self, coeffs: &[i64]) -> Option<BiacyclicLabel> {
        if coeffs.len() != 5 {
            return None;
        }
        let c5 = coeffs[4];
        let polarity = Polarity::from_sign(c5);
        let s = polarity.sign();
        let pos: [i64; 5] = std::array::from_fn(|i| s * coeffs[i]);
        match c5.abs() {
            0 => {
                if coeffs.iter().all(|&x| x == 0) {
                    return Some(BiacyclicLabel::Zero);
                }
                for (i, a) in self.a_list.iter().enumerate() {
                    let index = i as u8 + 1;
                    if coeffs == a {
                        return Some(BiacyclicLabel::A {
                            index,
                            polarity: Polarity::Plus,
                        });
                    }
                    if coeffs == neg5(*a) {
                        return Some(BiacyclicLabel::A {
                            index,
                            polarity: Polarity::Minus,
                        });
                    }
                }
                None
            }
            1 => self.b_series.iter().find_map(|sd| {
                let k = sd.solve(&pos)?;
                (k >= sd.k_min).then_some(BiacyclicLabel::B {
                    series: sd.series,
                    k,
                    polarity,
                })
            }),
            2 => self
                .c_list
                .iter()
                .position(|c| *c == pos)
                .map(|i| BiacyclicLabel::C {
                    index: i as u8 + 1,
                    polarity,
                }),
            _ => None,
        }
    }

    /// Zero and all `±A`, `±C`, in label order.
    pub fn finite_members(&self) -> Vec<(BiacyclicLabel, [i64; 5])> {
        let mut out = vec![(BiacyclicLabel::Zero, [0; 5])];
        for p in [Polarity::Plus, Polarity::Minus] {
            for (i, &a) in self.a_list.iter().enumerate() {
                let l = BiacyclicLabel::A {
                    index: i as u8 + 1,
                    polarity: p,
                };
                out.push((l, self.class_of(&l).unwrap_or(a)));
            }
            for (i, &c) in self.c_list.iter().enumerate() {
                let l = BiacyclicLabel::C {
                    index: i as u8 + 1,
                    polarity: p,
                };
                out.push((l, self.class_of(&l).unwrap_or(c)));
            }
        }
        out
    }

    /// `±B_{r,k}` for `k_min(r) <= k <= k_max`.
    pub fn series_members(&self, k_max: i64) -> Vec<(BiacyclicLabel, [i64; 5])> {
        let mut out = Vec::new();
        for p in [Polarity::Plus, Polarity::Minus] {
            for sd in &self.b_series {
                for k in sd.k_min..=k_max {
                    let l = BiacyclicLabel::B {
                        series: sd.series,
                        k,
                        polarity: p,
                    };
                    out.push((l, self.class_of(&l).expect("k >= k_min")));
                }
            }
        }
        out
    }

    /// Every listed class whose coefficients lie in `bx`, sorted by
    /// coefficients.
    pub fn members_in_box(&self, bx: &CoeffBox) -> Vec<(BiacyclicLabel, [i64; 5])> {
        let mut out: Vec<_> = self.finite_members();
        // B_{r,k} has c_1 = k, so k is bounded by the c_1 range.
        let (lo, hi) = bx.ranges()[0];
        out.extend(self.series_members(hi.max(-lo)));
        out.retain(|(_, c)| bx.contains(c));
        out.sort_by_key(|a| a.1);
        out
    }

    /// Rows of the classification dump, sporadic classes first.
    pub fn rows(&self) -> Vec<ClassificationRow> {
        let mut rows = Vec::new();
        for (i, a) in self.a_list.iter().enumerate() {
            rows.push(ClassificationRow::finite(
                BiacyclicLabel::a(i as u8 + 1),
                *a,
            ));
        }
        for (i, c) in self.c_list.iter().enumerate() {
            rows.push(ClassificationRow::finite(
                BiacyclicLabel::c(i as u8 + 1),
                *c,
            ));
        }
        for sd in &self.b_series {
            rows.push(ClassificationRow::Series {
                label: format!("B_{}", sd.series),
                base: pad(&sd.base),
                step: pad(&sd.step),
                k_min: sd.k_min,
            });
        }
        rows
    }
}

fn pad(free: &[i64]) -> Vec<i64> {
    let mut v = free.to_vec();
    v.extend([0, 0]);
    v
}

/// One line of a classification dump.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassificationRow {
    Class {
        label: Option<String>,
        coeffs: Vec<i64>,
    },
    Series {
        label: String,
        base: Vec<i64>,
        step: Vec<i64>,
        k_min: i64,
    },
}

impl ClassificationRow {
    pub fn finite(label: BiacyclicLabel, free: [i64; 5]) -> Self {
        ClassificationRow::Class {
            label: Some(label.to_string()),
            coeffs: pad(&free),
        }
    }
}

pub fn is_king(fan: &Fan) -> bool {
    fan.len() == KING_RAYS.len()
        && fan
            .rays()
            .iter()
            .zip(KING_RAYS)
            .all(|(r, (x, y))| r.x == x && r.y == y)
}

/// Label of the class of `D` in the classification, if it is listed.
pub fn membership(d: &Divisor<'_>) -> Result<Option<BiacyclicLabel>> {
    if !is_king(d.fan()) {
        return Err(Error::WrongSurface);
    }
    let class = d.normalize();
    Ok(ClassificationTable::king().label_of(class.free_coeffs()))
}

/// Outcome of comparing the brute-force scan with the table on one box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub coeff_box: CoeffBox,
    pub checked: u64,
    pub biacyclic: usize,
    /// Labels of everything found, in coefficient order.
    pub labels: Vec<String>,
    /// Largest `|c_5|` among the classes found.
    pub max_abs_c5: i64,
}

/// Checks that the scan over `bx` finds exactly the tabulated classes in it.
pub fn cross_validate(bx: &CoeffBox) -> Result<CrossValidation> {
    let fan = crate::fan::NamedSurface::KingCounterexample.build();
    if bx.dims() != 5 {
        return Err(Error::CoefficientCount {
            expected: 5,
            got: bx.dims(),
        });
    }
    let table = ClassificationTable::king();
    let found: BTreeSet<Vec<i64>> = enumerate_free(&fan, bx).into_iter().collect();
    let listed: BTreeSet<Vec<i64>> = table
        .members_in_box(bx)
        .into_iter()
        .map(|(_, c)| c.to_vec())
        .collect();
    if found != listed {
        return Err(Error::MismatchFound {
            engine_only: found.difference(&listed).cloned().collect(),
            table_only: listed.difference(&found).cloned().collect(),
        });
    }
    let labels = found
        .iter()
        .map(|c| table.label_of(c).map(|l| l.to_string()).unwrap_or_default())
        .collect();
    Ok(CrossValidation {
        coeff_box: bx.clone(),
        checked: bx.len(),
        biacyclic: found.len(),
        labels,
        max_abs_c5: found.iter().map(|c| c[4].abs()).max().unwrap_or(0),
    })
}

/// The lower bounds every bi-acyclic class with `c_5 >= 1` satisfies:
/// `c_1 >= c_5 - 1`, `c_2 >= 3c_5 - 2`, `c_3 >= 5c_5 - 3`, `c_4 >= 2c_5 - 1`.
pub fn satisfies_c5_bounds(c: &[i64]) -> bool {
    let c5 = c[4];
    c5 < 1 || (c[0] >= c5 - 1 && c[1] >= 3 * c5 - 2 && c[2] >= 5 * c5 - 3 && c[3] >= 2 * c5 - 1)
}
