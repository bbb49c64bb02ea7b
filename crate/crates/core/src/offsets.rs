//! Which members of an affine family `base + n * step` are bi-acyclic on
//! the king-counterexample surface, answered symbolically from the
//! classification table.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::classify::{BiacyclicLabel, ClassificationTable, Polarity};
use crate::error::{Error, Result};

const FREE_DIMS: usize = 5;

/// One piece of the solution set of `base + n * step ∈ bi-acyclic`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OffsetSolution {
    /// A single offset.
    Point { n: i64, label: BiacyclicLabel },
    /// Every integer offset gives the same class.
    Every { label: BiacyclicLabel },
    /// `base + n * step = ±B_{series, k_offset + k_slope * n}` for
    /// `n_min <= n <= n_max` (missing ends are unbounded).
    Family {
        series: u8,
        polarity: Polarity,
        k_offset: i64,
        k_slope: i64,
        n_min: Option<i64>,
        n_max: Option<i64>,
    },
}

impl OffsetSolution {
    pub fn label_at(&self, n: i64) -> Option<BiacyclicLabel> {
        match *self {
            OffsetSolution::Point { n: p, label } => (p == n).then_some(label),
            OffsetSolution::Every { label } => Some(label),
            OffsetSolution::Family {
                series,
                polarity,
                k_offset,
                k_slope,
                n_min,
                n_max,
            } => {
                let inside = n_min.is_none_or(|lo| n >= lo) && n_max.is_none_or(|hi| n <= hi);
                inside.then_some(BiacyclicLabel::B {
                    series,
                    k: k_offset + k_slope * n,
                    polarity,
                })
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            OffsetSolution::Point { .. } => true,
            OffsetSolution::Every { .. } => false,
            OffsetSolution::Family { n_min, n_max, .. } => n_min.is_some() && n_max.is_some(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffsetSolutions {
    pub solutions: Vec<OffsetSolution>,
}

impl OffsetSolutions {
    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn label_at(&self, n: i64) -> Option<BiacyclicLabel> {
        self.solutions.iter().find_map(|s| s.label_at(n))
    }

    pub fn is_finite(&self) -> bool {
        self.solutions.iter().all(OffsetSolution::is_finite)
    }

    /// All solving offsets, sorted, when there are finitely many.
    pub fn points(&self) -> Option<Vec<i64>> {
        self.points_within(None, None)
    }

    /// The solving offsets in `lo..=hi` (missing ends are unbounded), sorted,
    /// when there are finitely many.
    pub fn points_within(&self, lo: Option<i64>, hi: Option<i64>) -> Option<Vec<i64>> {
        let clip = |a: Option<i64>, b: Option<i64>, pick: fn(i64, i64) -> i64| match (a, b) {
            (Some(x), Some(y)) => Some(pick(x, y)),
            (x, None) | (None, x) => x,
        };
        let mut out = Vec::new();
        for s in &self.solutions {
            let (from, to) = match *s {
                OffsetSolution::Point { n, .. } => (Some(n), Some(n)),
                OffsetSolution::Every { .. } => (None, None),
                OffsetSolution::Family { n_min, n_max, .. } => (n_min, n_max),
            };
            match (clip(from, lo, i64::max), clip(to, hi, i64::min)) {
                (Some(a), Some(b)) => out.extend(a..=b),
                _ => return None,
            }
        }
        out.sort_unstable();
        out.dedup();
        Some(out)
    }
}

fn free5(v: &[i64]) -> Result<[i64; FREE_DIMS]> {
    v.try_into().map_err(|_| Error::NotAffineInput {
        expected: FREE_DIMS,
        got: v.len(),
    })
}

fn at(base: &[i64; 5], step: &[i64; 5], n: i64) -> [i64; 5] {
    std::array::from_fn(|i| base[i] + n * step[i])
}

/// The `n` with `base + n * step == target`, if unique, or `Some(None)` when
/// every `n` works.
fn solve_equal(base: &[i64; 5], step: &[i64; 5], target: &[i64; 5]) -> Option<Option<i64>> {
    let mut n = None;
    for i in 0..FREE_DIMS {
        let diff = target[i] - base[i];
        if step[i] == 0 {
            if diff != 0 {
                return None;
            }
        } else {
            let (q, r) = diff.div_rem(&step[i]);
            if r != 0 || n.is_some_and(|m| m != q) {
                return None;
            }
            n = Some(q);
        }
    }
    Some(n)
}

/// Solves `base + n * step ∈ bi-acyclic` over the integers, using the
/// closed-form classification. Both inputs are free coefficients.
pub fn solve_offsets(base: &[i64], step: &[i64]) -> Result<OffsetSolutions> {
    let base = free5(base)?;
    let step = free5(step)?;
    let table = ClassificationTable::king();
    let mut solutions = Vec::new();

    if step[4] != 0 {
        // c_5 moves with n, and only |c_5| <= 2 can be bi-acyclic.
        let lo = Integer::div_ceil(&(-2 - base[4]), &step[4])
            .min(Integer::div_ceil(&(2 - base[4]), &step[4]));
        let hi = Integer::div_floor(&(2 - base[4]), &step[4])
            .max(Integer::div_floor(&(-2 - base[4]), &step[4]));
        for n in lo..=hi {
            if let Some(label) = table.label_of(&at(&base, &step, n)) {
                solutions.push(OffsetSolution::Point { n, label });
            }
        }
        return Ok(OffsetSolutions { solutions });
    }

    match base[4].abs() {
        0 | 2 => {
            let candidates: Vec<(BiacyclicLabel, [i64; 5])> = table
                .finite_members()
                .into_iter()
                .filter(|(_, c)| c[4] == base[4])
                .collect();
            for (label, c) in candidates {
                match solve_equal(&base, &step, &c) {
                    Some(Some(n)) => solutions.push(OffsetSolution::Point { n, label }),
                    Some(None) => solutions.push(OffsetSolution::Every { label }),
                    None => {}
                }
            }
            solutions.sort_by_key(|s| match s {
                OffsetSolution::Point { n, .. } => *n,
                _ => i64::MIN,
            });
        }
        1 => {
            let polarity = Polarity::from_sign(base[4]);
            let p = polarity.sign();
            for sd in &table.b_series {
                // p * (base + n step) - beta_r = k * sigma, where k is read
                // off the first coordinate since sigma_1 = 1.
                let x: [i64; 5] = std::array::from_fn(|i| p * base[i] - sd.base[i]);
                let y: [i64; 5] = std::array::from_fn(|i| p * step[i]);
                let sigma = sd.step;
                let mut pinned: Option<i64> = None;
                let mut consistent = true;
                for i in 1..FREE_DIMS {
                    let a = x[i] - sigma[i] * x[0];
                    let b = y[i] - sigma[i] * y[0];
                    if b == 0 {
                        consistent &= a == 0;
                    } else {
                        let (q, r) = (-a).div_rem(&b);
                        consistent &= r == 0 && pinned.is_none_or(|m| m == q);
                        pinned = Some(q);
                    }
                }
                if !consistent {
                    continue;
                }
                let (k_offset, k_slope) = (x[0], y[0]);
                match pinned {
                    Some(n) => {
                        let k = k_offset + k_slope * n;
                        if k >= sd.k_min {
                            solutions.push(OffsetSolution::Point {
                                n,
                                label: BiacyclicLabel::B {
                                    series: sd.series,
                                    k,
                                    polarity,
                                },
                            });
                        }
                    }
                    None => {
                        let (n_min, n_max) = match k_slope.signum() {
                            0 if k_offset >= sd.k_min => (None, None),
                            0 => continue,
                            1 => (
                                Some(Integer::div_ceil(&(sd.k_min - k_offset), &k_slope)),
                                None,
                            ),
                            _ => (
                                None,
                                Some(Integer::div_floor(&(sd.k_min - k_offset), &k_slope)),
                            ),
                        };
                        solutions.push(OffsetSolution::Family {
                            series: sd.series,
                            polarity,
                            k_offset,
                            k_slope,
                            n_min,
                            n_max,
                        });
                    }
                }
            }
        }
        _ => {}
    }
    Ok(OffsetSolutions { solutions })
}
