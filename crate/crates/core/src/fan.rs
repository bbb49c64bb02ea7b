//! Smooth complete toric surfaces given by their cyclically ordered rays,
//! together with torus-invariant divisors, Picard normalization and
//! intersection numbers.
//!
//! Indices are 0-based throughout: ray `i` is `l_i`, its divisor is `D_i`,
//! and "the cone after ray `i`" is spanned by `l_i` and `l_{i+1 mod n}`.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest absolute ray coordinate accepted by [`Fan::new`].
pub const MAX_RAY_COORD: i64 = 1 << 20;
/// Largest absolute divisor coefficient accepted by [`Divisor::new`].
///
/// Together with [`MAX_RAY_COORD`] this keeps every pairing, determinant and
/// intersection product far inside `i64`.
pub const MAX_COEFF: i64 = 1 << 24;
/// Minus/plus sets are kept as `u64` bitmasks in the lattice scans.
pub const MAX_RAYS: usize = 64;

/// Primitive generator of a ray, an element of the lattice `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct RayVector {
    pub x: i64,
    pub y: i64,
}

impl RayVector {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn det(self, other: RayVector) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub fn is_primitive(self) -> bool {
        self.x.gcd(&self.y) == 1
    }
}

impl std::ops::Add for RayVector {
    type Output = RayVector;

    fn add(self, rhs: RayVector) -> RayVector {
        RayVector::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl From<[i64; 2]> for RayVector {
    fn from([x, y]: [i64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<RayVector> for [i64; 2] {
    fn from(r: RayVector) -> Self {
        [r.x, r.y]
    }
}

impl fmt::Display for RayVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A character of the torus, an element of the dual lattice `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct CharacterPoint {
    pub u: i64,
    pub v: i64,
}

impl CharacterPoint {
    pub const ORIGIN: CharacterPoint = CharacterPoint { u: 0, v: 0 };

    pub const fn new(u: i64, v: i64) -> Self {
        Self { u, v }
    }
}

impl Neg for CharacterPoint {
    type Output = CharacterPoint;

    fn neg(self) -> CharacterPoint {
        CharacterPoint::new(-self.u, -self.v)
    }
}

impl From<[i64; 2]> for CharacterPoint {
    fn from([u, v]: [i64; 2]) -> Self {
        Self { u, v }
    }
}

impl From<CharacterPoint> for [i64; 2] {
    fn from(m: CharacterPoint) -> Self {
        [m.u, m.v]
    }
}

impl fmt::Display for CharacterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// `l(m)`, the ray read as a linear form on `M`.
#[inline]
pub fn pairing(l: RayVector, m: CharacterPoint) -> i64 {
    l.x * m.u + l.y * m.v
}

/// A smooth complete two-dimensional fan.
///
/// The only constructor is [`Fan::new`], which checks that every cyclically
/// consecutive pair of rays has determinant `+1` and that the rays go around
/// the origin exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FanFile", into = "FanFile")]
pub struct Fan {
    rays: Vec<RayVector>,
}

/// On-disk form of a fan: `{"rays": [[1,-1],[2,-1],...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FanFile {
    pub rays: Vec<RayVector>,
}

impl TryFrom<FanFile> for Fan {
    type Error = Error;

    fn try_from(file: FanFile) -> Result<Fan> {
        Fan::new(file.rays)
    }
}

impl From<Fan> for FanFile {
    fn from(fan: Fan) -> FanFile {
        FanFile { rays: fan.rays }
    }
}

impl Fan {
    /// Validates a ray list.
    pub fn new(rays: Vec<RayVector>) -> Result<Fan> {
        let n = rays.len();
        if n < 3 {
            return Err(Error::TooFewRays(n));
        }
        if n > MAX_RAYS {
            return Err(Error::TooManyRays {
                count: n,
                max: MAX_RAYS,
            });
        }
        for (index, r) in rays.iter().enumerate() {
            if r.x.abs() > MAX_RAY_COORD || r.y.abs() > MAX_RAY_COORD {
                return Err(Error::RayOutOfRange {
                    index,
                    max: MAX_RAY_COORD,
                });
            }
            if !r.is_primitive() {
                return Err(Error::NonPrimitiveRay { index });
            }
        }
        for index in 0..n {
            let det = rays[index].det(rays[(index + 1) % n]);
            if det != 1 {
                return Err(Error::BadConsecutiveDeterminant { index, det });
            }
        }
        // Each cone spans an angle in (0, pi); count how many of them contain
        // the direction (1, 0) in their half-open span [l_i, l_{i+1}).
        let east = RayVector::new(1, 0);
        let turns = (0..n)
            .filter(|&i| {
                let (a, b) = (rays[i], rays[(i + 1) % n]);
                a.det(east) >= 0 && east.det(b) > 0
            })
            .count();
        if turns != 1 {
            return Err(Error::BadWinding { turns });
        }
        Ok(Fan { rays })
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Fan> {
        Fan::new(pairs.iter().map(|&(x, y)| RayVector::new(x, y)).collect())
    }

    pub fn rays(&self) -> &[RayVector] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> RayVector {
        self.rays[i % self.rays.len()]
    }

    /// Number of rays; also the rank of the Grothendieck group.
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Picard rank `n - 2`, the number of free coefficients after normalization.
    pub fn picard_rank(&self) -> usize {
        self.rays.len() - 2
    }

    /// Blows up the torus-fixed point of the cone spanned by rays `edge` and
    /// `edge + 1` (cyclically), inserting their sum between them.
    pub fn blowup(&self, edge: usize) -> Fan {
        let n = self.rays.len();
        let edge = edge % n;
        let new_ray = self.rays[edge] + self.rays[(edge + 1) % n];
        let mut rays = self.rays.clone();
        rays.insert(edge + 1, new_ray);
        Fan::new(rays).expect("blowup of a smooth complete fan is smooth and complete")
    }

    /// `D_i · D_i`, read off from `l_{i-1} + l_{i+1} = -(D_i · D_i) l_i`.
    pub fn self_intersection(&self, i: usize) -> i64 {
        let n = self.rays.len();
        let i = i % n;
        let l = self.rays[i];
        let sum = self.rays[(i + n - 1) % n] + self.rays[(i + 1) % n];
        let a = if l.x != 0 { sum.x / l.x } else { sum.y / l.y };
        debug_assert_eq!(RayVector::new(a * l.x, a * l.y), sum);
        -a
    }

    /// `D_i · D_j` for any pair of invariant divisors.
    pub fn intersection_number(&self, i: usize, j: usize) -> i64 {
        let n = self.rays.len();
        let (i, j) = (i % n, j % n);
        if i == j {
            self.self_intersection(i)
        } else if (i + 1) % n == j || (j + 1) % n == i {
            1
        } else {
            0
        }
    }

    pub fn intersection_data(&self) -> IntersectionData<'_> {
        IntersectionData {
            self_int: (0..self.len()).map(|i| self.self_intersection(i)).collect(),
            canonical: self.canonical_divisor(),
        }
    }

    /// `K = -sum D_i`.
    pub fn canonical_divisor(&self) -> Divisor<'_> {
        Divisor {
            fan: self,
            coeffs: vec![-1; self.len()],
        }
    }

    /// The principal divisor `div(m) = sum l_i(m) D_i`.
    pub fn principal_divisor(&self, m: CharacterPoint) -> Divisor<'_> {
        Divisor {
            fan: self,
            coeffs: self.rays.iter().map(|&l| pairing(l, m)).collect(),
        }
    }

    pub fn zero_divisor(&self) -> Divisor<'_> {
        Divisor {
            fan: self,
            coeffs: vec![0; self.len()],
        }
    }

    /// The character `m` with `l_{n-2}(m) = -a` and `l_{n-1}(m) = -b`.
    ///
    /// The last two rays are adjacent, so the 2x2 system is unimodular.
    fn solve_last_pair(&self, a: i64, b: i64) -> CharacterPoint {
        let n = self.rays.len();
        let (p, q) = (self.rays[n - 2], self.rays[n - 1]);
        debug_assert_eq!(p.det(q), 1);
        CharacterPoint::new(-(q.y * a) + p.y * b, q.x * a - p.x * b)
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rays: Vec<String> = self.rays.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", rays.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionData<'f> {
    pub self_int: Vec<i64>,
    pub canonical: Divisor<'f>,
}

/// The built-in surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedSurface {
    P2,
    P1P1,
    Hirzebruch(u32),
    /// The Hirzebruch surface `F_2` blown up three times, with rays in the
    /// order `(1,-1), (2,-1), (3,-1), (1,0), (0,1), (-1,2), (0,-1)`.
    KingCounterexample,
}

pub const KING_RAYS: [(i64, i64); 7] =
    [(1, -1), (2, -1), (3, -1), (1, 0), (0, 1), (-1, 2), (0, -1)];

impl NamedSurface {
    pub fn build(self) -> Fan {
        let pairs: Vec<(i64, i64)> = match self {
            NamedSurface::P2 => vec![(1, 0), (0, 1), (-1, -1)],
            NamedSurface::P1P1 => vec![(1, 0), (0, 1), (-1, 0), (0, -1)],
            NamedSurface::Hirzebruch(a) => vec![(1, 0), (0, 1), (-1, i64::from(a)), (0, -1)],
            NamedSurface::KingCounterexample => KING_RAYS.to_vec(),
        };
        Fan::from_pairs(&pairs).expect("built-in fans are valid")
    }

    pub fn name(self) -> String {
        match self {
            NamedSurface::P2 => "p2".into(),
            NamedSurface::P1P1 => "p1p1".into(),
            NamedSurface::Hirzebruch(a) => format!("hirzebruch:{a}"),
            NamedSurface::KingCounterexample => "king-counterexample".into(),
        }
    }
}

impl FromStr for NamedSurface {
    type Err = Error;

    /// Accepts `p2`, `p1p1`, `hirzebruch:A` (or `fA`), `king-counterexample`
    /// (or `king`).
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let parse_a = |a: &str| {
            a.parse::<u32>()
                .map_err(|_| Error::UnknownName(s.to_string()))
        };
        match lower.as_str() {
            "p2" => Ok(NamedSurface::P2),
            "p1p1" | "p1xp1" => Ok(NamedSurface::P1P1),
            "king" | "king-counterexample" => Ok(NamedSurface::KingCounterexample),
            other => {
                if let Some(a) = other.strip_prefix("hirzebruch:") {
                    Ok(NamedSurface::Hirzebruch(parse_a(a)?))
                } else if let Some(a) = other.strip_prefix('f').filter(|a| !a.is_empty()) {
                    Ok(NamedSurface::Hirzebruch(parse_a(a)?))
                } else {
                    Err(Error::UnknownName(s.to_string()))
                }
            }
        }
    }
}

pub fn build_named(name: &str) -> Result<Fan> {
    name.parse::<NamedSurface>().map(NamedSurface::build)
}

/// A torus-invariant divisor `sum c_i D_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Divisor<'f> {
    fan: &'f Fan,
    coeffs: Vec<i64>,
}

impl<'f> Divisor<'f> {
    pub fn new(fan: &'f Fan, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != fan.len() {
            return Err(Error::CoefficientCount {
                expected: fan.len(),
                got: coeffs.len(),
            });
        }
        if let Some(&value) = coeffs.iter().find(|c| c.abs() > MAX_COEFF) {
            return Err(Error::CoefficientOutOfRange {
                value,
                max: MAX_COEFF,
            });
        }
        Ok(Self { fan, coeffs })
    }

    /// Builds a divisor from its first `n - 2` coefficients, the last two
    /// being zero. The result is already a normalized representative.
    pub fn from_free(fan: &'f Fan, free: &[i64]) -> Result<Self> {
        if free.len() != fan.picard_rank() {
            return Err(Error::CoefficientCount {
                expected: fan.picard_rank(),
                got: free.len(),
            });
        }
        let mut coeffs = free.to_vec();
        coeffs.extend([0, 0]);
        Self::new(fan, coeffs)
    }

    /// Accepts either all `n` coefficients or the `n - 2` free ones.
    pub fn parse_coeffs(fan: &'f Fan, coeffs: &[i64]) -> Result<Self> {
        if coeffs.len() == fan.picard_rank() {
            Self::from_free(fan, coeffs)
        } else {
            Self::new(fan, coeffs.to_vec())
        }
    }

    pub fn fan(&self) -> &'f Fan {
        self.fan
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    fn same_fan(&self, other: &Divisor<'_>) -> Result<()> {
        if std::ptr::eq(self.fan, other.fan) || self.fan == other.fan {
            Ok(())
        } else {
            Err(Error::MixedFans)
        }
    }

    pub fn add(&self, other: &Divisor<'_>) -> Result<Divisor<'f>> {
        self.same_fan(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Divisor::new(self.fan, coeffs)
    }

    pub fn sub(&self, other: &Divisor<'_>) -> Result<Divisor<'f>> {
        self.same_fan(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Divisor::new(self.fan, coeffs)
    }

    pub fn scale(&self, k: i64) -> Result<Divisor<'f>> {
        Divisor::new(self.fan, self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `D + div(m)`, which has the same class in `Pic`.
    pub fn translate(&self, m: CharacterPoint) -> Result<Divisor<'f>> {
        self.add(&self.fan.principal_divisor(m))
    }

    /// The representative of the class of `D` whose last two coefficients
    /// vanish.
    pub fn normalize(&self) -> PicClass<'f> {
        let n = self.fan.len();
        let m = self
            .fan
            .solve_last_pair(self.coeffs[n - 2], self.coeffs[n - 1]);
        let coeffs: Vec<i64> = self
            .coeffs
            .iter()
            .zip(self.fan.rays())
            .map(|(&c, &l)| c + pairing(l, m))
            .collect();
        debug_assert!(coeffs[n - 2] == 0 && coeffs[n - 1] == 0);
        PicClass(Divisor {
            fan: self.fan,
            coeffs,
        })
    }

    /// The intersection product, extended bilinearly from `D_i · D_j`.
    pub fn intersect(&self, other: &Divisor<'_>) -> Result<i64> {
        self.same_fan(other)?;
        let n = self.fan.len();
        let (c, e) = (&self.coeffs, &other.coeffs);
        let mut total = 0;
        for i in 0..n {
            let j = (i + 1) % n;
            total += c[i] * e[i] * self.fan.self_intersection(i);
            total += c[i] * e[j] + c[j] * e[i];
        }
        Ok(total)
    }
}

impl<'f> Neg for &Divisor<'f> {
    type Output = Divisor<'f>;

    fn neg(self) -> Divisor<'f> {
        Divisor {
            fan: self.fan,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'f> Neg for Divisor<'f> {
    type Output = Divisor<'f>;

    fn neg(self) -> Divisor<'f> {
        -&self
    }
}

impl fmt::Display for Divisor<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// A class in `Pic(X)`, stored as the normalized divisor with
/// `c_{n-2} = c_{n-1} = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PicClass<'f>(Divisor<'f>);

impl<'f> PicClass<'f> {
    pub fn from_free(fan: &'f Fan, free: &[i64]) -> Result<Self> {
        Divisor::from_free(fan, free).map(PicClass)
    }

    pub fn zero(fan: &'f Fan) -> Self {
        PicClass(fan.zero_divisor())
    }

    pub fn divisor(&self) -> &Divisor<'f> {
        &self.0
    }

    pub fn into_divisor(self) -> Divisor<'f> {
        self.0
    }

    pub fn fan(&self) -> &'f Fan {
        self.0.fan
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0.coeffs
    }

    /// The `n - 2` coordinates in the basis `D_0, ..., D_{n-3}`.
    pub fn free_coeffs(&self) -> &[i64] {
        &self.0.coeffs[..self.0.coeffs.len() - 2]
    }

    pub fn add(&self, other: &PicClass<'_>) -> Result<PicClass<'f>> {
        self.0.add(&other.0).map(PicClass)
    }

    pub fn sub(&self, other: &PicClass<'_>) -> Result<PicClass<'f>> {
        self.0.sub(&other.0).map(PicClass)
    }
}

impl<'f> Neg for &PicClass<'f> {
    type Output = PicClass<'f>;

    fn neg(self) -> PicClass<'f> {
        PicClass(-&self.0)
    }
}

impl fmt::Display for PicClass<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.free_coeffs())
    }
}
