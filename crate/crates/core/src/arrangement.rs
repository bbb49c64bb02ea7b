//! Plot data for the line arrangement `{l_i(m) + c_i = 0}` of a divisor.

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::fan::Divisor;

/// `a u + b v + c = 0`, the wall where the signature entry of `ray` changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArrangementLine {
    pub ray: usize,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

/// An exact rational, serialized as `"p/q"` (or `"p"` when integral).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub Rational64);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// A point where two or more walls meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangementVertex {
    pub u: Exact,
    pub v: Exact,
    /// Rays whose walls pass through the point, ascending.
    pub rays: Vec<usize>,
}

pub fn lines(d: &Divisor<'_>) -> Vec<ArrangementLine> {
    d.fan()
        .rays()
        .iter()
        .zip(d.coeffs())
        .enumerate()
        .map(|(ray, (l, &c))| ArrangementLine {
            ray,
            a: l.x,
            b: l.y,
            c,
        })
        .collect()
}

/// Every intersection point of non-parallel walls, sorted by `(u, v)`.
pub fn vertices(d: &Divisor<'_>) -> Vec<ArrangementVertex> {
    let ls = lines(d);
    let mut out: Vec<ArrangementVertex> = Vec::new();
    for (i, p) in ls.iter().enumerate() {
        for q in &ls[i + 1..] {
            let det = p.a * q.b - p.b * q.a;
            if det == 0 {
                continue;
            }
            let u = Rational64::new(q.c * p.b - p.c * q.b, det);
            let v = Rational64::new(p.c * q.a - q.c * p.a, det);
            let (u, v) = (Exact(u), Exact(v));
            match out.iter_mut().find(|x| x.u == u && x.v == v) {
                Some(x) => x.rays.extend([p.ray, q.ray]),
                None => out.push(ArrangementVertex {
                    u,
                    v,
                    rays: vec![p.ray, q.ray],
                }),
            }
        }
    }
    for x in &mut out {
        x.rays.sort_unstable();
        x.rays.dedup();
    }
    out.sort_by_key(|x| (x.u, x.v));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::NamedSurface;

    #[test]
    fn vertices_lie_on_their_walls() {
        let x = NamedSurface::KingCounterexample.build();
        let d = Divisor::new(&x, vec![4, 7, 11, 4, 2, 0, 0]).unwrap();
        let ls = lines(&d);
        let vs = vertices(&d);
        assert!(!vs.is_empty());
        for vx in &vs {
            for &r in &vx.rays {
                let l = ls[r];
                assert_eq!(
                    vx.u.0 * l.a + vx.v.0 * l.b + l.c,
                    Rational64::from_integer(0)
                );
            }
        }
    }

    #[test]
    fn concurrent_walls_merge() {
        let p2 = NamedSurface::P2.build();
        let vs = vertices(&p2.zero_divisor());
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].rays, vec![0, 1, 2]);
        assert_eq!(serde_json::to_string(&vs[0].u).unwrap(), "\"0\"");
    }
}
