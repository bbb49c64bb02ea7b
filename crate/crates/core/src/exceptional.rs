//! Strongly exceptional sequences of line bundles.
//!
//! For line bundles `Ext^k(O(D), O(E)) = H^k(E - D)`, so a sequence is
//! strongly exceptional when every pairwise difference is bi-acyclic
//! (the pair is *compatible*) and the nonzero `Hom`s can be ordered forward.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{enumerate_biacyclic, is_biacyclic, CoeffBox};
use crate::clique::Graph;
use crate::cohomology::{cohomology, CohomologyDims};
use crate::error::{Error, Result};
use crate::fan::{Fan, PicClass};

/// Whether `E - D` is bi-acyclic. Symmetric in its arguments.
pub fn compatible(d: &PicClass<'_>, e: &PicClass<'_>) -> Result<bool> {
    Ok(is_biacyclic(e.sub(d)?.divisor()))
}

/// `dim Ext^k(L_from, L_to)` for `k = 0, 1, 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtProfile {
    pub from: usize,
    pub to: usize,
    pub dims: CohomologyDims,
}

impl ExtProfile {
    pub fn hom(&self) -> u64 {
        self.dims.h0
    }

    pub fn ext1(&self) -> u64 {
        self.dims.h1
    }

    pub fn ext2(&self) -> u64 {
        self.dims.h2
    }
}

/// The reason a sequence is not strongly exceptional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Obstruction {
    /// Some higher `Ext` between two members is nonzero.
    HigherExt {
        from: usize,
        to: usize,
        dims: CohomologyDims,
    },
    /// The nonzero-`Hom` digraph has a cycle through these members.
    HomCycle { members: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalityReport {
    pub strongly_exceptional: bool,
    /// Input indices in an order with `Hom(L_i, L_j) = 0` for `i > j`.
    pub order: Option<Vec<usize>>,
    pub obstruction: Option<Obstruction>,
    /// Every ordered pair `i != j`, row-major.
    pub profiles: Vec<ExtProfile>,
}

/// Decides strong exceptionality of a set of distinct classes and, when it
/// holds, returns an admissible ordering.
pub fn is_strongly_exceptional(classes: &[PicClass<'_>]) -> Result<ExceptionalityReport> {
    for (i, a) in classes.iter().enumerate() {
        if a.fan() != classes[0].fan() {
            return Err(Error::MixedFans);
        }
        if classes[..i].contains(a) {
            return Err(Error::DuplicateClass(a.free_coeffs().to_vec()));
        }
    }
    let n = classes.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let profiles: Vec<ExtProfile> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let diff = classes[j].sub(&classes[i])?;
            Ok(ExtProfile {
                from: i,
                to: j,
                dims: cohomology(diff.divisor()),
            })
        })
        .collect::<Result<_>>()?;

    if let Some(p) = profiles.iter().find(|p| p.ext1() != 0 || p.ext2() != 0) {
        return Ok(ExceptionalityReport {
            strongly_exceptional: false,
            order: None,
            obstruction: Some(Obstruction::HigherExt {
                from: p.from,
                to: p.to,
                dims: p.dims,
            }),
            profiles,
        });
    }

    // Kahn's algorithm, always taking the smallest available index.
    let mut indegree = vec![0usize; n];
    for p in profiles.iter().filter(|p| p.hom() > 0) {
        indegree[p.to] += 1;
    }
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while let Some(v) = (0..n).find(|&v| !done[v] && indegree[v] == 0) {
        done[v] = true;
        order.push(v);
        for p in profiles.iter().filter(|p| p.from == v && p.hom() > 0) {
            indegree[p.to] -= 1;
        }
    }
    if order.len() < n {
        let members = (0..n).filter(|&v| !done[v]).collect();
        return Ok(ExceptionalityReport {
            strongly_exceptional: false,
            order: None,
            obstruction: Some(Obstruction::HomCycle { members }),
            profiles,
        });
    }
    Ok(ExceptionalityReport {
        strongly_exceptional: true,
        order: Some(order),
        obstruction: None,
        profiles,
    })
}

/// Classes as vertices, compatible pairs as edges.
#[derive(Debug, Clone)]
pub struct CompatibilityGraph<'f> {
    vertices: Vec<PicClass<'f>>,
    graph: Graph,
}

impl<'f> CompatibilityGraph<'f> {
    pub fn build(vertices: Vec<PicClass<'f>>) -> Result<Self> {
        if vertices.iter().any(|v| v.fan() != vertices[0].fan()) {
            return Err(Error::MixedFans);
        }
        let n = vertices.len();
        let edges: Vec<(usize, usize)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| (a + 1..n).map(move |b| (a, b)))
            .filter_map(|(a, b)| match compatible(&vertices[a], &vertices[b]) {
                Ok(true) => Some(Ok((a, b))),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_>>()?;
        let mut graph = Graph::new(n);
        for (a, b) in edges {
            graph.add_edge(a, b);
        }
        Ok(CompatibilityGraph { vertices, graph })
    }

    pub fn vertices(&self) -> &[PicClass<'f>] {
        &self.vertices
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn is_compatible(&self, a: usize, b: usize) -> bool {
        a != b && self.graph.has_edge(a, b)
    }
}

/// A strongly exceptional sequence in its realized `Hom` order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoundSequence {
    /// Free coefficients of each member, in order.
    pub classes: Vec<Vec<i64>>,
}

/// All strongly exceptional sequences of `target_len` line bundles that
/// contain `O` and whose other members have free coefficients in `bx`.
pub fn find_sequences(fan: &Fan, target_len: usize, bx: &CoeffBox) -> Result<Vec<FoundSequence>> {
    if target_len == 0 {
        return Ok(Vec::new());
    }
    let zero = PicClass::zero(fan);
    let vertices: Vec<PicClass<'_>> = enumerate_biacyclic(fan, bx, None)?
        .into_iter()
        .filter(|c| *c != zero)
        .collect();
    let g = CompatibilityGraph::build(vertices)?;
    let mut found = Vec::new();
    for clique in g.graph().cliques_of_size(target_len - 1) {
        let mut members = vec![zero.clone()];
        members.extend(clique.iter().map(|&v| g.vertices()[v].clone()));
        let report = is_strongly_exceptional(&members)?;
        if let Some(order) = report.order {
            found.push(FoundSequence {
                classes: order
                    .iter()
                    .map(|&i| members[i].free_coeffs().to_vec())
                    .collect(),
            });
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::NamedSurface;

    fn class<'f>(fan: &'f Fan, free: &[i64]) -> PicClass<'f> {
        PicClass::from_free(fan, free).unwrap()
    }

    #[test]
    fn beilinson_on_p2() {
        let fan = NamedSurface::P2.build();
        let seq = [class(&fan, &[2]), class(&fan, &[0]), class(&fan, &[1])];
        let report = is_strongly_exceptional(&seq).unwrap();
        assert!(report.strongly_exceptional);
        assert_eq!(report.order, Some(vec![1, 2, 0]));
        assert_eq!(report.profiles.len(), 6);
    }

    #[test]
    fn p2_with_gap_fails() {
        let fan = NamedSurface::P2.build();
        let seq = [class(&fan, &[0]), class(&fan, &[1]), class(&fan, &[3])];
        let report = is_strongly_exceptional(&seq).unwrap();
        assert!(!report.strongly_exceptional);
        assert!(matches!(
            report.obstruction,
            Some(Obstruction::HigherExt { .. })
        ));
    }

    #[test]
    fn duplicates_rejected() {
        let fan = NamedSurface::P2.build();
        let seq = [class(&fan, &[1]), class(&fan, &[1])];
        assert_eq!(
            is_strongly_exceptional(&seq),
            Err(Error::DuplicateClass(vec![1]))
        );
    }

    #[test]
    fn p1p1_sequence() {
        let fan = NamedSurface::P1P1.build();
        let seq: Vec<_> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|c| class(&fan, c))
            .collect();
        let report = is_strongly_exceptional(&seq).unwrap();
        assert!(report.strongly_exceptional);
        assert_eq!(report.order.unwrap()[0], 0);
    }

    #[test]
    fn find_on_p2() {
        let fan = NamedSurface::P2.build();
        let found = find_sequences(&fan, 3, &CoeffBox::symmetric(1, 3)).unwrap();
        assert!(found.contains(&FoundSequence {
            classes: vec![vec![0], vec![1], vec![2]]
        }));
        assert!(found.contains(&FoundSequence {
            classes: vec![vec![-2], vec![-1], vec![0]]
        }));
    }

    #[test]
    fn compatible_mixed_fans() {
        let p2 = NamedSurface::P2.build();
        let p2b = p2.blowup(0);
        assert_eq!(
            compatible(&class(&p2, &[1]), &class(&p2b, &[1, 0])),
            Err(Error::MixedFans)
        );
    }
}
