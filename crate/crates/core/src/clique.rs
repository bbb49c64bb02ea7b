//! Exact clique enumeration on small undirected graphs.

/// Simple undirected graph on `0..n` with bitset adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// Builds the graph whose edges are the pairs `a < b` with `edge(a, b)`.
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "loops are not allowed");
        self.adj[a * self.words + b / 64] |= 1 << (b % 64);
        self.adj[b * self.words + a / 64] |= 1 << (a % 64);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Every clique with exactly `k` vertices, each sorted ascending, in
    /// lexicographic order.
    pub fn cliques_of_size(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if k == 0 {
            out.push(Vec::new());
            return out;
        }
        let order = self.degree_order();
        let mut current = Vec::with_capacity(k);
        self.extend(&order, 0, &mut current, k, &mut |c| {
            out.push(c.to_vec());
            true
        });
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    /// Whether some clique has `k` vertices.
    pub fn has_clique_of_size(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        let order = self.degree_order();
        let mut found = false;
        let mut current = Vec::with_capacity(k);
        self.extend(&order, 0, &mut current, k, &mut |_| {
            found = true;
            false
        });
        found
    }

    /// A largest clique (the lexicographically smallest one among them).
    pub fn max_clique(&self) -> Vec<usize> {
        let mut best = Vec::new();
        for k in 1..=self.n {
            match self.cliques_of_size(k).into_iter().next() {
                Some(c) => best = c,
                None => break,
            }
        }
        best
    }

    /// Vertices by decreasing degree, ties by index. Searching high-degree
    /// vertices last keeps their candidate sets small.
    fn degree_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        order.reverse();
        order
    }

    /// Grows `current` with vertices from `order[from..]` adjacent to all of
    /// `current`. `emit` returns `false` to stop the whole search.
    fn extend(
        &self,
        order: &[usize],
        from: usize,
        current: &mut Vec<usize>,
        k: usize,
        emit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if current.len() == k {
            return emit(current);
        }
        let candidates: Vec<usize> = order[from..]
            .iter()
            .enumerate()
            .filter(|(_, &v)| current.iter().all(|&c| self.has_edge(c, v)))
            .map(|(i, _)| from + i)
            .collect();
        if current.len() + candidates.len() < k {
            return true;
        }
        for (pos, &idx) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - pos < k {
                break;
            }
            current.push(order[idx]);
            let go_on = self.extend(order, idx + 1, current, k, emit);
            current.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &Graph, k: usize) -> Vec<Vec<usize>> {
        let n = g.len();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if vs
                .iter()
                .enumerate()
                .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            {
                out.push(vs);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force_on_pseudo_random_graphs() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for _ in 0..40 {
            let g = Graph::from_fn(12, |_, _| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state % 100 < 55
            });
            for k in 0..=6 {
                assert_eq!(g.cliques_of_size(k), brute_force(&g, k));
                assert_eq!(g.has_clique_of_size(k), !brute_force(&g, k).is_empty());
            }
        }
    }

    #[test]
    fn complete_graph() {
        let g = Graph::from_fn(5, |_, _| true);
        assert_eq!(g.cliques_of_size(3).len(), 10);
        assert_eq!(g.max_clique(), vec![0, 1, 2, 3, 4]);
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn wide_graph_spans_several_words() {
        let mut g = Graph::new(130);
        g.add_edge(3, 129);
        g.add_edge(3, 70);
        g.add_edge(70, 129);
        assert_eq!(g.cliques_of_size(3), vec![vec![3, 70, 129]]);
        assert_eq!(g.neighbors(3), vec![70, 129]);
    }
}
