//! Finite simple graphs on vertices `0..n`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("invalid size {size} for {kind:?}")]
    InvalidSize { kind: Family, size: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    order: usize,
    adj: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `m` disjoint edges.
    Matching,
    /// Complement of `m` disjoint edges.
    CoMatching,
    Path,
    Cycle,
    Complete,
    Empty,
}

impl SimpleGraph {
    pub fn new(order: usize) -> Self {
        SimpleGraph { order, adj: vec![false; order * order] }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::new(order);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Panics on out-of-range vertices or loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.order && v < self.order && u != v);
        self.adj[u * self.order + v] = true;
        self.adj[v * self.order + u] = true;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.order + v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order)
            .tuple_combinations()
            .filter(|&(u, v)| self.has_edge(u, v))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.order).filter(|&u| self.has_edge(u, v)).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&u| self.has_edge(u, v))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.order);
        for (u, v) in (0..self.order).tuple_combinations() {
            if !self.has_edge(u, v) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The subgraph induced on `vs`, relabelled `0..vs.len()` in the order given.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<SimpleGraph, GraphError> {
        if let Some(&vertex) = vs.iter().find(|&&v| v >= self.order) {
            return Err(GraphError::VertexOutOfRange { vertex, order: self.order });
        }
        let mut g = SimpleGraph::new(vs.len());
        for (a, b) in (0..vs.len()).tuple_combinations() {
            if self.has_edge(vs[a], vs[b]) {
                g.add_edge(a, b);
            }
        }
        Ok(g)
    }

    /// Whether some vertex is adjacent to exactly one of `u` and `v`.
    pub fn distinguishes(&self, u: usize, v: usize) -> bool {
        (0..self.order)
            .filter(|&x| x != u && x != v)
            .any(|x| self.has_edge(x, u) != self.has_edge(x, v))
    }

    /// An isomorphism `self → other`, as the image of each vertex of `self`.
    pub fn is_isomorphic(&self, other: &SimpleGraph) -> Option<Vec<usize>> {
        if self.order != other.order
            || self.edge_count() != other.edge_count()
            || self.degree_sequence() != other.degree_sequence()
        {
            return None;
        }
        let n = self.order;
        let deg_a: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let deg_b: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        let profile = |g: &SimpleGraph, deg: &[usize], v: usize| {
            let mut p: Vec<usize> = g.neighbors(v).map(|u| deg[u]).collect();
            p.sort_unstable();
            (deg[v], p)
        };
        let prof_a: Vec<_> = (0..n).map(|v| profile(self, &deg_a, v)).collect();
        let prof_b: Vec<_> = (0..n).map(|v| profile(other, &deg_b, v)).collect();
        {
            let mut sa = prof_a.clone();
            let mut sb = prof_b.clone();
            sa.sort();
            sb.sort();
            if sa != sb {
                return None;
            }
        }
        // Map the rarest profiles first; ties broken by higher degree.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| {
            let rarity = prof_a.iter().filter(|p| **p == prof_a[v]).count();
            (rarity, std::cmp::Reverse(deg_a[v]), v)
        });
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|v| (0..n).filter(|&w| prof_b[w] == prof_a[v]).collect())
            .collect();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.extend_iso(other, &order, &candidates, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend_iso(
        &self,
        other: &SimpleGraph,
        order: &[usize],
        candidates: &[Vec<usize>],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for &w in &candidates[v] {
            if used[w] {
                continue;
            }
            let fits = order[..depth]
                .iter()
                .all(|&u| self.has_edge(u, v) == other.has_edge(map[u], w));
            if !fits {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.extend_iso(other, order, candidates, depth + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }

    pub fn family(kind: Family, size: usize) -> Result<SimpleGraph, GraphError> {
        let min = if kind == Family::Cycle { 3 } else { 1 };
        if size < min {
            return Err(GraphError::InvalidSize { kind, size });
        }
        Ok(match kind {
            Family::Matching => {
                let mut g = SimpleGraph::new(2 * size);
                for i in 0..size {
                    g.add_edge(2 * i, 2 * i + 1);
                }
                g
            }
            Family::CoMatching => SimpleGraph::family(Family::Matching, size)?.complement(),
            Family::Path => SimpleGraph::path(size),
            Family::Cycle => {
                let mut g = SimpleGraph::path(size);
                g.add_edge(0, size - 1);
                g
            }
            Family::Complete => SimpleGraph::new(size).complement(),
            Family::Empty => SimpleGraph::new(size),
        })
    }

    pub fn path(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Whether some `k`-subset of vertices induces a graph satisfying `pred`.
    fn has_induced(&self, k: usize, pred: impl Fn(&SimpleGraph) -> bool) -> bool {
        (0..self.order)
            .combinations(k)
            .any(|vs| pred(&self.induced_subgraph(&vs).expect("vertices in range")))
    }

    pub fn contains_induced(&self, h: &SimpleGraph) -> bool {
        self.has_induced(h.order(), |s| s.is_isomorphic(h).is_some())
    }

    /// No induced `2K2`, `C4`, or `P4`.
    pub fn is_threshold(&self) -> bool {
        !self.has_induced(4, |s| {
            let e = s.edge_count();
            // among 4-vertex graphs, 2K2, P4 and C4 are exactly those with
            // 2, 3 or 4 edges and no vertex of degree 0 or 3
            (2..=4).contains(&e) && (0..4).all(|v| matches!(s.degree(v), 1 | 2))
        })
    }

    /// No induced `2K2`, `C4`, or `C5`.
    pub fn is_split(&self) -> bool {
        let two_k2_or_c4 = |s: &SimpleGraph| {
            let d = s.degree_sequence();
            d == [1, 1, 1, 1] || d == [2, 2, 2, 2]
        };
        let c5 = |s: &SimpleGraph| s.degree_sequence() == [2, 2, 2, 2, 2];
        !self.has_induced(4, two_k2_or_c4) && !self.has_induced(5, c5)
    }

    /// Text form: the order on the first line, then one `u v` edge per line
    /// with 1-based vertices.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.order);
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }
}

impl FromStr for SimpleGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (first, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let order: usize = header.parse().map_err(|_| GraphError::Parse {
            line: first,
            message: format!("bad vertex count {header:?}"),
        })?;
        let mut g = SimpleGraph::new(order);
        for (line, text) in lines {
            let parts: Vec<&str> = text.split_whitespace().collect();
            let bad = || GraphError::Parse { line, message: format!("bad edge {text:?}") };
            if parts.len() != 2 {
                return Err(bad());
            }
            let u: usize = parts[0].parse().map_err(|_| bad())?;
            let v: usize = parts[1].parse().map_err(|_| bad())?;
            if u == 0 || v == 0 || u > order || v > order || u == v {
                return Err(bad());
            }
            g.add_edge(u - 1, v - 1);
        }
        Ok(g)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({}; {:?})", self.order, self.edges().collect::<Vec<_>>())
    }
}
