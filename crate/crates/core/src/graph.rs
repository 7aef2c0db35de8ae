//! Simple undirected graphs: distances, powers, diameter and exact maximum cliques.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("power exponent must be >= 1")]
    ZeroPower,
    #[error("induced subgraph needs a nonempty set of distinct in-range vertices")]
    BadVertexSelection,
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        let mut g = Graph::new(repr.n).map_err(serde::de::Error::custom)?;
        for [u, v] in repr.edges {
            if g.contains_edge_checked(u, v) {
                return Err(serde::de::Error::custom(GraphError::DuplicateEdge(u, v)));
            }
            g.add_edge(u, v).map_err(serde::de::Error::custom)?;
        }
        Ok(g)
    }
}

/// Hop distances between every pair of vertices; `None` marks unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<usize>,
}

impl DistanceMatrix {
    /// Sentinel for unreachable pairs; larger than any finite distance.
    pub const INFINITY: usize = usize::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.raw(u, v) {
            Self::INFINITY => None,
            d => Some(d),
        }
    }

    /// Distance including the infinity sentinel.
    pub fn raw(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }
}

/// A maximum clique: its order and one witness, sorted ascending.
///
/// The witness is the lexicographically smallest maximum clique, so it is
/// stable across runs and independent of the search order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clique {
    pub size: usize,
    pub witness: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(Graph {
            adj: (0..n).map(|_| BitSet::new(n)).collect(),
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::new(n)?;
        for u in 0..n {
            g.adj[u] = BitSet::full(n);
            g.adj[u].remove(u);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n)?;
        for (u, v) in edges {
            if g.contains_edge_checked(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn contains_edge_checked(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.has_edge(u, v)
    }

    /// Inserts `{u, v}`; inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange { u, v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn all_pairs_distance(&self) -> DistanceMatrix {
        let n = self.n();
        let mut dist = vec![DistanceMatrix::INFINITY; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for src in 0..n {
            let row = &mut dist[src * n..(src + 1) * n];
            row[src] = 0;
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let next = row[u] + 1;
                for v in self.adj[u].iter() {
                    if row[v] == DistanceMatrix::INFINITY {
                        row[v] = next;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }

    /// The `r`-th power: `u ~ v` iff `1 <= d(u, v) <= r`.
    pub fn power(&self, r: usize) -> Result<Graph, GraphError> {
        if r == 0 {
            return Err(GraphError::ZeroPower);
        }
        if r == 1 {
            return Ok(self.clone());
        }
        let d = self.all_pairs_distance();
        let n = self.n();
        let mut g = Graph::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if d.raw(u, v) <= r {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    /// Largest finite distance, or `None` if the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let d = self.all_pairs_distance();
        let mut best = 0;
        for &x in &d.dist {
            if x == DistanceMatrix::INFINITY {
                return None;
            }
            best = best.max(x);
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = BitSet::new(self.n());
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.len() == self.n()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count() == n * (n - 1) / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Exact maximum clique.
    ///
    /// The order comes from Bron-Kerbosch with Tomita pivoting and a
    /// size bound; the witness from an ordered search for the first clique
    /// of that order.
    pub fn clique_number(&self) -> Clique {
        let n = self.n();
        if self.is_complete() {
            return Clique {
                size: n,
                witness: (0..n).collect(),
            };
        }
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.expand_pivot(&mut current, BitSet::full(n), BitSet::new(n), &mut best);
        let size = best.len();

        let mut witness = Vec::with_capacity(size);
        let found = self.first_clique_of_order(&mut witness, BitSet::full(n), size);
        debug_assert!(found);
        Clique { size, witness }
    }

    fn expand_pivot(
        &self,
        current: &mut Vec<usize>,
        mut candidates: BitSet,
        mut excluded: BitSet,
        best: &mut Vec<usize>,
    ) {
        if candidates.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .max_by_key(|&u| candidates.intersection_len(&self.adj[u]))
            .expect("candidates nonempty");
        let branch = candidates.difference(&self.adj[pivot]);
        for v in branch.iter() {
            if current.len() + candidates.len() <= best.len() {
                return;
            }
            current.push(v);
            self.expand_pivot(
                current,
                candidates.intersection(&self.adj[v]),
                excluded.intersection(&self.adj[v]),
                best,
            );
            current.pop();
            candidates.remove(v);
            excluded.insert(v);
        }
    }

    fn first_clique_of_order(&self, current: &mut Vec<usize>, mut candidates: BitSet, order: usize) -> bool {
        if current.len() == order {
            return true;
        }
        loop {
            let Some(v) = candidates.iter().next() else { break };
            if current.len() + candidates.len() < order {
                return false;
            }
            candidates.remove(v);
            current.push(v);
            if self.first_clique_of_order(current, candidates.intersection(&self.adj[v]), order) {
                return true;
            }
            current.pop();
        }
        false
    }

    /// Subgraph induced by `vertices`, renumbered `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = BitSet::new(self.n());
        for &v in vertices {
            if v >= self.n() || seen.contains(v) {
                return Err(GraphError::BadVertexSelection);
            }
            seen.insert(v);
        }
        let mut g = Graph::new(vertices.len()).map_err(|_| GraphError::BadVertexSelection)?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Joins `other` into a copy of `self`; vertices of `other` are shifted by `self.n()`
    /// and every cross pair becomes an edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n();
        let total = n + other.n();
        let mut g = Graph::new(total).expect("nonempty");
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("in range");
        }
        for (u, v) in other.edges() {
            g.add_edge(u + n, v + n).expect("in range");
        }
        for u in 0..n {
            for v in n..total {
                g.add_edge(u, v).expect("in range");
            }
        }
        g
    }

    /// Graphviz `graph` block with numeric vertex labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}
