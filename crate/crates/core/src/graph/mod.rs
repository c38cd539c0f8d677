//! Simple undirected graphs.
//!
//! A [`Graph`] is a symmetric boolean adjacency matrix with an empty diagonal
//! on vertices `0..n`, `n >= 1`. Deleting a vertex compacts the remaining
//! labels in order, so vertex `w > v` of `G` becomes `w - 1` in `G - v`.

mod canon;
mod family;
pub mod graph6;
mod rng;

pub use canon::{canonical_form, canonical_labeling, enumerate_all, enumerate_connected, CanonicalKey, MAX_CANONICAL_N, MAX_ENUMERATION_N};
pub use family::{complete, cycle, erdos_renyi, path, star, Family};
pub use graph6::Graph6Error;
pub use rng::XorShift64Star;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::SymMatrix;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("cannot delete the only vertex of a graph")]
    SingleVertex,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("exhaustive enumeration is capped at n = {max} (requested {n}); feed larger corpora as graph6 files")]
    EnumerationLimit { n: usize, max: usize },
    #[error("canonical form is capped at n = {max} (graph has {n} vertices)")]
    CanonicalLimit { n: usize, max: usize },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// Index of a vertex in `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId(index)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    /// Graph on `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(Self { n, adj: vec![false; n * n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        self.adj[i * self.n + j] = true;
        self.adj[j * self.n + i] = true;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    fn check(&self, v: VertexId) -> Result<usize> {
        if v.0 < self.n {
            Ok(v.0)
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v.0, n: self.n })
        }
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&e| e).count() / 2
    }

    pub fn neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>> {
        let v = self.check(v)?;
        Ok((0..self.n).filter(|&w| self.has_edge(v, w)).map(VertexId).collect())
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        let v = self.check(v)?;
        Ok(self.degree_unchecked(v))
    }

    fn degree_unchecked(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n].iter().filter(|&&e| e).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree_unchecked(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().expect("n >= 1")
    }

    /// Vertex of minimum degree; ties go to the lowest index.
    pub fn min_degree_vertex(&self) -> VertexId {
        let degrees = self.degrees();
        let (v, _) = degrees
            .iter()
            .enumerate()
            .min_by_key(|&(i, d)| (*d, i))
            .expect("n >= 1");
        VertexId(v)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for w in 0..self.n {
                if self.has_edge(u, w) && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.degrees().iter().all(|&d| d == self.n - 1)
    }

    /// `K_{1,n-1}` for `n >= 2`: one vertex of degree `n - 1`, all others of
    /// degree 1. `K_2` counts as a star.
    pub fn is_star(&self) -> bool {
        if self.n < 2 {
            return false;
        }
        if self.n == 2 {
            return self.has_edge(0, 1);
        }
        let degrees = self.degrees();
        degrees.iter().filter(|&&d| d == self.n - 1).count() == 1
            && degrees.iter().filter(|&&d| d == 1).count() == self.n - 1
    }

    pub fn adjacency_matrix(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |i, j| if self.has_edge(i, j) { 1.0 } else { 0.0 }).expect("n >= 1")
    }

    /// `G - v` with order-preserving relabeling.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph> {
        let v = self.check(v)?;
        if self.n == 1 {
            return Err(GraphError::SingleVertex);
        }
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        Ok(self.induced(&keep))
    }

    /// The 0–1 vector over the vertices of `G - v` marking the neighbors of `v`.
    pub fn neighbor_indicator(&self, v: VertexId) -> Result<Vec<f64>> {
        let v = self.check(v)?;
        Ok((0..self.n).filter(|&w| w != v).map(|w| if self.has_edge(v, w) { 1.0 } else { 0.0 }).collect())
    }

    /// Subgraph induced on `vertices`, relabeled in increasing index order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Result<Graph> {
        let mut keep = Vec::with_capacity(vertices.len());
        for &v in vertices {
            keep.push(self.check(v)?);
        }
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(GraphError::NoVertices);
        }
        Ok(self.induced(&keep))
    }

    fn induced(&self, keep: &[usize]) -> Graph {
        let m = keep.len();
        let mut adj = vec![false; m * m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                adj[a * m + b] = self.has_edge(i, j);
            }
        }
        Graph { n: m, adj }
    }

    /// `G[{v} ∪ N(v)]`.
    pub fn closed_neighborhood_subgraph(&self, v: VertexId) -> Result<Graph> {
        let mut vertices = self.neighborhood(v)?;
        vertices.push(v);
        self.induced_subgraph(&vertices)
    }

    /// Edges of `G[N(v)]`, counted directly.
    pub fn neighborhood_edge_count(&self, v: VertexId) -> Result<usize> {
        let nbhd = self.neighborhood(v)?;
        let mut count = 0;
        for (a, x) in nbhd.iter().enumerate() {
            for y in &nbhd[a + 1..] {
                if self.has_edge(x.0, y.0) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Graph with vertex `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut adj = vec![false; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                adj[perm[i] * self.n + perm[j]] = self.has_edge(i, j);
            }
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph { n, adj: vec![false; n * n] };
        for (i, j) in self.edges() {
            g.add_edge(i, j).expect("in range");
        }
        for (i, j) in other.edges() {
            g.add_edge(i + self.n, j + self.n).expect("in range");
        }
        g
    }

    pub fn to_graph6(&self) -> std::result::Result<String, Graph6Error> {
        graph6::write(self)
    }

    pub fn from_graph6(text: &str) -> std::result::Result<Graph, Graph6Error> {
        graph6::parse(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn construction() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(Graph::from_edges(2, &[]).unwrap().edge_count(), 0);
        let all: Vec<_> = (0..4).flat_map(|i| ((i + 1)..4).map(move |j| (i, j))).collect();
        assert!(Graph::from_edges(4, &all).unwrap().is_complete());
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::empty(0), Err(GraphError::NoVertices));
    }

    #[test]
    fn deletion() {
        assert_eq!(cycle(4).unwrap().delete_vertex(v(0)).unwrap(), path(3).unwrap());
        assert_eq!(complete(4).unwrap().delete_vertex(v(2)).unwrap(), complete(3).unwrap());
        assert_eq!(star(4).unwrap().delete_vertex(v(0)).unwrap(), Graph::empty(3).unwrap());
        assert_eq!(Graph::empty(1).unwrap().delete_vertex(v(0)), Err(GraphError::SingleVertex));
    }

    #[test]
    fn neighborhoods() {
        let s = star(4).unwrap();
        assert_eq!(s.neighborhood(v(0)).unwrap(), vec![v(1), v(2), v(3)]);
        assert_eq!(s.degree(v(0)).unwrap(), 3);
        let p3 = path(3).unwrap();
        assert_eq!(p3.neighborhood(v(0)).unwrap(), vec![v(1)]);
        assert_eq!(p3.degree(v(2)).unwrap(), 1);
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.neighborhood(v(0)).unwrap(), vec![v(1), v(4)]);
        assert_eq!(c5.degree(v(3)).unwrap(), 2);
        assert_eq!(c5.degree(v(5)), Err(GraphError::VertexOutOfRange { vertex: 5, n: 5 }));
        // indicator lives on G − v
        assert_eq!(c5.neighbor_indicator(v(1)).unwrap(), vec![1.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(cycle(5).unwrap().closed_neighborhood_subgraph(v(0)).unwrap(), Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap());
        assert_eq!(complete(5).unwrap().closed_neighborhood_subgraph(v(3)).unwrap(), complete(5).unwrap());
        assert_eq!(star(4).unwrap().closed_neighborhood_subgraph(v(2)).unwrap(), complete(2).unwrap());
    }

    #[test]
    fn global_properties() {
        let g = complete(3).unwrap().disjoint_union(&complete(2).unwrap());
        assert!(!g.is_connected());
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.min_degree_vertex(), v(3));
        let c6 = cycle(6).unwrap();
        assert!(c6.is_connected());
        assert_eq!(c6.edge_count(), 6);
        assert_eq!(c6.min_degree_vertex(), v(0));
        let s = star(5).unwrap();
        assert!(s.is_connected());
        assert_eq!(s.edge_count(), 4);
        assert_eq!(s.min_degree_vertex(), v(1));
    }

    #[test]
    fn structural_predicates() {
        assert!(star(2).unwrap().is_star());
        assert!(path(3).unwrap().is_star());
        assert!(star(6).unwrap().is_star());
        assert!(!cycle(4).unwrap().is_star());
        assert!(!Graph::empty(1).unwrap().is_star());
        assert!(!Graph::empty(2).unwrap().is_star());
        assert!(Graph::empty(1).unwrap().is_complete());
        assert!(!path(3).unwrap().is_complete());
    }
}
