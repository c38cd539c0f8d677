use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Result};

/// Largest order accepted by [`enumerate_connected`].
pub const MAX_ENUMERATION_N: usize = 7;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_N: usize = 10;

/// Labeling-invariant key of a graph.
///
/// `bits` holds the upper-triangle adjacency bits in graph6 order, first bit
/// most significant, minimized over all vertex permutations. Keys order by
/// `n`, then lexicographically by bit string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalKey {
    pub n: usize,
    pub bits: u64,
}

impl CanonicalKey {
    /// The graph whose labeling realizes this key.
    pub fn to_graph(&self) -> Graph {
        let total = self.n * (self.n - 1) / 2;
        let mut g = Graph::empty(self.n).expect("n >= 1");
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if (self.bits >> (total - 1 - k)) & 1 == 1 {
                    g.add_edge(i, j).expect("in range");
                }
                k += 1;
            }
        }
        g
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    total: usize,
    best: Option<(u64, Vec<usize>)>,
    order: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    /// Places vertices at positions `depth..n`. Position `depth` fixes the
    /// next `depth` bits `(0,depth), ..., (depth-1,depth)`, so a prefix that
    /// already exceeds the incumbent's prefix can be dropped.
    fn extend(&mut self, depth: usize, prefix: u64, len: usize) {
        if depth == self.n {
            match &self.best {
                Some((bits, _)) if *bits <= prefix => {}
                _ => self.best = Some((prefix, self.order.clone())),
            }
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut p = prefix;
            for &u in &self.order {
                p = (p << 1) | (self.rows[u] >> v & 1);
            }
            let new_len = len + depth;
            if let Some((bits, _)) = &self.best {
                let best_prefix = if new_len == 0 { 0 } else { bits >> (self.total - new_len) };
                if p > best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.extend(depth + 1, p, new_len);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

/// Canonical key and a vertex order achieving it: `order[k]` is the vertex
/// placed at position `k`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(GraphError::CanonicalLimit { n, max: MAX_CANONICAL_N });
    }
    let rows: Vec<u64> = (0..n)
        .map(|i| (0..n).filter(|&j| g.has_edge(i, j)).fold(0u64, |acc, j| acc | 1 << j))
        .collect();
    let mut search = Search { rows: &rows, n, total: n * (n - 1) / 2, best: None, order: Vec::with_capacity(n), used: 0 };
    search.extend(0, 0, 0);
    let (bits, order) = search.best.expect("at least one permutation");
    Ok((CanonicalKey { n, bits }, order))
}

/// Lexicographically minimal upper-triangle bit string over all labelings.
pub fn canonical_form(g: &Graph) -> Result<CanonicalKey> {
    canonical_labeling(g).map(|(key, _)| key)
}

/// One canonical representative of every graph on `n` vertices, sorted by key.
///
/// Built by extending each representative on `n - 1` vertices with a new
/// vertex joined to every possible neighbor subset; every graph on `n`
/// vertices arises this way because deleting any vertex gives a graph on
/// `n - 1` vertices.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if n > MAX_ENUMERATION_N {
        return Err(GraphError::EnumerationLimit { n, max: MAX_ENUMERATION_N });
    }
    let mut level: BTreeSet<CanonicalKey> = BTreeSet::from([CanonicalKey { n: 1, bits: 0 }]);
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for key in &level {
            let base = key.to_graph();
            for subset in 0u64..(1 << (order - 1)) {
                let mut g = Graph::empty(order).expect("order >= 2");
                for (i, j) in base.edges() {
                    g.add_edge(i, j).expect("in range");
                }
                for u in 0..order - 1 {
                    if subset >> u & 1 == 1 {
                        g.add_edge(u, order - 1).expect("in range");
                    }
                }
                next.insert(canonical_form(&g)?);
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|k| k.to_graph()).collect())
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n <= 7` vertices, sorted by canonical key.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_all(n)?.into_iter().filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, star};

    #[test]
    fn isomorphic_paths_share_key() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&complete(3).unwrap()).unwrap());
    }

    #[test]
    fn key_realized_by_labeling() {
        let g = star(5).unwrap();
        let (key, order) = canonical_labeling(&g).unwrap();
        let mut perm = vec![0; 5];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        assert_eq!(g.relabel(&perm), key.to_graph());
        // the center goes last so the leading bits are zero
        assert_eq!(order[4], 0);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);
        let three = enumerate_connected(3).unwrap();
        assert_eq!(three.len(), 2);
        assert!(three.contains(&complete(3).unwrap()));
        assert!(three.iter().any(|g| canonical_form(g).unwrap() == canonical_form(&path(3).unwrap()).unwrap()));
        assert_eq!(enumerate_connected(4).unwrap().len(), 6);
        assert_eq!(enumerate_all(4).unwrap().len(), 11);
    }

    #[test]
    fn limits() {
        assert_eq!(enumerate_connected(8), Err(GraphError::EnumerationLimit { n: 8, max: 7 }));
        assert_eq!(enumerate_connected(0), Err(GraphError::NoVertices));
        assert_eq!(canonical_form(&Graph::empty(11).unwrap()), Err(GraphError::CanonicalLimit { n: 11, max: 10 }));
    }
}
