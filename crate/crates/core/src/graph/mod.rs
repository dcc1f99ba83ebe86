//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency lists are kept sorted, so every traversal in the crate visits
//! neighbours in ascending index order and all algorithms are deterministic.

mod families;
mod io;

pub use families::{generate_family, FamilySpec};
pub use io::{parse_auto, parse_graph, parse_graph6, write_graph, write_graph6};

use crate::error::{Error, Result};
use crate::Rational;
use num_bigint::BigInt;
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Minimum degree, maximum degree, exact average degree and the degree sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub average_degree: Rational,
    pub degrees: Vec<usize>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a simple graph; duplicate edges (in either orientation) collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(DegreeProfile {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            average_degree: Rational::new(BigInt::from(2 * self.m), BigInt::from(self.n())),
            degrees: self.adj.iter().map(Vec::len).collect(),
        })
    }

    /// Subgraph induced by `keep`; vertex `i` of the result is `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut m = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX {
                    adj[i].push(j);
                }
            }
            adj[i].sort_unstable();
            m += adj[i].len();
        }
        Graph { adj, m: m / 2 }
    }

    /// Induced subgraph on the vertices not flagged in `removed`, with the
    /// map from new indices back to original ones.
    pub fn without(&self, removed: &[bool]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !removed[v]).collect();
        (self.induced(&keep), keep)
    }

    /// Number of edges with both endpoints outside `removed`.
    pub fn edges_outside(&self, removed: &[bool]) -> usize {
        self.edges().filter(|&(u, v)| !removed[u] && !removed[v]).count()
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + shift).collect()));
        Graph { adj, m: self.m + other.m }
    }
}

/// Checks that `set` lists distinct in-range vertices and returns its indicator.
pub(crate) fn indicator(n: usize, set: &[usize]) -> Result<Vec<bool>> {
    let mut flag = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        flag[v] = true;
    }
    Ok(flag)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_dedups_and_checks() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((p3.n(), p3.m()), (3, 2));
        let g = Graph::from_edges(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(Graph::from_edges(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn degree_profiles() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let prof = p4.degree_profile().unwrap();
        assert_eq!((prof.min_degree, prof.max_degree), (1, 2));
        assert_eq!(prof.average_degree, Rational::new(3.into(), 2.into()));
        assert_eq!(Graph::empty(0).degree_profile(), Err(Error::EmptyGraph));
    }

    #[test]
    fn girth_and_components() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.girth(), Some(5));
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Some(3));
        assert!(!k4.is_triangle_free());
        let f = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(f.girth(), None);
        assert_eq!(f.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(f.is_forest());
    }

    #[test]
    fn induced_keeps_labels_in_order() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let h = c5.induced(&[0, 1, 2]);
        assert_eq!(h.m(), 2);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2) && !h.has_edge(0, 2));
    }
}
