//! Chordal graphs: maximum cardinality search, perfect elimination orderings,
//! optimal colouring, maximal cliques and clique trees.

mod nice;

pub use nice::{nice_decomposition, NiceDecomposition, NiceNode, NodeKind};

use crate::error::{Error, Result};
use crate::Graph;
use serde::Serialize;

/// A vertex ordering; `order[0]` is eliminated first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
    pub position: Vec<usize>,
}

impl EliminationOrder {
    pub fn from_order(order: Vec<usize>) -> Self {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        EliminationOrder { order, position }
    }

    /// Neighbours of `v` placed after it, ascending by position.
    pub fn later_neighbors(&self, g: &Graph, v: usize) -> Vec<usize> {
        let mut l: Vec<usize> =
            g.neighbors(v).iter().copied().filter(|&w| self.position[w] > self.position[v]).collect();
        l.sort_unstable_by_key(|&w| self.position[w]);
        l
    }

    /// Single-pass PEO test: for each `v` with later neighbours, the earliest
    /// of them must be adjacent to all the others.
    pub fn is_perfect(&self, g: &Graph) -> bool {
        (0..g.n()).all(|v| {
            let l = self.later_neighbors(g, v);
            match l.split_first() {
                None => true,
                Some((&u, rest)) => rest.iter().all(|&w| g.has_edge(u, w)),
            }
        })
    }
}

/// Maximum cardinality search (ties to the lowest index); the reversed visit
/// order is returned, which is a PEO exactly when `g` is chordal.
pub fn mcs_order(g: &Graph) -> EliminationOrder {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex remains");
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    EliminationOrder::from_order(visit)
}

pub fn is_chordal(g: &Graph) -> bool {
    mcs_order(g).is_perfect(g)
}

fn peo(g: &Graph) -> Result<EliminationOrder> {
    let order = mcs_order(g);
    if !order.is_perfect(g) {
        return Err(Error::NotChordal);
    }
    Ok(order)
}

/// Greedy colouring along the reversed PEO; uses exactly `ω` colours.
/// Colours are `0..ω`.
pub fn chordal_color(g: &Graph) -> Result<Vec<usize>> {
    let order = peo(g)?;
    let mut color = vec![usize::MAX; g.n()];
    for &v in order.order.iter().rev() {
        let mut used: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).filter(|&c| c != usize::MAX).collect();
        used.sort_unstable();
        used.dedup();
        color[v] = used.iter().enumerate().find(|&(i, &c)| i != c).map_or(used.len(), |(i, _)| i);
    }
    Ok(color)
}

/// All maximal cliques, each sorted, ordered by the PEO position of the
/// vertex that generates them. `{v} ∪ later(v)` is dropped exactly when some
/// `u` whose earliest later neighbour is `v` has `|later(u)| = |later(v)| + 1`.
pub fn max_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let order = peo(g)?;
    let later: Vec<Vec<usize>> = (0..g.n()).map(|v| order.later_neighbors(g, v)).collect();
    let mut dominated = vec![false; g.n()];
    for u in 0..g.n() {
        if let Some(&p) = later[u].first() {
            if later[u].len() == later[p].len() + 1 {
                dominated[p] = true;
            }
        }
    }
    Ok(order
        .order
        .iter()
        .filter(|&&v| !dominated[v])
        .map(|&v| {
            let mut c = later[v].clone();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect())
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(max_cliques(g)?.iter().map(Vec::len).max().unwrap_or(0))
}

/// Tree on the maximal cliques with the running-intersection property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueTree {
    pub bags: Vec<Vec<usize>>,
    /// Tree edges between bag indices, `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_tree(&self) -> bool {
        let b = self.bags.len();
        if b == 0 {
            return self.edges.is_empty();
        }
        if self.edges.len() != b - 1 || self.edges.iter().any(|&(i, j)| i >= b || j >= b || i == j) {
            return false;
        }
        let mut uf = UnionFind::new(b);
        self.edges.iter().all(|&(i, j)| uf.union(i, j))
    }

    /// For every vertex, the bags containing it form a connected subtree.
    pub fn has_running_intersection(&self, n: usize) -> bool {
        (0..n).all(|v| {
            let holding: Vec<usize> =
                (0..self.bags.len()).filter(|&i| self.bags[i].binary_search(&v).is_ok()).collect();
            if holding.len() <= 1 {
                return true;
            }
            let inside = |i: usize| self.bags[i].binary_search(&v).is_ok();
            let mut uf = UnionFind::new(self.bags.len());
            let mut joins = 0;
            for &(i, j) in &self.edges {
                if inside(i) && inside(j) && uf.union(i, j) {
                    joins += 1;
                }
            }
            joins == holding.len() - 1
        })
    }
}

/// Maximum-weight spanning tree of the clique intersection graph (weight
/// `|B_i ∩ B_j|`), greedy over pairs sorted by weight descending then index
/// ascending. Zero-weight pairs are kept so disconnected graphs still get a
/// single tree.
pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    let bags = max_cliques(g)?;
    let b = bags.len();
    let mut pairs = Vec::new();
    for i in 0..b {
        for j in i + 1..b {
            let w = bags[i].iter().filter(|v| bags[j].binary_search(v).is_ok()).count();
            pairs.push((w, i, j));
        }
    }
    pairs.sort_by_key(|&(w, i, j)| (std::cmp::Reverse(w), i, j));
    let mut uf = UnionFind::new(b);
    let edges = pairs.into_iter().filter(|&(_, i, j)| uf.union(i, j)).map(|(_, i, j)| (i, j)).collect();
    Ok(CliqueTree { bags, edges })
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    /// Merges the classes; `false` when already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
