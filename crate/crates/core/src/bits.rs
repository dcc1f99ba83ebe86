//! Bitmask adjacency for graphs with at most 64 vertices.
//!
//! Bit `v` of `adj[u]` is set iff `uv` is an edge. Vertex sets are `u64`
//! masks, bit `v` standing for vertex `v`. The exact solvers run on this
//! representation.

use crate::Graph;

pub(crate) const MAX_BITS: usize = 64;

#[derive(Clone, Debug)]
pub(crate) struct MaskGraph {
    pub adj: Vec<u64>,
}

pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn members(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

pub(crate) fn to_vec(set: u64) -> Vec<usize> {
    members(set).collect()
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Option<Self> {
        if g.n() > MAX_BITS {
            return None;
        }
        let adj = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |a, &w| a | (1u64 << w))).collect();
        Some(MaskGraph { adj })
    }

    /// A path on `k` vertices inside `alive`, searched from the lowest start
    /// vertex with neighbours in ascending order.
    pub fn find_path(&self, alive: u64, k: usize) -> Option<Vec<usize>> {
        if k == 0 {
            return Some(Vec::new());
        }
        let mut path = Vec::with_capacity(k);
        for s in members(alive) {
            path.clear();
            path.push(s);
            if self.extend(alive & !(1u64 << s), k, &mut path) {
                return Some(path);
            }
        }
        None
    }

    fn extend(&self, free: u64, k: usize, path: &mut Vec<usize>) -> bool {
        if path.len() == k {
            return true;
        }
        let last = *path.last().expect("non-empty path");
        for w in members(self.adj[last] & free) {
            path.push(w);
            if self.extend(free & !(1u64 << w), k, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Size of a greedily built family of vertex-disjoint `P_k`s in `alive`;
    /// a lower bound on the cover number of the induced subgraph.
    pub fn disjoint_paths(&self, mut alive: u64, k: usize) -> usize {
        let mut count = 0;
        while let Some(p) = self.find_path(alive, k) {
            count += 1;
            for v in p {
                alive &= !(1u64 << v);
            }
        }
        count
    }

    pub fn degree_in(&self, v: usize, set: u64) -> usize {
        (self.adj[v] & set).count_ones() as usize
    }

    /// Whether the subgraph induced by `set` is acyclic.
    pub fn is_forest(&self, set: u64) -> bool {
        let mut edges = 0usize;
        for v in members(set) {
            edges += self.degree_in(v, set);
        }
        edges /= 2;
        let mut comps = 0usize;
        let mut rest = set;
        while rest != 0 {
            let s = rest.trailing_zeros();
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in members(frontier) {
                    next |= self.adj[v] & set;
                }
                frontier = next & !comp;
                comp |= next;
            }
            rest &= !comp;
            comps += 1;
        }
        edges + comps == set.count_ones() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks() {
        assert_eq!(to_vec(0b1011), vec![0, 1, 3]);
        assert_eq!(full(3), 0b111);
        assert_eq!(full(64), u64::MAX);
    }

    #[test]
    fn forest_check() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let mg = MaskGraph::new(&c4).unwrap();
        assert!(!mg.is_forest(0b1111));
        assert!(mg.is_forest(0b0111));
        assert!(mg.is_forest(0));
    }
}
