//! Nice (binary) decompositions expanded from a clique tree.
//!
//! Node kinds: a leaf holds one vertex; an introduce node adds one vertex to
//! its child's bag; a forget node drops one; a join node has two children
//! with the same bag. Between adjacent clique-tree bags the expansion first
//! forgets down to the intersection, then introduces up to the parent bag.

use super::{CliqueTree, UnionFind};
use crate::error::{Error, Result};
use crate::Graph;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Leaf,
    Introduce,
    Forget,
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceNode {
    /// Sorted bag `S_x`.
    pub bag: Vec<usize>,
    pub kind: NodeKind,
    pub children: Vec<usize>,
    pub parent: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
    /// `|V_x|`, the number of vertices in bags of the subtree below `x`.
    pub subtree_size: Vec<usize>,
    pub depth: Vec<usize>,
}

pub fn nice_decomposition(ct: &CliqueTree) -> Result<NiceDecomposition> {
    if ct.bags.is_empty() {
        return Err(Error::MalformedDecomposition("clique tree has no bags".into()));
    }
    if ct.bags.iter().any(|b| b.is_empty() || b.windows(2).any(|w| w[0] >= w[1])) {
        return Err(Error::MalformedDecomposition("bags must be non-empty and strictly sorted".into()));
    }
    if !ct.is_tree() {
        return Err(Error::MalformedDecomposition("bag edges do not form a tree".into()));
    }
    let n = ct.bags.iter().flatten().max().map_or(0, |&v| v + 1);
    if !ct.has_running_intersection(n) {
        return Err(Error::MalformedDecomposition("running intersection fails".into()));
    }
    for i in 0..ct.bags.len() {
        for j in i + 1..ct.bags.len() {
            if ct.bags[i] == ct.bags[j] {
                return Err(Error::MalformedDecomposition(format!("bags {i} and {j} coincide")));
            }
        }
    }
    let mut b = Builder { nodes: Vec::new() };
    let root = b.expand(ct, 0, None);
    let mut nd =
        NiceDecomposition { subtree_size: vec![0; b.nodes.len()], depth: vec![0; b.nodes.len()], nodes: b.nodes, root };
    nd.recompute(n);
    Ok(nd)
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, bag: Vec<usize>, kind: NodeKind, children: Vec<usize>) -> usize {
        let id = self.nodes.len();
        for &c in &children {
            self.nodes[c].parent = Some(id);
        }
        self.nodes.push(NiceNode { bag, kind, children, parent: None });
        id
    }

    /// Returns the id of a node whose bag equals clique `i`.
    fn expand(&mut self, ct: &CliqueTree, i: usize, parent: Option<usize>) -> usize {
        let bag = &ct.bags[i];
        let kids: Vec<usize> = ct.neighbors(i).into_iter().filter(|&c| Some(c) != parent).collect();
        if kids.is_empty() {
            let mut cur = self.push(vec![bag[0]], NodeKind::Leaf, vec![]);
            for t in 2..=bag.len() {
                cur = self.push(bag[..t].to_vec(), NodeKind::Introduce, vec![cur]);
            }
            return cur;
        }
        let mut tops = Vec::new();
        for c in kids {
            let mut cur = self.expand(ct, c, Some(i));
            let mut now = ct.bags[c].clone();
            for v in ct.bags[c].iter().filter(|v| bag.binary_search(v).is_err()) {
                now.retain(|w| w != v);
                cur = self.push(now.clone(), NodeKind::Forget, vec![cur]);
            }
            for &v in bag.iter().filter(|v| ct.bags[c].binary_search(v).is_err()) {
                let at = now.binary_search(&v).unwrap_err();
                now.insert(at, v);
                cur = self.push(now.clone(), NodeKind::Introduce, vec![cur]);
            }
            tops.push(cur);
        }
        let mut acc = tops[0];
        for &t in &tops[1..] {
            acc = self.push(bag.clone(), NodeKind::Join, vec![acc, t]);
        }
        acc
    }
}

impl NiceDecomposition {
    /// Recomputes `|V_x|` and depths in one pass; nodes are stored children
    /// first, so increasing id order is a post-order.
    fn recompute(&mut self, n: usize) {
        let words = n.div_ceil(64).max(1);
        let mut sets: Vec<Vec<u64>> = Vec::with_capacity(self.nodes.len());
        for x in 0..self.nodes.len() {
            let mut s = vec![0u64; words];
            for &c in &self.nodes[x].children {
                for (a, b) in s.iter_mut().zip(&sets[c]) {
                    *a |= b;
                }
            }
            for &v in &self.nodes[x].bag {
                s[v / 64] |= 1 << (v % 64);
            }
            self.subtree_size[x] = s.iter().map(|w| w.count_ones() as usize).sum();
            sets.push(s);
        }
        for x in (0..self.nodes.len()).rev() {
            self.depth[x] = self.nodes[x].parent.map_or(0, |p| self.depth[p] + 1);
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `V_x` in ascending order.
    pub fn subtree_vertices(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            out.extend_from_slice(&self.nodes[y].bag);
            stack.extend_from_slice(&self.nodes[y].children);
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// A leaf of maximum depth, lowest id on ties.
    pub fn deepest_leaf(&self) -> usize {
        (0..self.nodes.len())
            .filter(|&x| self.nodes[x].children.is_empty())
            .max_by_key(|&x| (self.depth[x], std::cmp::Reverse(x)))
            .expect("at least one node")
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(0)
    }

    /// Checks the node-kind rules, that every edge of `g` sits in a bag, that
    /// bags are cliques of `g` and that each vertex occupies a connected set
    /// of nodes.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedDecomposition(m));
        for (x, node) in self.nodes.iter().enumerate() {
            let child_bags: Vec<&Vec<usize>> = node.children.iter().map(|&c| &self.nodes[c].bag).collect();
            let ok = match (node.kind, child_bags.as_slice()) {
                (NodeKind::Leaf, []) => node.bag.len() == 1,
                (NodeKind::Introduce, [c]) => node.bag.len() == c.len() + 1 && c.iter().all(|v| node.bag.contains(v)),
                (NodeKind::Forget, [c]) => node.bag.len() + 1 == c.len() && node.bag.iter().all(|v| c.contains(v)),
                (NodeKind::Join, [c1, c2]) => **c1 == node.bag && **c2 == node.bag,
                _ => false,
            };
            if !ok {
                return bad(format!("node {x} breaks the {:?} rule", node.kind));
            }
            for (i, &u) in node.bag.iter().enumerate() {
                if u >= g.n() {
                    return bad(format!("node {x} holds vertex {u} outside the graph"));
                }
                if node.bag[i + 1..].iter().any(|&w| !g.has_edge(u, w)) {
                    return bad(format!("bag of node {x} is not a clique"));
                }
            }
        }
        for (u, v) in g.edges() {
            if !self.nodes.iter().any(|x| x.bag.binary_search(&u).is_ok() && x.bag.binary_search(&v).is_ok()) {
                return bad(format!("edge {u}-{v} lies in no bag"));
            }
        }
        for v in 0..g.n() {
            let holding: Vec<usize> =
                (0..self.nodes.len()).filter(|&x| self.nodes[x].bag.binary_search(&v).is_ok()).collect();
            if holding.is_empty() {
                return bad(format!("vertex {v} lies in no bag"));
            }
            let mut uf = UnionFind::new(self.nodes.len());
            let joins = holding
                .iter()
                .filter_map(|&x| self.nodes[x].parent.map(|p| (x, p)))
                .filter(|&(_, p)| self.nodes[p].bag.binary_search(&v).is_ok())
                .filter(|&(x, p)| uf.union(x, p))
                .count();
            if joins + 1 != holding.len() {
                return bad(format!("nodes holding vertex {v} are disconnected"));
            }
        }
        Ok(())
    }

    /// Indented text dump, root first.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            let node = &self.nodes[x];
            let _ = writeln!(
                s,
                "{}{x} {:?} {:?} |V|={}",
                "  ".repeat(self.depth[x]),
                node.kind,
                node.bag,
                self.subtree_size[x]
            );
            stack.extend(node.children.iter().rev());
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{clique_number, clique_tree};
    use crate::graph::{generate_family, FamilySpec};

    #[test]
    fn single_bag_is_an_introduce_chain() {
        let ct = CliqueTree { bags: vec![vec![0, 1, 2]], edges: vec![] };
        let nd = nice_decomposition(&ct).unwrap();
        let kinds: Vec<NodeKind> = nd.nodes.iter().map(|x| x.kind).collect();
        assert_eq!(kinds, vec![NodeKind::Leaf, NodeKind::Introduce, NodeKind::Introduce]);
        assert_eq!(nd.root, 2);
        assert_eq!(nd.subtree_size, vec![1, 2, 3]);
    }

    #[test]
    fn two_bags_sharing_a_vertex() {
        let ct = CliqueTree { bags: vec![vec![0, 1], vec![1, 2]], edges: vec![(0, 1)] };
        let nd = nice_decomposition(&ct).unwrap();
        let kinds: Vec<NodeKind> = nd.nodes.iter().map(|x| x.kind).collect();
        assert_eq!(kinds, vec![NodeKind::Leaf, NodeKind::Introduce, NodeKind::Forget, NodeKind::Introduce]);
        assert_eq!(nd.nodes[nd.root].bag, vec![0, 1]);
        assert_eq!(nd.subtree_size[nd.root], 3);
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        nd.validate(&g).unwrap();
        assert!(nd.dump().starts_with("3 Introduce [0, 1] |V|=3\n"));
    }

    #[test]
    fn malformed_trees_are_rejected() {
        let cycle = CliqueTree { bags: vec![vec![0, 1], vec![1, 2], vec![0, 2]], edges: vec![(0, 1), (1, 2), (0, 2)] };
        assert!(nice_decomposition(&cycle).is_err());
        let broken = CliqueTree { bags: vec![vec![0, 1], vec![1, 2], vec![0, 3]], edges: vec![(0, 1), (1, 2)] };
        assert!(nice_decomposition(&broken).is_err());
        assert!(nice_decomposition(&CliqueTree { bags: vec![], edges: vec![] }).is_err());
    }

    #[test]
    fn random_chordal_graphs_decompose() {
        for seed in 0..20 {
            for spec in ["interval(15,6)", "ktree(18,3)", "random_tree(12)", "disjoint_union(ktree(6,2),path(4))"] {
                let g = generate_family(&spec.parse::<FamilySpec>().unwrap(), seed).unwrap();
                let nd = nice_decomposition(&clique_tree(&g).unwrap()).unwrap();
                nd.validate(&g).unwrap();
                assert_eq!(nd.width(), clique_number(&g).unwrap());
                assert_eq!(nd.subtree_size[nd.root], g.n());
                for x in 0..nd.len() {
                    assert_eq!(nd.subtree_vertices(x).len(), nd.subtree_size[x]);
                }
            }
        }
    }
}
