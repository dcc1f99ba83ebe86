//! `P_k` detection and cover validation.
//!
//! Everything else in the crate leans on [`is_cover`]: no cover leaves an
//! algorithm without passing through it.

use crate::bits::{self, MaskGraph};
use crate::error::{Error, Result};
use crate::graph::indicator;
use crate::Graph;
use serde::Serialize;

/// Default vertex cap for [`longest_path_order`].
pub const LONGEST_PATH_CAP: usize = 20;

/// Vertex sequence of a path subgraph: consecutive entries adjacent, all distinct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathWitness(pub Vec<usize>);

impl PathWitness {
    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in &self.0 {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverCheck {
    Covered,
    /// A `P_k` surviving in `G - T`, in original vertex labels.
    Uncovered(PathWitness),
}

impl CoverCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CoverCheck::Covered)
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidK { k, reason: "path order must be at least 2" });
    }
    Ok(())
}

/// Some path on `k` vertices, or `None` when `G` is `P_k`-free.
pub fn find_path_of_order(g: &Graph, k: usize) -> Result<Option<PathWitness>> {
    check_k(k)?;
    Ok(find_path_avoiding(g, k, &vec![false; g.n()]))
}

/// Depth-limited DFS from each start vertex in ascending order, never
/// entering vertices flagged in `removed`.
pub(crate) fn find_path_avoiding(g: &Graph, k: usize, removed: &[bool]) -> Option<PathWitness> {
    if k > g.n() {
        return None;
    }
    if let Some(mg) = MaskGraph::new(g) {
        let alive = (0..g.n()).filter(|&v| !removed[v]).fold(0u64, |a, v| a | (1u64 << v));
        return mg.find_path(alive, k).map(PathWitness);
    }
    let mut on_path = removed.to_vec();
    let mut path = Vec::with_capacity(k);
    for s in 0..g.n() {
        if removed[s] {
            continue;
        }
        path.clear();
        path.push(s);
        on_path[s] = true;
        if extend(g, k, &mut on_path, &mut path) {
            return Some(PathWitness(path));
        }
        on_path[s] = false;
    }
    None
}

fn extend(g: &Graph, k: usize, blocked: &mut [bool], path: &mut Vec<usize>) -> bool {
    if path.len() == k {
        return true;
    }
    let last = *path.last().expect("non-empty path");
    for &w in g.neighbors(last) {
        if blocked[w] {
            continue;
        }
        blocked[w] = true;
        path.push(w);
        if extend(g, k, blocked, path) {
            return true;
        }
        path.pop();
        blocked[w] = false;
    }
    false
}

/// Whether `cover` meets every path on `k` vertices.
pub fn is_cover(g: &Graph, k: usize, cover: &[usize]) -> Result<CoverCheck> {
    check_k(k)?;
    let removed = indicator(g.n(), cover)?;
    Ok(match find_path_avoiding(g, k, &removed) {
        None => CoverCheck::Covered,
        Some(w) => CoverCheck::Uncovered(w),
    })
}

pub fn longest_path_order(g: &Graph) -> Result<usize> {
    longest_path_order_with_cap(g, LONGEST_PATH_CAP)
}

/// Order of a longest path subgraph. Subset DP up to 20 vertices, pruned
/// backtracking above that (when `cap` allows it).
pub fn longest_path_order_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded { what: "longest path", n, cap });
    }
    if n == 0 {
        return Ok(0);
    }
    if n <= 20 {
        return Ok(longest_path_dp(g));
    }
    Ok(longest_path_backtrack(g))
}

/// `ends[S]` has bit `v` set iff some path visits exactly the vertex set `S`
/// and ends at `v`. Sets are processed in increasing numeric order, so every
/// proper subset is final before its supersets are extended.
fn longest_path_dp(g: &Graph) -> usize {
    let n = g.n();
    let mg = MaskGraph::new(g).expect("n <= 20");
    let mut ends = vec![0u32; 1usize << n];
    let mut best = 1;
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for set in 1usize..(1 << n) {
        let e = ends[set];
        if e == 0 {
            continue;
        }
        best = best.max(set.count_ones() as usize);
        for v in bits::members(e as u64) {
            let ext = mg.adj[v] & !(set as u64);
            for w in bits::members(ext) {
                ends[set | (1 << w)] |= 1 << w;
            }
        }
    }
    best
}

fn longest_path_backtrack(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 1;
    let mut on = vec![false; n];
    fn go(g: &Graph, v: usize, len: usize, on: &mut [bool], best: &mut usize, comp_size: usize) {
        *best = (*best).max(len);
        if *best == comp_size {
            return;
        }
        for &w in g.neighbors(v) {
            if !on[w] {
                on[w] = true;
                go(g, w, len + 1, on, best, comp_size);
                on[w] = false;
            }
        }
    }
    for comp in g.components() {
        for &s in &comp {
            if best >= comp.len() {
                break;
            }
            on[s] = true;
            go(g, s, 1, &mut on, &mut best, comp.len());
            on[s] = false;
        }
    }
    best
}
