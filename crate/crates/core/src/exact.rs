//! Exact values: `ψ_k`, independence and dissociation numbers, the forest
//! number, and the linear-time tree algorithm.

use crate::bits::{self, MaskGraph};
use crate::error::{Error, Result};
use crate::graph::indicator;
use crate::paths::{find_path_avoiding, is_cover};
use crate::Graph;
use serde::Serialize;

/// Default vertex cap for [`psi_exact`].
pub const PSI_CAP: usize = 24;
/// Default vertex cap for [`forest_number_exact`].
pub const FOREST_CAP: usize = 20;

/// A k-path vertex cover together with evidence about it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCertificate {
    pub k: usize,
    pub cover: Vec<usize>,
    /// Set when no cover with one vertex fewer exists.
    pub optimal: bool,
    /// Order of a longest path in `G - cover`; at most `k - 1`.
    pub residual_longest_path: usize,
}

impl CoverCertificate {
    pub fn size(&self) -> usize {
        self.cover.len()
    }

    fn build(g: &Graph, k: usize, mut cover: Vec<usize>, optimal: bool) -> Result<Self> {
        cover.sort_unstable();
        if !is_cover(g, k, &cover)?.is_valid() {
            return Err(Error::Internal(format!("solver produced a non-cover for k = {k}")));
        }
        let removed = indicator(g.n(), &cover)?;
        let residual_longest_path = residual_longest_path(g, &removed);
        Ok(CoverCertificate { k, cover, optimal, residual_longest_path })
    }
}

/// Longest path order in `G - removed` by plain backtracking; cheap because
/// callers only ask about residuals of covers.
pub(crate) fn residual_longest_path(g: &Graph, removed: &[bool]) -> usize {
    fn go(g: &Graph, v: usize, len: usize, blocked: &mut [bool], best: &mut usize) {
        *best = (*best).max(len);
        for &w in g.neighbors(v) {
            if !blocked[w] {
                blocked[w] = true;
                go(g, w, len + 1, blocked, best);
                blocked[w] = false;
            }
        }
    }
    let mut blocked = removed.to_vec();
    let mut best = 0;
    for s in 0..g.n() {
        if !removed[s] {
            blocked[s] = true;
            go(g, s, 1, &mut blocked, &mut best);
            blocked[s] = false;
        }
    }
    best
}

fn check_cap(g: &Graph, cap: usize, what: &'static str) -> Result<()> {
    let cap = cap.min(bits::MAX_BITS);
    if g.n() > cap {
        return Err(Error::CapExceeded { what, n: g.n(), cap });
    }
    Ok(())
}

pub fn psi_exact(g: &Graph, k: usize) -> Result<CoverCertificate> {
    psi_exact_with_cap(g, k, PSI_CAP)
}

/// Minimum k-path vertex cover by bounded search: find a `P_k`, branch on
/// deleting each of its vertices (ascending index), prune when a greedy
/// packing of disjoint `P_k`s exceeds the remaining budget. Budgets are tried
/// upwards from that packing bound; the first success is optimal, and the
/// greedy cover closes the range.
pub fn psi_exact_with_cap(g: &Graph, k: usize, cap: usize) -> Result<CoverCertificate> {
    if k < 2 {
        return Err(Error::InvalidK { k, reason: "path order must be at least 2" });
    }
    check_cap(g, cap, "exact k-path vertex cover")?;
    let mg = MaskGraph::new(g).expect("capped at 64");
    let all = bits::full(g.n());
    let greedy = greedy_cover(&mg, all, k);
    let lower = mg.disjoint_paths(all, k);
    let mut chosen = Vec::new();
    for budget in lower..greedy.len() {
        chosen.clear();
        if branch(&mg, all, k, budget, &mut chosen) {
            return CoverCertificate::build(g, k, chosen, true);
        }
    }
    CoverCertificate::build(g, k, greedy, true)
}

fn branch(mg: &MaskGraph, alive: u64, k: usize, budget: usize, chosen: &mut Vec<usize>) -> bool {
    let Some(mut witness) = mg.find_path(alive, k) else {
        return true;
    };
    if budget == 0 || mg.disjoint_paths(alive, k) > budget {
        return false;
    }
    witness.sort_unstable();
    for v in witness {
        chosen.push(v);
        if branch(mg, alive & !(1u64 << v), k, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Repeatedly deletes the highest-degree vertex (lowest index on ties) of
/// the first `P_k` found.
fn greedy_cover(mg: &MaskGraph, mut alive: u64, k: usize) -> Vec<usize> {
    let mut cover = Vec::new();
    while let Some(w) = mg.find_path(alive, k) {
        let v = *w.iter().min_by_key(|&&v| (std::cmp::Reverse(mg.degree_in(v, alive)), v)).expect("non-empty witness");
        alive &= !(1u64 << v);
        cover.push(v);
    }
    cover
}

/// Optimal k-path vertex cover of a forest in linear time.
///
/// Each component is rooted at its smallest vertex and processed in
/// post-order. `h(v)` is the order of the longest uncovered downward chain
/// starting at `v`; with `h1 >= h2` the two largest child values (0 when
/// absent), `v` is selected and `h(v) = 0` whenever `h1 + h2 + 1 >= k`,
/// otherwise `h(v) = h1 + 1`.
pub fn psi_tree_exact(f: &Graph, k: usize) -> Result<CoverCertificate> {
    if k < 2 {
        return Err(Error::InvalidK { k, reason: "path order must be at least 2" });
    }
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let cover = tree_cover(f, k);
    let removed = indicator(f.n(), &cover)?;
    let residual = residual_longest_path(f, &removed);
    debug_assert!(find_path_avoiding(f, k, &removed).is_none());
    Ok(CoverCertificate { k, cover, optimal: true, residual_longest_path: residual })
}

/// The selection rule of [`psi_tree_exact`] without the input checks.
pub(crate) fn tree_cover(f: &Graph, k: usize) -> Vec<usize> {
    let n = f.n();
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in f.neighbors(u) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
    }
    let mut top = vec![(0usize, 0usize); n];
    let mut height = vec![0usize; n];
    let mut selected = Vec::new();
    for &v in order.iter().rev() {
        let (h1, h2) = top[v];
        if h1 + h2 + 1 >= k {
            selected.push(v);
            height[v] = 0;
        } else {
            height[v] = h1 + 1;
        }
        let p = parent[v];
        if p != usize::MAX {
            let h = height[v];
            let t = &mut top[p];
            if h > t.0 {
                *t = (h, t.0);
            } else if h > t.1 {
                t.1 = h;
            }
        }
    }
    selected.sort_unstable();
    selected
}

/// Independence number, `n - ψ_2`.
pub fn alpha_exact(g: &Graph) -> Result<usize> {
    Ok(g.n() - psi_exact(g, 2)?.size())
}

/// Dissociation number, `n - ψ_3`.
pub fn diss_exact(g: &Graph) -> Result<usize> {
    Ok(g.n() - psi_exact(g, 3)?.size())
}

pub fn forest_number_exact(g: &Graph) -> Result<(usize, Vec<usize>)> {
    forest_number_with_cap(g, FOREST_CAP)
}

/// Largest vertex set inducing a forest: sizes are tried downwards and the
/// sets of one size in increasing bitmask order, so the witness is the
/// numerically smallest maximum set.
pub fn forest_number_with_cap(g: &Graph, cap: usize) -> Result<(usize, Vec<usize>)> {
    check_cap(g, cap, "forest number")?;
    let n = g.n();
    let mg = MaskGraph::new(g).expect("capped at 64");
    let limit = bits::full(n);
    for size in (0..=n).rev() {
        if size == 0 {
            return Ok((0, Vec::new()));
        }
        // Gosper's hack over u128 so the carry out of bit 63 is representable
        let mut set: u128 = bits::full(size) as u128;
        while set <= limit as u128 {
            if mg.is_forest(set as u64) {
                return Ok((size, bits::to_vec(set as u64)));
            }
            let low = set & set.wrapping_neg();
            let ripple = set + low;
            set = (((ripple ^ set) >> 2) / low) | ripple;
        }
    }
    unreachable!("size 0 returns")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        generate_family(&s.parse::<FamilySpec>().unwrap(), 0).unwrap()
    }

    /// Smallest cover by trying every subset in order of size.
    fn brute_psi(g: &Graph, k: usize) -> usize {
        let n = g.n();
        (0..=n)
            .find(|&s| {
                (0u64..1 << n)
                    .filter(|m| m.count_ones() as usize == s)
                    .any(|m| is_cover(g, k, &bits::to_vec(m)).unwrap().is_valid())
            })
            .unwrap()
    }

    #[test]
    fn named_values() {
        assert_eq!(psi_exact(&fam("complete_minus_pm(6)"), 3).unwrap().size(), 4);
        assert_eq!(psi_exact(&fam("path(7)"), 3).unwrap().size(), 2);
        assert_eq!(psi_exact(&fam("path(10)"), 4).unwrap().size(), 2);
        assert_eq!(psi_exact(&fam("cycle(5)"), 4).unwrap().size(), 2);
        assert_eq!(psi_exact(&fam("petersen"), 3).unwrap().size(), 4);
    }

    #[test]
    fn certificate_fields() {
        let c = psi_exact(&fam("petersen"), 3).unwrap();
        assert!(c.optimal);
        assert!(c.residual_longest_path <= 2);
        assert!(psi_exact(&fam("path(3)"), 1).is_err());
        assert!(matches!(psi_exact(&fam("path(25)"), 3), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn brute_force_agreement() {
        for s in ["cycle(5)", "complete(4)", "star(5)", "petersen", "octahedron", "cube"] {
            let g = fam(s);
            for k in 2..=5 {
                if g.n() <= 10 {
                    assert_eq!(psi_exact(&g, k).unwrap().size(), brute_psi(&g, k), "{s} k={k}");
                }
            }
        }
    }

    #[test]
    fn tree_algorithm() {
        let c = psi_tree_exact(&fam("path(6)"), 3).unwrap();
        assert_eq!(c.size(), 2);
        assert_eq!(psi_tree_exact(&fam("star(5)"), 3).unwrap().cover, vec![0]);
        assert_eq!(psi_tree_exact(&fam("empty(4)"), 3).unwrap().size(), 0);
        assert_eq!(psi_tree_exact(&fam("cycle(4)"), 3), Err(Error::NotAForest));
        assert_eq!(psi_tree_exact(&fam("star(5)"), 3).unwrap().size(), brute_psi(&fam("star(5)"), 3));
    }

    #[test]
    fn alpha_and_dissociation() {
        assert_eq!(alpha_exact(&fam("cycle(5)")).unwrap(), 2);
        assert_eq!(diss_exact(&fam("cycle(5)")).unwrap(), 3);
        assert_eq!(alpha_exact(&fam("complete(4)")).unwrap(), 1);
        assert_eq!(diss_exact(&fam("complete(4)")).unwrap(), 2);
        assert_eq!(diss_exact(&fam("petersen")).unwrap(), 6);
    }

    #[test]
    fn forest_numbers() {
        assert_eq!(forest_number_exact(&fam("random_tree(9)")).unwrap().0, 9);
        assert_eq!(forest_number_exact(&fam("cycle(5)")).unwrap().0, 4);
        let (a, w) = forest_number_exact(&fam("octahedron")).unwrap();
        assert_eq!(a, 3);
        assert!(fam("octahedron").induced(&w).is_forest());
        assert_eq!(forest_number_exact(&Graph::empty(0)).unwrap().0, 0);
        assert_eq!(forest_number_exact(&fam("complete(6)")).unwrap().0, 2);
    }
}
