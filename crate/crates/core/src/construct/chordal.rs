//! Covers for chordal graphs, and the forest-complement cover.

use super::{finish, lift, require_k, AlgorithmResult, TraceEvent};
use crate::bounds::{clique_coefficient, colour_class_coefficient};
use crate::chordal::{chordal_color, clique_number, clique_tree, is_chordal, nice_decomposition};
use crate::error::{Error, Result};
use crate::exact::{forest_number_exact, tree_cover};
use crate::graph::indicator;
use crate::{int, ratio, Graph};

fn require_chordal(g: &Graph) -> Result<()> {
    if is_chordal(g) {
        Ok(())
    } else {
        Err(Error::NotChordal)
    }
}

/// Keeps the two largest colour classes of an optimal colouring minus an
/// optimal cover of the forest they induce.
pub fn cover_chordal_classes(g: &Graph, k: usize) -> Result<AlgorithmResult> {
    require_k(k, 2)?;
    require_chordal(g)?;
    let color = chordal_color(g)?;
    let chi = color.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut sizes: Vec<(usize, usize)> = (0..chi).map(|c| (color.iter().filter(|&&x| x == c).count(), c)).collect();
    sizes.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    let kept: Vec<usize> = sizes.iter().take(2).map(|&(_, c)| c).collect();
    let x: Vec<usize> = (0..g.n()).filter(|&v| kept.contains(&color[v])).collect();
    let f = g.induced(&x);
    if !f.is_forest() {
        return Err(Error::Internal("two colour classes of a chordal graph induced a cycle".into()));
    }
    let mut cover: Vec<usize> = (0..g.n()).filter(|&v| !kept.contains(&color[v])).collect();
    cover.extend(lift(&x, &tree_cover(&f, k)));
    let c = colour_class_coefficient(k, chi.max(2));
    let value = &c * int(g.n() as i64);
    finish(g, k, "chordal_classes", cover, format!("({c})n"), value, true, vec![])
}

struct Decomp {
    k: usize,
    omega: usize,
    threshold: usize,
    certified: bool,
    trace: Vec<TraceEvent>,
}

impl Decomp {
    /// Cover of `h` (local indices).
    fn solve(&mut self, h: &Graph) -> Result<Vec<usize>> {
        let mut cover = Vec::new();
        for comp in h.components() {
            let part = h.induced(&comp);
            let local = if comp.len() <= self.threshold { self.base(&part) } else { self.split(&part)? };
            cover.extend(lift(&comp, &local));
        }
        Ok(cover)
    }

    /// `n - k + 1` highest-index vertices; fewer than `k` remain.
    fn base(&mut self, h: &Graph) -> Vec<usize> {
        let n = h.n();
        let picks = (n + 1).saturating_sub(self.k);
        self.trace.push(TraceEvent::Base { n, picks });
        (n - picks..n).collect()
    }

    /// Connected `h` with more than `ω + k - 1` vertices.
    fn split(&mut self, h: &Graph) -> Result<Vec<usize>> {
        let t = self.threshold;
        let nd = nice_decomposition(&clique_tree(h)?)?;
        let mut x = nd.deepest_leaf();
        while nd.subtree_size[x] < t {
            x = nd.nodes[x].parent.ok_or_else(|| Error::Internal("root below threshold".into()))?;
        }
        while let Some(&c) = nd.nodes[x].children.iter().find(|&&c| nd.subtree_size[c] >= t) {
            x = c;
        }
        let bag = nd.nodes[x].bag.clone();
        let vx = nd.subtree_vertices(x);
        let inner: Vec<usize> = vx.iter().copied().filter(|v| bag.binary_search(v).is_err()).collect();
        let inner_cover = lift(&inner, &self.solve(&h.induced(&inner))?);
        let step_cost = bag.len() + inner_cover.len();
        let within_ratio = t * step_cost <= self.omega * vx.len();
        self.certified &= within_ratio;
        self.trace.push(TraceEvent::Select { bag: bag.clone(), subtree_size: vx.len(), step_cost, within_ratio });
        let mut cover = bag;
        cover.extend(inner_cover);
        let removed = indicator(h.n(), &vx)?;
        let (rest, map) = h.without(&removed);
        cover.extend(lift(&map, &self.solve(&rest)?));
        Ok(cover)
    }
}

/// Repeatedly removes a lowest subtree with at least `ω + k - 1` vertices,
/// paying its top bag plus covers of the pieces it separates. Certified
/// when each step costs at most `ω/(ω+k-1)` per removed vertex.
pub fn cover_chordal_decomp(g: &Graph, k: usize) -> Result<AlgorithmResult> {
    require_k(k, 3)?;
    require_chordal(g)?;
    let omega = clique_number(g)?;
    let mut d = Decomp { k, omega, threshold: omega + k - 1, certified: true, trace: Vec::new() };
    let cover = d.solve(g)?;
    let c = clique_coefficient(k, omega);
    let value = &c * int(g.n() as i64);
    finish(g, k, "chordal_decomp", cover, format!("({c})n"), value, d.certified, d.trace)
}

/// Everything outside an induced forest `S`, plus an optimal cover of
/// `G[S]`. Without `S`, a maximum induced forest is computed exactly.
pub fn cover_from_forest(g: &Graph, k: usize, s: Option<&[usize]>) -> Result<AlgorithmResult> {
    require_k(k, 2)?;
    let s: Vec<usize> = match s {
        Some(s) => {
            let mut s = s.to_vec();
            s.sort_unstable();
            s.dedup();
            indicator(g.n(), &s)?;
            s
        }
        None => forest_number_exact(g)?.1,
    };
    let f = g.induced(&s);
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let keep = indicator(g.n(), &s)?;
    let mut cover: Vec<usize> = (0..g.n()).filter(|&v| !keep[v]).collect();
    cover.extend(lift(&s, &tree_cover(&f, k)));
    let value = int(g.n() as i64) - ratio(k as i64 - 1, k as i64) * int(s.len() as i64);
    finish(g, k, "forest", cover, "n - (k-1)/k·|S|".into(), value, true, vec![])
}
