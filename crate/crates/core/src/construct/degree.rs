//! Degree-driven covers: Lovász partitions, the bounded-degree recursion,
//! the Δ = 11 halving cover and sampled random orders.

use super::peel::low_degree_picks;
use super::{finish, lift, require_k, AlgorithmResult, TraceEvent};
use crate::bounds::{degree_cap_rate, random_order_threshold};
use crate::error::{Error, Result};
use crate::exact::tree_cover;
use crate::{int, ratio, Graph, Rational};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub const DEFAULT_SAMPLES: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LovaszPartition {
    /// Sorted; induces maximum degree at most `a`.
    pub a_side: Vec<usize>,
    /// Sorted; induces maximum degree at most `b`.
    pub b_side: Vec<usize>,
    pub moves: usize,
    /// `(b+1)e(A) + (a+1)e(B)`, initially and after every move.
    pub potentials: Vec<u64>,
    pub trace: Vec<TraceEvent>,
}

/// Starts from `A = V`, `B = ∅` and moves the lowest-index vertex that has
/// too many neighbours on its own side.
pub fn lovasz_partition(g: &Graph, a: usize, b: usize) -> Result<LovaszPartition> {
    let delta = g.max_degree();
    if delta > a + b + 1 {
        return Err(Error::Precondition(format!("maximum degree {delta} exceeds a + b + 1 = {}", a + b + 1)));
    }
    let n = g.n();
    let mut in_b = vec![false; n];
    // same[v]: neighbours on v's own side
    let mut same: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let cap = |in_b: bool| if in_b { b } else { a };
    let (wa, wb) = (b as u64 + 1, a as u64 + 1);
    let mut potential = wa * g.m() as u64;
    let mut potentials = vec![potential];
    let mut trace = Vec::new();
    let mut bad: BTreeSet<usize> = (0..n).filter(|&v| same[v] > a).collect();
    while let Some(v) = bad.pop_first() {
        let before = same[v];
        let after = g.degree(v) - before;
        if in_b[v] {
            potential = potential + wa * after as u64 - wb * before as u64;
        } else {
            potential = potential + wb * after as u64 - wa * before as u64;
        }
        in_b[v] = !in_b[v];
        same[v] = after;
        for &w in g.neighbors(v) {
            if in_b[w] == in_b[v] {
                same[w] += 1;
            } else {
                same[w] -= 1;
            }
            if same[w] > cap(in_b[w]) {
                bad.insert(w);
            } else {
                bad.remove(&w);
            }
        }
        if same[v] > cap(in_b[v]) {
            bad.insert(v);
        }
        potentials.push(potential);
        trace.push(TraceEvent::Move { vertex: v, to_b: in_b[v], value: potential });
    }
    Ok(LovaszPartition {
        a_side: (0..n).filter(|&v| !in_b[v]).collect(),
        b_side: (0..n).filter(|&v| in_b[v]).collect(),
        moves: potentials.len() - 1,
        potentials,
        trace,
    })
}

/// Cover of a graph with maximum degree at most `cap`, for `k ≥ 3`.
fn bounded_cover(g: &Graph, k: usize, cap: usize, trace: &mut Vec<TraceEvent>) -> Result<Vec<usize>> {
    match cap {
        0 | 1 => Ok(Vec::new()),
        2 => Ok(low_degree_picks(g, k)),
        3 => bounded_cover(g, k, 4, trace),
        c if c % 2 == 0 => {
            let p = lovasz_partition(g, c - 2, 1)?;
            trace.push(TraceEvent::Partition {
                size_a: p.a_side.len(),
                size_b: p.b_side.len(),
                cap_a: c - 2,
                cap_b: 1,
            });
            let t_a = lift(&p.a_side, &bounded_cover(&g.induced(&p.a_side), k, c - 2, trace)?);
            let with_b = p.b_side.len() + t_a.len();
            trace.push(TraceEvent::Option { label: "A".into(), size: p.a_side.len() });
            trace.push(TraceEvent::Option { label: "B+T_A".into(), size: with_b });
            if p.a_side.len() <= with_b {
                Ok(p.a_side)
            } else {
                let mut out = p.b_side;
                out.extend(t_a);
                Ok(out)
            }
        }
        c => {
            let a = (c - 1).div_ceil(4);
            let b = (c - 1) / 2 - a;
            let p = lovasz_partition(g, 2 * a, 2 * b)?;
            trace.push(TraceEvent::Partition {
                size_a: p.a_side.len(),
                size_b: p.b_side.len(),
                cap_a: 2 * a,
                cap_b: 2 * b,
            });
            let t_a = lift(&p.a_side, &bounded_cover(&g.induced(&p.a_side), k, 2 * a, trace)?);
            let t_b = lift(&p.b_side, &bounded_cover(&g.induced(&p.b_side), k, 2 * b, trace)?);
            let first = t_a.len() + p.b_side.len();
            let second = t_b.len() + p.a_side.len();
            trace.push(TraceEvent::Option { label: "T_A+B".into(), size: first });
            trace.push(TraceEvent::Option { label: "T_B+A".into(), size: second });
            let (mut out, rest) = if first <= second { (t_a, p.b_side) } else { (t_b, p.a_side) };
            out.extend(rest);
            Ok(out)
        }
    }
}

/// Recursive Lovász-partition cover for `Δ = 2` or `Δ ≥ 4`; empty when
/// `Δ ≤ 1`.
pub fn cover_bounded_degree(g: &Graph, k: usize) -> Result<AlgorithmResult> {
    require_k(k, 3)?;
    let delta = g.max_degree();
    if delta == 3 {
        return Err(Error::Precondition("maximum degree 3 is outside the bounded-degree recursion".into()));
    }
    let mut trace = Vec::new();
    let cover = bounded_cover(g, k, delta, &mut trace)?;
    let rate = degree_cap_rate(k, delta);
    let value = &rate * int(g.n() as i64);
    finish(g, k, "bounded_degree", cover, format!("({rate})n"), value, true, trace)
}

/// For odd `Δ = 2d + 1 ≥ 5`: split into two parts of maximum degree `d`,
/// take the smaller part whole and cover the larger one recursively.
pub fn cover_halving(g: &Graph, k: usize) -> Result<AlgorithmResult> {
    require_k(k, 3)?;
    let delta = g.max_degree();
    if delta.is_multiple_of(2) || delta < 5 {
        return Err(Error::Precondition(format!("halving needs odd Δ ≥ 5, got {delta}")));
    }
    let d = delta / 2;
    let p = lovasz_partition(g, d, d)?;
    let mut trace = p.trace;
    let (small, large) = if p.a_side.len() <= p.b_side.len() { (p.a_side, p.b_side) } else { (p.b_side, p.a_side) };
    trace.push(TraceEvent::Partition { size_a: small.len(), size_b: large.len(), cap_a: d, cap_b: d });
    let t = lift(&large, &bounded_cover(&g.induced(&large), k, d, &mut trace)?);
    let n = int(g.n() as i64);
    let (name, value, certified) = if delta == 11 && k >= 6 {
        let c = ratio(3 * k as i64 + 5, 4 * k as i64 + 4);
        (format!("({c})n"), c * n, true)
    } else {
        let rate = degree_cap_rate(k, d);
        let v = int(small.len() as i64) + &rate * int(large.len() as i64);
        (format!("|A| + ({rate})|B|"), v, false)
    };
    let mut cover = small;
    cover.extend(t);
    finish(g, k, "halving", cover, name, value, certified, trace)
}

/// `1` for no earlier neighbour, `(k-2)/(k-1)` for one, `0` otherwise.
fn weights(g: &Graph, k: usize, order: &[usize]) -> Vec<Rational> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..g.n())
        .map(|v| match g.neighbors(v).iter().filter(|&&w| pos[w] < pos[v]).count() {
            0 => int(1),
            1 => ratio(k as i64 - 2, k as i64 - 1),
            _ => Rational::zero(),
        })
        .collect()
}

/// Total weight of `order`.
pub fn order_weight(g: &Graph, k: usize, order: &[usize]) -> Rational {
    weights(g, k, order).into_iter().sum()
}

/// Positive-weight vertices induce a forest with at most one weight-1 vertex
/// per component; keeping that forest minus an optimal tree cover leaves a
/// cover of size at most `n - weight`.
fn order_cover(g: &Graph, k: usize, order: &[usize]) -> Result<(Vec<usize>, Rational)> {
    let w = weights(g, k, order);
    let y: Vec<usize> = (0..g.n()).filter(|&v| !w[v].is_zero()).collect();
    let f = g.induced(&y);
    if !f.is_forest() {
        return Err(Error::Internal("positive-weight vertices contain a cycle".into()));
    }
    for comp in f.components() {
        if comp.iter().filter(|&&i| w[y[i]] == int(1)).count() > 1 {
            return Err(Error::Internal("a forest component has two weight-1 vertices".into()));
        }
    }
    let mut keep = vec![false; g.n()];
    for &v in &y {
        keep[v] = true;
    }
    for v in lift(&y, &tree_cover(&f, k)) {
        keep[v] = false;
    }
    let total = w.into_iter().sum();
    Ok(((0..g.n()).filter(|&v| !keep[v]).collect(), total))
}

/// Samples random orders until one reaches the expected weight `E`, at most
/// `samples` times, and returns the smallest cover seen. The guarantee
/// `n - E` is certified once some sample met the threshold.
pub fn cover_random_order(g: &Graph, k: usize, seed: u64, samples: usize) -> Result<AlgorithmResult> {
    require_k(k, 3)?;
    if g.has_isolated_vertex() {
        return Err(Error::Precondition("random-order cover needs a graph without isolated vertices".into()));
    }
    let threshold = random_order_threshold(g, k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..g.n()).collect();
    let mut best: Option<Vec<usize>> = None;
    let mut met = false;
    let mut trace = Vec::new();
    for index in 0..samples.max(1) {
        order.shuffle(&mut rng);
        let (cover, weight) = order_cover(g, k, &order)?;
        let hit = weight >= threshold;
        trace.push(TraceEvent::Sample {
            index,
            weight: weight.to_string(),
            threshold_met: hit,
            cover_size: cover.len(),
        });
        if best.as_ref().is_none_or(|b| cover.len() < b.len()) {
            best = Some(cover);
        }
        if hit {
            met = true;
            break;
        }
    }
    let value = int(g.n() as i64) - threshold;
    let cover = best.expect("at least one sample");
    finish(g, k, "random_order", cover, "n - (2k-3)/(k-1)·Σ1/(1+d(v))".into(), value, met, trace)
}
