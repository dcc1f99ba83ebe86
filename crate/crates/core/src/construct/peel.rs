//! Peeling algorithms: repeatedly move a maximum-degree vertex into the
//! cover, then finish the sparse remainder with a base algorithm.

use super::{finish, lift, require_k, AlgorithmResult, Residual, TraceEvent};
use crate::bounds::{pair_step, FeasiblePair};
use crate::error::{Error, Result};
use crate::{int, ratio, Graph, Rational};
use std::fmt;
use std::str::FromStr;

/// Cover of a graph with `Δ ≤ 2`: every `k`-th vertex along each path,
/// vertices `0, k, 2k, ...` along each cycle of order at least `k`.
pub(crate) fn low_degree_picks(g: &Graph, k: usize) -> Vec<usize> {
    let mut cover = Vec::new();
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        let cycle = edges == comp.len();
        let start = if cycle { comp[0] } else { *comp.iter().find(|&&v| g.degree(v) <= 1).expect("path end") };
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while order.len() < comp.len() {
            let next = *g.neighbors(cur).iter().find(|&&w| w != prev && w != start).expect("walk continues");
            order.push(next);
            prev = cur;
            cur = next;
        }
        let len = order.len();
        if cycle {
            cover.extend((0..len.div_ceil(k)).map(|i| order[i * k]));
        } else {
            cover.extend((k - 1..len).step_by(k).map(|i| order[i]));
        }
    }
    cover
}

/// Paths and cycles: `⌊n_c/k⌋` picks per path, `⌈n_c/k⌉` per cycle of order
/// at least `k`. Guarantee `min(2n, 2m)/(k+1)`.
pub fn cover_low_degree(g: &Graph, k: usize) -> Result<AlgorithmResult> {
    require_k(k, 3)?;
    if g.max_degree() > 2 {
        return Err(Error::Precondition(format!("maximum degree {} exceeds 2", g.max_degree())));
    }
    let value = ratio(2 * g.n().min(g.m()) as i64, k as i64 + 1);
    let cover = low_degree_picks(g, k);
    finish(g, k, "low_degree", cover, "2·min(n,m)/(k+1)".into(), value, true, vec![])
}

fn edge_peel(g: &Graph) -> (Vec<usize>, Vec<TraceEvent>) {
    Residual::new(g).peel_while(g, |_, _, d| d >= 2)
}

/// Remove maximum-degree vertices while `Δ ≥ 2`. Guarantee `m/2`.
pub fn cover_edge_peel_psi3(g: &Graph) -> Result<AlgorithmResult> {
    let (cover, trace) = edge_peel(g);
    finish(g, 3, "edge_peel", cover, "m/2".into(), ratio(g.m() as i64, 2), true, trace)
}

/// Local search from `(V, ∅)`: flip the lowest-index vertex with two or more
/// neighbours on its own side; every flip enlarges the cut. Returns the
/// smaller side.
fn subcubic_split(g: &Graph) -> (Vec<usize>, Vec<TraceEvent>) {
    let n = g.n();
    let mut side = vec![false; n];
    let mut cut = 0u64;
    let mut trace = Vec::new();
    loop {
        let same = |v: usize, side: &[bool]| g.neighbors(v).iter().filter(|&&w| side[w] == side[v]).count();
        let Some(v) = (0..n).find(|&v| same(v, &side) >= 2) else { break };
        let s = same(v, &side) as u64;
        cut = cut + s - (g.degree(v) as u64 - s);
        side[v] = !side[v];
        trace.push(TraceEvent::Move { vertex: v, to_b: side[v], value: cut });
    }
    let b: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    let a: Vec<usize> = (0..n).filter(|&v| !side[v]).collect();
    (if b.len() <= a.len() { b } else { a }, trace)
}

/// Cut-improving local search for `Δ ≤ 3`; both classes induce `Δ ≤ 1`.
/// Guarantee `n/2`.
pub fn cover_subcubic_psi3(g: &Graph) -> Result<AlgorithmResult> {
    if g.max_degree() > 3 {
        return Err(Error::Precondition(format!("maximum degree {} exceeds 3", g.max_degree())));
    }
    let (cover, trace) = subcubic_split(g);
    finish(g, 3, "subcubic", cover, "n/2".into(), ratio(g.n() as i64, 2), true, trace)
}

/// Cover of a subcubic graph: the smaller of the edge-peel and local-search
/// covers, edge peel on ties.
fn subcubic_best(h: &Graph, trace: &mut Vec<TraceEvent>) -> Vec<usize> {
    let (a, _) = edge_peel(h);
    let (b, _) = subcubic_split(h);
    trace.push(TraceEvent::Option { label: "edge_peel".into(), size: a.len() });
    trace.push(TraceEvent::Option { label: "subcubic".into(), size: b.len() });
    if a.len() <= b.len() {
        a
    } else {
        b
    }
}

fn nm4_cover(g: &Graph) -> (Vec<usize>, Vec<TraceEvent>) {
    let mut res = Residual::new(g);
    let (mut cover, mut trace) = res.peel_while(g, |_, _, d| d >= 4);
    let (h, map) = res.graph(g);
    let base = subcubic_best(&h, &mut trace);
    cover.extend(lift(&map, &base));
    (cover, trace)
}

/// Peel while `Δ ≥ 4`, then the better of the two subcubic covers.
/// Guarantee `(n+m)/4`.
pub fn cover_nm4_psi3(g: &Graph) -> Result<AlgorithmResult> {
    let (cover, trace) = nm4_cover(g);
    finish(g, 3, "nm4", cover, "(n+m)/4".into(), ratio((g.n() + g.m()) as i64, 4), true, trace)
}

fn four_nm9_cover(g: &Graph) -> (Vec<usize>, Vec<TraceEvent>) {
    let mut res = Residual::new(g);
    let (mut cover, mut trace) = res.peel_while(g, |n, m, _| m > 2 * n);
    let (h, map) = res.graph(g);
    let (base, t) = nm4_cover(&h);
    trace.extend(t);
    cover.extend(lift(&map, &base));
    (cover, trace)
}

/// Peel while `m > 2n`, then the `(n+m)/4` algorithm. The reported value
/// `(4n+m)/9` is not certified: the remainder is only bounded by `(n+m)/4`.
pub fn cover_4nm9_psi3(g: &Graph) -> Result<AlgorithmResult> {
    let (cover, trace) = four_nm9_cover(g);
    finish(g, 3, "4nm9", cover, "(4n+m)/9".into(), ratio(4 * g.n() as i64 + g.m() as i64, 9), false, trace)
}

fn psi4_cover(g: &Graph) -> (Vec<usize>, Vec<TraceEvent>) {
    let mut res = Residual::new(g);
    let (mut cover, trace) = res.peel_while(g, |_, _, d| d >= 3);
    let (h, map) = res.graph(g);
    cover.extend(lift(&map, &low_degree_picks(&h, 4)));
    (cover, trace)
}

/// Peel while `Δ ≥ 3`, then cover paths and cycles. Guarantee `(n+3m)/10`.
pub fn cover_psi4(g: &Graph) -> Result<AlgorithmResult> {
    let (cover, trace) = psi4_cover(g);
    finish(g, 4, "psi4", cover, "(n+3m)/10".into(), ratio(g.n() as i64 + 3 * g.m() as i64, 10), true, trace)
}

/// Algorithm realising a feasible pair, usable as the finishing step of
/// [`cover_pair_peel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairBase {
    /// `(0, 1/2)`, `k = 3`.
    EdgePeel,
    /// `(1/4, 1/4)`, `k = 3`.
    Nm4,
    /// `(4/9, 1/9)`, `k = 3`, uncertified.
    FourNm9,
    /// `(1/10, 3/10)`, `k = 4`.
    Psi4,
    /// `pair_step(pair, x)` realised by peeling and then running `inner`.
    Peel { pair: FeasiblePair, x: usize, inner: Box<PairBase> },
}

impl PairBase {
    pub fn pair(&self) -> Result<FeasiblePair> {
        let leaf = |a: Rational, b: Rational, k: usize, name: &str| FeasiblePair::new(k, a, b, name);
        match self {
            PairBase::EdgePeel => leaf(int(0), ratio(1, 2), 3, "edge_peel"),
            PairBase::Nm4 => leaf(ratio(1, 4), ratio(1, 4), 3, "nm4"),
            PairBase::FourNm9 => leaf(ratio(4, 9), ratio(1, 9), 3, "4nm9"),
            PairBase::Psi4 => leaf(ratio(1, 10), ratio(3, 10), 4, "psi4"),
            PairBase::Peel { pair, x, .. } => pair_step(pair, *x),
        }
    }

    pub fn path_order(&self) -> usize {
        match self {
            PairBase::Psi4 => 4,
            PairBase::Peel { inner, .. } => inner.path_order(),
            _ => 3,
        }
    }

    pub fn certified(&self) -> bool {
        match self {
            PairBase::FourNm9 => false,
            PairBase::Peel { inner, .. } => inner.certified(),
            _ => true,
        }
    }

    /// Nests `root` under successive steps `xs`.
    pub fn chain(root: PairBase, xs: &[usize]) -> Result<PairBase> {
        let mut cur = root;
        for &x in xs {
            let pair = cur.pair()?;
            pair_step(&pair, x)?;
            cur = PairBase::Peel { pair, x, inner: Box::new(cur) };
        }
        Ok(cur)
    }

    fn run(&self, g: &Graph) -> (Vec<usize>, Vec<TraceEvent>) {
        match self {
            PairBase::EdgePeel => edge_peel(g),
            PairBase::Nm4 => nm4_cover(g),
            PairBase::FourNm9 => four_nm9_cover(g),
            PairBase::Psi4 => psi4_cover(g),
            PairBase::Peel { x, inner, .. } => peel_then(g, *x, inner),
        }
    }
}

impl fmt::Display for PairBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut xs = Vec::new();
        let mut cur = self;
        while let PairBase::Peel { x, inner, .. } = cur {
            xs.push(x.to_string());
            cur = inner;
        }
        let root = match cur {
            PairBase::EdgePeel => "edge_peel",
            PairBase::Nm4 => "nm4",
            PairBase::FourNm9 => "4nm9",
            PairBase::Psi4 => "psi4",
            PairBase::Peel { .. } => unreachable!("loop strips peel layers"),
        };
        if xs.is_empty() {
            f.write_str(root)
        } else {
            xs.reverse();
            write!(f, "{root}:{}", xs.join(","))
        }
    }
}

/// `edge_peel`, `nm4`, `4nm9`, `psi4`, optionally followed by `:x1,x2,...`
/// to nest recursion steps.
impl FromStr for PairBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (root, xs) = match s.split_once(':') {
            Some((r, xs)) => (r, Some(xs)),
            None => (s, None),
        };
        let root = match root.trim() {
            "edge_peel" => PairBase::EdgePeel,
            "nm4" => PairBase::Nm4,
            "4nm9" => PairBase::FourNm9,
            "psi4" => PairBase::Psi4,
            other => return Err(Error::UnknownName(format!("pair base `{other}`"))),
        };
        let xs: Vec<usize> = match xs {
            None => Vec::new(),
            Some(list) => list
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::UnknownName(format!("step `{t}` in `{s}`"))))
                .collect::<Result<_>>()?,
        };
        PairBase::chain(root, &xs)
    }
}

fn peel_then(g: &Graph, x: usize, base: &PairBase) -> (Vec<usize>, Vec<TraceEvent>) {
    let mut res = Residual::new(g);
    let (mut cover, mut trace) = res.peel_while(g, |n, m, _| 2 * m > x * n);
    let (h, map) = res.graph(g);
    let (inner, t) = base.run(&h);
    trace.extend(t);
    cover.extend(lift(&map, &inner));
    (cover, trace)
}

/// Peels while `m > xn/2` (so some vertex has degree at least `x+1`), then
/// runs `base`, which must realise `pair`. Guarantee `a'n + b'm` for the
/// stepped pair; certified iff the base is.
pub fn cover_pair_peel(g: &Graph, k: usize, pair: &FeasiblePair, x: usize, base: &PairBase) -> Result<AlgorithmResult> {
    require_k(k, base.path_order())?;
    if !base.pair()?.same_values(pair) {
        return Err(Error::PairConstraint(format!("base {base} realises {}, not {pair}", base.pair()?)));
    }
    let next = pair_step(pair, x)?;
    let (cover, trace) = peel_then(g, x, base);
    let name = format!("({})n + ({})m", next.a, next.b);
    finish(g, k, "pair_peel", cover, name, next.eval(g.n(), g.m()), base.certified(), trace)
}
