//! Constructive covers. Each algorithm returns a cover that has passed
//! [`is_cover`](crate::paths::is_cover), the bound it guarantees, and whether
//! that guarantee is fully backed by the construction.

mod chordal;
mod degree;
mod peel;

pub use self::chordal::{cover_chordal_classes, cover_chordal_decomp, cover_from_forest};
pub use degree::{
    cover_bounded_degree, cover_halving, cover_random_order, lovasz_partition, order_weight, LovaszPartition,
    DEFAULT_SAMPLES,
};
pub use peel::{
    cover_4nm9_psi3, cover_edge_peel_psi3, cover_low_degree, cover_nm4_psi3, cover_pair_peel, cover_psi4,
    cover_subcubic_psi3, PairBase,
};

use crate::bounds::{degree_cap_rate, parse_pair, FeasiblePair};
use crate::error::{Error, Result};
use crate::paths::{is_cover, CoverCheck};
use crate::{int, Graph, Rational};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    /// A vertex moved into the cover; counts refer to the remaining graph.
    Peel {
        vertex: usize,
        degree: usize,
        n_after: usize,
        m_after: usize,
    },
    /// Local-search move; `value` is the potential after the move.
    Move {
        vertex: usize,
        to_b: bool,
        value: u64,
    },
    Partition {
        size_a: usize,
        size_b: usize,
        cap_a: usize,
        cap_b: usize,
    },
    /// A candidate cover considered when taking a minimum.
    Option {
        label: String,
        size: usize,
    },
    Sample {
        index: usize,
        weight: String,
        threshold_met: bool,
        cover_size: usize,
    },
    /// Chordal decomposition step: bag `S_x` taken, `|V_x|` vertices removed.
    Select {
        bag: Vec<usize>,
        subtree_size: usize,
        step_cost: usize,
        within_ratio: bool,
    },
    /// Small piece solved directly.
    Base {
        n: usize,
        picks: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgorithmResult {
    pub algorithm: String,
    pub k: usize,
    pub cover: Vec<usize>,
    pub guarantee_name: String,
    #[serde(serialize_with = "crate::ser::rational")]
    pub guarantee_value: Rational,
    pub guarantee_certified: bool,
    pub trace: Vec<TraceEvent>,
}

impl AlgorithmResult {
    pub fn size(&self) -> usize {
        self.cover.len()
    }

    /// `|cover| ≤ guarantee_value`, compared exactly.
    pub fn meets_guarantee(&self) -> bool {
        int(self.cover.len() as i64) <= self.guarantee_value
    }

    /// Number of peel events in the trace.
    pub fn peel_count(&self) -> usize {
        self.trace.iter().filter(|e| matches!(e, TraceEvent::Peel { .. })).count()
    }
}

/// Validates and packages a cover; an invalid cover is an internal error.
#[allow(clippy::too_many_arguments)]
pub(crate) fn finish(
    g: &Graph,
    k: usize,
    algorithm: &str,
    mut cover: Vec<usize>,
    guarantee_name: String,
    guarantee_value: Rational,
    guarantee_certified: bool,
    trace: Vec<TraceEvent>,
) -> Result<AlgorithmResult> {
    cover.sort_unstable();
    cover.dedup();
    if let CoverCheck::Uncovered(w) = is_cover(g, k, &cover)? {
        return Err(Error::Internal(format!("{algorithm} left the path {:?} uncovered", w.vertices())));
    }
    Ok(AlgorithmResult {
        algorithm: algorithm.to_string(),
        k,
        cover,
        guarantee_name,
        guarantee_value,
        guarantee_certified,
        trace,
    })
}

pub(crate) fn lift(map: &[usize], cover: &[usize]) -> Vec<usize> {
    cover.iter().map(|&v| map[v]).collect()
}

pub(crate) fn require_k(k: usize, min: usize) -> Result<()> {
    if k < min {
        return Err(Error::InvalidK {
            k, reason: if min == 3 { "this algorithm needs k ≥ 3" } else { "k too small" }
        });
    }
    Ok(())
}

/// Alive-vertex bookkeeping for peeling loops.
pub(crate) struct Residual {
    pub removed: Vec<bool>,
    pub deg: Vec<usize>,
    pub n: usize,
    pub m: usize,
}

impl Residual {
    pub fn new(g: &Graph) -> Self {
        Residual { removed: vec![false; g.n()], deg: (0..g.n()).map(|v| g.degree(v)).collect(), n: g.n(), m: g.m() }
    }

    /// Alive vertex of maximum degree, lowest index on ties.
    pub fn max_vertex(&self) -> Option<(usize, usize)> {
        (0..self.deg.len()).filter(|&v| !self.removed[v]).map(|v| (v, self.deg[v])).fold(
            None,
            |best, (v, d)| match best {
                Some((_, bd)) if bd >= d => best,
                _ => Some((v, d)),
            },
        )
    }

    pub fn remove(&mut self, g: &Graph, v: usize) -> TraceEvent {
        let degree = self.deg[v];
        self.removed[v] = true;
        self.n -= 1;
        self.m -= degree;
        for &w in g.neighbors(v) {
            if !self.removed[w] {
                self.deg[w] -= 1;
            }
        }
        TraceEvent::Peel { vertex: v, degree, n_after: self.n, m_after: self.m }
    }

    /// Removes max-degree vertices while `keep_going(n, m, Δ)` holds.
    pub fn peel_while(
        &mut self,
        g: &Graph,
        mut keep_going: impl FnMut(usize, usize, usize) -> bool,
    ) -> (Vec<usize>, Vec<TraceEvent>) {
        let mut peeled = Vec::new();
        let mut trace = Vec::new();
        while let Some((v, d)) = self.max_vertex() {
            if !keep_going(self.n, self.m, d) {
                break;
            }
            peeled.push(v);
            trace.push(self.remove(g, v));
        }
        (peeled, trace)
    }

    pub fn graph(&self, g: &Graph) -> (Graph, Vec<usize>) {
        g.without(&self.removed)
    }
}

/// Algorithm selector used by the CLI and the verification harness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    LowDegree,
    EdgePeel,
    Subcubic,
    Nm4,
    FourNm9,
    Psi4,
    PairPeel { base: PairBase, x: usize },
    BoundedDegree,
    Halving,
    RandomOrder { seed: u64, samples: usize },
    ChordalClasses,
    ChordalDecomp,
    Forest,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::LowDegree => "low_degree",
            Method::EdgePeel => "edge_peel",
            Method::Subcubic => "subcubic",
            Method::Nm4 => "nm4",
            Method::FourNm9 => "4nm9",
            Method::Psi4 => "psi4",
            Method::PairPeel { .. } => "pair_peel",
            Method::BoundedDegree => "bounded_degree",
            Method::Halving => "halving",
            Method::RandomOrder { .. } => "random_order",
            Method::ChordalClasses => "chordal_classes",
            Method::ChordalDecomp => "chordal_decomp",
            Method::Forest => "forest",
        }
    }

    /// Parameter-free methods by name; `pair_peel` and `random_order` get
    /// their parameters from [`Method::with_params`].
    pub const NAMES: [&'static str; 13] = [
        "low_degree",
        "edge_peel",
        "subcubic",
        "nm4",
        "4nm9",
        "psi4",
        "pair_peel",
        "bounded_degree",
        "halving",
        "random_order",
        "chordal_classes",
        "chordal_decomp",
        "forest",
    ];

    pub fn with_params(name: &str, params: &MethodParams) -> Result<Method> {
        Ok(match name {
            "low_degree" => Method::LowDegree,
            "edge_peel" => Method::EdgePeel,
            "subcubic" => Method::Subcubic,
            "nm4" => Method::Nm4,
            "4nm9" => Method::FourNm9,
            "psi4" => Method::Psi4,
            "pair_peel" => {
                let base: PairBase = params.base.as_deref().unwrap_or("4nm9").parse()?;
                if let Some(p) = &params.pair {
                    let given = parse_pair(base.path_order(), p)?;
                    if !given.same_values(&base.pair()?) {
                        return Err(Error::PairConstraint(format!("pair {p} does not match base {base}")));
                    }
                }
                Method::PairPeel { base, x: params.x.ok_or_else(|| Error::Precondition("pair_peel needs x".into()))? }
            }
            "bounded_degree" => Method::BoundedDegree,
            "halving" => Method::Halving,
            "random_order" => Method::RandomOrder { seed: params.seed, samples: params.samples },
            "chordal_classes" => Method::ChordalClasses,
            "chordal_decomp" => Method::ChordalDecomp,
            "forest" => Method::Forest,
            other => return Err(Error::UnknownName(format!("algorithm `{other}`"))),
        })
    }

    pub fn run(&self, g: &Graph, k: usize) -> Result<AlgorithmResult> {
        match self {
            Method::LowDegree => cover_low_degree(g, k),
            Method::EdgePeel => with_k(cover_edge_peel_psi3(g)?, g, k, 3),
            Method::Subcubic => with_k(cover_subcubic_psi3(g)?, g, k, 3),
            Method::Nm4 => with_k(cover_nm4_psi3(g)?, g, k, 3),
            Method::FourNm9 => with_k(cover_4nm9_psi3(g)?, g, k, 3),
            Method::Psi4 => with_k(cover_psi4(g)?, g, k, 4),
            Method::PairPeel { base, x } => cover_pair_peel(g, k, &base.pair()?, *x, base),
            Method::BoundedDegree => cover_bounded_degree(g, k),
            Method::Halving => cover_halving(g, k),
            Method::RandomOrder { seed, samples } => cover_random_order(g, k, *seed, *samples),
            Method::ChordalClasses => cover_chordal_classes(g, k),
            Method::ChordalDecomp => cover_chordal_decomp(g, k),
            Method::Forest => cover_from_forest(g, k, None),
        }
    }

    /// The certified guarantee this method would report on `(G, k)`, when it
    /// is known before running and the preconditions hold.
    pub fn preview(&self, g: &Graph, k: usize) -> Option<Rational> {
        let (n, m, delta) = (g.n() as i64, g.m() as i64, g.max_degree());
        let nr = int(n);
        match self {
            Method::LowDegree if k >= 3 && delta <= 2 => Some(crate::ratio(2 * m.min(n), k as i64 + 1)),
            Method::EdgePeel if k >= 3 => Some(crate::ratio(m, 2)),
            Method::Subcubic if k >= 3 && delta <= 3 => Some(crate::ratio(n, 2)),
            Method::Nm4 if k >= 3 => Some(crate::ratio(n + m, 4)),
            Method::Psi4 if k >= 4 => Some(crate::ratio(n + 3 * m, 10)),
            Method::PairPeel { base, x } if k >= base.path_order() && base.certified() => {
                let p = crate::bounds::pair_step(&base.pair().ok()?, *x).ok()?;
                Some(p.eval(g.n(), g.m()))
            }
            Method::BoundedDegree if k >= 3 && delta != 3 => Some(degree_cap_rate(k, delta) * nr),
            Method::Halving if k >= 6 && delta == 11 => Some(crate::ratio(3 * k as i64 + 5, 4 * k as i64 + 4) * nr),
            Method::ChordalClasses if k >= 2 && crate::chordal::is_chordal(g) => {
                let omega = crate::chordal::clique_number(g).ok()?;
                Some(crate::bounds::colour_class_coefficient(k, omega.max(2)) * nr)
            }
            Method::Forest if k >= 2 => {
                let (a, _) = crate::exact::forest_number_exact(g).ok()?;
                Some(nr - crate::ratio(k as i64 - 1, k as i64) * int(a as i64))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::PairPeel { base, x } => write!(f, "pair_peel[{base}, x={x}]"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::with_params(s, &MethodParams::default())
    }
}

#[derive(Clone, Debug)]
pub struct MethodParams {
    pub seed: u64,
    pub samples: usize,
    pub base: Option<String>,
    pub pair: Option<String>,
    pub x: Option<usize>,
}

impl Default for MethodParams {
    fn default() -> Self {
        MethodParams { seed: 0, samples: DEFAULT_SAMPLES, base: None, pair: None, x: None }
    }
}

/// Re-validates a covering result against a larger `k`; a `P_k'` cover is a
/// `P_k` cover for every `k ≥ k'`.
fn with_k(mut res: AlgorithmResult, g: &Graph, k: usize, native: usize) -> Result<AlgorithmResult> {
    require_k(k, native)?;
    if k != res.k {
        res = finish(
            g,
            k,
            &res.algorithm,
            res.cover,
            res.guarantee_name,
            res.guarantee_value,
            res.guarantee_certified,
            res.trace,
        )?;
    }
    Ok(res)
}

/// Certified-guarantee candidates considered by [`cover_auto`].
pub fn auto_candidates() -> Vec<Method> {
    let mut out = vec![
        Method::LowDegree,
        Method::EdgePeel,
        Method::Subcubic,
        Method::Nm4,
        Method::Psi4,
        Method::BoundedDegree,
        Method::Halving,
        Method::ChordalClasses,
        Method::Forest,
    ];
    for (base, xs) in [(PairBase::EdgePeel, 1..=4), (PairBase::Nm4, 2..=6), (PairBase::Psi4, 2..=6)] {
        out.extend(xs.map(|x| Method::PairPeel { base: base.clone(), x }));
    }
    out
}

/// Runs the applicable method with the smallest certified guarantee (first
/// in [`auto_candidates`] order on ties).
pub fn cover_auto(g: &Graph, k: usize) -> Result<AlgorithmResult> {
    let best = auto_candidates().into_iter().filter_map(|m| m.preview(g, k).map(|v| (m, v))).fold(
        None::<(Method, Rational)>,
        |best, (m, v)| match best {
            Some((_, ref bv)) if *bv <= v => best,
            _ => Some((m, v)),
        },
    );
    match best {
        Some((m, _)) => m.run(g, k),
        None => Err(Error::Precondition(format!("no certified algorithm applies for k = {k}"))),
    }
}

/// Convenience: the pair realised by a base, for callers holding only a name.
pub fn base_pair(name: &str) -> Result<FeasiblePair> {
    name.parse::<PairBase>()?.pair()
}
