//! Corpus sweeps: every bound record and every constructive algorithm is
//! checked against exact `ψ_k`, with violations collected rather than
//! raised.

mod scans;

pub use scans::{
    conjecture_scan, cubic_girth_check, erdos_gallai_holds, is_cycle_union, isolate_free_sample, random_order_exists,
    standard_cubic_corpus, tightness_scan, ConjectureCorpus, ConjectureHit, ConjectureReport, CubicGirthRow,
    TightInstance, ORDER_CAP,
};

use crate::bounds::{erdos_gallai_bound, evaluate_bounds, BoundKind, GraphFlags};
use crate::construct::{Method, PairBase, DEFAULT_SAMPLES};
use crate::error::{Error, Result};
use crate::exact::{psi_exact, PSI_CAP};
use crate::graph::{generate_family, indicator, FamilySpec};
use crate::{int, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Largest order for [`enumerate_labeled_graphs`].
pub const LABELED_CAP: usize = 6;

/// Seeded draws from one named family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySample {
    pub family: String,
    /// Seeds `0..count`.
    pub count: u64,
    pub flags: GraphFlags,
}

/// Everything needed to rebuild a corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    /// All labelled graphs on `1..=exhaustive_max_n` vertices; 0 for none.
    pub exhaustive_max_n: usize,
    /// Orders of the uniform random `G(n, m)` samples.
    pub random_ns: Vec<usize>,
    pub random_per_n: usize,
    pub families: Vec<FamilySample>,
    pub ks: Vec<usize>,
    pub seed: u64,
    /// Keep per-graph rows in the report.
    pub detail: bool,
}

impl CorpusSpec {
    pub fn exhaustive(max_n: usize, ks: &[usize]) -> Self {
        CorpusSpec {
            exhaustive_max_n: max_n,
            random_ns: Vec::new(),
            random_per_n: 0,
            families: Vec::new(),
            ks: ks.to_vec(),
            seed: 0,
            detail: false,
        }
    }

    /// Labelled graphs up to 6 vertices plus 500 random graphs for each of
    /// `n = 7..=10`, for `k = 3, 4, 5`.
    pub fn master() -> Self {
        CorpusSpec { random_ns: vec![7, 8, 9, 10], random_per_n: 500, ..CorpusSpec::exhaustive(6, &[3, 4, 5]) }
    }

    pub fn families(families: &[(&str, u64)], ks: &[usize]) -> Self {
        CorpusSpec {
            families: families
                .iter()
                .map(|&(f, count)| FamilySample { family: f.to_string(), count, flags: GraphFlags::default() })
                .collect(),
            ..CorpusSpec::exhaustive(0, ks)
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub id: String,
    pub graph: Graph,
    pub flags: GraphFlags,
}

/// All `2^(n choose 2)` labelled graphs on `n` vertices; bit `i` of the
/// index selects the `i`-th pair in lexicographic order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > LABELED_CAP {
        return Err(Error::CapExceeded { what: "labelled enumeration", n, cap: LABELED_CAP });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).expect("pairs are valid")
    }))
}

pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusItem>> {
    let mut out = Vec::new();
    for n in 1..=spec.exhaustive_max_n {
        for (i, graph) in enumerate_labeled_graphs(n)?.enumerate() {
            out.push(CorpusItem { id: format!("L{n}:{i}"), graph, flags: GraphFlags::default() });
        }
    }
    for &n in &spec.random_ns {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let pairs = n * n.saturating_sub(1) / 2;
        for i in 0..spec.random_per_n {
            let m = rng.gen_range(0..=pairs);
            let graph = generate_family(&FamilySpec::Gnm(n, m), rng.gen())?;
            out.push(CorpusItem { id: format!("R{n}:{i}"), graph, flags: GraphFlags::default() });
        }
    }
    for fs in &spec.families {
        let family: FamilySpec = fs.family.parse()?;
        for seed in 0..fs.count {
            let graph = generate_family(&family, seed)?;
            out.push(CorpusItem { id: format!("{family}@{seed}"), graph, flags: fs.flags });
        }
    }
    if let Some(big) = out.iter().find(|it| it.graph.n() > PSI_CAP) {
        return Err(Error::CapExceeded { what: "verification corpus", n: big.graph.n(), cap: PSI_CAP });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Tight,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub kind: BoundKind,
    pub value: String,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgorithmCheck {
    pub method: String,
    pub size: usize,
    pub guarantee: String,
    pub certified: bool,
    pub guarantee_met: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub psi: usize,
    pub bounds: Vec<BoundCheck>,
    pub algorithms: Vec<AlgorithmCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub id: String,
    pub k: usize,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub graphs: usize,
    pub rows: usize,
    pub bound_checks: usize,
    pub algorithm_runs: usize,
    pub algorithm_skips: usize,
    pub uncertified_runs: usize,
    /// Uncertified runs whose cover exceeded the reported value.
    pub uncertified_misses: usize,
    pub erdos_gallai_checks: usize,
}

impl Totals {
    fn add(&mut self, o: &Totals) {
        self.graphs += o.graphs;
        self.rows += o.rows;
        self.bound_checks += o.bound_checks;
        self.algorithm_runs += o.algorithm_runs;
        self.algorithm_skips += o.algorithm_skips;
        self.uncertified_runs += o.uncertified_runs;
        self.uncertified_misses += o.uncertified_misses;
        self.erdos_gallai_checks += o.erdos_gallai_checks;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub spec: CorpusSpec,
    pub totals: Totals,
    /// Number of tight instances per bound name.
    pub tight: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
    /// Empty unless `CorpusSpec::detail` is set.
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Flat rows `id,n,m,k,psi,check,kind,value,status`: one per bound and
    /// algorithm check when detail was kept, plus one per violation.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut put = |fields: [String; 9]| w.write_record(&fields).expect("in-memory write");
        put(["id", "n", "m", "k", "psi", "check", "kind", "value", "status"].map(String::from));
        for r in &self.rows {
            let head = [r.id.clone(), r.n.to_string(), r.m.to_string(), r.k.to_string(), r.psi.to_string()];
            for b in &r.bounds {
                let kind = match b.kind {
                    BoundKind::Upper => "upper",
                    BoundKind::Lower => "lower",
                };
                let status = match b.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Tight => "tight",
                    CheckStatus::Fail => "fail",
                };
                let [a, b1, c, d, e] = head.clone();
                put([a, b1, c, d, e, b.name.clone(), kind.into(), b.value.clone(), status.into()]);
            }
            for al in &r.algorithms {
                let kind = if al.certified { "certified" } else { "uncertified" };
                let status = if al.guarantee_met { "pass" } else { "fail" };
                let [a, b1, c, d, e] = head.clone();
                put([a, b1, c, d, e, al.method.clone(), kind.into(), al.size.to_string(), status.into()]);
            }
        }
        for v in &self.violations {
            put([
                v.id.clone(),
                String::new(),
                String::new(),
                v.k.to_string(),
                String::new(),
                v.check.clone(),
                "violation".into(),
                v.detail.clone(),
                "fail".into(),
            ]);
        }
        String::from_utf8(w.into_inner().expect("flushed")).expect("utf-8 fields")
    }
}

/// Algorithms run on every corpus graph; `seed` feeds the random-order cover.
pub fn harness_methods(seed: u64) -> Vec<Method> {
    let mut out = vec![
        Method::LowDegree,
        Method::EdgePeel,
        Method::Subcubic,
        Method::Nm4,
        Method::FourNm9,
        Method::Psi4,
        Method::BoundedDegree,
        Method::Halving,
        Method::RandomOrder { seed, samples: DEFAULT_SAMPLES },
        Method::ChordalClasses,
        Method::ChordalDecomp,
        Method::Forest,
    ];
    for (base, x) in [(PairBase::FourNm9, 5), (PairBase::Nm4, 3), (PairBase::EdgePeel, 2), (PairBase::Psi4, 3)] {
        out.push(Method::PairPeel { base, x });
    }
    out
}

/// Errors that mean "outside this algorithm's domain" rather than a defect.
fn is_skip(e: &Error) -> bool {
    matches!(
        e,
        Error::Precondition(_)
            | Error::InvalidK { .. }
            | Error::NotChordal
            | Error::NotAForest
            | Error::CapExceeded { .. }
    )
}

struct GraphOutcome {
    totals: Totals,
    tight: Vec<String>,
    violations: Vec<Violation>,
    rows: Vec<VerifyRow>,
}

fn check_item(item: &CorpusItem, index: usize, spec: &CorpusSpec) -> GraphOutcome {
    let g = &item.graph;
    let mut out = GraphOutcome {
        totals: Totals { graphs: 1, ..Totals::default() },
        tight: vec![],
        violations: vec![],
        rows: vec![],
    };
    for &k in &spec.ks {
        let mut viol = |check: &str, detail: String| {
            out.violations.push(Violation { id: item.id.clone(), k, check: check.to_string(), detail })
        };
        let psi = match psi_exact(g, k) {
            Ok(c) => c,
            Err(e) => {
                viol("psi_exact", e.to_string());
                continue;
            }
        };
        out.totals.rows += 1;
        let eg = |cover: &[usize], what: &str, totals: &mut Totals| -> Option<Violation> {
            totals.erdos_gallai_checks += 1;
            let removed = indicator(g.n(), cover).ok()?;
            let m = g.edges_outside(&removed);
            let bound = erdos_gallai_bound(g.n() - cover.len(), k);
            (int(m as i64) > bound).then(|| Violation {
                id: item.id.clone(),
                k,
                check: "erdos_gallai".into(),
                detail: format!("{what} residual has {m} edges > {bound}"),
            })
        };
        let mut pending: Vec<Violation> = eg(&psi.cover, "exact", &mut out.totals).into_iter().collect();
        let p = psi.size();
        let mut row =
            VerifyRow { id: item.id.clone(), n: g.n(), m: g.m(), k, psi: p, bounds: vec![], algorithms: vec![] };
        for rec in evaluate_bounds(g, k, item.flags) {
            let Some(holds) = rec.holds(p) else { continue };
            out.totals.bound_checks += 1;
            let value = rec.value.as_ref().map(|v| v.to_string()).unwrap_or_default();
            let status = if !holds {
                CheckStatus::Fail
            } else if rec.is_tight(p) {
                CheckStatus::Tight
            } else {
                CheckStatus::Pass
            };
            match status {
                CheckStatus::Fail => pending.push(Violation {
                    id: item.id.clone(),
                    k,
                    check: format!("bound {}", rec.name),
                    detail: format!("value {value} vs psi {p}"),
                }),
                CheckStatus::Tight => out.tight.push(rec.name.clone()),
                CheckStatus::Pass => {}
            }
            if spec.detail {
                row.bounds.push(BoundCheck { name: rec.name, kind: rec.kind, value, status });
            }
        }
        for method in harness_methods(spec.seed.wrapping_add(index as u64)) {
            let res = match method.run(g, k) {
                Ok(r) => r,
                Err(e) if is_skip(&e) => {
                    out.totals.algorithm_skips += 1;
                    continue;
                }
                Err(e) => {
                    pending.push(Violation {
                        id: item.id.clone(),
                        k,
                        check: format!("algorithm {method}"),
                        detail: e.to_string(),
                    });
                    continue;
                }
            };
            out.totals.algorithm_runs += 1;
            let met = res.meets_guarantee();
            let mut bad = |check: &str, detail: String| {
                pending.push(Violation { id: item.id.clone(), k, check: format!("{check} {method}"), detail })
            };
            if res.size() < p {
                bad("below optimum", format!("cover of size {} < psi {p}", res.size()));
            }
            if res.guarantee_value < int(p as i64) {
                bad("guarantee below psi", format!("{} < {p}", res.guarantee_value));
            }
            if res.guarantee_certified && !met {
                bad("certified guarantee", format!("{} > {}", res.size(), res.guarantee_value));
            }
            if !res.guarantee_certified {
                out.totals.uncertified_runs += 1;
                out.totals.uncertified_misses += usize::from(!met);
            }
            pending.extend(eg(&res.cover, method.name(), &mut out.totals));
            if spec.detail {
                row.algorithms.push(AlgorithmCheck {
                    method: method.to_string(),
                    size: res.size(),
                    guarantee: res.guarantee_value.to_string(),
                    certified: res.guarantee_certified,
                    guarantee_met: met,
                });
            }
        }
        out.violations.extend(pending);
        if spec.detail {
            out.rows.push(row);
        }
    }
    out
}

/// Runs every check on every corpus graph using rayon's global pool.
pub fn verify_all(spec: &CorpusSpec) -> Result<VerifyReport> {
    let items = build_corpus(spec)?;
    let outcomes: Vec<GraphOutcome> = items.par_iter().enumerate().map(|(i, item)| check_item(item, i, spec)).collect();
    Ok(assemble(spec, outcomes))
}

/// [`verify_all`] on a dedicated pool of `jobs` threads.
pub fn verify_all_jobs(spec: &CorpusSpec, jobs: usize) -> Result<VerifyReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    pool.install(|| verify_all(spec))
}

fn assemble(spec: &CorpusSpec, outcomes: Vec<GraphOutcome>) -> VerifyReport {
    let mut report = VerifyReport {
        spec: spec.clone(),
        totals: Totals::default(),
        tight: BTreeMap::new(),
        violations: vec![],
        rows: vec![],
    };
    for o in outcomes {
        report.totals.add(&o.totals);
        for name in o.tight {
            *report.tight.entry(name).or_default() += 1;
        }
        report.violations.extend(o.violations);
        report.rows.extend(o.rows);
    }
    report
}
