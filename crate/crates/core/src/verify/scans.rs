//! Targeted scans: tight instances of one bound, the two open conjectures,
//! the cubic girth predicate and the random-order existence check.

use super::{build_corpus, CorpusSpec};
use crate::bounds::{erdos_gallai_bound, evaluate_bounds, random_order_threshold, GraphFlags};
use crate::chordal::clique_number;
use crate::error::{Error, Result};
use crate::exact::psi_exact;
use crate::graph::{generate_family, FamilySpec};
use crate::paths::find_path_of_order;
use crate::{int, ratio, Graph, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Largest order for the exhaustive ordering search.
pub const ORDER_CAP: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct TightInstance {
    pub id: String,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub psi: usize,
    pub value: String,
    #[serde(skip)]
    pub graph: Graph,
}

/// Corpus graphs where the named record equals `ψ_k` exactly.
pub fn tightness_scan(spec: &CorpusSpec, name: &str) -> Result<Vec<TightInstance>> {
    let all = GraphFlags { planar: true, triangle_free: true };
    if !evaluate_bounds(&Graph::empty(1), 3, all).iter().any(|r| r.name == name) {
        return Err(Error::UnknownName(format!("bound `{name}`")));
    }
    let items = build_corpus(spec)?;
    let found: Vec<Vec<TightInstance>> = items
        .par_iter()
        .map(|item| {
            let g = &item.graph;
            let mut out = Vec::new();
            for &k in &spec.ks {
                let psi = psi_exact(g, k)?.size();
                let records = evaluate_bounds(g, k, item.flags);
                let rec = records.iter().find(|r| r.name == name).expect("catalogue names are fixed");
                if rec.is_tight(psi) {
                    out.push(TightInstance {
                        id: item.id.clone(),
                        k,
                        n: g.n(),
                        m: g.m(),
                        psi,
                        value: rec.value.as_ref().map(|v| v.to_string()).unwrap_or_default(),
                        graph: g.clone(),
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Every component is a cycle of order `len`, and there is at least one.
pub fn is_cycle_union(g: &Graph, len: usize) -> bool {
    let comps = g.components();
    !comps.is_empty() && comps.iter().all(|c| c.len() == len && c.iter().all(|&v| g.degree(v) == 2))
}

/// `Some(m ≤ n(k-2)/2)` for a `P_k`-free graph, `None` otherwise.
pub fn erdos_gallai_holds(g: &Graph, k: usize) -> Result<Option<bool>> {
    if find_path_of_order(g, k)?.is_some() {
        return Ok(None);
    }
    Ok(Some(int(g.m() as i64) <= erdos_gallai_bound(g.n(), k)))
}

#[derive(Clone, Debug, Default)]
pub struct ConjectureCorpus {
    /// Graphs planar by construction; checked for `k = 3`.
    pub planar: Vec<(String, Graph)>,
    pub chordal: Vec<(String, Graph)>,
    pub chordal_ks: Vec<usize>,
}

impl ConjectureCorpus {
    /// Octahedron unions, grids, wheels, cycles and stacked triangulations;
    /// k-trees, interval graphs and complete graphs.
    pub fn standard() -> Result<Self> {
        let mut planar = Vec::new();
        let mut chordal = Vec::new();
        let add = |list: &mut Vec<(String, Graph)>, spec: &str, seeds: u64| -> Result<()> {
            let fam: FamilySpec = spec.parse()?;
            for s in 0..seeds {
                let id = if seeds == 1 { fam.to_string() } else { format!("{fam}@{s}") };
                list.push((id, generate_family(&fam, s)?));
            }
            Ok(())
        };
        add(&mut planar, "octahedron", 1)?;
        for j in 2..=3 {
            add(&mut planar, &format!("copies({j},octahedron)"), 1)?;
        }
        for r in 2..=4 {
            for c in r..=20 / r {
                add(&mut planar, &format!("grid({r},{c})"), 1)?;
            }
        }
        for rim in 3..=15 {
            add(&mut planar, &format!("wheel({rim})"), 1)?;
        }
        for n in 3..=12 {
            add(&mut planar, &format!("cycle({n})"), 1)?;
        }
        for n in 4..=16 {
            add(&mut planar, &format!("stacked_triangulation({n})"), 5)?;
        }
        for n in [8, 12, 16] {
            for w in 1..=4 {
                add(&mut chordal, &format!("ktree({n},{w})"), 5)?;
            }
        }
        for n in [10, 15, 18] {
            for len in [4, 10] {
                add(&mut chordal, &format!("interval({n},{len})"), 5)?;
            }
        }
        for n in 2..=12 {
            add(&mut chordal, &format!("complete({n})"), 1)?;
        }
        Ok(ConjectureCorpus { planar, chordal, chordal_ks: vec![3, 4, 5] })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureHit {
    /// `planar_2_3` or `chordal_clique`.
    pub conjecture: String,
    pub id: String,
    pub k: usize,
    pub n: usize,
    pub psi: usize,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub checked: usize,
    pub counterexamples: Vec<ConjectureHit>,
    /// Holding with less than one vertex to spare, equality excluded.
    pub near_tight: Vec<ConjectureHit>,
    pub exact: Vec<ConjectureHit>,
}

/// Checks `ψ_3 ≤ 2n/3` on the planar list and `ψ_k ≤ (ω-1)/(ω+k-2)·n` on
/// the chordal list.
pub fn conjecture_scan(corpus: &ConjectureCorpus) -> Result<ConjectureReport> {
    let mut jobs: Vec<(&str, &String, &Graph, usize)> = Vec::new();
    for (id, g) in &corpus.planar {
        jobs.push(("planar_2_3", id, g, 3));
    }
    for (id, g) in &corpus.chordal {
        for &k in &corpus.chordal_ks {
            jobs.push(("chordal_clique", id, g, k));
        }
    }
    let results: Vec<(ConjectureHit, Rational)> = jobs
        .par_iter()
        .map(|&(name, id, g, k)| {
            let psi = psi_exact(g, k)?.size();
            let n = g.n() as i64;
            let value = if name == "planar_2_3" {
                ratio(2 * n, 3)
            } else {
                let w = clique_number(g)? as i64;
                ratio((w - 1) * n, w + k as i64 - 2)
            };
            let slack = &value - int(psi as i64);
            let hit =
                ConjectureHit { conjecture: name.into(), id: id.clone(), k, n: g.n(), psi, value: value.to_string() };
            Ok((hit, slack))
        })
        .collect::<Result<_>>()?;
    let mut report = ConjectureReport { checked: results.len(), ..ConjectureReport::default() };
    for (hit, slack) in results {
        if slack < Rational::zero() {
            report.counterexamples.push(hit);
        } else if slack.is_zero() {
            report.exact.push(hit);
        } else if slack < int(1) {
            report.near_tight.push(hit);
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicGirthRow {
    pub id: String,
    pub k: usize,
    pub n: usize,
    pub girth: Option<usize>,
    /// Cubic with girth greater than `k`.
    pub applicable: bool,
    pub psi: Option<usize>,
    /// `ψ_k > n/4`, when applicable.
    pub holds: Option<bool>,
}

pub fn standard_cubic_corpus() -> Result<Vec<(String, Graph)>> {
    let mut names: Vec<String> =
        ["petersen", "heawood", "cube", "dodecahedron", "complete(4)", "complete_bipartite(3,3)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
    names.extend((3..=8).map(|n| format!("prism({n})")));
    names
        .into_iter()
        .map(|s| {
            let g = generate_family(&s.parse()?, 0)?;
            Ok((s, g))
        })
        .collect()
}

/// `ψ_k > n/4` for every 3-regular graph of girth greater than `k`.
pub fn cubic_girth_check(graphs: &[(String, Graph)], ks: &[usize]) -> Result<Vec<CubicGirthRow>> {
    let mut rows = Vec::new();
    for (id, g) in graphs {
        let girth = g.girth();
        for &k in ks {
            let applicable = g.is_regular() == Some(3) && girth.is_none_or(|c| c > k);
            let psi = if applicable { Some(psi_exact(g, k)?.size()) } else { None };
            let holds = psi.map(|p| 4 * p > g.n());
            rows.push(CubicGirthRow { id: id.clone(), k, n: g.n(), girth, applicable, psi, holds });
        }
    }
    Ok(rows)
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).expect("a[i] qualifies");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// First ordering, in lexicographic order, whose weight reaches the
/// random-order threshold.
pub fn random_order_exists(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    if k < 3 {
        return Err(Error::InvalidK { k, reason: "this algorithm needs k ≥ 3" });
    }
    if g.n() > ORDER_CAP {
        return Err(Error::CapExceeded { what: "ordering enumeration", n: g.n(), cap: ORDER_CAP });
    }
    // (k-1)·weight is the integer (k-1)·#first + (k-2)·#second
    let need = (random_order_threshold(g, k) * int(k as i64 - 1)).ceil().to_integer();
    let mut order: Vec<usize> = (0..g.n()).collect();
    let mut pos = vec![0; g.n()];
    loop {
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let scaled: i64 = order
            .iter()
            .map(|&v| match g.neighbors(v).iter().filter(|&&w| pos[w] < pos[v]).count() {
                0 => k as i64 - 1,
                1 => k as i64 - 2,
                _ => 0,
            })
            .sum();
        if num_bigint::BigInt::from(scaled) >= need {
            return Ok(Some(order));
        }
        if !next_permutation(&mut order) {
            return Ok(None);
        }
    }
}

/// `count` isolate-free `G(n, m)` graphs with `2 ≤ n ≤ max_n`.
pub fn isolate_free_sample(count: usize, max_n: usize, seed: u64) -> Result<Vec<(String, Graph)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n.max(2));
        let pairs = n * (n - 1) / 2;
        let m = rng.gen_range(n / 2..=pairs);
        let s: u64 = rng.gen();
        let g = generate_family(&FamilySpec::Gnm(n, m), s)?;
        if !g.has_isolated_vertex() {
            out.push((format!("gnm({n},{m})@{s}"), g));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Graph {
        generate_family(&s.parse::<FamilySpec>().unwrap(), 0).unwrap()
    }

    #[test]
    fn permutations_are_exhaustive() {
        let mut a = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut a) {
            count += 1;
        }
        assert_eq!((count, a), (24, vec![3, 2, 1, 0]));
    }

    #[test]
    fn orderings_reach_threshold() {
        for g in [fam("cycle(5)"), fam("petersen").induced(&[0, 1, 2, 3, 4, 5, 6]), fam("complete(6)")] {
            if g.has_isolated_vertex() {
                continue;
            }
            for k in 3..=5 {
                assert!(random_order_exists(&g, k).unwrap().is_some());
            }
        }
        assert!(random_order_exists(&fam("path(9)"), 3).is_err());
    }

    #[test]
    fn cubic_girth_rows() {
        let rows =
            cubic_girth_check(&[("petersen".into(), fam("petersen")), ("k4".into(), fam("complete(4)"))], &[3, 4])
                .unwrap();
        assert_eq!(rows[0].psi, Some(4));
        assert_eq!(rows[1].holds, Some(true));
        assert!(!rows[2].applicable && rows[2].psi.is_none());
    }

    #[test]
    fn cycle_unions() {
        assert!(is_cycle_union(&fam("copies(3,cycle(4))"), 4));
        assert!(!is_cycle_union(&fam("disjoint_union(cycle(4),path(1))"), 4));
        assert!(!is_cycle_union(&fam("cycle(5)"), 4));
        assert!(!is_cycle_union(&Graph::empty(0), 4));
    }

    #[test]
    fn erdos_gallai_examples() {
        assert_eq!(erdos_gallai_holds(&fam("copies(3,complete(3))"), 4).unwrap(), Some(true));
        assert_eq!(erdos_gallai_holds(&fam("path(4)"), 4).unwrap(), None);
    }

    #[test]
    fn unknown_bound_name() {
        assert!(matches!(tightness_scan(&CorpusSpec::exhaustive(2, &[3]), "nope"), Err(Error::UnknownName(_))));
    }
}
