//! Closed-form bounds on `ψ_k`, evaluated with exact rationals.
//!
//! [`evaluate_bounds`] returns one [`BoundRecord`] per catalogue entry,
//! applicable or not. Bounds proved for a smaller path order `k'` also bound
//! `ψ_k` for every `k ≥ k'`; such records carry `via_smaller_k = Some(k')`.

mod pairs;
mod table;

pub use pairs::{
    pair_chain, pair_step, pair_step_general, parse_pair, parse_rational, standard_chain, FeasiblePair, PairStep,
};
pub use table::{clique_coefficient, colour_class_coefficient, render_table, table_chordal, Best, TableCell};

use crate::chordal;
use crate::exact::{forest_number_with_cap, FOREST_CAP};
use crate::{int, ratio, Graph, Rational};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Upper,
    Lower,
}

/// Properties the caller vouches for; only Euler-formula sanity checks are
/// applied to them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GraphFlags {
    pub planar: bool,
    pub triangle_free: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub name: String,
    pub kind: BoundKind,
    /// Present iff `applicable`.
    #[serde(serialize_with = "crate::ser::opt_rational")]
    pub value: Option<Rational>,
    pub applicable: bool,
    pub reason: String,
    /// Constructive algorithm whose certified guarantee is this bound.
    pub certified_algorithm: Option<String>,
    /// Lower bound that holds strictly.
    pub strict: bool,
    pub via_smaller_k: Option<usize>,
}

impl BoundRecord {
    /// Whether the record is consistent with the exact value; `None` when
    /// not applicable.
    pub fn holds(&self, psi: usize) -> Option<bool> {
        let v = self.value.as_ref()?;
        let p = int(psi as i64);
        Some(match (self.kind, self.strict) {
            (BoundKind::Upper, _) => p <= *v,
            (BoundKind::Lower, false) => *v <= p,
            (BoundKind::Lower, true) => *v < p,
        })
    }

    pub fn is_tight(&self, psi: usize) -> bool {
        self.value.as_ref().is_some_and(|v| *v == int(psi as i64))
    }

    pub fn json_row(&self) -> serde_json::Value {
        let (num, den) = match &self.value {
            Some(v) => (serde_json::json!(v.numer().to_string()), serde_json::json!(v.denom().to_string())),
            None => (serde_json::Value::Null, serde_json::Value::Null),
        };
        serde_json::json!({
            "name": self.name,
            "kind": self.kind,
            "numerator": num,
            "denominator": den,
            "applicable": self.applicable,
            "reason": self.reason,
        })
    }
}

/// The catalogue as a JSON array of `(name, kind, numerator, denominator,
/// applicable, reason)` rows.
pub fn bounds_json(records: &[BoundRecord]) -> String {
    let rows: Vec<serde_json::Value> = records.iter().map(BoundRecord::json_row).collect();
    serde_json::to_string_pretty(&rows).expect("plain JSON values")
}

/// Maximum size of a `P_k`-free graph on `n` vertices: `n(k-2)/2`.
pub fn erdos_gallai_bound(n: usize, k: usize) -> Rational {
    ratio((n * k.saturating_sub(2)) as i64, 2)
}

fn r(v: usize) -> Rational {
    int(v as i64)
}

fn chain_pairs() -> &'static [FeasiblePair] {
    static CHAIN: OnceLock<Vec<FeasiblePair>> = OnceLock::new();
    CHAIN.get_or_init(standard_chain)
}

/// Per-graph quantities shared by several bounds.
struct Facts {
    n: usize,
    m: usize,
    delta: usize,
    min_deg: usize,
    regular: Option<usize>,
    forest: bool,
    isolate_free: bool,
    girth: Option<usize>,
    /// `Some(ω)` for chordal graphs.
    chordal_omega: Option<usize>,
    forest_number: Option<usize>,
    inverse_degree_sum: Rational,
}

impl Facts {
    fn new(g: &Graph) -> Self {
        let chordal_omega = if chordal::is_chordal(g) { chordal::clique_number(g).ok() } else { None };
        Facts {
            n: g.n(),
            m: g.m(),
            delta: g.max_degree(),
            min_deg: g.min_degree(),
            regular: g.is_regular(),
            forest: g.is_forest(),
            isolate_free: g.n() > 0 && !g.has_isolated_vertex(),
            girth: g.girth(),
            chordal_omega,
            forest_number: forest_number_with_cap(g, FOREST_CAP).ok().map(|(a, _)| a),
            inverse_degree_sum: (0..g.n()).map(|v| ratio(1, g.degree(v) as i64 + 1)).sum(),
        }
    }
}

struct Catalog {
    k: usize,
    out: Vec<BoundRecord>,
}

type Eval = std::result::Result<(Rational, String), String>;

impl Catalog {
    /// `base_k`: the path order the bound is proved for (`None`: any `k`).
    fn push(&mut self, name: &str, kind: BoundKind, base_k: Option<usize>, eval: Eval, cert: Option<&str>) {
        let via = match base_k {
            Some(b) if self.k > b => Some(b),
            _ => None,
        };
        let rec = match (base_k, eval) {
            (Some(b), _) if self.k < b => BoundRecord {
                name: name.into(),
                kind,
                value: None,
                applicable: false,
                reason: format!("requires k ≥ {b}"),
                certified_algorithm: None,
                strict: false,
                via_smaller_k: None,
            },
            (_, Err(reason)) => BoundRecord {
                name: name.into(),
                kind,
                value: None,
                applicable: false,
                reason,
                certified_algorithm: None,
                strict: false,
                via_smaller_k: None,
            },
            (_, Ok((value, reason))) => BoundRecord {
                name: name.into(),
                kind,
                value: Some(value),
                applicable: true,
                reason: match via {
                    Some(b) => format!("{reason}; ψ_k ≤ ψ_{b}"),
                    None => reason,
                },
                certified_algorithm: cert.map(str::to_string),
                strict: false,
                via_smaller_k: via,
            },
        };
        self.out.push(rec);
    }

    fn upper(&mut self, name: &str, base_k: Option<usize>, eval: Eval, cert: Option<&str>) {
        self.push(name, BoundKind::Upper, base_k, eval, cert);
    }

    fn lower(&mut self, name: &str, eval: Eval, strict: bool) {
        self.push(name, BoundKind::Lower, None, eval, None);
        if strict {
            self.out.last_mut().expect("just pushed").strict = true;
        }
    }
}

fn when(cond: bool, value: impl FnOnce() -> Rational, why: &str, why_not: &str) -> Eval {
    if cond {
        Ok((value(), why.to_string()))
    } else {
        Err(why_not.to_string())
    }
}

fn always(value: Rational) -> Eval {
    Ok((value, "all graphs".into()))
}

/// `⌈p/q⌉` for `q > 0`.
fn ceil_div(p: i64, q: i64) -> i64 {
    num_integer::Integer::div_ceil(&p, &q)
}

/// Smallest even `D ≥ max(Δ, 2)`.
fn even_parameter(delta: usize) -> usize {
    let d = delta.max(2);
    d + d % 2
}

/// Smallest odd `D ≥ max(Δ, 5)`.
fn odd_parameter(delta: usize) -> usize {
    let d = delta.max(5);
    d + 1 - d % 2
}

/// `((k-1)(D-2)+4)/((k-1)D+4)` for even `D`.
pub fn even_degree_rate(k: usize, d: usize) -> Rational {
    let k1 = k as i64 - 1;
    let d = d as i64;
    ratio(k1 * (d - 2) + 4, k1 * d + 4)
}

/// `((k-1)(D-3)+8)/((k-1)(D-1)+8)` for odd `D ≥ 5`.
pub fn odd_degree_rate(k: usize, d: usize) -> Rational {
    let k1 = k as i64 - 1;
    let d = d as i64;
    ratio(k1 * (d - 3) + 8, k1 * (d - 1) + 8)
}

/// Coefficient of `n` certified for graphs with maximum degree at most `cap`
/// (`k ≥ 3`); `cap = 3` uses the `cap = 4` value.
pub fn degree_cap_rate(k: usize, cap: usize) -> Rational {
    match cap {
        0 | 1 => Rational::zero(),
        c if c % 2 == 0 => even_degree_rate(k, c),
        3 => even_degree_rate(k, 4),
        c => odd_degree_rate(k, c),
    }
}

/// `(2k-3)/(k-1) · Σ 1/(1+d(v))`, the expected weight of a random order.
pub fn random_order_threshold(g: &Graph, k: usize) -> Rational {
    let s: Rational = (0..g.n()).map(|v| ratio(1, g.degree(v) as i64 + 1)).sum();
    ratio(2 * k as i64 - 3, k as i64 - 1) * s
}

/// Every catalogue bound for `(G, k)`. Records never error: a bound that
/// does not apply is marked so, with the reason.
pub fn evaluate_bounds(g: &Graph, k: usize, flags: GraphFlags) -> Vec<BoundRecord> {
    let f = Facts::new(g);
    let (n, m) = (f.n, f.m);
    let (rn, rm) = (r(n), r(m));
    let kk = k as i64;
    let mut c = Catalog { k, out: Vec::new() };

    c.upper("order_minus_k", None, always(r(n.saturating_sub(k.saturating_sub(1)))), None);
    c.upper("forest_n_over_k", None, when(f.forest, || ratio(n as i64, kk), "forest", "not a forest"), None);
    c.upper("2n_plus_m_over_6", Some(3), always(ratio(2 * n as i64 + m as i64, 6)), None);
    c.upper("m_over_2", Some(3), always(ratio(m as i64, 2)), Some("edge_peel"));
    c.upper(
        "n_over_2_subcubic",
        Some(3),
        when(f.delta <= 3, || ratio(n as i64, 2), "Δ ≤ 3", "Δ > 3"),
        Some("subcubic"),
    );
    c.upper(
        "ell_bound",
        Some(3),
        if m == 0 {
            Err("needs m ≥ 1".into())
        } else {
            let l = ceil_div(m as i64, n as i64) - 1;
            Ok((ratio(l, l + 2) * &rn + ratio(1, (l + 1) * (l + 2)) * &rm, format!("ℓ = {l}")))
        },
        None,
    );
    c.upper("nm4", Some(3), always(ratio(n as i64 + m as i64, 4)), Some("nm4"));
    c.upper("4nm9", Some(3), always(ratio(4 * n as i64 + m as i64, 9)), None);
    for (i, p) in chain_pairs().iter().enumerate() {
        let x = p.provenance.last().map_or(0, |s| s.x);
        c.upper(&format!("chain_x{x}"), Some(3), Ok((p.eval(n, m), format!("pair {} of the chain", i + 1))), None);
    }
    c.upper("delta2_n", Some(3), when(f.delta <= 2, || ratio(2, kk + 1) * &rn, "Δ ≤ 2", "Δ > 2"), Some("low_degree"));
    c.upper("delta2_m", Some(3), when(f.delta <= 2, || ratio(2, kk + 1) * &rm, "Δ ≤ 2", "Δ > 2"), Some("low_degree"));
    // proved for k = 3 and for k = 4 directly; the lower-k record is the
    // one reused for larger k
    c.upper("psi4_n_3m", Some(4), always(ratio(n as i64 + 3 * m as i64, 10)), Some("psi4"));
    {
        let d = f.delta as i64;
        let coeff = if d == 0 { Rational::zero() } else { ratio(ceil_div(d - 1, 2), ceil_div(d + 1, 2)) };
        c.upper("maxdeg_psi3", Some(3), Ok((coeff * &rn, format!("Δ = {d}"))), None);
    }
    {
        let de = even_parameter(f.delta);
        let cert = (f.delta == de || f.delta == 3 && de == 4).then_some("bounded_degree");
        c.upper("maxdeg_even", Some(3), Ok((even_degree_rate(k, de) * &rn, format!("Δ ≤ {de}"))), cert);
        let dodd = odd_parameter(f.delta);
        let cert = (f.delta == dodd).then_some("bounded_degree");
        c.upper("maxdeg_odd", Some(3), Ok((odd_degree_rate(k, dodd) * &rn, format!("Δ ≤ {dodd}"))), cert);
    }
    c.upper(
        "halving_delta11",
        Some(6),
        when(f.delta == 11, || ratio(3 * kk + 5, 4 * kk + 4) * &rn, "Δ = 11", "Δ ≠ 11"),
        Some("halving"),
    );
    let k_ge3 = k >= 3;
    c.upper(
        "degree_sum",
        None,
        when(
            f.isolate_free && k_ge3,
            || &rn - ratio(2 * kk - 3, kk - 1) * &f.inverse_degree_sum,
            "isolate-free",
            if k_ge3 { "isolated vertex present" } else { "requires k ≥ 3" },
        ),
        Some("random_order"),
    );
    c.upper(
        "average_degree",
        None,
        when(
            f.isolate_free && k_ge3,
            || {
                let dbar = ratio(2 * m as i64, n as i64);
                (int(1) - ratio(2 * kk - 3, kk - 1) / (dbar + int(1))) * &rn
            },
            "isolate-free",
            if k_ge3 { "isolated vertex present" } else { "requires k ≥ 3" },
        ),
        None,
    );
    c.upper(
        "chordal_colour_classes",
        None,
        match f.chordal_omega {
            Some(omega) if k >= 2 => {
                let chi = omega.max(2);
                Ok((colour_class_coefficient(k, chi) * &rn, format!("chordal, χ = {omega}")))
            }
            Some(_) => Err("requires k ≥ 2".into()),
            None => Err("not chordal".into()),
        },
        Some("chordal_classes"),
    );
    c.upper(
        "chordal_clique",
        None,
        match f.chordal_omega {
            Some(omega) if k_ge3 => Ok((clique_coefficient(k, omega) * &rn, format!("chordal, ω = {omega}"))),
            Some(_) => Err("requires k ≥ 3".into()),
            None => Err("not chordal".into()),
        },
        None,
    );
    c.upper(
        "forest_number",
        None,
        match f.forest_number {
            Some(a) if k_ge3 => Ok((&rn - ratio(kk - 1, kk) * r(a), format!("a(G) = {a}"))),
            Some(_) => Err("requires k ≥ 3".into()),
            None => Err(format!("n above the forest-number cap {FOREST_CAP}")),
        },
        Some("forest"),
    );

    // planar records; the flags are trusted up to Euler's inequality
    let planar_ok = flags.planar && (n < 3 || m + 6 <= 3 * n);
    let tf_ok = planar_ok && flags.triangle_free && g.is_triangle_free() && n >= 3 && m + 4 <= 2 * n;
    let not_planar = if flags.planar { "m exceeds 3n − 6" } else { "planarity not asserted" };
    let not_tf = if !planar_ok {
        not_planar
    } else if !flags.triangle_free || !g.is_triangle_free() {
        "triangle-freeness not asserted or false"
    } else {
        "needs n ≥ 3 and m ≤ 2n − 4"
    };
    c.upper("planar_11_15", Some(3), when(planar_ok, || ratio(11, 15) * &rn, "planar", not_planar), None);
    c.upper("planar_psi6", Some(6), when(planar_ok, || ratio(2, 3) * &rn, "planar", not_planar), None);
    c.upper(
        "planar_forest_2_5",
        None,
        when(planar_ok && k_ge3, || &rn - ratio(kk - 1, kk) * ratio(2, 5) * &rn, "planar", not_planar),
        None,
    );
    c.upper(
        "planar_tf_2_3",
        Some(3),
        when(tf_ok, || ratio(2, 3) * &rn - ratio(4, 9), "planar, triangle-free", not_tf),
        None,
    );
    c.upper(
        "planar_tf_forest_71_128",
        None,
        when(
            tf_ok && k_ge3,
            || &rn - ratio(kk - 1, kk) * (ratio(71, 128) * &rn + ratio(9, 16)),
            "planar, triangle-free",
            not_tf,
        ),
        None,
    );

    // lower bounds
    c.lower(
        "regular_lower",
        match f.regular {
            Some(d) if n > 0 && k_ge3 && d + 1 >= k => {
                let d = d as i64;
                Ok((ratio(d - kk + 2, 2 * d - kk + 2) * &rn, format!("{d}-regular")))
            }
            Some(_) if n > 0 && k_ge3 => Err("degree below k − 1".into()),
            _ => Err("not regular or k < 3".into()),
        },
        false,
    );
    c.lower(
        "min_max_degree_lower",
        when(
            n > 0 && k_ge3 && f.min_deg + 1 >= k,
            || {
                let (dl, dh) = (f.min_deg as i64, f.delta as i64);
                ratio(dl - kk + 2, dl + dh - kk + 2) * &rn
            },
            "δ ≥ k − 1",
            "needs k ≥ 3 and δ ≥ k − 1",
        ),
        false,
    );
    c.lower(
        "cubic_girth",
        match (f.regular, f.girth) {
            (Some(3), Some(girth)) if k_ge3 && girth > k && n > 0 => Ok((ratio(n as i64, 4), format!("girth {girth}"))),
            (Some(3), _) if n > 0 => Err("girth ≤ k or k < 3".into()),
            _ => Err("not 3-regular".into()),
        },
        true,
    );
    debug_assert!(c.out.iter().all(|r| r.value.is_some() == r.applicable));
    c.out
}

/// Smallest applicable upper record (ties to the earliest).
pub fn best_upper(records: &[BoundRecord]) -> Option<&BoundRecord> {
    records.iter().filter(|r| r.kind == BoundKind::Upper && r.applicable).fold(None, |best: Option<&BoundRecord>, r| {
        match best {
            Some(b) if b.value <= r.value => Some(b),
            _ => Some(r),
        }
    })
}

/// Largest applicable lower record, rounded up to an integer.
pub fn best_lower(records: &[BoundRecord]) -> usize {
    records
        .iter()
        .filter(|r| r.kind == BoundKind::Lower)
        .filter_map(|r| {
            let v = r.value.as_ref()?;
            let c = if r.strict { v.floor() + Rational::one() } else { v.ceil() };
            Some(if c.is_negative() { 0 } else { c.to_integer().try_into().unwrap_or(0usize) })
        })
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        generate_family(&s.parse::<FamilySpec>().unwrap(), 0).unwrap()
    }

    fn get<'a>(rs: &'a [BoundRecord], name: &str) -> &'a BoundRecord {
        rs.iter().find(|r| r.name == name).unwrap_or_else(|| panic!("no record {name}"))
    }

    #[test]
    fn named_values() {
        let c4 = evaluate_bounds(&fam("cycle(4)"), 3, GraphFlags::default());
        assert_eq!(get(&c4, "nm4").value, Some(int(2)));
        let pet = evaluate_bounds(&fam("petersen"), 3, GraphFlags::default());
        assert_eq!(get(&pet, "regular_lower").value, Some(int(4)));
        assert_eq!(best_lower(&pet), 4);
        let h = evaluate_bounds(&fam("complete_minus_pm(6)"), 3, GraphFlags::default());
        assert_eq!(get(&h, "4nm9").value, Some(int(4)));
        assert_eq!(get(&h, "maxdeg_psi3").value, Some(int(4)));
        assert_eq!(get(&h, "maxdeg_even").value, Some(int(4)));
    }

    #[test]
    fn applicability() {
        let k5 = evaluate_bounds(&fam("complete(5)"), 4, GraphFlags::default());
        let r = get(&k5, "nm4");
        assert!(r.applicable && r.via_smaller_k == Some(3));
        assert!(!get(&k5, "forest_n_over_k").applicable);
        assert!(!get(&k5, "halving_delta11").applicable);
        assert!(!get(&k5, "planar_11_15").applicable);
        let k2 = evaluate_bounds(&fam("complete(5)"), 2, GraphFlags::default());
        assert!(!get(&k2, "nm4").applicable);
        assert!(k5.iter().all(|r| r.value.is_some() == r.applicable));
        let cube = evaluate_bounds(&fam("cube"), 3, GraphFlags::default());
        assert!(get(&cube, "cubic_girth").applicable && get(&cube, "cubic_girth").strict);
        let cube4 = evaluate_bounds(&fam("cube"), 4, GraphFlags::default());
        assert!(!get(&cube4, "cubic_girth").applicable);
    }

    #[test]
    fn planar_gate() {
        let k5 = fam("complete(5)");
        let flags = GraphFlags { planar: true, triangle_free: false };
        assert!(!get(&evaluate_bounds(&k5, 3, flags), "planar_11_15").applicable);
        let oct = evaluate_bounds(&fam("octahedron"), 3, flags);
        assert_eq!(get(&oct, "planar_11_15").value, Some(ratio(22, 5)));
        let grid = fam("grid(3,3)");
        let tf = GraphFlags { planar: true, triangle_free: true };
        let rs = evaluate_bounds(&grid, 3, tf);
        assert_eq!(get(&rs, "planar_tf_2_3").value, Some(int(6) - ratio(4, 9)));
        assert_eq!(get(&rs, "planar_tf_forest_71_128").value, Some(ratio(121 * 9, 192) - ratio(3, 8)));
        assert!(!get(&evaluate_bounds(&fam("octahedron"), 3, tf), "planar_tf_2_3").applicable);
    }

    #[test]
    fn degree_rates() {
        assert_eq!(even_degree_rate(3, 4), ratio(2, 3));
        assert_eq!(even_degree_rate(5, 2), ratio(1, 3));
        assert_eq!(odd_degree_rate(4, 5), ratio(7, 10));
        for k in 3..9 {
            assert_eq!(degree_cap_rate(k, 2), ratio(2, k as i64 + 1));
            assert_eq!(degree_cap_rate(k, 5), ratio(k as i64 + 3, 2 * k as i64 + 2));
        }
        for d in [2usize, 4, 6, 8] {
            assert_eq!(even_degree_rate(3, d), ratio(d as i64, d as i64 + 2));
        }
    }

    #[test]
    fn erdos_gallai_values() {
        assert_eq!(erdos_gallai_bound(8, 3), int(4));
        assert_eq!(erdos_gallai_bound(6, 4), int(6));
        assert_eq!(erdos_gallai_bound(5, 2), int(0));
    }

    #[test]
    fn json_rows() {
        let rs = evaluate_bounds(&fam("cycle(4)"), 3, GraphFlags::default());
        let v: serde_json::Value = serde_json::from_str(&bounds_json(&rs)).unwrap();
        let row = v.as_array().unwrap().iter().find(|r| r["name"] == "nm4").unwrap();
        assert_eq!((row["numerator"].as_str(), row["denominator"].as_str()), (Some("2"), Some("1")));
        assert_eq!(row["kind"], "upper");
    }

    #[test]
    fn best_records() {
        let rs = evaluate_bounds(&fam("cycle(4)"), 3, GraphFlags::default());
        let b = best_upper(&rs).unwrap();
        assert_eq!(b.value, Some(int(2)));
    }
}
