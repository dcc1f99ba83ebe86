//! Feasible pairs `(a, b)` with `ψ_k(G) ≤ a·n + b·m` for all graphs, and the
//! recursions producing new pairs from old ones.

use crate::error::{Error, Result};
use crate::{int, ratio, Rational};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// One recursion step recorded in a pair's provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairStep {
    #[serde(serialize_with = "crate::ser::rational")]
    pub from_a: Rational,
    #[serde(serialize_with = "crate::ser::rational")]
    pub from_b: Rational,
    pub x: usize,
    #[serde(serialize_with = "crate::ser::rational")]
    pub q: Rational,
    #[serde(serialize_with = "crate::ser::rational")]
    pub w: Rational,
    /// `x·q`, the increase of `a`.
    #[serde(serialize_with = "crate::ser::rational")]
    pub y: Rational,
    /// `false` for the basic step (`w = 2q` with the tight `q`).
    pub general: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasiblePair {
    pub k: usize,
    #[serde(serialize_with = "crate::ser::rational")]
    pub a: Rational,
    #[serde(serialize_with = "crate::ser::rational")]
    pub b: Rational,
    /// Name of the bound the chain starts from.
    pub origin: String,
    pub provenance: Vec<PairStep>,
}

impl FeasiblePair {
    pub fn new(k: usize, a: Rational, b: Rational, origin: impl Into<String>) -> Result<Self> {
        if a.is_negative() || b.is_negative() {
            return Err(Error::PairConstraint(format!("({a}, {b}) has a negative entry")));
        }
        Ok(FeasiblePair { k, a, b, origin: origin.into(), provenance: Vec::new() })
    }

    /// `(4/9, 1/9)` for `k = 3`.
    pub fn four_nm9() -> Self {
        FeasiblePair::new(3, ratio(4, 9), ratio(1, 9), "4nm9").expect("non-negative")
    }

    pub fn eval(&self, n: usize, m: usize) -> Rational {
        &self.a * int(n as i64) + &self.b * int(m as i64)
    }

    pub fn same_values(&self, other: &FeasiblePair) -> bool {
        self.a == other.a && self.b == other.b
    }

    /// Admissible range `(1-a-b)/b ≤ x ≤ (2-2a)/b` for [`pair_step`].
    pub fn x_range(&self) -> Result<(Rational, Rational)> {
        if self.b.is_zero() {
            return Err(Error::PairConstraint("b = 0 admits no step".into()));
        }
        let one = int(1);
        let lo = (&one - &self.a - &self.b) / &self.b;
        let hi = (int(2) - int(2) * &self.a) / &self.b;
        Ok((lo, hi))
    }
}

impl fmt::Display for FeasiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.a, self.b)
    }
}

/// Parses `a,b` with rational entries such as `4/9,1/9`.
pub fn parse_pair(k: usize, s: &str) -> Result<FeasiblePair> {
    let (a, b) = s.split_once(',').ok_or_else(|| Error::PairConstraint(format!("expected `a,b`, got `{s}`")))?;
    FeasiblePair::new(k, parse_rational(a)?, parse_rational(b)?, s.trim())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::PairConstraint(format!("`{s}` is not a rational")))
}

/// `a' = a + bx - x(1+b-a)/(x+2)`, `b' = (2-2a-bx)/(x+2)`.
pub fn pair_step(p: &FeasiblePair, x: usize) -> Result<FeasiblePair> {
    let (lo, hi) = p.x_range()?;
    let xr = int(x as i64);
    if x == 0 || xr < lo || xr > hi {
        return Err(Error::PairConstraint(format!("x = {x} outside [{lo}, {hi}] for ({}, {})", p.a, p.b)));
    }
    let q = (&p.a + &p.b + &p.b * &xr - int(1)) / (&xr + int(2));
    let y = &xr * &q;
    let a2 = &p.a + &p.b * &xr - &xr * (int(1) + &p.b - &p.a) / (&xr + int(2));
    let b2 = (int(2) - int(2) * &p.a - &p.b * &xr) / (&xr + int(2));
    debug_assert_eq!(a2, &p.a + &y);
    let step = PairStep { from_a: p.a.clone(), from_b: p.b.clone(), x, w: int(2) * &q, q, y, general: false };
    let mut provenance = p.provenance.clone();
    provenance.push(step);
    Ok(FeasiblePair { k: p.k, a: a2, b: b2, origin: p.origin.clone(), provenance })
}

/// `(a + qx, b - w)` subject to `q, w > 0`, `w ≤ 2q`, `a + qx < 1` and
/// `w ≤ ((a+b-1) + (q+b)x)/(x+1)`.
pub fn pair_step_general(p: &FeasiblePair, q: &Rational, w: &Rational, x: usize) -> Result<FeasiblePair> {
    let xr = int(x as i64);
    let fail = |what: &str| Err(Error::PairConstraint(format!("{what} (q = {q}, w = {w}, x = {x})")));
    if x == 0 {
        return fail("x must be positive");
    }
    if !q.is_positive() || !w.is_positive() {
        return fail("q and w must be positive");
    }
    if *w > int(2) * q {
        return fail("w > 2q");
    }
    let a2 = &p.a + q * &xr;
    if a2 >= int(1) {
        return fail("a + qx ≥ 1");
    }
    let cap = (&p.a + &p.b - int(1) + (q + &p.b) * &xr) / (&xr + int(1));
    if *w > cap {
        return fail("w exceeds ((a+b-1)+(q+b)x)/(x+1)");
    }
    let b2 = &p.b - w;
    if !b2.is_positive() {
        return Err(Error::Internal(format!("general step produced b' = {b2}")));
    }
    let step =
        PairStep { from_a: p.a.clone(), from_b: p.b.clone(), x, q: q.clone(), w: w.clone(), y: q * &xr, general: true };
    let mut provenance = p.provenance.clone();
    provenance.push(step);
    Ok(FeasiblePair { k: p.k, a: a2, b: b2, origin: p.origin.clone(), provenance })
}

/// `[base, step(base, xs[0]), step(.., xs[1]), ...]`.
pub fn pair_chain(base: &FeasiblePair, xs: &[usize]) -> Result<Vec<FeasiblePair>> {
    let mut out = vec![base.clone()];
    for &x in xs {
        let next = pair_step(out.last().expect("non-empty"), x)?;
        out.push(next);
    }
    Ok(out)
}

/// The ten pairs obtained from `(4/9, 1/9)` with `x = 5, 6, ..., 14`.
pub fn standard_chain() -> Vec<FeasiblePair> {
    let xs: Vec<usize> = (5..=14).collect();
    let mut chain = pair_chain(&FeasiblePair::four_nm9(), &xs).expect("all steps admissible");
    chain.remove(0);
    chain
}
