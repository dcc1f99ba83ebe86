//! k-path vertex covers.
//!
//! A set `T` of vertices is a *k-path vertex cover* of `G` when `G - T` has no
//! path on `k` vertices; `ψ_k(G)` is the smallest size of such a set. This
//! crate provides
//!
//! * [`graph`]: the graph type, named and seeded random families, edge-list and
//!   graph6 I/O;
//! * [`paths`]: `P_k` detection, cover validation and longest paths;
//! * [`exact`]: exact `ψ_k`, the linear tree algorithm, independence,
//!   dissociation and forest numbers;
//! * [`construct`]: one constructive algorithm per upper bound, each returning a
//!   validated cover together with the guarantee it claims;
//! * [`chordal`]: recognition, colouring, maximal cliques, clique trees and nice
//!   decompositions;
//! * [`bounds`]: exact rational evaluation of the closed-form bounds and the
//!   feasible-pair recursions;
//! * [`verify`]: corpus sweeps checking every inequality against exact values;
//! * [`cli`]: the command-line front end used by the `kpath` binary.

pub mod bounds;
pub mod chordal;
pub mod cli;
pub mod construct;
pub mod error;
pub mod exact;
pub mod graph;
pub mod paths;
pub mod verify;

mod bits;

pub use error::{Error, Result};
pub use graph::Graph;

/// Exact arbitrary-precision rational; every bound comparison uses it.
pub type Rational = num_rational::BigRational;

/// `Rational` from a small integer fraction.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub(crate) mod ser {
    use crate::Rational;
    use serde::Serializer;

    pub fn rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.collect_str(r),
            None => s.serialize_none(),
        }
    }
}
