//! All bound records for a graph, checked against the exact value.

use kpath::bounds::{best_lower, best_upper, evaluate_bounds, BoundKind, GraphFlags};
use kpath::exact::psi_exact;
use kpath::graph::{generate_family, FamilySpec};

fn main() -> kpath::Result<()> {
    let g = generate_family(&"stacked_triangulation(12)".parse::<FamilySpec>()?, 3)?;
    let k = 3;
    let psi = psi_exact(&g, k)?.size();
    let records = evaluate_bounds(&g, k, GraphFlags { planar: true, triangle_free: false });
    println!("n={} m={} psi_{k}={psi}", g.n(), g.m());
    for r in &records {
        let kind = if r.kind == BoundKind::Upper { "≤" } else { "≥" };
        match &r.value {
            Some(v) => println!("  {:<24} psi {kind} {v:<8} {}", r.name, if r.is_tight(psi) { "tight" } else { "" }),
            None => println!("  {:<24} n/a ({})", r.name, r.reason),
        }
    }
    let up = best_upper(&records).expect("some upper bound applies");
    println!(
        "best upper {} = {}, best lower {}",
        up.name,
        up.value.as_ref().expect("applicable"),
        best_lower(&records)
    );
    Ok(())
}
