//! Sweep all labelled graphs up to 5 vertices plus a few families.

use kpath::verify::{verify_all, CorpusSpec};

fn main() -> kpath::Result<()> {
    let spec = CorpusSpec {
        exhaustive_max_n: 5,
        ..CorpusSpec::families(&[("ktree(12,2)", 10), ("interval(12,4)", 10), ("petersen", 1)], &[3, 4])
    };
    let report = verify_all(&spec)?;
    let t = &report.totals;
    println!("{} graphs, {} bound checks, {} algorithm runs", t.graphs, t.bound_checks, t.algorithm_runs);
    println!("violations: {}", report.violations.len());
    for (name, count) in &report.tight {
        println!("  {name:<24} tight {count}");
    }
    Ok(())
}
