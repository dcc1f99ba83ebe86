//! Open upper bounds for planar and chordal graphs, checked exactly.

use kpath::verify::{conjecture_scan, cubic_girth_check, standard_cubic_corpus, ConjectureCorpus};

fn main() -> kpath::Result<()> {
    let report = conjecture_scan(&ConjectureCorpus::standard()?)?;
    println!("{} checks, {} counterexamples", report.checked, report.counterexamples.len());
    for h in &report.exact {
        println!("  equality: {} {} k={} psi={}", h.conjecture, h.id, h.k, h.psi);
    }
    for row in cubic_girth_check(&standard_cubic_corpus()?, &[3, 4])? {
        if let (Some(psi), Some(holds)) = (row.psi, row.holds) {
            println!("  cubic {} k={} psi={psi} > n/4: {holds}", row.id, row.k);
        }
    }
    Ok(())
}
