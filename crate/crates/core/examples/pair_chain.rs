//! The feasible-pair recursion for ψ_3 and a peeling run that realises it.

use kpath::bounds::{pair_chain, pair_step_general, FeasiblePair};
use kpath::construct::{Method, PairBase};
use kpath::graph::{generate_family, FamilySpec};
use kpath::ratio;

fn main() -> kpath::Result<()> {
    let base = FeasiblePair::four_nm9();
    let xs: Vec<usize> = (5..=14).collect();
    for p in &pair_chain(&base, &xs)?[1..] {
        let step = p.provenance.last().expect("one step per pair");
        println!("x={:<2} a={:<6} b={:<6} (q={})", step.x, p.a.to_string(), p.b.to_string(), step.q);
    }

    // a smaller q than the tight 1/63 trades a for b
    let loose = pair_step_general(&base, &ratio(1, 70), &ratio(1, 35), 5)?;
    println!("\ngeneral step q=1/70 w=1/35: ({}, {})", loose.a, loose.b);

    let g = generate_family(&FamilySpec::Complete(9), 0)?;
    let r = Method::PairPeel { base: PairBase::FourNm9, x: 5 }.run(&g, 3)?;
    println!("\npair peel on K9: {} peels, cover {} ≤ {}", r.peel_count(), r.size(), r.guarantee_value);
    Ok(())
}
