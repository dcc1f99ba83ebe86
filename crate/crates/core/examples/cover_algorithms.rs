//! Every constructive algorithm on one graph, plus the `auto` choice.
//!
//! `cargo run --example cover_algorithms -- 'gnm(14,30)' 3`

use kpath::construct::cover_auto;
use kpath::exact::psi_exact;
use kpath::graph::{generate_family, FamilySpec};
use kpath::verify::harness_methods;

fn main() -> kpath::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let family: FamilySpec = args.first().map_or("gnm(14,30)", String::as_str).parse()?;
    let k: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let g = generate_family(&family, 1)?;
    println!("{family}: n={} m={} Δ={} psi_{k}={}", g.n(), g.m(), g.max_degree(), psi_exact(&g, k)?.size());

    for method in harness_methods(0) {
        match method.run(&g, k) {
            Ok(r) => println!(
                "  {:<26} size {:>2}  {} = {}{}",
                method.to_string(),
                r.size(),
                r.guarantee_name,
                r.guarantee_value,
                if r.guarantee_certified { "" } else { " (uncertified)" }
            ),
            Err(e) => println!("  {:<26} skipped: {e}", method.to_string()),
        }
    }
    let best = cover_auto(&g, k)?;
    println!("auto picked {} with {} vertices", best.algorithm, best.size());
    Ok(())
}
