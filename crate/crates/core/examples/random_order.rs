//! Random-order cover: sample vertex orders until the weight threshold is met.

use kpath::bounds::random_order_threshold;
use kpath::construct::{cover_random_order, TraceEvent};
use kpath::graph::{generate_family, FamilySpec};
use kpath::verify::random_order_exists;

fn main() -> kpath::Result<()> {
    let g = generate_family(&FamilySpec::Gnm(8, 12), 4)?;
    let k = 4;
    println!("threshold E = {}", random_order_threshold(&g, k));
    let r = cover_random_order(&g, k, 0, 50)?;
    for e in r.trace.iter().take(5) {
        if let TraceEvent::Sample { index, weight, threshold_met, cover_size } = e {
            println!("sample {index}: weight {weight}, met {threshold_met}, cover {cover_size}");
        }
    }
    println!("best cover {} ≤ {} certified={}", r.size(), r.guarantee_value, r.guarantee_certified);
    if let Some(order) = random_order_exists(&g, k)? {
        println!("first order reaching E: {order:?}");
    }
    Ok(())
}
