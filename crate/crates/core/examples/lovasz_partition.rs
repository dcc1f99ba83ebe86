//! Degree-constrained partition by local search, with its potential.

use kpath::construct::{cover_bounded_degree, lovasz_partition};
use kpath::graph::{generate_family, FamilySpec};

fn main() -> kpath::Result<()> {
    let g = generate_family(&FamilySpec::BoundedDegree { n: 30, m: 80, cap: 6 }, 2)?;
    let (a, b) = (3, 2);
    let p = lovasz_partition(&g, a, b)?;
    println!("Δ={} split into Δ(A) ≤ {a}, Δ(B) ≤ {b}", g.max_degree());
    println!("|A|={} |B|={} after {} moves", p.a_side.len(), p.b_side.len(), p.moves);
    println!("potential {:?}", p.potentials);
    println!("induced maxima: A {} B {}", g.induced(&p.a_side).max_degree(), g.induced(&p.b_side).max_degree());

    let r = cover_bounded_degree(&g, 4)?;
    println!("bounded-degree cover for k=4: {} ≤ {}", r.size(), r.guarantee_value);
    Ok(())
}
