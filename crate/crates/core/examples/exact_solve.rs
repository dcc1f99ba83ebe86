//! Exact ψ_k for a few named graphs, with the optimal cover.
//!
//! `cargo run --example exact_solve`

use kpath::exact::{diss_exact, psi_exact, psi_tree_exact};
use kpath::graph::{generate_family, FamilySpec};

fn main() -> kpath::Result<()> {
    for name in ["petersen", "octahedron", "complete_minus_pm(6)", "cube", "grid(3,4)"] {
        let g = generate_family(&name.parse::<FamilySpec>()?, 0)?;
        let values: Vec<String> =
            (2..=6).map(|k| Ok(psi_exact(&g, k)?.size().to_string())).collect::<kpath::Result<_>>()?;
        println!("{name:<22} n={:<2} m={:<2} psi_2..6 = {}", g.n(), g.m(), values.join(" "));
    }

    let g = generate_family(&FamilySpec::Petersen, 0)?;
    let c = psi_exact(&g, 3)?;
    println!(
        "\npetersen k=3 cover {:?}, optimal={}, longest residual path {}",
        c.cover, c.optimal, c.residual_longest_path
    );
    println!("dissociation number {}", diss_exact(&g)?);

    // trees have a linear-time exact algorithm
    let t = generate_family(&FamilySpec::RandomTree(40), 7)?;
    for k in 3..=5 {
        println!("random tree n=40 k={k}: psi = {}", psi_tree_exact(&t, k)?.size());
    }
    Ok(())
}
