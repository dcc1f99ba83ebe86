//! Clique tree, nice decomposition and the decomposition-based cover of a
//! random 2-tree.

use kpath::chordal::{clique_number, clique_tree, max_cliques, mcs_order, nice_decomposition};
use kpath::construct::{cover_chordal_classes, cover_chordal_decomp, TraceEvent};
use kpath::graph::{generate_family, FamilySpec};

fn main() -> kpath::Result<()> {
    let g = generate_family(&FamilySpec::KTree { n: 14, width: 2 }, 5)?;
    println!("perfect elimination order {:?}", mcs_order(&g).order);
    println!("ω = {}, {} maximal cliques", clique_number(&g)?, max_cliques(&g)?.len());

    let ct = clique_tree(&g)?;
    let nice = nice_decomposition(&ct)?;
    nice.validate(&g)?;
    println!("nice decomposition: {} nodes, width {}", nice.len(), nice.width());
    for line in nice.dump().lines().take(8) {
        println!("{line}");
    }
    println!("...");

    let k = 3;
    let decomp = cover_chordal_decomp(&g, k)?;
    for e in &decomp.trace {
        if let TraceEvent::Select { bag, subtree_size, .. } = e {
            println!("take bag {bag:?} covering a subtree of {subtree_size}");
        }
    }
    println!("decomposition cover {} ≤ {}", decomp.size(), decomp.guarantee_value);
    let classes = cover_chordal_classes(&g, k)?;
    println!("colour-class cover {} ≤ {}", classes.size(), classes.guarantee_value);
    Ok(())
}
