//! Families, graph6 and edge lists.

use kpath::graph::{generate_family, parse_auto, write_graph, write_graph6, FamilySpec};
use kpath::verify::enumerate_labeled_graphs;

fn main() -> kpath::Result<()> {
    for spec in ["petersen", "grid(2,3)", "copies(2,cycle(5))", "disjoint_union(star(3),path(4))", "interval(10,3)"] {
        let family: FamilySpec = spec.parse()?;
        let g = generate_family(&family, 1)?;
        let g6 = write_graph6(&g);
        assert_eq!(parse_auto(&g6)?, g);
        println!("{:<34} {g6}", family.to_string());
    }
    let g = generate_family(&FamilySpec::Wheel(4), 0)?;
    print!("edge list of wheel(4):\n{}", write_graph(&g));
    println!("labelled graphs on 4 vertices: {}", enumerate_labeled_graphs(4)?.count());
    Ok(())
}
