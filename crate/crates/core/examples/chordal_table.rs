//! Colour-class coefficient against clique coefficient for chordal graphs.
//! The smaller of each pair is starred.

use kpath::bounds::{render_table, table_chordal};

fn main() {
    let rows = table_chordal(&[2, 3, 4, 5, 6], &[2, 3, 4, 5]);
    println!("       colour classes (ω=2..5)      clique (ω=2..5)");
    print!("{}", render_table(&rows));
}
