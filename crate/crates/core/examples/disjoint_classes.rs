//! Nails in color classes: the picture falls once some class is gone.
//!
//! cargo run --example disjoint_classes

use picture_hanging::constructions::build_disjoint;
use picture_hanging::freegroup::fall_table;

fn main() {
    let classes = vec![vec![1, 2], vec![3, 4], vec![5, 6]];
    let n = 6;
    let w = build_disjoint(n, &classes).unwrap();
    println!("classes {classes:?}");
    println!(
        "word ({} letters, bound 2kn = {}): {w}",
        w.len(),
        2 * classes.len() * n as usize
    );

    let table = fall_table(&w, n).unwrap();
    println!("minimal felling sets:");
    for s in table.minimal_true_subsets() {
        println!("  {s}");
    }
}
