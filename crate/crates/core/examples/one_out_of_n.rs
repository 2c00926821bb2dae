//! The 1-out-of-n family: the iterated commutator S_n and its balanced
//! version E(1:n), with their lengths and fall behaviour.
//!
//! cargo run --example one_out_of_n -- 6

use picture_hanging::constructions::{build_e, build_s, e_length};
use picture_hanging::freegroup::fall_table;

fn main() {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let s = build_s(n).expect("n >= 1");
    let e = build_e(&(1..=n).collect::<Vec<_>>()).expect("n >= 1");
    println!("S_{n}    ({} letters): {s}", s.len());
    println!(
        "E(1:{n}) ({} letters, closed form {}): {e}",
        e.len(),
        e_length(n as u64)
    );

    let table = fall_table(&e, n).expect("small n");
    let hanging: Vec<_> = table
        .values()
        .iter()
        .enumerate()
        .filter(|(_, &f)| !f)
        .collect();
    println!("subsets that leave E hanging: {}", hanging.len());
    assert_eq!(hanging.len(), 1);
}
