//! Which nails should a spectator pull? Exact and greedy answers on the
//! puzzle solutions.
//!
//! cargo run --example spectator

use picture_hanging::puzzles::load_fixtures;
use picture_hanging::spectator::{greedy_min_fell, max_survive_exact, min_fell_exact};

fn main() {
    println!(
        "{:<18} {:>8} {:>8} {:>12}",
        "puzzle", "fell", "greedy", "max survive"
    );
    for f in load_fixtures() {
        let fell = min_fell_exact(&f.word, f.n).unwrap();
        let greedy = greedy_min_fell(&f.word, f.n).unwrap();
        let survive = max_survive_exact(&f.word, f.n).unwrap();
        println!(
            "{:<18} {:>8} {:>8} {:>12}",
            f.name,
            fell.to_string(),
            greedy.to_string(),
            survive.to_string()
        );
    }
}
