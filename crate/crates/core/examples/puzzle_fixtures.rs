//! The eleven classic puzzles, their solutions and a check of each.
//!
//! cargo run --example puzzle_fixtures

use picture_hanging::freegroup::fall_table;
use picture_hanging::puzzles::load_fixtures;

fn main() {
    for f in load_fixtures() {
        let expected = f.spec.to_circuit().unwrap().table().unwrap();
        let actual = fall_table(&f.word, f.n).unwrap();
        let status = match expected.first_mismatch(&actual) {
            None => "ok".to_string(),
            Some(m) => format!("differs at {}", m.subset),
        };
        println!(
            "{:>2} {:<18} {:>3} letters  {status}",
            f.id,
            f.name,
            f.word.len()
        );
        println!("   {}", f.statement);
    }
}
