//! Set Cover as picture hanging: the fewest nails that fell the encoded
//! picture pick out a minimum cover.
//!
//! cargo run --release --example set_cover

use picture_hanging::spectator::{min_fell_exact, set_cover_optimum, set_cover_to_hanging};

fn main() {
    let m = 4;
    let sets = vec![
        vec![1, 2],
        vec![2, 3],
        vec![3, 4],
        vec![1, 4],
        vec![1, 2, 3],
    ];
    let h = set_cover_to_hanging(m, &sets).unwrap();
    println!(
        "{} sets over u1..u{m}: {} letters",
        sets.len(),
        h.word.len()
    );
    for (j, nails) in h.element_nails.iter().enumerate() {
        println!("  u{} is covered by nails {nails:?}", j + 1);
    }

    let cover = min_fell_exact(&h.word, h.n).unwrap();
    println!("fewest nails that fell the picture: {cover}");
    for i in cover.iter() {
        println!("  S{i} = {:?}", sets[i as usize - 1]);
    }
    assert_eq!(Some(cover.len()), set_cover_optimum(m, &sets));
}
