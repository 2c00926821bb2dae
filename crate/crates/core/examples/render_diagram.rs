//! Weaving diagrams as SVG or plain text.
//!
//! cargo run --example render_diagram -- text "x1 x2 X1 X2"

use picture_hanging::freegroup::Word;
use picture_hanging::render::{to_diagram, Format};

fn main() {
    let mut args = std::env::args().skip(1);
    let format: Format = args
        .next()
        .as_deref()
        .unwrap_or("text")
        .parse()
        .unwrap_or_else(|e| {
            eprintln!("{e}");
            std::process::exit(2);
        });
    let word: Word = args
        .next()
        .as_deref()
        .unwrap_or("x1 x2 X1 X2")
        .parse()
        .expect("word text such as x1 x2 X1 X2");
    print!("{}", to_diagram(&word, word.max_nail(), format).unwrap());
}
