//! Compile a monotone formula into a hanging and check it on every subset.
//!
//! cargo run --release --example compile_formula -- "r1 & (r2 | r3)"

use picture_hanging::compiler::{compile, CompileOptions, Verification};
use picture_hanging::formula::parse_formula;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "r1 & (r2 | r3)".into());
    let circuit = match parse_formula(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!(
        "formula {circuit}  (n = {}, depth {})",
        circuit.n(),
        circuit.depth()
    );

    let report = compile(&circuit, &CompileOptions::default()).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    println!(
        "{} letters after reduction, {} as constructed, estimate {}",
        report.reduced_length, report.as_constructed_length, report.estimate
    );
    if let Some([a, b]) = report.anchors {
        println!("gadget auxiliaries wrap the fixed nails {a} and {b}");
    }
    match &report.verification {
        Verification::Verified { subsets } => println!("verified on {subsets} subsets"),
        other => println!("{other:?}"),
    }
    if report.word.len() <= 200 {
        println!("{}", report.word);
    }
}
