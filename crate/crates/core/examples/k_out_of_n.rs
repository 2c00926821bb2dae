//! Threshold hangings from Batcher's sorting network.
//!
//! cargo run --release --example k_out_of_n

use picture_hanging::compiler::{estimate_length, CompileOptions};
use picture_hanging::sortnet::{batcher_network, build_k_of_n, threshold_circuit};

fn main() {
    for n in [2u32, 4, 8] {
        let net = batcher_network(n);
        println!(
            "batcher({n}): {} comparators in {} layers",
            net.comparator_count(),
            net.depth()
        );
    }

    let options = CompileOptions::default();
    for (k, n) in [(1, 3), (2, 3), (3, 4), (2, 4), (2, 5)] {
        let c = threshold_circuit(k, n);
        print!(
            "{k}-of-{n}: depth {}, estimate {:>9}  ",
            c.depth(),
            estimate_length(&c)
        );
        match build_k_of_n(k, n, &options) {
            Ok(r) => println!(
                "{} letters, verified: {}",
                r.reduced_length,
                r.verification.is_verified()
            ),
            Err(e) => println!("{e}"),
        }
    }
}
