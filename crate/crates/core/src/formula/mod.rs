//! Monotone circuits: the source language of the compiler and the reference
//! semantics of the verifier.

mod circuit;
mod parser;
mod spec;

pub use circuit::{embed, CircuitBuilder, Gate, MonotoneCircuit, NodeId};
pub use parser::{parse_formula, parse_formula_with_n};
pub use spec::{
    normalize_antichain, subsets_to_circuit, validate_spec, PuzzleSpec, SpecBody, ValidatedSpec,
};
