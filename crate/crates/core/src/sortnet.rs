//! Threshold functions from comparator networks.
//!
//! On 0/1 values a comparator's top (minimum) output is the AND of its inputs
//! and its bottom (maximum) output the OR, so every wire of a sorting network
//! is a monotone circuit. After an ascending sort the `(n - k + 1)`-st wire is
//! 1 exactly when at least `k` inputs are 1.
//!
//! Networks are Batcher's odd-even merge sort: depth `O(log² n)` with small
//! constants, which beats the asymptotically better logarithmic-depth
//! constructions at every size that can actually be compiled.

use serde::Serialize;

use crate::compiler::{compile, CompileOptions, CompileReport};
use crate::error::Error;
use crate::formula::{CircuitBuilder, MonotoneCircuit, NodeId};

/// Compare-exchange of two wires; the smaller value leaves on `top`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Comparator {
    pub top: u32,
    pub bottom: u32,
}

/// Wires are numbered `1..=width`. Comparators inside one layer touch
/// disjoint wires.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparatorNetwork {
    width: u32,
    layers: Vec<Vec<Comparator>>,
}

impl ComparatorNetwork {
    pub fn new(width: u32, layers: Vec<Vec<Comparator>>) -> Result<Self, String> {
        for (d, layer) in layers.iter().enumerate() {
            let mut seen = vec![false; width as usize + 1];
            for c in layer {
                for w in [c.top, c.bottom] {
                    if w == 0 || w > width {
                        return Err(format!("layer {d}: wire {w} outside 1..={width}"));
                    }
                    if std::mem::replace(&mut seen[w as usize], true) {
                        return Err(format!("layer {d}: wire {w} used twice"));
                    }
                }
            }
        }
        Ok(ComparatorNetwork { width, layers })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn layers(&self) -> &[Vec<Comparator>] {
        &self.layers
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn comparator_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Runs the network in place. `values.len()` must equal the width.
    pub fn apply<T: Ord>(&self, values: &mut [T]) {
        assert_eq!(values.len(), self.width as usize);
        for layer in &self.layers {
            for c in layer {
                let (t, b) = (c.top as usize - 1, c.bottom as usize - 1);
                if values[t] > values[b] {
                    values.swap(t, b);
                }
            }
        }
    }

    /// Circuits for every output wire, given the circuit nodes feeding each
    /// input wire.
    pub fn wire_nodes(&self, builder: &mut CircuitBuilder, inputs: &[NodeId]) -> Vec<NodeId> {
        assert_eq!(inputs.len(), self.width as usize);
        let mut wires = inputs.to_vec();
        for layer in &self.layers {
            for c in layer {
                let (t, b) = (c.top as usize - 1, c.bottom as usize - 1);
                let low = builder.and(wires[t], wires[b]);
                let high = builder.or(wires[t], wires[b]);
                wires[t] = low;
                wires[b] = high;
            }
        }
        wires
    }
}

/// Batcher's odd-even merge sort on `n` wires.
///
/// For `n` not a power of two the network for the next power is pruned of
/// every comparator that touches a wire above `n`; those wires behave as
/// `+∞` inputs, so the pruned comparators never move anything.
pub fn batcher_network(n: u32) -> ComparatorNetwork {
    assert!(n >= 1, "a network needs at least one wire");
    let size = n.next_power_of_two() as usize;
    let mut layers = Vec::new();
    let mut p = 1;
    while p < size {
        let mut k = p;
        while k >= 1 {
            let mut layer = Vec::new();
            let mut j = k % p;
            while j + k < size {
                for i in 0..k.min(size - j - k) {
                    if (i + j) / (2 * p) == (i + j + k) / (2 * p) {
                        let (top, bottom) = (i + j + 1, i + j + k + 1);
                        if bottom <= n as usize {
                            layer.push(Comparator {
                                top: top as u32,
                                bottom: bottom as u32,
                            });
                        }
                    }
                }
                j += 2 * k;
            }
            if !layer.is_empty() {
                layers.push(layer);
            }
            k /= 2;
        }
        p *= 2;
    }
    ComparatorNetwork::new(n, layers).expect("batcher layers are disjoint")
}

/// The circuit computed at `output_wire` (1-based) with inputs `r1..r_width`.
pub fn network_to_circuit(net: &ComparatorNetwork, output_wire: u32) -> MonotoneCircuit {
    assert!(
        output_wire >= 1 && output_wire <= net.width(),
        "output wire {output_wire} outside 1..={}",
        net.width()
    );
    let mut b = CircuitBuilder::new(net.width());
    let inputs: Vec<_> = (1..=net.width()).map(|i| b.input(i)).collect();
    let wires = net.wire_nodes(&mut b, &inputs);
    b.finish(wires[output_wire as usize - 1])
}

/// "At least `k` of `inputs` are true", built into `builder`.
///
/// The inputs sit on the top wires of a power-of-two Batcher network whose
/// remaining low wires carry constant FALSE; constant folding then removes
/// the padding.
pub fn threshold_node(builder: &mut CircuitBuilder, inputs: &[NodeId], k: usize) -> NodeId {
    let n = inputs.len();
    if k == 0 {
        return builder.constant(true);
    }
    if k > n {
        return builder.constant(false);
    }
    let width = n.next_power_of_two();
    let pad = width - n;
    let net = batcher_network(width as u32);
    let falsity = builder.constant(false);
    let mut wires = vec![falsity; pad];
    wires.extend_from_slice(inputs);
    let outputs = net.wire_nodes(builder, &wires);
    // FALSE sorts to the bottom pad positions; the real wires follow in order
    outputs[pad + (n - k)]
}

/// The threshold function `|removed| >= k` over `n` variables.
pub fn threshold_circuit(k: u32, n: u32) -> MonotoneCircuit {
    let mut b = CircuitBuilder::new(n);
    let inputs: Vec<_> = (1..=n).map(|i| b.input(i)).collect();
    let out = threshold_node(&mut b, &inputs, k as usize);
    b.finish(out)
}

/// A hanging on `n` nails that falls exactly when at least `k` nails are
/// removed.
pub fn build_k_of_n(k: u32, n: u32, options: &CompileOptions) -> Result<CompileReport, Error> {
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    compile(&threshold_circuit(k, n), options)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::NailSubset;

    fn sorts_all_bit_vectors(net: &ComparatorNetwork) -> bool {
        let n = net.width();
        (0..1u32 << n).all(|bits| {
            let mut v: Vec<u8> = (0..n).map(|i| (bits >> i & 1) as u8).collect();
            net.apply(&mut v);
            v.windows(2).all(|w| w[0] <= w[1])
        })
    }

    #[test]
    fn small_networks() {
        assert_eq!(batcher_network(1).comparator_count(), 0);
        assert_eq!(
            batcher_network(2).layers(),
            &[vec![Comparator { top: 1, bottom: 2 }]]
        );
        let four = batcher_network(4);
        assert_eq!(four.comparator_count(), 5);
        assert_eq!(four.depth(), 3);
        assert!(sorts_all_bit_vectors(&four));
    }

    #[test]
    fn zero_one_principle_up_to_twelve() {
        for n in 1..=12 {
            assert!(sorts_all_bit_vectors(&batcher_network(n)), "n = {n}");
        }
    }

    #[test]
    fn two_wire_circuits() {
        let net = batcher_network(2);
        let min = network_to_circuit(&net, 1);
        let max = network_to_circuit(&net, 2);
        assert_eq!(min.to_string(), "r1 & r2");
        assert_eq!(max.to_string(), "r1 | r2");
    }

    #[test]
    fn middle_of_three_is_majority() {
        let c = network_to_circuit(&batcher_network(3), 2);
        for mask in 0..8u64 {
            let s = NailSubset::from_mask(3, mask).unwrap();
            assert_eq!(c.eval(&s), mask.count_ones() >= 2);
        }
    }

    #[test]
    fn thresholds_match_counting() {
        for n in 1..=7 {
            for k in 0..=n + 1 {
                let c = threshold_circuit(k, n);
                for mask in 0..1u64 << n {
                    let s = NailSubset::from_mask(n, mask).unwrap();
                    assert_eq!(c.eval(&s), s.len() >= k, "k={k} n={n} s={s}");
                }
                if k >= 1 && k <= n {
                    assert!(c.depth() as usize <= batcher_network(n.next_power_of_two()).depth());
                }
            }
        }
    }

    #[test]
    fn rejects_bad_layers() {
        let c = Comparator { top: 1, bottom: 2 };
        assert!(ComparatorNetwork::new(2, vec![vec![c, c]]).is_err());
        assert!(ComparatorNetwork::new(1, vec![vec![c]]).is_err());
    }

    #[test]
    fn k_out_of_range() {
        let o = CompileOptions::default();
        assert!(matches!(
            build_k_of_n(0, 3, &o),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            build_k_of_n(4, 3, &o),
            Err(Error::KOutOfRange { .. })
        ));
    }
}
