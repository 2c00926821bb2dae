use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::freegroup::{NailSubset, TruthTable, DEFAULT_EXHAUSTIVE_LIMIT};

/// Index of a gate inside its circuit.
pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    /// Removal variable `r<i>`, 1-based.
    Input(u32),
    Const(bool),
    And(NodeId, NodeId),
    Or(NodeId, NodeId),
}

/// A DAG of two-input AND/OR gates over `r1..rn`.
///
/// Gates are stored in topological order (operands precede their users), so
/// acyclicity holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneCircuit {
    n: u32,
    gates: Vec<Gate>,
    output: NodeId,
}

impl MonotoneCircuit {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> NodeId {
        self.output
    }

    pub fn gate(&self, id: NodeId) -> Gate {
        self.gates[id]
    }

    /// A single variable.
    pub fn input(n: u32, i: u32) -> Self {
        let mut b = CircuitBuilder::new(n);
        let out = b.input(i);
        b.finish(out)
    }

    pub fn constant(n: u32, value: bool) -> Self {
        let mut b = CircuitBuilder::new(n);
        let out = b.constant(value);
        b.finish(out)
    }

    /// `Some(v)` when the whole circuit folded to a constant.
    pub fn as_constant(&self) -> Option<bool> {
        match self.gates[self.output] {
            Gate::Const(v) => Some(v),
            _ => None,
        }
    }

    /// Gate count excluding inputs and constants.
    pub fn gate_count(&self) -> usize {
        self.gates
            .iter()
            .filter(|g| matches!(g, Gate::And(..) | Gate::Or(..)))
            .count()
    }

    /// Longest input-to-output path, counted in gates.
    pub fn depth(&self) -> u32 {
        let mut depth = vec![0u32; self.gates.len()];
        for (id, gate) in self.gates.iter().enumerate() {
            depth[id] = match *gate {
                Gate::Input(_) | Gate::Const(_) => 0,
                Gate::And(a, b) | Gate::Or(a, b) => 1 + depth[a].max(depth[b]),
            };
        }
        depth[self.output]
    }

    /// Values of every gate under `assignment` (nail removed ⇔ variable true).
    pub fn eval_all(&self, assignment: &NailSubset) -> Vec<bool> {
        let mut values = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let v = match *gate {
                Gate::Input(i) => assignment.contains(i),
                Gate::Const(c) => c,
                Gate::And(a, b) => values[a] && values[b],
                Gate::Or(a, b) => values[a] || values[b],
            };
            values.push(v);
        }
        values
    }

    pub fn eval(&self, assignment: &NailSubset) -> bool {
        self.eval_all(assignment)[self.output]
    }

    /// Exhaustive table over all `2^n` assignments.
    pub fn table(&self) -> Result<TruthTable, Error> {
        self.table_with_limit(DEFAULT_EXHAUSTIVE_LIMIT)
    }

    pub fn table_with_limit(&self, limit: u32) -> Result<TruthTable, Error> {
        TruthTable::tabulate(self.n, limit, |s| self.eval(s))
    }

    /// The same function over a larger variable range.
    pub fn widen(&self, n: u32) -> Self {
        assert!(n >= self.n, "cannot narrow a circuit");
        MonotoneCircuit {
            n,
            gates: self.gates.clone(),
            output: self.output,
        }
    }

    fn fmt_node(&self, id: NodeId, parent_is_and: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gates[id] {
            Gate::Input(i) => write!(f, "r{i}"),
            Gate::Const(v) => write!(f, "{v}"),
            Gate::And(a, b) => {
                self.fmt_node(a, true, f)?;
                f.write_str(" & ")?;
                // right operands are parenthesized so the left-associative
                // parser rebuilds the same tree
                self.fmt_operand(b, true, f)
            }
            Gate::Or(a, b) => {
                if parent_is_and {
                    f.write_str("(")?;
                }
                self.fmt_node(a, false, f)?;
                f.write_str(" | ")?;
                self.fmt_operand(b, false, f)?;
                if parent_is_and {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }

    fn fmt_operand(
        &self,
        id: NodeId,
        parent_is_and: bool,
        f: &mut fmt::Formatter<'_>,
    ) -> fmt::Result {
        let same_kind = matches!(
            (self.gates[id], parent_is_and),
            (Gate::And(..), true) | (Gate::Or(..), false)
        );
        if same_kind {
            f.write_str("(")?;
            self.fmt_node(id, parent_is_and, f)?;
            f.write_str(")")
        } else {
            self.fmt_node(id, parent_is_and, f)
        }
    }
}

impl fmt::Display for MonotoneCircuit {
    /// Formula text accepted by the parser. Shared gates are written out once
    /// per use.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_node(self.output, false, f)
    }
}

/// Hash-consing circuit builder with constant folding.
#[derive(Debug, Clone)]
pub struct CircuitBuilder {
    n: u32,
    gates: Vec<Gate>,
    cache: HashMap<Gate, NodeId>,
}

impl CircuitBuilder {
    pub fn new(n: u32) -> Self {
        CircuitBuilder {
            n,
            gates: Vec::new(),
            cache: HashMap::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn intern(&mut self, gate: Gate) -> NodeId {
        if let Some(&id) = self.cache.get(&gate) {
            return id;
        }
        let id = self.gates.len();
        self.gates.push(gate);
        self.cache.insert(gate, id);
        id
    }

    pub fn input(&mut self, i: u32) -> NodeId {
        assert!(
            i >= 1 && i <= self.n,
            "variable r{i} outside 1..={}",
            self.n
        );
        self.intern(Gate::Input(i))
    }

    pub fn constant(&mut self, value: bool) -> NodeId {
        self.intern(Gate::Const(value))
    }

    fn const_value(&self, id: NodeId) -> Option<bool> {
        match self.gates[id] {
            Gate::Const(v) => Some(v),
            _ => None,
        }
    }

    pub fn and(&mut self, a: NodeId, b: NodeId) -> NodeId {
        match (self.const_value(a), self.const_value(b)) {
            (Some(false), _) | (_, Some(false)) => self.constant(false),
            (Some(true), _) => b,
            (_, Some(true)) => a,
            _ => self.intern(Gate::And(a, b)),
        }
    }

    pub fn or(&mut self, a: NodeId, b: NodeId) -> NodeId {
        match (self.const_value(a), self.const_value(b)) {
            (Some(true), _) | (_, Some(true)) => self.constant(true),
            (Some(false), _) => b,
            (_, Some(false)) => a,
            _ => self.intern(Gate::Or(a, b)),
        }
    }

    /// Balanced AND tree; the first half takes the extra operand. Empty input
    /// gives TRUE.
    pub fn and_all(&mut self, operands: &[NodeId]) -> NodeId {
        match operands {
            [] => self.constant(true),
            [one] => *one,
            _ => {
                let mid = operands.len().div_ceil(2);
                let left = self.and_all(&operands[..mid]);
                let right = self.and_all(&operands[mid..]);
                self.and(left, right)
            }
        }
    }

    /// Balanced OR tree. Empty input gives FALSE.
    pub fn or_all(&mut self, operands: &[NodeId]) -> NodeId {
        match operands {
            [] => self.constant(false),
            [one] => *one,
            _ => {
                let mid = operands.len().div_ceil(2);
                let left = self.or_all(&operands[..mid]);
                let right = self.or_all(&operands[mid..]);
                self.or(left, right)
            }
        }
    }

    /// Left-associated chain, as the parser builds `a & b & c`.
    pub fn and_chain(&mut self, operands: &[NodeId]) -> NodeId {
        let (first, rest) = operands.split_first().expect("empty chain");
        rest.iter().fold(*first, |acc, &x| self.and(acc, x))
    }

    pub fn or_chain(&mut self, operands: &[NodeId]) -> NodeId {
        let (first, rest) = operands.split_first().expect("empty chain");
        rest.iter().fold(*first, |acc, &x| self.or(acc, x))
    }

    /// Keeps only the gates reachable from `output`, renumbered in order.
    pub fn finish(self, output: NodeId) -> MonotoneCircuit {
        let mut reachable = vec![false; self.gates.len()];
        reachable[output] = true;
        for id in (0..self.gates.len()).rev() {
            if !reachable[id] {
                continue;
            }
            if let Gate::And(a, b) | Gate::Or(a, b) = self.gates[id] {
                reachable[a] = true;
                reachable[b] = true;
            }
        }
        let mut remap = vec![usize::MAX; self.gates.len()];
        let mut gates = Vec::new();
        for (id, gate) in self.gates.iter().enumerate() {
            if !reachable[id] {
                continue;
            }
            remap[id] = gates.len();
            gates.push(match *gate {
                Gate::And(a, b) => Gate::And(remap[a], remap[b]),
                Gate::Or(a, b) => Gate::Or(remap[a], remap[b]),
                other => other,
            });
        }
        MonotoneCircuit {
            n: self.n,
            gates,
            output: remap[output],
        }
    }
}

/// Copies `circuit` into `builder`, returning the node of its output.
/// Constants are folded on the way in.
pub fn embed(builder: &mut CircuitBuilder, circuit: &MonotoneCircuit) -> NodeId {
    let mut map = Vec::with_capacity(circuit.gates.len());
    for gate in &circuit.gates {
        let id = match *gate {
            Gate::Input(i) => builder.input(i),
            Gate::Const(v) => builder.constant(v),
            Gate::And(a, b) => builder.and(map[a], map[b]),
            Gate::Or(a, b) => builder.or(map[a], map[b]),
        };
        map.push(id);
    }
    map[circuit.output]
}
