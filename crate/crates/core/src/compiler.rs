//! Monotone circuit to hanging compiler.
//!
//! A variable `r_i` becomes the single wrap `x_i`. Gates combine the hangings
//! `p` and `q` of their operands:
//!
//! ```text
//! AND(p, q) = p² a p² a⁻¹ (q b q b⁻¹)⁻²
//! OR(p, q)  = AND( AND([A⁺, B⁺], [A⁺, B⁻]), AND([A⁻, B⁺], [A⁻, B⁻]) )
//!             where A^s = p a^s p a^-s,  B^t = q b^t q b^-t
//! ```
//!
//! `a` and `b` are two auxiliary generators. Both identities hold in a free
//! group in which `a` and `b` are basis elements. That stops being true once
//! `a` or `b` is itself pulled out: with both gone every commutator in OR
//! equals `[p², q²]` and `AND(c, c)` collapses. Reusing nails 1 and 2 as the
//! auxiliaries ([`Auxiliary::Shared`]) therefore gives wrong fall tables on
//! some removals of those nails. The default, [`Auxiliary::Anchored`], wraps
//! two extra nails `n + 1` and `n + 2` that are never removed, and the fall
//! function over nails `1..=n` is then exactly the circuit.
//!
//! Shared subcircuits are expanded once per use, and each gadget's result is
//! freely reduced before it is fed to the next gate.

use serde::Serialize;

use crate::error::Error;
use crate::formula::{validate_spec, Gate, MonotoneCircuit, PuzzleSpec};
use crate::freegroup::{fall_table_with_limit, Letter, Word, WordExpr, DEFAULT_EXHAUSTIVE_LIMIT};

/// Per-gate growth constant used for the `c^d` length bound.
pub const GATE_GROWTH_BOUND: u64 = 1078;

/// Default cap on the estimated letter count of a compile.
pub const DEFAULT_LETTER_BUDGET: u64 = 10_000_000;

/// Which nails the gadgets wrap as their auxiliary generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Auxiliary {
    /// Nails `n + 1` and `n + 2`, never removed.
    #[default]
    Anchored,
    /// Nails 1 and 2, shared with the variables `r1` and `r2`.
    Shared,
}

/// The two auxiliary nails of a gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuxNails {
    pub first: u32,
    pub second: u32,
}

impl AuxNails {
    pub const SHARED: AuxNails = AuxNails {
        first: 1,
        second: 2,
    };

    pub fn anchored(n: u32) -> Self {
        AuxNails {
            first: n + 1,
            second: n + 2,
        }
    }

    pub fn for_mode(mode: Auxiliary, n: u32) -> Self {
        match mode {
            Auxiliary::Anchored => AuxNails::anchored(n),
            Auxiliary::Shared => AuxNails::SHARED,
        }
    }
}

fn wrap(nail: u32, exponent: i64) -> WordExpr {
    let letter = if exponent > 0 {
        Letter::cw(nail)
    } else {
        Letter::ccw(nail)
    };
    WordExpr::letter(letter)
}

/// `p² a p² a⁻¹ (q b q b⁻¹)⁻²`, as constructed.
pub fn and_template(p: &WordExpr, q: &WordExpr, aux: AuxNails) -> WordExpr {
    let p2 = p.power(2);
    let qbqb = WordExpr::concat([
        q.clone(),
        wrap(aux.second, 1),
        q.clone(),
        wrap(aux.second, -1),
    ]);
    WordExpr::concat([
        p2.clone(),
        wrap(aux.first, 1),
        p2,
        wrap(aux.first, -1),
        qbqb.power(-2),
    ])
}

/// The OR gadget: four commutators joined by three AND gadgets.
pub fn or_template(p: &WordExpr, q: &WordExpr, aux: AuxNails) -> WordExpr {
    let a = |s: i64| {
        WordExpr::concat([
            p.clone(),
            wrap(aux.first, s),
            p.clone(),
            wrap(aux.first, -s),
        ])
    };
    let b = |t: i64| {
        WordExpr::concat([
            q.clone(),
            wrap(aux.second, t),
            q.clone(),
            wrap(aux.second, -t),
        ])
    };
    let c = |s: i64, t: i64| WordExpr::commutator(&a(s), &b(t));
    and_template(
        &and_template(&c(1, 1), &c(1, -1), aux),
        &and_template(&c(-1, 1), &c(-1, -1), aux),
        aux,
    )
}

/// AND gadget on the shared auxiliaries 1 and 2, reduced.
pub fn gadget_and(p: &Word, q: &Word) -> Word {
    gadget_and_with(p, q, AuxNails::SHARED)
}

/// OR gadget on the shared auxiliaries 1 and 2, reduced.
pub fn gadget_or(p: &Word, q: &Word) -> Word {
    gadget_or_with(p, q, AuxNails::SHARED)
}

pub fn gadget_and_with(p: &Word, q: &Word, aux: AuxNails) -> Word {
    and_template(&p.clone().into(), &q.clone().into(), aux)
        .flatten()
        .into_reduced()
}

pub fn gadget_or_with(p: &Word, q: &Word, aux: AuxNails) -> Word {
    or_template(&p.clone().into(), &q.clone().into(), aux)
        .flatten()
        .into_reduced()
}

/// How many copies of each operand, and how many auxiliary letters, a gadget
/// template contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TemplateCount {
    pub p_units: u64,
    pub q_units: u64,
    pub auxiliary: u64,
}

impl TemplateCount {
    pub fn total(&self) -> u64 {
        self.p_units + self.q_units + self.auxiliary
    }

    /// Letters in the gadget given operand lengths.
    pub fn apply(&self, p_len: u64, q_len: u64) -> u64 {
        self.p_units
            .saturating_mul(p_len)
            .saturating_add(self.q_units.saturating_mul(q_len))
            .saturating_add(self.auxiliary)
    }
}

/// Instantiates a template with single marker letters for `p` and `q` and
/// counts the letters of the unreduced expansion.
fn count_template(template: fn(&WordExpr, &WordExpr, AuxNails) -> WordExpr) -> TemplateCount {
    const P: u32 = 3;
    const Q: u32 = 4;
    let word = template(
        &WordExpr::letter(Letter::cw(P)),
        &WordExpr::letter(Letter::cw(Q)),
        AuxNails::SHARED,
    )
    .flatten();
    let counts = word.nail_counts(Q);
    TemplateCount {
        p_units: counts[P as usize - 1] as u64,
        q_units: counts[Q as usize - 1] as u64,
        auxiliary: (counts[0] + counts[1]) as u64,
    }
}

pub fn and_template_count() -> TemplateCount {
    count_template(and_template)
}

pub fn or_template_count() -> TemplateCount {
    count_template(or_template)
}

/// Upper bound on the as-constructed length of [`compile`]'s output, from
/// exact template accounting with shared gates duplicated. Saturates at
/// `u64::MAX`.
pub fn estimate_length(circuit: &MonotoneCircuit) -> u64 {
    let and = and_template_count();
    let or = or_template_count();
    let mut est = Vec::with_capacity(circuit.gates().len());
    for gate in circuit.gates() {
        est.push(match *gate {
            Gate::Input(_) => 1,
            Gate::Const(_) => 0,
            Gate::And(a, b) => and.apply(est[a], est[b]),
            Gate::Or(a, b) => or.apply(est[a], est[b]),
        });
    }
    est[circuit.output()]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompileOptions {
    pub auxiliary: Auxiliary,
    /// Refuse when [`estimate_length`] exceeds this.
    pub budget: u64,
    /// Verify exhaustively when `n` is at most this.
    pub verify_limit: u32,
    /// Skip verification when `2^n · length` exceeds this many letter visits.
    pub verify_work: u64,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions {
            auxiliary: Auxiliary::Anchored,
            budget: DEFAULT_LETTER_BUDGET,
            verify_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            verify_work: 1 << 34,
        }
    }
}

impl CompileOptions {
    pub fn shared() -> Self {
        CompileOptions {
            auxiliary: Auxiliary::Shared,
            ..Default::default()
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn without_verification(mut self) -> Self {
        self.verify_limit = 0;
        self.verify_work = 0;
        self
    }
}

/// Result of checking a word's fall table against its circuit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verification {
    Verified {
        subsets: u64,
    },
    Mismatch {
        subset: Vec<u32>,
        expected: bool,
        actual: bool,
    },
    Skipped {
        reason: String,
    },
}

impl Verification {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verification::Verified { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompileReport {
    pub word: Word,
    /// Variable nails; the fall function is over removals of `1..=nails`.
    pub nails: u32,
    pub auxiliary: Auxiliary,
    /// Present for anchored compiles: the two never-removed nails.
    pub anchors: Option<[u32; 2]>,
    /// Length of the final gadget expansion, before its reduction.
    pub as_constructed_length: u64,
    pub reduced_length: u64,
    pub estimate: u64,
    pub depth: u32,
    /// `1078^depth`, if it fits in a `u128`.
    pub bound: Option<u128>,
    pub bound_log10: f64,
    pub verification: Verification,
}

/// Exhaustive comparison of a word's fall table with a circuit's table.
pub fn verify_word(
    word: &Word,
    circuit: &MonotoneCircuit,
    limit: u32,
) -> Result<Verification, Error> {
    let expected = circuit.table_with_limit(limit)?;
    let actual = fall_table_with_limit(word, circuit.n(), limit)?;
    Ok(match expected.first_mismatch(&actual) {
        None => Verification::Verified {
            subsets: 1u64 << circuit.n(),
        },
        Some(m) => Verification::Mismatch {
            subset: m.subset.to_vec(),
            expected: m.expected,
            actual: m.actual,
        },
    })
}

/// Compiles a circuit into a hanging whose fall function is the circuit.
pub fn compile(
    circuit: &MonotoneCircuit,
    options: &CompileOptions,
) -> Result<CompileReport, Error> {
    let n = circuit.n();
    validate_spec(&PuzzleSpec::circuit(circuit.clone()))?;
    let estimate = estimate_length(circuit);
    if estimate > options.budget {
        return Err(Error::BudgetExceeded {
            estimate,
            budget: options.budget,
        });
    }
    if options.auxiliary == Auxiliary::Shared && n < 2 && circuit.gate_count() > 0 {
        return Err(Error::TooFewNails { n, min: 2 });
    }
    let aux = AuxNails::for_mode(options.auxiliary, n);

    let mut words: Vec<Word> = Vec::with_capacity(circuit.gates().len());
    let mut as_constructed = 0u64;
    for (id, gate) in circuit.gates().iter().enumerate() {
        let (word, raw_len) = match *gate {
            Gate::Input(i) => (Word::generator(i), 1),
            // only a constant-true circuit gets here; it compiles to the fallen state
            Gate::Const(_) => (Word::empty(), 0),
            Gate::And(a, b) | Gate::Or(a, b) => {
                let p: WordExpr = words[a].clone().into();
                let q: WordExpr = words[b].clone().into();
                let expr = if matches!(gate, Gate::And(..)) {
                    and_template(&p, &q, aux)
                } else {
                    or_template(&p, &q, aux)
                };
                let raw = expr.flatten();
                let len = raw.len() as u64;
                (raw.into_reduced(), len)
            }
        };
        if id == circuit.output() {
            as_constructed = raw_len;
        }
        words.push(word);
    }
    let word = words.swap_remove(circuit.output());
    drop(words);

    let depth = circuit.depth();
    let verification = if n > options.verify_limit {
        Verification::Skipped {
            reason: format!(
                "n = {n} exceeds the exhaustive limit {}",
                options.verify_limit
            ),
        }
    } else if (word.len() as u64).max(1).saturating_mul(1 << n) > options.verify_work {
        Verification::Skipped {
            reason: format!(
                "2^{n} subsets of a {}-letter word exceed the verification work cap",
                word.len()
            ),
        }
    } else {
        verify_word(&word, circuit, options.verify_limit)?
    };

    Ok(CompileReport {
        nails: n,
        auxiliary: options.auxiliary,
        anchors: match options.auxiliary {
            Auxiliary::Anchored => Some([aux.first, aux.second]),
            Auxiliary::Shared => None,
        },
        as_constructed_length: as_constructed,
        reduced_length: word.len() as u64,
        estimate,
        depth,
        bound: (GATE_GROWTH_BOUND as u128).checked_pow(depth),
        bound_log10: depth as f64 * (GATE_GROWTH_BOUND as f64).log10(),
        verification,
        word,
    })
}

/// Validates and compiles a spec in one step.
pub fn compile_spec(spec: &PuzzleSpec, options: &CompileOptions) -> Result<CompileReport, Error> {
    let validated = validate_spec(spec)?;
    compile(&validated.spec.to_circuit()?, options)
}
