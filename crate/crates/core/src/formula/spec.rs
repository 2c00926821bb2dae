use serde::{Deserialize, Serialize};

use super::circuit::{CircuitBuilder, MonotoneCircuit};
use super::parser::parse_formula_with_n;
use crate::error::Error;
use crate::freegroup::{NailSubset, DEFAULT_EXHAUSTIVE_LIMIT, MAX_NAILS};
use crate::sortnet;

/// How a fall specification is written down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecBody {
    Circuit(MonotoneCircuit),
    /// The picture must fall exactly when some listed set is fully removed.
    Subsets(Vec<Vec<u32>>),
    /// Falls once at least `k` nails are removed.
    Threshold(u32),
}

/// A fall specification on `n` nails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuzzleSpec {
    pub n: u32,
    pub body: SpecBody,
}

/// Outcome of [`validate_spec`]: the normalized spec plus any notices about
/// what normalization changed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedSpec {
    pub spec: PuzzleSpec,
    pub notices: Vec<String>,
}

/// On-disk JSON shape: exactly one of `subsets`, `formula`, `threshold_k`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    subsets: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    formula: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    threshold_k: Option<u32>,
}

impl PuzzleSpec {
    pub fn subsets(n: u32, subsets: Vec<Vec<u32>>) -> Self {
        PuzzleSpec {
            n,
            body: SpecBody::Subsets(subsets),
        }
    }

    pub fn threshold(n: u32, k: u32) -> Self {
        PuzzleSpec {
            n,
            body: SpecBody::Threshold(k),
        }
    }

    pub fn circuit(circuit: MonotoneCircuit) -> Self {
        PuzzleSpec {
            n: circuit.n(),
            body: SpecBody::Circuit(circuit),
        }
    }

    pub fn formula(n: u32, text: &str) -> Result<Self, Error> {
        Ok(PuzzleSpec {
            n,
            body: SpecBody::Circuit(parse_formula_with_n(text, n)?),
        })
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let file: SpecFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        if file.n > MAX_NAILS {
            return Err(Error::TooManyNails {
                n: file.n,
                max: MAX_NAILS,
            });
        }
        match (file.subsets, file.formula, file.threshold_k) {
            (Some(subsets), None, None) => Ok(PuzzleSpec::subsets(file.n, subsets)),
            (None, Some(formula), None) => PuzzleSpec::formula(file.n, &formula),
            (None, None, Some(k)) => Ok(PuzzleSpec::threshold(file.n, k)),
            _ => Err(Error::InvalidSpec(
                "exactly one of \"subsets\", \"formula\", \"threshold_k\" is required".into(),
            )),
        }
    }

    pub fn to_json(&self) -> String {
        let mut file = SpecFile {
            n: self.n,
            subsets: None,
            formula: None,
            threshold_k: None,
        };
        match &self.body {
            SpecBody::Circuit(c) => file.formula = Some(c.to_string()),
            SpecBody::Subsets(s) => file.subsets = Some(s.clone()),
            SpecBody::Threshold(k) => file.threshold_k = Some(*k),
        }
        serde_json::to_string(&file).unwrap()
    }

    /// The specification as a circuit. Subset lists become a balanced OR of
    /// balanced ANDs, thresholds a sorting-network circuit.
    pub fn to_circuit(&self) -> Result<MonotoneCircuit, Error> {
        match &self.body {
            SpecBody::Circuit(c) => {
                if c.n() > self.n {
                    return Err(Error::InvalidSpec(format!(
                        "circuit uses {} variables but the spec has n = {}",
                        c.n(),
                        self.n
                    )));
                }
                Ok(c.widen(self.n))
            }
            SpecBody::Subsets(s) => subsets_to_circuit(s, self.n),
            SpecBody::Threshold(k) => {
                if *k > self.n {
                    return Err(Error::KOutOfRange { k: *k, n: self.n });
                }
                Ok(sortnet::threshold_circuit(*k, self.n))
            }
        }
    }

    /// Direct evaluation of the specified fall function.
    pub fn evaluate(&self, removed: &NailSubset) -> bool {
        match &self.body {
            SpecBody::Subsets(s) => s.iter().any(|set| set.iter().all(|&i| removed.contains(i))),
            SpecBody::Threshold(k) => removed.len() >= *k,
            SpecBody::Circuit(c) => c.eval(removed),
        }
    }
}

fn check_subsets(subsets: &[Vec<u32>], n: u32) -> Result<(), Error> {
    if subsets.is_empty() {
        return Err(Error::InvalidSpec("the subset list is empty".into()));
    }
    for (k, set) in subsets.iter().enumerate() {
        if set.is_empty() {
            return Err(Error::InvalidSpec(format!("subset #{} is empty", k + 1)));
        }
        if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::NailOutOfRange { nail: bad, n });
        }
    }
    Ok(())
}

/// `f = OR_i AND_{j in S_i} r_j` as balanced trees.
pub fn subsets_to_circuit(subsets: &[Vec<u32>], n: u32) -> Result<MonotoneCircuit, Error> {
    check_subsets(subsets, n)?;
    let mut b = CircuitBuilder::new(n);
    let terms: Vec<_> = subsets
        .iter()
        .map(|set| {
            let vars: Vec<_> = set.iter().map(|&i| b.input(i)).collect();
            b.and_all(&vars)
        })
        .collect();
    let out = b.or_all(&terms);
    Ok(b.finish(out))
}

/// Removes duplicates and supersets of other members. Surviving sets keep
/// their first-seen order, each sorted ascending.
pub fn normalize_antichain(subsets: &[Vec<u32>]) -> (Vec<Vec<u32>>, Vec<String>) {
    let mut sets: Vec<Vec<u32>> = subsets
        .iter()
        .map(|s| {
            let mut v = s.clone();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    let mut notices = Vec::new();
    let is_subset = |a: &[u32], b: &[u32]| a.iter().all(|x| b.binary_search(x).is_ok());
    let mut keep = vec![true; sets.len()];
    for i in 0..sets.len() {
        for j in 0..sets.len() {
            if i == j || !keep[j] || !keep[i] {
                continue;
            }
            // drop i when j ⊆ i, keeping the earlier of two equal sets
            if is_subset(&sets[j], &sets[i]) && (sets[j].len() < sets[i].len() || j < i) {
                notices.push(format!(
                    "removed {:?}: it contains {:?}, so it is redundant",
                    sets[i], sets[j]
                ));
                keep[i] = false;
            }
        }
    }
    let mut k = 0;
    sets.retain(|_| {
        k += 1;
        keep[k - 1]
    });
    (sets, notices)
}

/// Checks that a spec describes the fall function of some hanging.
///
/// Monotonicity holds for every circuit and subset list by construction.
/// Realizability requires the function to be true once every nail is
/// removed (nothing can hang on no nails), and a function true with nothing
/// removed must be constantly true (only the empty word falls on its own).
pub fn validate_spec(spec: &PuzzleSpec) -> Result<ValidatedSpec, Error> {
    if spec.n > MAX_NAILS {
        return Err(Error::TooManyNails {
            n: spec.n,
            max: MAX_NAILS,
        });
    }
    let mut notices = Vec::new();
    let spec = match &spec.body {
        SpecBody::Subsets(subsets) => {
            check_subsets(subsets, spec.n)?;
            let (normalized, changes) = normalize_antichain(subsets);
            notices.extend(changes);
            PuzzleSpec::subsets(spec.n, normalized)
        }
        SpecBody::Threshold(k) => {
            if *k > spec.n {
                return Err(Error::Unrealizable(format!(
                    "threshold {k} exceeds the {} nails, so removing every nail would leave the picture hanging",
                    spec.n
                )));
            }
            spec.clone()
        }
        SpecBody::Circuit(c) => {
            if c.n() > spec.n {
                return Err(Error::InvalidSpec(format!(
                    "circuit uses {} variables but n = {}",
                    c.n(),
                    spec.n
                )));
            }
            let circuit = c.widen(spec.n);
            if !circuit.eval(&NailSubset::full(spec.n)) {
                return Err(Error::Unrealizable(
                    "f(all removed) = false, but every hanging falls once all nails are gone"
                        .into(),
                ));
            }
            if circuit.eval(&NailSubset::empty(spec.n)) && circuit.as_constant() != Some(true) {
                // monotone and true at the bottom means constant; confirm when affordable
                if spec.n <= DEFAULT_EXHAUSTIVE_LIMIT {
                    let table = circuit.table()?;
                    if table.values().iter().any(|v| !v) {
                        return Err(Error::Unrealizable(
                            "f(nothing removed) = true but f is not constantly true".into(),
                        ));
                    }
                }
            }
            PuzzleSpec::circuit(circuit)
        }
    };
    Ok(ValidatedSpec { spec, notices })
}
