use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::subset::NailSubset;
use super::word::Word;
use crate::error::Error;

/// Default bound on `n` for anything that enumerates all `2^n` subsets.
pub const DEFAULT_EXHAUSTIVE_LIMIT: u32 = 20;

/// A Boolean function of the removed-nail set, tabulated over all `2^n`
/// subsets. Entry `mask` is the value on the subset whose bitmask is `mask`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruthTable {
    n: u32,
    values: Vec<bool>,
}

/// First subset (in mask order) where two tables disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub subset: NailSubset,
    pub expected: bool,
    pub actual: bool,
}

pub(crate) fn check_limit(n: u32, limit: u32) -> Result<(), Error> {
    if n > limit {
        Err(Error::ExhaustiveLimit { n, limit })
    } else {
        Ok(())
    }
}

impl TruthTable {
    /// Evaluates `f` on every subset of `1..=n`, in parallel.
    pub fn tabulate<F>(n: u32, limit: u32, f: F) -> Result<Self, Error>
    where
        F: Fn(&NailSubset) -> bool + Sync,
    {
        check_limit(n, limit)?;
        let values = (0..1u64 << n)
            .into_par_iter()
            .map(|mask| f(&NailSubset::from_mask(n, mask).unwrap()))
            .collect();
        Ok(TruthTable { n, values })
    }

    pub fn from_values(n: u32, values: Vec<bool>) -> Self {
        assert_eq!(values.len() as u64, 1u64 << n, "table size must be 2^n");
        TruthTable { n, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn get(&self, subset: &NailSubset) -> bool {
        self.values[subset.mask() as usize]
    }

    /// Subsets where the function is true, in mask order.
    pub fn true_subsets(&self) -> impl Iterator<Item = NailSubset> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v)
            .map(move |(mask, _)| NailSubset::from_mask(self.n, mask as u64).unwrap())
    }

    /// `self` is the expected table.
    pub fn first_mismatch(&self, actual: &TruthTable) -> Option<Mismatch> {
        assert_eq!(self.n, actual.n, "tables over different nail counts");
        self.values
            .iter()
            .zip(&actual.values)
            .position(|(a, b)| a != b)
            .map(|mask| Mismatch {
                subset: NailSubset::from_mask(self.n, mask as u64).unwrap(),
                expected: self.values[mask],
                actual: actual.values[mask],
            })
    }

    /// A violation `(s, s ∪ {i})` with `f(s) = true` and `f(s ∪ {i}) = false`,
    /// if any. Checking single-element extensions suffices.
    pub fn monotonicity_violation(&self) -> Option<(NailSubset, NailSubset)> {
        for mask in 0..self.values.len() {
            if !self.values[mask] {
                continue;
            }
            for bit in 0..self.n {
                let bigger = mask | 1 << bit;
                if !self.values[bigger] {
                    return Some((
                        NailSubset::from_mask(self.n, mask as u64).unwrap(),
                        NailSubset::from_mask(self.n, bigger as u64).unwrap(),
                    ));
                }
            }
        }
        None
    }

    pub fn is_monotone(&self) -> bool {
        self.monotonicity_violation().is_none()
    }

    /// Minimal true subsets, in mask order.
    pub fn minimal_true_subsets(&self) -> Vec<NailSubset> {
        self.true_subsets()
            .filter(|s| {
                s.iter()
                    .all(|nail| !self.values[(s.mask() & !(1u64 << (nail - 1))) as usize])
            })
            .collect()
    }
}

impl fmt::Display for TruthTable {
    /// One line per subset: `{1,3} falls` / `{1,3} hangs`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mask, &v) in self.values.iter().enumerate() {
            let subset = NailSubset::from_mask(self.n, mask as u64).unwrap();
            writeln!(f, "{subset} {}", if v { "falls" } else { "hangs" })?;
        }
        Ok(())
    }
}

/// Exhaustive fall table of `word` over removals of nails `1..=n`.
///
/// Letters on nails above `n` are treated as fixed: they are never removed.
pub fn fall_table(word: &Word, n: u32) -> Result<TruthTable, Error> {
    fall_table_with_limit(word, n, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn fall_table_with_limit(word: &Word, n: u32, limit: u32) -> Result<TruthTable, Error> {
    TruthTable::tabulate(n, limit, |s| word.falls(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn falling(table: &TruthTable) -> Vec<String> {
        table.true_subsets().map(|s| s.to_string()).collect()
    }

    #[test]
    fn single_letter() {
        let t = fall_table(&w("x1"), 1).unwrap();
        assert_eq!(t.values(), &[false, true]);
    }

    #[test]
    fn two_nail_commutator() {
        let t = fall_table(&w("x1 x2 X1 X2"), 2).unwrap();
        assert_eq!(falling(&t), ["{1}", "{2}", "{1,2}"]);
    }

    #[test]
    fn two_out_of_three_word() {
        let t = fall_table(&w("x1 x2 x3 X1 X2 X3"), 3).unwrap();
        for s in t.true_subsets() {
            assert!(s.len() >= 2);
        }
        assert_eq!(t.true_subsets().count(), 4);
        assert!(t.is_monotone());
        assert_eq!(t.minimal_true_subsets().len(), 3);
    }

    #[test]
    fn refuses_over_limit() {
        assert_eq!(
            fall_table(&w("x1"), 21),
            Err(Error::ExhaustiveLimit { n: 21, limit: 20 })
        );
        assert!(fall_table_with_limit(&w("x1"), 4, 3).is_err());
    }

    #[test]
    fn mismatch_reports_first_subset() {
        let a = TruthTable::from_values(2, vec![false, true, true, true]);
        let b = TruthTable::from_values(2, vec![false, true, false, true]);
        let m = a.first_mismatch(&b).unwrap();
        assert_eq!(m.subset.to_string(), "{2}");
        assert!(m.expected && !m.actual);
        assert!(a.first_mismatch(&a).is_none());
    }

    #[test]
    fn detects_non_monotone() {
        let t = TruthTable::from_values(1, vec![true, false]);
        assert!(!t.is_monotone());
    }
}
