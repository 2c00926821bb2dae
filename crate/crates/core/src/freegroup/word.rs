use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::letter::Letter;
use super::subset::NailSubset;
use crate::error::Error;

/// A picture hanging: a finite sequence of wraps, read left to right.
///
/// The letters are kept exactly as constructed, so a word may contain
/// canceling neighbours until [`Word::reduce`] is applied. Equality is
/// equality in the free group, i.e. of the reduced letter sequences.
#[derive(Debug, Clone, Default)]
pub struct Word {
    letters: Vec<Letter>,
    reduced: bool,
}

/// Single stack pass. `skip` drops letters before they reach the stack, which
/// is how nail removal and reduction share one linear loop.
fn reduce_into<I, F>(letters: I, skip: F, capacity: usize) -> Vec<Letter>
where
    I: IntoIterator<Item = Letter>,
    F: Fn(Letter) -> bool,
{
    let mut stack: Vec<Letter> = Vec::with_capacity(capacity);
    for letter in letters {
        if skip(letter) {
            continue;
        }
        match stack.last() {
            Some(&top) if top.cancels(letter) => {
                stack.pop();
            }
            _ => stack.push(letter),
        }
    }
    stack
}

impl Word {
    /// The fallen state.
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
            reduced: true,
        }
    }

    /// A single clockwise wrap around `nail`.
    pub fn generator(nail: u32) -> Self {
        Word::from_letters(vec![Letter::cw(nail)])
    }

    /// Keeps the sequence verbatim; the reduced flag is computed.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        let reduced = letters.windows(2).all(|w| !w[0].cancels(w[1]));
        Word { letters, reduced }
    }

    pub fn from_signed(values: &[i32]) -> Result<Self, Error> {
        let letters = values
            .iter()
            .map(|&v| {
                Letter::from_signed(v)
                    .ok_or_else(|| Error::WordJson(format!("letter value {v} is not a valid nail")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word::from_letters(letters))
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    /// Parses either the text format (`x1 x2 X1 X2`) or, when the input starts
    /// with `[`, the JSON array format.
    pub fn parse_any(input: &str) -> Result<Self, Error> {
        if input.trim_start().starts_with('[') {
            let values: Vec<i32> =
                serde_json::from_str(input).map_err(|e| Error::WordJson(e.to_string()))?;
            Word::from_signed(&values)
        } else {
            input.parse()
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// Number of letters as stored (not necessarily reduced).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True when no letters are stored. See [`Word::is_trivial`] for the
    /// group-theoretic test.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the word reduces to the identity.
    pub fn is_trivial(&self) -> bool {
        self.reduced_len() == 0
    }

    pub fn reduced_len(&self) -> usize {
        if self.reduced {
            self.letters.len()
        } else {
            reduce_into(self.letters.iter().copied(), |_| false, self.letters.len()).len()
        }
    }

    /// Largest nail index used, or 0 for the empty word.
    pub fn max_nail(&self) -> u32 {
        self.letters.iter().map(|l| l.nail()).max().unwrap_or(0)
    }

    /// Occurrences (either orientation) of each nail `1..=n`, indexed by
    /// `nail - 1`. Letters on nails beyond `n` are ignored.
    pub fn nail_counts(&self, n: u32) -> Vec<usize> {
        let mut counts = vec![0usize; n as usize];
        for letter in &self.letters {
            if let Some(c) = counts.get_mut(letter.nail() as usize - 1) {
                *c += 1;
            }
        }
        counts
    }

    /// Free reduction to the unique normal form.
    pub fn reduce(&self) -> Word {
        if self.reduced {
            return self.clone();
        }
        Word {
            letters: reduce_into(self.letters.iter().copied(), |_| false, self.letters.len()),
            reduced: true,
        }
    }

    pub fn into_reduced(self) -> Word {
        if self.reduced {
            self
        } else {
            Word {
                letters: reduce_into(self.letters, |_| false, 0),
                reduced: true,
            }
        }
    }

    /// Product `self · other`, reduced.
    pub fn concat(&self, other: &Word) -> Word {
        let letters = reduce_into(
            self.letters.iter().chain(other.letters.iter()).copied(),
            |_| false,
            self.len() + other.len(),
        );
        Word {
            letters,
            reduced: true,
        }
    }

    /// Reversed sequence with every orientation flipped.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            reduced: self.reduced,
        }
    }

    /// `self` repeated `k` times; negative `k` repeats the inverse.
    pub fn power(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let times = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&base.letters);
        }
        Word::from_letters(letters).into_reduced()
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`, reduced.
    pub fn commutator(&self, other: &Word) -> Word {
        let inv_a = self.inverse();
        let inv_b = other.inverse();
        let letters = reduce_into(
            self.letters
                .iter()
                .chain(&other.letters)
                .chain(&inv_a.letters)
                .chain(&inv_b.letters)
                .copied(),
            |_| false,
            2 * (self.len() + other.len()),
        );
        Word {
            letters,
            reduced: true,
        }
    }

    /// Deletes every letter on a removed nail and reduces.
    pub fn remove_nails(&self, removed: &NailSubset) -> Word {
        Word {
            letters: reduce_into(
                self.letters.iter().copied(),
                |l| removed.contains(l.nail()),
                self.letters.len(),
            ),
            reduced: true,
        }
    }

    /// Whether the picture falls once the nails in `removed` are pulled.
    pub fn falls(&self, removed: &NailSubset) -> bool {
        // Only the stack depth matters here.
        let mut stack: Vec<Letter> = Vec::new();
        for &letter in &self.letters {
            if removed.contains(letter.nail()) {
                continue;
            }
            match stack.last() {
                Some(&top) if top.cancels(letter) => {
                    stack.pop();
                }
                _ => stack.push(letter),
            }
        }
        stack.is_empty()
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        match (self.reduced, other.reduced) {
            (true, true) => self.letters == other.letters,
            _ => self.reduce().letters == other.reduce().letters,
        }
    }
}

impl Eq for Word {}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for (position, token) in s.split_whitespace().enumerate() {
            let bad = || Error::WordSyntax {
                token: token.to_string(),
                position,
            };
            let (head, digits) = token.split_at(token.chars().next().map_or(0, |c| c.len_utf8()));
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let nail: u32 = digits.parse().map_err(|_| bad())?;
            if nail == 0 || nail > i32::MAX as u32 {
                return Err(bad());
            }
            letters.push(match head {
                "x" => Letter::cw(nail),
                "X" => Letter::ccw(nail),
                _ => return Err(bad()),
            });
        }
        Ok(Word::from_letters(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.letters.iter().map(|l| l.to_signed()))
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<i32>::deserialize(deserializer)?;
        Word::from_signed(&values).map_err(serde::de::Error::custom)
    }
}
