//! Hand-built families of hangings.
//!
//! * [`build_s`]: the iterated commutator `S_n = [S_{n-1}, x_n]`, falling
//!   when any one nail is removed, with `2^n + 2^(n-1) - 2` letters.
//! * [`build_e`]: the balanced version, a commutator of the two halves. On
//!   `n = 2^a + b` nails it has `4^a + b(2^(a+2) - 2^a)` letters, at most
//!   `2n²`.
//! * [`build_disjoint`]: the balanced recursion over "supernails", one per
//!   class of a partition, falling when some class is removed entirely.
//!
//! All three return the word as constructed. None of them produces
//! cancelling neighbours, so the stored length is the letter count the
//! length formulas describe.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::freegroup::{Letter, Word, WordExpr};

/// Balanced commutator tree over `parts`: a single part is itself, otherwise
/// `[left half, right half]` with the extra part on the left.
pub fn balanced_commutator(parts: &[WordExpr]) -> WordExpr {
    match parts {
        [] => WordExpr::empty(),
        [one] => one.clone(),
        _ => {
            let mid = parts.len().div_ceil(2);
            WordExpr::commutator(
                &balanced_commutator(&parts[..mid]),
                &balanced_commutator(&parts[mid..]),
            )
        }
    }
}

/// `S_1 = x1`, `S_n = [S_{n-1}, x_n]`.
pub fn build_s(n: u32) -> Result<Word, Error> {
    if n < 1 {
        return Err(Error::TooFewNails { n, min: 1 });
    }
    let mut s = WordExpr::letter(Letter::cw(1));
    for i in 2..=n {
        s = WordExpr::commutator(&s, &WordExpr::letter(Letter::cw(i)));
    }
    Ok(s.flatten())
}

/// Balanced 1-out-of-n hanging over the given nails, in the given order.
pub fn build_e(nails: &[u32]) -> Result<Word, Error> {
    if nails.is_empty() {
        return Err(Error::TooFewNails { n: 0, min: 1 });
    }
    let mut seen = BTreeSet::new();
    for &nail in nails {
        if nail == 0 {
            return Err(Error::NailOutOfRange { nail, n: u32::MAX });
        }
        if !seen.insert(nail) {
            return Err(Error::DuplicateNail(nail));
        }
    }
    let leaves: Vec<_> = nails
        .iter()
        .map(|&i| WordExpr::letter(Letter::cw(i)))
        .collect();
    Ok(balanced_commutator(&leaves).flatten())
}

/// Closed form for the length of `build_e` on `n` nails.
pub fn e_length(n: u64) -> u64 {
    assert!(n >= 1);
    let a = 63 - n.leading_zeros() as u64;
    let pow = 1u64 << a;
    let b = n - pow;
    pow * pow + b * ((pow << 2) - pow)
}

/// `S_n` length, `2^n + 2^(n-1) - 2` for `n >= 2` (and 1 for `n = 1`).
pub fn s_length(n: u32) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        1
    } else {
        (1u64 << n) + (1u64 << (n - 1)) - 2
    }
}

/// Hanging for a partition of `1..=n` into classes: falls exactly when some
/// class is fully removed. Each class wraps its nails in ascending order.
pub fn build_disjoint(n: u32, classes: &[Vec<u32>]) -> Result<Word, Error> {
    if classes.is_empty() {
        return Err(Error::InvalidPartition("no classes given".into()));
    }
    let mut owner = vec![None; n as usize];
    for (k, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::InvalidPartition(format!(
                "class #{} is empty",
                k + 1
            )));
        }
        for &nail in class {
            if nail == 0 || nail > n {
                return Err(Error::NailOutOfRange { nail, n });
            }
            if let Some(other) = owner[nail as usize - 1].replace(k) {
                return Err(Error::InvalidPartition(format!(
                    "nail {nail} is in classes #{} and #{}",
                    other + 1,
                    k + 1
                )));
            }
        }
    }
    if let Some(missing) = owner.iter().position(Option::is_none) {
        return Err(Error::InvalidPartition(format!(
            "nail {} belongs to no class",
            missing + 1
        )));
    }
    let supernails: Vec<_> = classes
        .iter()
        .map(|class| {
            let mut nails = class.clone();
            nails.sort_unstable();
            WordExpr::leaf(Word::from_letters(
                nails.into_iter().map(Letter::cw).collect(),
            ))
        })
        .collect();
    Ok(balanced_commutator(&supernails).flatten())
}
