//! Reference implementations used as oracles. They share nothing with the
//! library beyond the `Word` and `NailSubset` containers.

#![allow(dead_code)]

use picture_hanging::freegroup::{NailSubset, Word};
use rand::Rng;

/// Repeatedly deletes the leftmost adjacent inverse pair until none is left.
pub fn naive_reduce(letters: &[i32]) -> Vec<i32> {
    let mut v = letters.to_vec();
    loop {
        match (0..v.len().saturating_sub(1)).find(|&i| v[i] == -v[i + 1]) {
            Some(i) => {
                v.drain(i..i + 2);
            }
            None => return v,
        }
    }
}

/// Deletes a uniformly random adjacent inverse pair until none is left.
pub fn random_order_reduce<R: Rng>(letters: &[i32], rng: &mut R) -> Vec<i32> {
    let mut v = letters.to_vec();
    loop {
        let pairs: Vec<usize> = (0..v.len().saturating_sub(1))
            .filter(|&i| v[i] == -v[i + 1])
            .collect();
        if pairs.is_empty() {
            return v;
        }
        let i = pairs[rng.gen_range(0..pairs.len())];
        v.drain(i..i + 2);
    }
}

pub fn naive_falls(letters: &[i32], removed: &[u32]) -> bool {
    let kept: Vec<i32> = letters
        .iter()
        .copied()
        .filter(|l| !removed.contains(&l.unsigned_abs()))
        .collect();
    naive_reduce(&kept).is_empty()
}

pub fn members(mask: u64, n: u32) -> Vec<u32> {
    (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect()
}

/// Fall table by the naive oracle, indexed by mask.
pub fn naive_table(word: &Word, n: u32) -> Vec<bool> {
    let letters = word.to_signed();
    (0..1u64 << n)
        .map(|m| naive_falls(&letters, &members(m, n)))
        .collect()
}

pub fn random_letters<R: Rng>(rng: &mut R, n: u32, max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let nail = rng.gen_range(1..=n as i32);
            if rng.gen_bool(0.5) {
                nail
            } else {
                -nail
            }
        })
        .collect()
}

/// Random monotone DNF over `1..=n`: a list of nonempty terms.
pub fn random_dnf<R: Rng>(rng: &mut R, n: u32, max_terms: usize, max_term: usize) -> Vec<Vec<u32>> {
    let terms = rng.gen_range(1..=max_terms);
    (0..terms)
        .map(|_| {
            let size = rng.gen_range(1..=max_term.min(n as usize));
            let mut t: Vec<u32> = Vec::new();
            while t.len() < size {
                let v = rng.gen_range(1..=n);
                if !t.contains(&v) {
                    t.push(v);
                }
            }
            t.sort_unstable();
            t
        })
        .collect()
}

pub fn dnf_text(terms: &[Vec<u32>]) -> String {
    terms
        .iter()
        .map(|t| {
            t.iter()
                .map(|v| format!("r{v}"))
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

pub fn dnf_eval(terms: &[Vec<u32>], s: &NailSubset) -> bool {
    terms.iter().any(|t| t.iter().all(|&v| s.contains(v)))
}

/// Smallest number of sets covering `1..=m`, trying every selection.
pub fn brute_force_cover(m: u32, sets: &[Vec<u32>]) -> Option<u32> {
    let mut best = None;
    for choice in 0u32..1 << sets.len() {
        let covered = (1..=m).all(|u| {
            sets.iter()
                .enumerate()
                .any(|(i, s)| choice >> i & 1 == 1 && s.contains(&u))
        });
        if covered && best.is_none_or(|b| choice.count_ones() < b) {
            best = Some(choice.count_ones());
        }
    }
    best
}
