//! The spectator's side: which nails to pull.
//!
//! Both exact searches walk subsets by cardinality and, within one size, in
//! lexicographic order of their sorted members, so `{1,4}` comes before
//! `{2,3}`. The first hit wins.
//!
//! Only nails `1..=n` are candidates for removal. Letters on higher nails,
//! such as the auxiliary nails of a compiled hanging, stay in place.

use rayon::prelude::*;
use serde::Serialize;

use crate::compiler::{and_template, AuxNails};
use crate::constructions::build_e;
use crate::error::Error;
use crate::freegroup::{check_limit, MAX_NAILS};
use crate::freegroup::{NailSubset, Word, WordExpr, DEFAULT_EXHAUSTIVE_LIMIT};

fn check_fellable(w: &Word, n: u32) -> Result<(), Error> {
    if n > MAX_NAILS {
        return Err(Error::TooManyNails { n, max: MAX_NAILS });
    }
    if !w.falls(&NailSubset::full(n)) {
        return Err(Error::NeverFalls { n });
    }
    Ok(())
}

/// All `k`-subsets of `1..=n` in lexicographic order.
fn combinations(n: u32, k: u32) -> Vec<NailSubset> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<u32> = (1..=k).collect();
    loop {
        out.push(NailSubset::from_nails(n, idx.iter().copied()).unwrap());
        // advance the rightmost index that still has room
        let Some(pos) = (0..k as usize)
            .rev()
            .find(|&i| idx[i] < n - (k - 1 - i as u32))
        else {
            return out;
        };
        idx[pos] += 1;
        for i in pos + 1..k as usize {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

fn first_of_size(w: &Word, n: u32, k: u32, want_fall: bool) -> Option<NailSubset> {
    combinations(n, k)
        .into_par_iter()
        .find_first(|s| w.falls(s) == want_fall)
}

/// A smallest set of nails whose removal fells the picture.
pub fn min_fell_exact(w: &Word, n: u32) -> Result<NailSubset, Error> {
    min_fell_exact_with_limit(w, n, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn min_fell_exact_with_limit(w: &Word, n: u32, limit: u32) -> Result<NailSubset, Error> {
    check_limit(n, limit)?;
    check_fellable(w, n)?;
    Ok((0..=n)
        .find_map(|k| first_of_size(w, n, k, true))
        .expect("removing every nail fells any hanging"))
}

/// A largest set of nails that can be pulled while the picture still hangs.
pub fn max_survive_exact(w: &Word, n: u32) -> Result<NailSubset, Error> {
    max_survive_exact_with_limit(w, n, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn max_survive_exact_with_limit(w: &Word, n: u32, limit: u32) -> Result<NailSubset, Error> {
    check_limit(n, limit)?;
    if n > MAX_NAILS {
        return Err(Error::TooManyNails { n, max: MAX_NAILS });
    }
    if w.is_trivial() {
        return Err(Error::AlreadyFallen);
    }
    Ok((0..=n)
        .rev()
        .find_map(|k| first_of_size(w, n, k, false))
        .expect("a nontrivial word hangs with nothing removed"))
}

/// Repeatedly pulls the nail leaving the shortest reduced word, lowest index
/// on ties, until the picture falls. No approximation guarantee.
pub fn greedy_min_fell(w: &Word, n: u32) -> Result<NailSubset, Error> {
    check_fellable(w, n)?;
    let mut removed = NailSubset::empty(n);
    let mut current = w.reduce();
    while !current.is_empty() {
        let (_, nail, next) = (1..=n)
            .filter(|&i| !removed.contains(i))
            .map(|i| {
                let next = current.remove_nails(&NailSubset::empty(n).with(i));
                (next.len(), i, next)
            })
            .min_by_key(|&(len, i, _)| (len, i))
            .expect("the word falls once all of 1..=n are gone");
        removed = removed.with(nail);
        current = next;
    }
    Ok(removed)
}

/// Output of [`set_cover_to_hanging`].
#[derive(Debug, Clone, Serialize)]
pub struct SetCoverHanging {
    pub word: Word,
    /// Nail `i` stands for set `S_i`; this is the number of sets.
    pub n: u32,
    /// For each element `u_j`, the nails (sets) that contain it.
    pub element_nails: Vec<Vec<u32>>,
    /// The never-removed auxiliary nails of the AND tree, when `m > 1`.
    pub anchors: Option<[u32; 2]>,
}

/// Encodes a Set Cover instance: removing a set of nails fells the picture
/// exactly when the corresponding sets cover `u_1..u_m`.
///
/// Element `u_j` becomes the 1-out-of-many hanging over the nails of the
/// sets containing it, and the elements are joined by a balanced tree of
/// AND gadgets on the auxiliary nails `n + 1`, `n + 2`.
pub fn set_cover_to_hanging(m: u32, sets: &[Vec<u32>]) -> Result<SetCoverHanging, Error> {
    if m == 0 {
        return Err(Error::InvalidInstance("the universe is empty".into()));
    }
    if sets.is_empty() {
        return Err(Error::InvalidInstance("no sets given".into()));
    }
    let n = sets.len() as u32;
    if n + 2 > MAX_NAILS {
        return Err(Error::TooManyNails {
            n,
            max: MAX_NAILS - 2,
        });
    }
    let mut element_nails = vec![Vec::new(); m as usize];
    for (i, set) in sets.iter().enumerate() {
        for &u in set {
            if u == 0 || u > m {
                return Err(Error::InvalidInstance(format!(
                    "set S{} mentions u{u}, outside u1..u{m}",
                    i + 1
                )));
            }
            let nails = &mut element_nails[u as usize - 1];
            if nails.last() != Some(&(i as u32 + 1)) {
                nails.push(i as u32 + 1);
            }
        }
    }
    if let Some(j) = element_nails.iter().position(Vec::is_empty) {
        return Err(Error::UncoveredElement(j as u32 + 1));
    }
    let aux = AuxNails::anchored(n);
    let mut parts: Vec<WordExpr> = element_nails
        .iter()
        .map(|nails| build_e(nails).map(WordExpr::leaf))
        .collect::<Result<_, _>>()?;
    while parts.len() > 1 {
        // pairwise rounds keep the tree balanced; an odd one out moves up as is
        let mut next = Vec::with_capacity(parts.len().div_ceil(2));
        let mut it = parts.into_iter();
        while let Some(p) = it.next() {
            next.push(match it.next() {
                Some(q) => WordExpr::leaf(and_template(&p, &q, aux).flatten().into_reduced()),
                None => p,
            });
        }
        parts = next;
    }
    Ok(SetCoverHanging {
        word: parts.pop().unwrap().flatten(),
        n,
        element_nails,
        anchors: (m > 1).then_some([aux.first, aux.second]),
    })
}

/// Smallest number of sets covering `u_1..u_m`, by brute force; `None` if
/// no cover exists.
pub fn set_cover_optimum(m: u32, sets: &[Vec<u32>]) -> Option<u32> {
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |acc, &u| acc | 1 << (u - 1)))
        .collect();
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    (0u64..1 << sets.len())
        .filter(|choice| {
            masks
                .iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .fold(0, |acc, (_, m)| acc | m)
                == all
        })
        .map(|choice| choice.count_ones())
        .min()
}
