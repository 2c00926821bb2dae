//! Eleven classic picture-hanging puzzles with known solutions.
//!
//! The specs come from the puzzle statements, not from the words, so the
//! words can be checked against them.

use crate::error::Error;
use crate::formula::PuzzleSpec;
use crate::freegroup::Word;

#[derive(Debug, Clone)]
pub struct PuzzleFixture {
    pub id: u32,
    pub name: &'static str,
    pub statement: &'static str,
    pub word: Word,
    pub spec: PuzzleSpec,
    pub n: u32,
}

const SOLUTION_1: &str = "x1 x2 x3 X2 X3 X1 x3 x2 X3 X2";
const SOLUTION_2: &str = "x1 x2 x3 X1 X2 X3";
const SOLUTION_3: &str = "x1 x2 x3 X1 X3 X2";
const SOLUTION_4: &str = "x1 x2 X1 X2 x3 x4 X3 X4 x2 x1 X2 X1 x4 x3 X4 X3";
const SOLUTION_5: &str = "\
    x1 x2 x1 x3 x1 x4 X3 X1 X4 X1 X2 X1 x1 x4 x1 x3 X4 X1 X3 X1 x2 x3 x2 x4 x3 x4 X4 X2 \
    X4 X3 X3 X2 x3 x4 x2 x4 X4 X3 X4 X2 x1 x3 x1 x4 X3 X1 X4 X1 x1 x2 x1 x4 x1 x3 X4 X1 \
    X3 X1 X2 X1 x2 x4 x3 x4 X4 X2 X4 X3 x2 x3 x3 x4 x2 x4 X4 X3 X4 X2 X3 X2";
const SOLUTION_6: &str = "x1 x2 x3 x4 X1 X2 X3 X4";
const SOLUTION_7: &str = "x1 x2 x3 x4 X2 X1 X4 X3";
const SOLUTION_8: &str = "x1 x2 X1 X2 x3 x4 x2 x1 X2 X1 X4 X3";
const SOLUTION_9: &str =
    "x1 x2 x3 X2 X3 X1 x3 x2 X3 X2 x4 x5 x6 x2 x3 X2 X3 x1 x3 x2 X3 X2 X1 X6 X5 X4";
const SOLUTION_10: &str = "\
    x1 x2 x3 X2 X3 X1 x3 x2 X3 X2 x4 x5 x6 X4 X5 X6 x2 x3 X2 X3 x1 x3 x2 X3 X2 X1 x6 x5 \
    x4 X6 X5 X4";
const SOLUTION_11: &str = "\
    x1 x3 x2 x4 x1 x5 X4 X2 X5 X1 X3 X1 x1 x5 x2 x4 X5 X1 X4 X2 x3 x6 x1 x4 x2 x3 X4 X1 \
    X3 X2 X6 X3 x2 x3 x1 x4 X3 X2 X4 X1 x2 x4 x1 x5 X4 X2 X5 X1 x1 x3 x1 x5 x2 x4 X5 X1 \
    X4 X2 X3 X1 x1 x4 x2 x3 X4 X1 X3 X2 x3 x6 x2 x3 x1 x4 X3 X2 X4 X1 X6 X3 x1 x6 x2 x5 \
    x4 x6 X5 X2 X6 X4 X6 X1 x4 x6 x2 x5 X6 X4 X5 X2 x3 x5 x2 x6 x4 x5 X6 X2 X5 X4 X5 X3 \
    x4 x5 x2 x6 X5 X4 X6 X2 x2 x5 x4 x6 X5 X2 X6 X4 x1 x6 x4 x6 x2 x5 X6 X4 X5 X2 X6 X1 \
    x2 x6 x4 x5 X6 X2 X5 X4 x3 x5 x4 x5 x2 x6 X5 X4 X6 X2 X5 X3 x3 x6 x1 x4 x2 x3 X4 X1 \
    X3 X2 X6 X3 x2 x3 x1 x4 X3 X2 X4 X1 x1 x3 x2 x4 x1 x5 X4 X2 X5 X1 X3 X1 x1 x5 x2 x4 \
    X5 X1 X4 X2 x1 x4 x2 x3 X4 X1 X3 X2 x3 x6 x2 x3 x1 x4 X3 X2 X4 X1 X6 X3 x2 x4 x1 x5 \
    X4 X2 X5 X1 x1 x3 x1 x5 x2 x4 X5 X1 X4 X2 X3 X1 x3 x5 x2 x6 x4 x5 X6 X2 X5 X4 X5 X3 \
    x4 x5 x2 x6 X5 X4 X6 X2 x1 x6 x2 x5 x4 x6 X5 X2 X6 X4 X6 X1 x4 x6 x2 x5 X6 X4 X5 X2 \
    x2 x6 x4 x5 X6 X2 X5 X4 x3 x5 x4 x5 x2 x6 X5 X4 X6 X2 X5 X3 x2 x5 x4 x6 X5 X2 X6 X4 \
    x1 x6 x4 x6 x2 x5 X6 X4 X5 X2 X6 X1";

fn word(text: &str) -> Word {
    text.parse().expect("fixture words are well formed")
}

/// Removing two nails of different colors, classes {1,2}, {3,4}, {5,6}.
fn cross_color_pairs() -> PuzzleSpec {
    let color = |i: u32| (i - 1) / 2;
    let mut pairs = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            if color(a) != color(b) {
                pairs.push(vec![a, b]);
            }
        }
    }
    PuzzleSpec::subsets(6, pairs)
}

/// The word text of each solution, as printed.
pub fn solution_text(id: u32) -> Result<&'static str, Error> {
    Ok(match id {
        1 => SOLUTION_1,
        2 => SOLUTION_2,
        3 => SOLUTION_3,
        4 => SOLUTION_4,
        5 => SOLUTION_5,
        6 => SOLUTION_6,
        7 => SOLUTION_7,
        8 => SOLUTION_8,
        9 => SOLUTION_9,
        10 => SOLUTION_10,
        11 => SOLUTION_11,
        _ => return Err(Error::UnknownPuzzle(id)),
    })
}

pub fn load_fixtures() -> Vec<PuzzleFixture> {
    vec![
        PuzzleFixture {
            id: 1,
            name: "1-out-of-3",
            statement: "removing any one of three nails fells the picture",
            word: word(SOLUTION_1),
            spec: PuzzleSpec::threshold(3, 1),
            n: 3,
        },
        PuzzleFixture {
            id: 2,
            name: "2-out-of-3",
            statement: "removing any two of three nails fells the picture, removing one leaves it hanging",
            word: word(SOLUTION_2),
            spec: PuzzleSpec::threshold(3, 2),
            n: 3,
        },
        PuzzleFixture {
            id: 3,
            name: "1+2-out-of-3",
            statement: "removing the first nail fells the picture, as does removing both the second and third, but not just the second or just the third",
            word: word(SOLUTION_3),
            spec: PuzzleSpec::subsets(3, vec![vec![1], vec![2, 3]]),
            n: 3,
        },
        PuzzleFixture {
            id: 4,
            name: "1-out-of-4",
            statement: "removing any one of four nails fells the picture",
            word: word(SOLUTION_4),
            spec: PuzzleSpec::threshold(4, 1),
            n: 4,
        },
        PuzzleFixture {
            id: 5,
            name: "2-out-of-4",
            statement: "removing any two of four nails fells the picture, removing one leaves it hanging",
            word: word(SOLUTION_5),
            spec: PuzzleSpec::threshold(4, 2),
            n: 4,
        },
        PuzzleFixture {
            id: 6,
            name: "3-out-of-4",
            statement: "removing any three of four nails fells the picture, removing one or two leaves it hanging",
            word: word(SOLUTION_6),
            spec: PuzzleSpec::threshold(4, 3),
            n: 4,
        },
        PuzzleFixture {
            id: 7,
            name: "2+2-out-of-2+2",
            statement: "red nails 1, 2 and blue nails 3, 4: removing both of one color fells the picture, one of each color does not",
            word: word(SOLUTION_7),
            spec: PuzzleSpec::subsets(4, vec![vec![1, 2], vec![3, 4]]),
            n: 4,
        },
        PuzzleFixture {
            id: 8,
            name: "1+2-out-of-2+2",
            statement: "red nails 1, 2 and blue nails 3, 4: removing any red nail fells the picture, as does removing both blue nails, but not just one blue nail",
            word: word(SOLUTION_8),
            spec: PuzzleSpec::subsets(4, vec![vec![1], vec![2], vec![3, 4]]),
            n: 4,
        },
        PuzzleFixture {
            id: 9,
            name: "1+3-out-of-3+3",
            statement: "red nails 1-3 and blue nails 4-6: removing any red nail fells the picture, as does removing all three blue nails, but not just one or two blue nails",
            word: word(SOLUTION_9),
            spec: PuzzleSpec::subsets(6, vec![vec![1], vec![2], vec![3], vec![4, 5, 6]]),
            n: 6,
        },
        PuzzleFixture {
            id: 10,
            name: "1+2-out-of-3+3",
            statement: "red nails 1-3 and blue nails 4-6: removing any red nail fells the picture, as does removing any two blue nails, but not just one blue nail",
            word: word(SOLUTION_10),
            spec: PuzzleSpec::subsets(6, vec![vec![1], vec![2], vec![3], vec![4, 5], vec![4, 6], vec![5, 6]]),
            n: 6,
        },
        PuzzleFixture {
            id: 11,
            name: "1+1-out-of-2+2+2",
            statement: "red nails 1, 2, green nails 3, 4, blue nails 5, 6: removing two nails of different colors fells the picture, two of the same color do not",
            word: word(SOLUTION_11),
            spec: cross_color_pairs(),
            n: 6,
        },
    ]
}

pub fn fixture(id: u32) -> Result<PuzzleFixture, Error> {
    load_fixtures()
        .into_iter()
        .find(|f| f.id == id)
        .ok_or(Error::UnknownPuzzle(id))
}
