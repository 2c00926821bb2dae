//! Deferred word assembly.
//!
//! Constructions nest concatenations, inverses and powers of shared
//! subwords. Building those eagerly copies the same letters many times at
//! every level; a [`WordExpr`] instead records the shape as a DAG of
//! reference-counted nodes and [`WordExpr::flatten`] writes the letters out in
//! one pass, so assembly costs time proportional to the output.

use std::rc::Rc;

use super::letter::Letter;
use super::word::Word;

#[derive(Debug)]
enum Node {
    Leaf(Word),
    Concat(Vec<WordExpr>),
    Inverse(WordExpr),
    Power(WordExpr, i64),
}

/// A word under construction. Cloning is O(1).
#[derive(Debug, Clone)]
pub struct WordExpr(Rc<Node>);

impl WordExpr {
    pub fn leaf(word: Word) -> Self {
        WordExpr(Rc::new(Node::Leaf(word)))
    }

    pub fn letter(letter: Letter) -> Self {
        WordExpr::leaf(Word::from_letters(vec![letter]))
    }

    pub fn empty() -> Self {
        WordExpr::leaf(Word::empty())
    }

    pub fn concat<I: IntoIterator<Item = WordExpr>>(parts: I) -> Self {
        WordExpr(Rc::new(Node::Concat(parts.into_iter().collect())))
    }

    pub fn inverse(&self) -> Self {
        WordExpr(Rc::new(Node::Inverse(self.clone())))
    }

    pub fn power(&self, k: i64) -> Self {
        WordExpr(Rc::new(Node::Power(self.clone(), k)))
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &WordExpr, b: &WordExpr) -> Self {
        WordExpr::concat([a.clone(), b.clone(), a.inverse(), b.inverse()])
    }

    /// As-constructed letter count, without materializing the word.
    pub fn len(&self) -> u64 {
        match &*self.0 {
            Node::Leaf(w) => w.len() as u64,
            Node::Concat(parts) => parts.iter().map(WordExpr::len).sum(),
            Node::Inverse(inner) => inner.len(),
            Node::Power(inner, k) => inner.len() * k.unsigned_abs(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes the letters in order, with no reduction.
    pub fn flatten(&self) -> Word {
        let mut out = Vec::with_capacity(self.len() as usize);
        // (node, inverted); an inverted node emits its letters reversed and flipped
        let mut stack: Vec<(&WordExpr, bool)> = vec![(self, false)];
        while let Some((expr, inverted)) = stack.pop() {
            match &*expr.0 {
                Node::Leaf(word) => {
                    if inverted {
                        out.extend(word.letters().iter().rev().map(|l| l.inverse()));
                    } else {
                        out.extend_from_slice(word.letters());
                    }
                }
                Node::Concat(parts) => {
                    // the stack pops in reverse push order
                    if inverted {
                        stack.extend(parts.iter().map(|p| (p, true)));
                    } else {
                        stack.extend(parts.iter().rev().map(|p| (p, false)));
                    }
                }
                Node::Inverse(inner) => stack.push((inner, !inverted)),
                Node::Power(inner, k) => {
                    let flip = inverted ^ (*k < 0);
                    for _ in 0..k.unsigned_abs() {
                        stack.push((inner, flip));
                    }
                }
            }
        }
        Word::from_letters(out)
    }
}

impl From<Word> for WordExpr {
    fn from(word: Word) -> Self {
        WordExpr::leaf(word)
    }
}
