//! Picture-hanging puzzles as free-group words.
//!
//! A picture hung on `n` nails is recorded as the word of wraps its string
//! makes: `x_i` clockwise around nail `i`, `X_i` counterclockwise. Pulling a
//! nail deletes its letters, and the picture falls when what remains reduces
//! to the empty word.
//!
//! * [`freegroup`]: words, reduction, nail removal, fall tables.
//! * [`formula`]: monotone circuits, the formula language and puzzle specs.
//! * [`constructions`]: the 1-out-of-n and disjoint-class families.
//! * [`compiler`]: any realizable monotone function to a hanging.
//! * [`sortnet`]: k-out-of-n hangings via sorting networks.
//! * [`spectator`]: which nails to pull, and the Set Cover reduction.
//! * [`render`]: SVG and text diagrams.
//! * [`puzzles`]: a fixture set of classic puzzles with solutions.
//! * [`cli`]: the `hang` command line.
//!
//! ```
//! use picture_hanging::freegroup::{NailSubset, Word};
//!
//! let w: Word = "x1 x2 X1 X2".parse().unwrap();
//! assert!(w.falls(&NailSubset::from_nails(2, [1]).unwrap()));
//! assert!(!w.falls(&NailSubset::empty(2)));
//! ```

pub mod cli;
pub mod compiler;
pub mod constructions;
pub mod error;
pub mod formula;
pub mod freegroup;
pub mod puzzles;
pub mod render;
pub mod sortnet;
pub mod spectator;

pub use error::{Error, Result};
