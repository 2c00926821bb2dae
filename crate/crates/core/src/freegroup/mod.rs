//! Picture hangings as words in the free group on the nails.
//!
//! A letter `x<i>` wraps the rope clockwise around nail `i` and `X<i>`
//! counterclockwise. Pulling a nail deletes its letters; the picture falls
//! exactly when what is left freely reduces to the empty word.

mod expr;
mod letter;
mod subset;
mod table;
mod word;

pub use expr::WordExpr;
pub use letter::{Letter, Orientation};
pub use subset::{NailSubset, MAX_NAILS};
pub(crate) use table::check_limit;
pub use table::{
    fall_table, fall_table_with_limit, Mismatch, TruthTable, DEFAULT_EXHAUSTIVE_LIMIT,
};
pub use word::Word;
