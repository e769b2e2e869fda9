//! Finite strict 2-/3-categories, suspensions, the iterated tensor,
//! extension/restriction of representations along free categories, the
//! triple nerve, the Duskin nerve, and the geometric nerve of a strict
//! 3-category.

pub mod cells;
pub mod fixtures;
pub mod nerves;
pub mod pasting;
pub mod rep;

pub use cells::{Strict2Cat, Strict3Cat};
pub use nerves::{diag_triple_nerve, duskin_nerve, geometric_nerve_3, TripleNerve};
pub use pasting::{pasting_eval, Paste3};
pub use rep::{
    extend_rep_l, or_tensor1, or_tensor2, or_tensor3, restrict_rep_r, GraphRep, Rep3, RepReport,
};
