//! Graded Brauer graphs and gentle algebras: Kauer moves, admissible cuts,
//! the trivial-extension correspondence, derived-equivalence criteria and
//! derived invariants.

pub mod algebra;
pub mod batch;
pub mod equivalence;
pub mod error;
pub mod gentle;
pub mod graph;
mod linalg;
pub mod mutation;

pub use error::{Error, Result};
pub use linalg::determinant;
