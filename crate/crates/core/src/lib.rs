//! Graded dependency calculi over a user-supplied label lattice.
//!
//! The crate covers three calculi sharing one AST: the simple dependency
//! calculus (SDC) with its sealing variant, and the dependent calculus DDC
//! parameterised by a designated compile-time grade `C`.

pub mod ddc;
pub mod equality;
pub mod error;
pub mod lattice;
pub mod sdc;
pub mod syntax;
pub mod trace;
pub mod translate;

pub use error::{ErrorKind, TypeError};
pub use lattice::{Grade, Lattice, LatticeError};
pub use syntax::{Context, GradeContext, Name, PtsSignature, Term};
