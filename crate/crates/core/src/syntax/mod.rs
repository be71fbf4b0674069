//! The shared AST, its surface syntax, substitution and contexts.

pub mod context;
mod lexer;
pub mod parse;
pub mod print;
pub mod pts;
pub mod subst;
pub mod term;

pub use context::{Binding, Context, GradeContext};
pub use parse::{parse, parse_open, parse_program, parse_with, Dialect, ParseError, ParseErrorKind, ParseOptions};
pub use print::{print, print_in};
pub use pts::{load_pts, PtsError, PtsSignature};
pub use subst::{shift, shift_from, strengthen, subst, subst2, subst_at};
pub use term::{Motive, Name, Names2, Sort, Term};
