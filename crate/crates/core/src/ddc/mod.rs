//! The dependent calculus DDC over a PTS signature and a lattice with a
//! designated compile-time grade `C`.
//!
//! Choosing `C = ⊤` gives the run-time irrelevance instance.

mod check;
mod indist;
mod step;

pub use check::{check_context, ddc_check, ddc_check_traced, ddc_check_truncated, whnf, DdcConfig};
pub use indist::{ddc_grade, ddc_indist, erase};
pub use step::{ddc_eval, ddc_step, is_value};
