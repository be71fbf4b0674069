//! The simple dependency calculus and the sealing calculus.
//!
//! Both share types `Unit`, `A -> B`, `A * B`, `A + B` and the graded
//! modality `T^g A`; SDC introduces and eliminates the modality with
//! `eta`/`bind` and graded contexts, the sealing calculus with
//! `seal`/`unseal` and ungraded contexts.

mod check;
mod indist;
mod step;

pub use check::{check_traced, is_simple_type, sdc_check, seal_check, Mode};
pub use indist::{sdc_grade, sdc_indist};
pub use step::{full_step, is_value, sdc_eval, sdc_step};
