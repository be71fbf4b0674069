//! Translations between the calculi: sealing into SDC, SDC into the
//! run-time irrelevance instance of DDC, and the Π-fragment of DDC into
//! an ICC*-style syntax with relevant and irrelevant binders.

mod icc;
mod simple;

pub use icc::{ddc_to_icc, icc_normalize, icc_star_erase, icc_step, print_icc, IccTerm, OutOfFragment, Relevance};
pub use simple::{lift_context, sdc_to_ddct, seal_to_sdc};
