//! Test-generation machinery for the gradia calculi: exhaustive
//! enumeration, an independent SDC typing oracle, random well-typed term
//! generators and the property suites built on them.

pub mod enumerate;
pub mod gen;
pub mod oracle;
pub mod report;
pub mod shrink;
pub mod suites;

pub use enumerate::{enumerate_terms, Enumerator, Fragment};
pub use gen::{gen_well_typed, inhabitant, sample, sample_twin, sample_variants, small_type, trial_rng, GenConfig, GenerationStuck, Sample, Twin};
pub use oracle::Oracle;
pub use report::{Counterexample, Outcome, Report};
pub use suites::{run_suite, Suite};
