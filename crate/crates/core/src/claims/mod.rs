//! Structural statements about composite rings, each paired with a
//! computation that checks it on a concrete instance.

mod suite;
mod verdict;

pub use suite::{run_claim, run_suite, ClaimError, ClaimId, ClaimVerdict, CrossCheck, SuiteConfig, SuiteReport, Summary};
pub use verdict::{Asserted, Property, PropertyEntry, PropertyReport, Tested, Witness};
