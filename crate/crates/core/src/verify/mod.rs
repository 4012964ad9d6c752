//! Reproducible property campaigns over the algebra, the module families
//! and the Whittaker analysis. Every failed check is recorded with the
//! operation and inputs that reproduce it; see [`replay`].

mod actions;
mod config;
mod core;
mod lemmas;
mod random;
mod replay;
mod report;
mod theorems;

use std::time::Instant;

pub use self::actions::verify_module_actions;
pub use self::config::{BracketRules, SuiteConfig};
pub use self::core::verify_core_identities;
pub use self::lemmas::verify_expansion_lemmas;
pub use self::replay::{replay, ReplayError};
pub use self::report::{Counterexample, PropertyReport, SuiteReport};
pub use self::theorems::verify_whittaker_theorems;

/// Every suite: core identities, expansion lemmas, Whittaker theorems and
/// module-action compatibility.
pub fn run_all(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = verify_core_identities(cfg);
    report.extend(verify_expansion_lemmas(cfg));
    report.extend(verify_whittaker_theorems(cfg));
    report.extend(verify_module_actions(cfg));
    report
}

pub(crate) fn timed(run: impl FnOnce() -> PropertyReport) -> PropertyReport {
    let start = Instant::now();
    let mut report = run();
    report.elapsed = start.elapsed();
    report
}
