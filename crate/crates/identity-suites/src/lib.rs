//! Named, seeded verification suites over the whole workspace.
//!
//! A suite draws its parameters from a deterministic stream, builds one job
//! per check, runs the jobs in parallel and assembles the report in job order.

mod draw;
mod error;
mod report;
mod spec;
mod suites;

use rayon::prelude::*;

pub use draw::{draw_params, DrawStrategy, Drawer, ParamSet, MAX_DENOMINATOR, MAX_NUMERATOR};
pub use error::SuiteError;
pub use report::{CheckRecord, Report, Status};
pub use spec::{Suite, SuiteSpec};
pub use suites::{printed_lambda2, printed_q2};

/// Runs every check of a suite.
pub fn run_suite(spec: &SuiteSpec) -> Result<Report, SuiteError> {
    let plan = suites::plan(spec)?;
    let checks = plan
        .jobs
        .into_par_iter()
        .map(|job| CheckRecord::from_result(job.name, job.identity, (job.run)()))
        .collect();
    Ok(Report { suite: spec.suite.name().to_string(), seed: spec.seed, params: plan.params, checks })
}
