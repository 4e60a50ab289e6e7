//! Verification suites and Monte Carlo experiments for `schur-weyl`.
//!
//! The `sw-harness` binary wraps these modules:
//!
//! - `verify <suite>` runs a deterministic suite from [`suites`].
//! - `experiment <config>` sweeps one claim over `n` and writes a CSV report
//!   with a JSON sidecar ([`experiment`]).
//! - `table <claim> <grid>` prints one claim over a grid ([`table`]).

pub mod config;
pub mod experiment;
pub mod suites;
pub mod table;

use schur_weyl::bounds::Verdict;

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const INCONCLUSIVE: i32 = 2;
    pub const USAGE: i32 = 3;
}

pub fn exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Pass => exit::PASS,
        Verdict::Fail => exit::FAIL,
        Verdict::Inconclusive => exit::INCONCLUSIVE,
    }
}
