//! Driver layer: configuration, verification batteries, reports and the
//! subcommand implementations used by the `steinberg-lab` binary.

mod commands;
mod config;
mod report;
mod suites;

pub use commands::{
    cmd_bott, cmd_demazure, cmd_grr, cmd_kempf, cmd_orthogonality, cmd_p1, cmd_roots, cmd_verify_all, remedy,
    CommandOutput, EXIT_FAIL, EXIT_PASS, EXIT_USAGE,
};
pub use config::{Suite, SuiteConfig, CONFIG_ENV};
pub use report::{CaseRecord, RunReport, Totals, SCHEMA_VERSION};
pub use suites::{bott_case, demazure_check, p1_grid_case, run_verify_all, weight_box, DemazureCheck, SystemContext};
