//! Bodies of the fuzz targets, shared with the corpus replay tests.

#[path = "core_checks.rs"]
pub mod core_checks;

#[path = "cli_checks.rs"]
pub mod cli_checks;
