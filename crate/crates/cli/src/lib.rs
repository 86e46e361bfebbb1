//! Command-line driver for `wq-core`: verification suites, JSON reports and
//! a generator cache.

pub mod app;
pub mod cache;
pub mod config;
pub mod report;
pub mod suite;

pub use app::{execute, Cli, Outcome};
pub use cache::Cache;
pub use config::{Suite, SuiteConfig};
pub use report::Report;
