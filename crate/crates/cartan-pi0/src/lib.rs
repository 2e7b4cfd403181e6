//! Catalog of real forms, JSON query and report documents, and the self-test
//! suite behind the `cartan-pi0` command.

pub mod catalog;
pub mod doc;
pub mod error;
pub mod query;
pub mod render;
pub mod selftest;

pub use catalog::{Catalog, CatalogEntry};
pub use doc::{parse_queries, QueryDoc, ReportDoc, Status};
pub use error::{exit, AppError};
pub use query::{exit_code, run_batch, run_query, RunOptions};
