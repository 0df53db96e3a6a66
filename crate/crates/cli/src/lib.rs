//! Command-line surface for `chowcalc`: subcommands, JSON/CSV rendering,
//! and deterministic catalog files.

pub mod catalog;
pub mod cli;
pub mod config;
pub mod entry;
pub mod output;

pub use cli::{run, CliError};
pub use entry::{Catalog, CatalogEntry, EntryKind, Value};
