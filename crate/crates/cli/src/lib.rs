//! Documents, workspaces and commands behind the `hvdc` binary.

pub mod commands;
pub mod doc;
pub mod error;
pub mod report;
pub mod workspace;

pub use commands::{run, Options};
pub use doc::Document;
pub use error::CliError;
pub use report::Report;
pub use workspace::Workspace;
