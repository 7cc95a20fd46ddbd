//! File formats, reports, fixtures and command implementations for the
//! `nearbi` command-line tool.

pub mod commands;
pub mod corpus;
pub mod format;
pub mod random;
pub mod render;
pub mod suites;
