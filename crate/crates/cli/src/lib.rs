//! Library side of the `corona` command: spec files, formatting, the seeded
//! comparison suite and the subcommand implementations.

pub mod commands;
pub mod format;
pub mod spec;
pub mod suite;
