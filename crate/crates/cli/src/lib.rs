//! File formats, builtin presentations and subcommands for `cohere`.

pub mod aliases;
pub mod builtins;
pub mod checks;
pub mod commands;
pub mod csvio;
pub mod dot;
pub mod error;
pub mod format;
pub mod view;
