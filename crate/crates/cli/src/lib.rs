//! Library side of the `prelie-coh` command-line tool: the JSON document
//! model, the subcommands (which return their output instead of printing it)
//! and the fixture catalog shipped under `fixtures/`.

pub mod commands;
pub mod document;
pub mod fixtures;
mod format;

pub use commands::{Exit, Global, Outcome};
pub use document::{parse_document, read_document, serialize_document, Document, DocumentError};
