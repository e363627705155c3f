//! Text formats, batch search and table verification on top of
//! `polycode-core`.

pub mod best_known;
pub mod search;
pub mod text;

pub use polycode_core as core;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] polycode_core::Error),
    #[error(transparent)]
    Text(#[from] text::TextError),
    #[error("unknown table `{0}` (expected table1, table2, examples or misprints)")]
    UnknownTable(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
