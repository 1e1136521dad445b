//! Command-line front end for `scatalan`: exports of the s-Pascal and
//! s-Catalan triangles, path queries, verification suites with JSON
//! reports, and cross-checks against OEIS b-files.

pub mod bfile;
pub mod export;
pub mod report;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] scatalan::Error),

    #[error(transparent)]
    BFile(#[from] bfile::BFileError),

    #[error("{0}")]
    Input(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
