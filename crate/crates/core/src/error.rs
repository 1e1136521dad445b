use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A request would exceed a configured resource bound.
    #[error("resource limit: {what} (bound {bound}, requested {requested})")]
    Resource {
        what: &'static str,
        bound: u64,
        requested: u64,
    },

    /// Malformed step-string input; `position` is 1-based.
    #[error("parse error at token {position}: unknown step `{token}`")]
    Parse { position: usize, token: String },

    #[error("no rule reading reproduces the triangle up to n = {n_max}")]
    NoMatchingReading { n_max: u32 },

    #[error("{count} rule readings reproduce the triangle up to n = {n_max}")]
    AmbiguousReadings { n_max: u32, count: usize },

    #[error("sample generation failed: {0}")]
    Generation(String),
}
