//! Error type shared across the crate.
//!
//! Content-level problems (malformed OBJ lines, missing textures, measures
//! that cannot be computed) are never errors: they become parse warnings or
//! `null` report fields. `Error` is reserved for conditions that make an
//! analysis impossible.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("model contains no faces")]
    EmptyModel,

    #[error("invalid texture dimensions {width}x{height}")]
    InvalidTextureDims { width: u32, height: u32 },

    #[error("texture pixel data unavailable")]
    PixelsUnavailable,

    #[error("failed to decode image {path}: {message}")]
    ImageDecode { path: PathBuf, message: String },

    #[error("no OBJ models found under {0}")]
    EmptyBatch(PathBuf),

    #[error("failed to write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
