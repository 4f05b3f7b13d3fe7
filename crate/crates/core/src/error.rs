use thiserror::Error;

use crate::string::Letter;

pub type Result<T> = std::result::Result<T, WalkError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WalkError {
    #[error("initial coin amplitudes are not normalized: alpha^2 + beta^2 = {norm} (alpha = {alpha}, beta = {beta})")]
    Unnormalized { alpha: f64, beta: f64, norm: f64 },

    #[error("walk parameter `{0}` is not finite")]
    NonFinite(&'static str),

    #[error("path enumeration for n = {n} exceeds the cap of {cap} steps (2^(n+1) paths)")]
    PathCapExceeded { n: usize, cap: usize },

    #[error("path cap {requested} is above the hard limit of {limit}")]
    CapTooLarge { requested: usize, limit: usize },

    #[error("switch group (c = {c}, j = {j}, x = {x}) is not homogeneous in {property}")]
    InhomogeneousGroup {
        c: Letter,
        j: usize,
        x: i64,
        property: &'static str,
    },

    #[error("no extended string has c = {c}, n = {n}, x = {x}, j = {j}")]
    EmptyGroup {
        c: Letter,
        n: usize,
        x: i64,
        j: usize,
    },

    #[error("empty letter sequence")]
    EmptyString,

    #[error("invalid letter {0:?}, expected B or F")]
    InvalidLetter(char),
}
