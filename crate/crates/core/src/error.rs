use thiserror::Error;

use crate::weights::NotRealizable;

/// Which side of a relation a label belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axis::X => write!(f, "x"),
            Axis::Y => write!(f, "y"),
        }
    }
}

/// A related pair `(x, y)` whose image `(fx, gy)` is not related in the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub x: String,
    pub y: String,
    pub fx: String,
    pub gy: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("duplicate {axis} label `{label}`")]
    DuplicateLabel { axis: Axis, label: String },

    #[error("invalid matrix entry `{entry}` at row {row}, column {col} (expected 0 or 1)")]
    InvalidEntry {
        row: usize,
        col: usize,
        entry: String,
    },

    #[error("unknown {axis} label `{label}`")]
    UnknownLabel { axis: Axis, label: String },

    #[error("vertex id {0} is out of range")]
    UnknownVertex(usize),

    #[error("simplex `{0}` is not in the complex")]
    UnknownSimplex(String),

    #[error("map `{map}` is not defined on `{label}`")]
    NotTotal { map: &'static str, label: String },

    #[error("{} related pair(s) not preserved, first ({},{}) maps to ({},{})",
        .0.len(), .0[0].x, .0[0].y, .0[0].fx, .0[0].gy)]
    MorphismViolation(Vec<Witness>),

    #[error("morphism endpoints do not match: {0}")]
    EndpointMismatch(String),

    #[error("not a simplicial map: {0}")]
    NotSimplicial(String),

    #[error("invalid cosheaf: {0}")]
    InvalidCosheaf(String),

    #[error("invalid sheaf: {0}")]
    InvalidSheaf(String),

    #[error("extension from `{upper}` to `{lower}` is not an inclusion")]
    NonInclusionExtension { lower: String, upper: String },

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid weight function: {0}")]
    InvalidWeights(String),

    #[error(transparent)]
    NotRealizable(Box<NotRealizable>),

    #[error("dimension {dim} is out of range for a complex of dimension {max}")]
    DimensionOutOfRange { dim: usize, max: isize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
