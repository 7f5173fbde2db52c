use thiserror::Error;

/// Errors raised by the library. Budget exhaustion and "no solution" are
/// reported in-band by the solvers, never through this type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid torus dimensions {m}x{n}: both cycles need at least 3 vertices")]
    InvalidDims { m: usize, n: usize },

    #[error("coordinate ({row}, {col}) is outside a {m}x{n} torus")]
    CoordOutOfRange {
        row: usize,
        col: usize,
        m: usize,
        n: usize,
    },

    #[error("grid has {got} cells but a {m}x{n} torus needs {expected}")]
    DimensionMismatch {
        m: usize,
        n: usize,
        expected: usize,
        got: usize,
    },

    #[error("color 0 at ({row}, {col}): colors are positive integers")]
    ZeroColor { row: usize, col: usize },

    #[error("palette is not 1..={k}: color {color} present")]
    PaletteGap { k: u32, color: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Usage(String),

    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),

    #[error("catalogue entry `{name}`: {reason}")]
    Catalogue { name: String, reason: String },

    #[error("recipe {method} for {m}x{n} produced an improper coloring ({violations} violations)")]
    RecipeFailed {
        method: String,
        m: usize,
        n: usize,
        violations: usize,
    },

    #[error("no construction recipe applies to {m}x{n}")]
    NoRecipe { m: usize, n: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
