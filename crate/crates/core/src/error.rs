use thiserror::Error;

use crate::Label;

/// Every failure the library can report.
///
/// The variant name doubles as the diagnostic token printed by the command
/// line front end, see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degrees differ ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },
    #[error("malformed cycle notation: {0}")]
    MalformedSyntax(String),
    #[error("label {label} outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("label {0} appears more than once")]
    DuplicateLabel(Label),
    #[error("{0}")]
    NotSquare(String),
    #[error("{line} {index} repeats label {label}")]
    NotLatin { line: LineKind, index: Label, label: Label },
    #[error("table has no identity element")]
    NotLoop,
    #[error("family of tracks defines no quasigroup: {0}")]
    InconsistentTracks(String),
    #[error("loop is not an IP-loop")]
    NotIPLoop,
    #[error("tracks {0} and {1} are not decomposable")]
    NotDecomposable(Label, Label),
    #[error("tracks {i} and {j} admit {splits} splits; one must be chosen")]
    AmbiguousSplit { i: Label, j: Label, splits: usize },
    #[error("{0}")]
    BadSplit(String),
    #[error("orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("order {0} is above the exhaustive limit of 6")]
    OrderTooLarge(usize),
    #[error("{0}")]
    Io(String),
}

/// Whether a Latin violation was found in a row or a column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    Row,
    Column,
}

impl std::fmt::Display for LineKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LineKind::Row => "row",
            LineKind::Column => "column",
        })
    }
}

impl Error {
    /// Stable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::MalformedSyntax(_) => "MalformedSyntax",
            Error::LabelOutOfRange { .. } => "LabelOutOfRange",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::NotSquare(_) => "NotSquare",
            Error::NotLatin { .. } => "NotLatin",
            Error::NotLoop => "NotLoop",
            Error::InconsistentTracks(_) => "InconsistentTracks",
            Error::NotIPLoop => "NotIPLoop",
            Error::NotDecomposable(..) => "NotDecomposable",
            Error::AmbiguousSplit { .. } => "AmbiguousSplit",
            Error::BadSplit(_) => "BadSplit",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::OrderTooLarge(_) => "OrderTooLarge",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
