//! String links, braid words, and Milnor invariants.
//!
//! The pipeline runs in three stages:
//!
//! 1. [`braid`] and [`diagram`] model composable diagram words: braid words
//!    in the Artin generators, and Morse ("slice") words listing crossings,
//!    cups and caps bottom to top. Validation traces components and
//!    orientations and resolves crossing signs.
//! 2. [`wirtinger`] extracts a Wirtinger presentation from a validated
//!    diagram: one meridian generator per arc, one conjugation relation per
//!    crossing, plus based longitude traversals with framing correction.
//! 3. [`magnus`] does exact integer arithmetic in truncated noncommutative
//!    power series, resolves every arc into a series in the base meridians,
//!    expands longitudes, and reads off Milnor invariants `mu(I)` together
//!    with the indeterminacy `delta(I)`.
//!
//! [`dsl`] parses and prints the shared textual format for braid and slice
//! words, and [`verify`] bundles the reproduction checks used by the
//! acceptance suite and the CLI.

pub mod braid;
pub mod diagram;
pub mod dsl;
pub mod magnus;
pub mod verify;
pub mod wirtinger;

pub use braid::{BraidLetter, BraidWord, Permutation, Sign};
pub use diagram::{LinkingMatrix, SliceEvent, SliceWord, StringLinkDiagram};
pub use magnus::{MilnorEngine, MilnorValue, TruncatedSeries};
pub use wirtinger::WirtingerPresentation;

/// Crate-wide error type. Variant names double as machine-readable kind
/// tags in CLI output.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("strand counts differ: {0} vs {1}")]
    WidthMismatch(u32, u32),
    #[error("event {event}: position {pos} illegal at width {width}")]
    WidthUnderflow { event: usize, pos: u32, width: u32 },
    #[error("diagram contains a closed component")]
    ClosedComponent,
    #[error("strand starting at bottom {bottom} ends at top {top}")]
    PermutedEndpoints { bottom: u32, top: u32 },
    #[error("components {0} and {1} cross an odd number of times")]
    OddCrossingParity(u32, u32),
    #[error("no components selected")]
    EmptySelection,
    #[error("index out of range: {0}")]
    IndexError(String),
    #[error("series has constant term != 1, cannot invert")]
    NotAUnit,
    #[error("arc resolution did not stabilize within {0} sweeps")]
    NoConvergence(usize),
    #[error("index sequence of length {index_len} needs q >= {needed}, engine has q = {q}")]
    TruncationTooLow {
        index_len: usize,
        needed: u32,
        q: u32,
    },
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: braid and slice tokens cannot mix")]
    MixedMode { line: usize, col: usize },
}

impl Error {
    /// Stable tag for machine-readable error reporting.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::WidthMismatch(..) => "WidthMismatch",
            Error::WidthUnderflow { .. } => "WidthUnderflow",
            Error::ClosedComponent => "ClosedComponent",
            Error::PermutedEndpoints { .. } => "PermutedEndpoints",
            Error::OddCrossingParity(..) => "OddCrossingParity",
            Error::EmptySelection => "EmptySelection",
            Error::IndexError(..) => "IndexError",
            Error::NotAUnit => "NotAUnit",
            Error::NoConvergence(..) => "NoConvergence",
            Error::TruncationTooLow { .. } => "TruncationTooLow",
            Error::Syntax { .. } => "SyntaxError",
            Error::MixedMode { .. } => "MixedMode",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
