//! Rendering, documents and the verification battery behind the `grassrank`
//! binary.

pub mod document;
pub mod grid;
pub mod verify;

pub use document::{ChartDocument, Diagnostic, Parameters, Source};

use grassrank::SolveStatus;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_AMBIGUOUS: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;
/// Failed verification, or constructions that contradict each other.
pub const EXIT_FAILED: u8 = 4;

pub fn exit_code(status: SolveStatus) -> u8 {
    match status {
        SolveStatus::Certified => 0,
        SolveStatus::Ambiguous => EXIT_AMBIGUOUS,
        SolveStatus::Inconclusive => EXIT_INCONCLUSIVE,
        SolveStatus::Inconsistent => EXIT_FAILED,
    }
}
