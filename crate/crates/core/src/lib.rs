//! Rank charts for the RO(C2)-graded Bredon cohomology of equivariant
//! Grassmannians with constant `Z/2` coefficients.
//!
//! Two independent routes produce the same charts:
//!
//! * [`formulas`] holds closed-form charts for the families `Gr_k(R^{n,1})`,
//!   `Gr_2(R^{n,2})`, projective spaces, their complex analogues and the
//!   infinite Grassmannians;
//! * [`solver`] builds every equivariant Schubert cell structure of a
//!   Grassmannian ([`schubert`]), enumerates the differentials each one
//!   admits, and intersects the resulting candidate charts.
//!
//! [`young`] carries the partition combinatorics both routes share, and
//! [`mtwo`] the bigraded bookkeeping over the cohomology of a point.

pub mod error;
pub mod formulas;
pub mod mtwo;
pub mod schubert;
pub mod solver;
pub mod young;

pub use error::{Error, Result};
pub use mtwo::{Bidegree, RankChart};
pub use schubert::{CellEntry, CellTable, Field, Sign, SignSequence};
pub use solver::{SolveOptions, SolveReport, SolveStatus};
pub use young::{JumpComplement, JumpSequence, Partition};
