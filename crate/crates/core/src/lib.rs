//! Northeastern lattice paths that avoid a Ferrers shape in the northwest
//! corner of the grid.
//!
//! * [`shape`]: shapes, conjugation, and the allowed-vertex predicate.
//! * [`path`]: paths, the brute-force enumerator, and the counting DP for
//!   `N(m, n)`.
//! * [`injections`]: the three invertible path-pair maps behind
//!   log-concavity of the diagonal sequences.
//! * [`analysis`]: diagonal sequences, their predicates, and the
//!   real-rootedness sweep.
//! * [`poly`]: integer polynomials with exact Sturm root counting.
//! * [`verify`]: the exhaustive injection suite used by the CLI.

pub mod analysis;
pub mod error;
pub mod injections;
pub mod path;
pub mod poly;
pub mod shape;
pub mod verify;

pub use analysis::{diagonal_sequence, CountSequence, RootVerdict, SearchEntry};
pub use error::{Error, Result};
pub use injections::{CutPair, Direction, PathPair};
pub use path::{count_paths, enumerate_paths, is_valid_path, CountTable, Path, Step};
pub use poly::IntPolynomial;
pub use shape::{Point, Shape};
pub use verify::{Injection, VerifyReport, Violation};
