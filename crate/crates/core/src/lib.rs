//! Exact combinatorics of the k-Young lattice.
//!
//! - [`partition`]: partitions, skew shapes, hooks, residues, k-skew diagrams,
//!   k-conjugation and the (k+1)-core map
//! - [`lattice`]: covers in the k-Young order, comparability, Hasse diagrams
//!   and the rectangle-translation check
//! - [`ideal`]: the rectangular order ideals `L^k(m,n)`, their strata,
//!   duality, meet and join
//! - [`qseries`]: exact polynomials in `q`, Gaussian binomials, closed-form
//!   rank-generating functions, unimodality and sieved sums
//! - [`verify`]: parameter sweeps producing structured reports, and exports

pub mod error;
pub mod ideal;
pub mod lattice;
pub mod partition;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::{IdealSpec, RankVector};
pub use lattice::{covers, covers_oracle, leq, Direction, HasseDiagram};
pub use partition::{k_conjugate, k_skew, to_core, Cell, KRectangle, Partition, SkewShape};
pub use qseries::QPoly;
