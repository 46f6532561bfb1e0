//! Exact Haar-moment computation on the homogeneous spaces of partial
//! isometries attached to the uniform orthogonal, unitary and reflection
//! quantum-group families, classical, twisted and free.
//!
//! Everything upstream of the Monte Carlo oracle is exact rational
//! arithmetic: colored partition combinatorics, Gram matrices
//! `G(pi, sigma) = N^|pi v sigma|` and their Weingarten inverses, the
//! moment formulas they drive, and the limit laws the moments converge to.
//! Two independent oracles cross-check the pipeline: exhaustive enumeration
//! of the finite spaces of signed partial permutations, and seeded Monte
//! Carlo over the classical orthogonal/unitary spaces.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `wgs` binary for the scriptable interface.

pub mod category;
pub mod cli;
pub mod error;
pub mod integrate;
pub mod laws;
pub mod oracle;
pub mod partition;
pub mod wg;

pub use category::{CategoryId, FamilyKind, QuantumFamily, SParam};
pub use error::{Error, Result};
pub use integrate::{MomentSpec, SpaceSpec};
pub use partition::{Color, ColoredWord, MultiIndex, Partition, Twist};
pub use wg::{GramMatrix, Rational, WeingartenMatrix};
