//! Exact computer algebra for two interacting bialgebras on graphs.
//!
//! * [`graph`], [`partition`], [`canon`]: indexed graphs, set partitions and
//!   isomorphism keys.
//! * [`linear`], [`polynomial`]: rational linear combinations and `Q[X]`.
//! * [`bialgebra`]: the restriction coproduct `Δ`, the contraction-extraction
//!   coproduct `δ`, the antipode of the quotient by `K1 - 1`, cointeraction.
//! * [`characters`]: the convolution monoid of characters and its action on
//!   graph morphisms.
//! * [`chromatic`]: the chromatic polynomial by several independent routes.
//! * [`lattice`]: the lattice of admissible partitions and its Möbius function.
//! * [`wsym`]: word symmetric functions and the noncommutative chromatic
//!   morphisms.
//! * [`verify`]: exhaustive identity suites shared by the CLI and tests.

pub mod bialgebra;
pub mod canon;
pub mod characters;
pub mod chromatic;
pub mod enumerate;
pub mod error;
pub mod forest;
pub mod graph;
pub mod lattice;
pub mod linear;
pub mod partition;
pub mod polynomial;
pub mod verify;
pub mod wsym;

pub use canon::{canonical_key, CanonicalKey, Monomial};
pub use error::{Error, Result};
pub use graph::{acyclic_orientations, Graph, Orientation};
pub use linear::{LinComb, Rational};
pub use partition::{Partition, SetPartitions};
pub use polynomial::Polynomial;
