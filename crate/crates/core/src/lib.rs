//! Symbolic calculus for the sequence operad, its interval-cut action on the
//! normalized chains of finite simplicial sets, and Hochschild homology of
//! finite graded algebras over GF(2).
//!
//! The crate is organized bottom-up:
//!
//! - [`algebra`]: formal integer linear combinations, GF(2) sums, and exact
//!   GF(2) linear algebra (rank, solve, kernel).
//! - [`operad`]: nondegenerate surjections with the table-arrangement
//!   differential, operadic composition, and the symmetric group action.
//! - [`simplicial`]: finite simplicial sets (standard simplices, spheres),
//!   normalized chains, and the interval-cut action of surjections.
//! - [`hochschild`]: graded GF(2) algebras, cochain algebras with ⌣ and ⌣₁,
//!   the normalized cyclic bar complex, and the evaluation maps Ψ and f.
//! - [`pipeline`]: the verification pipeline wiring everything together and
//!   emitting human- and machine-readable reports.

pub mod algebra;
pub mod hochschild;
pub mod operad;
pub mod pipeline;
pub mod simplicial;

pub use algebra::{F2Matrix, F2Solution, F2Sum, FormalSum};
pub use hochschild::{BarWord, Cochain, GradedAlgebra, HochschildComplex, PsiContext};
pub use operad::{OperadElement, Surjection, TableArrangement};
pub use pipeline::{InnerProductComponents, VerificationReport};
pub use simplicial::{Chain, SimplexRef, SimplicialSet, TensorChain};
