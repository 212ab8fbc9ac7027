//! Exact computer algebra for Hermitian symplectic Clifford analysis on
//! R^2n: a normal-ordered Weyl operator engine with a catalog of the named
//! operators (the symplectic Dirac pair D_s, D_t, their Fischer duals, the
//! Dolbeault quartet, the sp(2n) and u(n) realisations and the su(1,2)
//! images), a Hermite model of the symplectic spinor space, exact sparse
//! linear algebra over Q(i), and the machinery that decomposes spinor-valued
//! harmonic slices into h-symplectic monogenics and verifies the result.
//!
//! Everything is exact: coefficients are Gaussian rationals, kernels and
//! ranks come from fraction-free elimination, and every verification is an
//! identity check, never an approximation.

pub mod arith;
pub mod catalog;
pub mod error;
pub mod fischer;
pub mod linalg;
pub mod report;
mod sparse;
pub mod spinor;
pub mod weyl;

pub use arith::{GaussianRational, Rational};
pub use catalog::{catalog, lie_closure_check, verify_su12_table, ClosureOutcome, OperatorName};
pub use error::{Error, Result};
pub use fischer::{
    decompose, dim_harmonics, dim_monogenics, dim_spinor, harmonic_slice_basis, hwv,
    monogenic_basis, predicted_summands, sum_dims_identity, verify_hwv, DecompositionReport,
    Weight,
};
pub use linalg::{gram, matrix_of, stack_and_intersect, ExactMatrix, VectorBasis};
pub use report::{CheckItem, CheckReport};
pub use spinor::{
    apply, fischer_pair, slice_basis, slice_dim, BasisState, SliceIndex, SpinorPolynomial,
};
pub use weyl::{Generator, WeylMonomial, WeylOperator};
