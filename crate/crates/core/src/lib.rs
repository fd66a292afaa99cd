//! Exact computational kernel for finite-dimensional algebras over the
//! rationals, prime fields F_p, and the quartic extension Q(i, sqrt 2).
//!
//! Everything here is exact: scalars are arbitrary-precision rationals (or
//! their images mod p), subspaces are kept in reduced row echelon form so that
//! equality is literal equality of bases, and every verdict produced by the
//! check drivers is backed by a witness or a finite certificate rather than a
//! numerical tolerance.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`], [`matrix`], [`subspace`], [`solver`]: scalars, dense exact
//!   matrices, canonical subspaces, and a sparse incremental kernel solver.
//! * [`algebra`], [`constructors`], [`certify`]: structure-constant algebras
//!   (associative and Lie), stock examples, and semisimplicity certificates.
//! * [`grading`], [`peirce`]: integer gradings and Peirce systems with the
//!   idempotent round trip.
//! * [`local`]: local algebras at an element, corners, and the drivers built
//!   on them.
//! * [`derivation`], [`qm`]: derivation spaces, including twisted variants and
//!   graded decomposition, and the maximal graded algebras of quotients.
//! * [`nondegen`], [`inner_ideal`]: nondegeneracy searches over F_p and inner
//!   ideal classification.

pub mod algebra;
pub mod certify;
pub mod check;
pub mod constructors;
pub mod derivation;
pub mod field;
pub mod grading;
pub mod inner_ideal;
pub mod local;
pub mod nondegen;
pub mod matrix;
pub mod peirce;
pub mod qm;
pub mod solver;
pub mod subspace;

mod error;

pub use error::{AlgError, Result};
pub use field::{FieldTower, Scalar};
pub use matrix::Matrix;
pub use subspace::Subspace;
