//! Countably infinite matrix Lie algebras, handled through finite data.
//!
//! Every matrix here has finitely many nonzero entries per row and column, so
//! products and brackets of the represented operators are well defined and the
//! results stay in the same class.  Two concrete carriers cover what we need:
//! [`sparse::SparseInfMatrix`] for finitary matrices (finitely many nonzero
//! entries in total) and [`banded::PeriodicBandedMatrix`] for scalar-plus-band
//! matrices with periodic band content and a finitary correction.  The latter
//! class contains the identity, the alternating pair form, and every quotient
//! representative the derivation checks need, while staying closed under
//! transpose and under multiplication by finitary matrices.
//!
//! [`family::Family`] fixes the three families (split special linear,
//! orthogonal, symplectic) together with their gradings, membership tests,
//! generator streams, and finite truncations.  [`checks`] hosts the
//! verification routines that the command line suites call into.

pub mod banded;
pub mod checks;
pub mod family;
pub mod sparse;
