//! Fixture loading, suite drivers, and report shapes for the `alg` binary.
//!
//! The binary itself is a thin shell over this crate; integration tests call
//! the same entry points directly.

pub mod catalog;
pub mod fixture;
pub mod report;
pub mod suites;
