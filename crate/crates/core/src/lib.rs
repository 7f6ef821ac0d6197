//! Exact-arithmetic workbench for finite quantum groups.
//!
//! The crate constructs the eight-dimensional Kac-Paljutkin quantum group,
//! the Sekine family of dimension 2n^2, and their duals as explicit
//! finite-dimensional Hopf *-algebras over cyclotomic fields, verifies the
//! structural axioms exactly, enumerates the irreducible corepresentations,
//! and computes *-distributions of characters under the Haar state —
//! including classical cumulants, Gelfand-space decompositions, and
//! asymptotic moment scans.

pub mod algebra;
pub mod checks;
pub mod cli;
pub mod config;
pub mod coreps;
pub mod error;
pub mod exactnum;
pub mod moments;
pub mod qgroup;
pub mod report;

pub use error::{Error, Result};
