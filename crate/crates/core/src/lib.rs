//! Exact-arithmetic invariants of Fano complete intersections in rational
//! homogeneous varieties.
//!
//! The crate is organized around a pipeline of exact computations:
//!
//! - [`rootdata`] — simple root systems, weights, Weyl dimension formula, and
//!   marked-diagram geometry of the spaces `G/P`;
//! - [`bwb`] — Bott-style line bundle cohomology on `G/P` via the dot action;
//! - [`intersect`] — Koszul-resolution section counts and `χ(X, T_X)` for
//!   complete intersections `X = D_1 ∩ … ∩ D_r ⊂ G/P`;
//! - [`classify`] — the local-rigidity and quasi-homogeneity decision
//!   procedures, driven by embedded stabilizer tables;
//! - [`lab`] — an exact linear-algebra laboratory certifying the stabilizer
//!   and open-orbit dimensions behind the classification (octonions, spinors,
//!   triality, the exceptional Jordan algebra).
//!
//! Everything is computed over arbitrary-precision integers and rationals.
//! There is no floating point anywhere in this crate: each quantity of
//! interest is an integer, and a rounded intermediate would silently corrupt
//! classifications downstream.

pub mod bwb;
pub mod classify;
pub mod intersect;
#[path = "lab/mod.rs"]
pub mod lab;
pub mod rootdata;

use thiserror::Error;

/// Errors surfaced by the library.
///
/// The variants mirror the ways a computation can be refused: bad input data,
/// a hypothesis of the underlying statement not being satisfied, a query
/// outside the supported scope, a defect in the embedded data tables, or an
/// internal invariant failing (which always indicates a construction bug, not
/// a user error).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not implemented: {0}")]
    NotImplemented(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("ampleness condition violated: {0}")]
    FanoViolation(String),
    #[error("data integrity: {0}")]
    DataIntegrity(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
