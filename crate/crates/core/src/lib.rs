//! Granular operator spaces over finite universes.
//!
//! - [`sets`]: universes, information tables, granulations and the classical
//!   lower/upper approximations.
//! - [`gos`]: general granular operator spaces, their axiom audits, rough
//!   objects and the basic rough order.
//! - [`parthood`]: the approximation-based parthood predicates and an
//!   auditor for their order-theoretic laws.
//! - [`counting`]: HPC, PCA, HPCA and FHCA counting with labeled traces and
//!   antichain decompositions.
//! - [`oracles`]: brute-force verifiers and the inverse rough-origin check.
//! - [`cli`]: the `granum` command line front end.

mod bitset;

pub mod cli;
pub mod counting;
pub mod error;
pub mod fixtures;
pub mod gos;
pub mod oracles;
pub mod parthood;
pub mod poset;
pub mod relation;
pub mod sets;

pub use error::{Error, Result};
