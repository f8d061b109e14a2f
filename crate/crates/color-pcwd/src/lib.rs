//! Hexagonal color codes on a torus and a two-stage pseudocodeword-based
//! decoder for their X-type errors.
//!
//! The pipeline, given a syndrome:
//!
//! 1. [`spa::run_spa`] — syndrome-based sum-product decoding on the full
//!    code. If the hard decision already matches the syndrome, done.
//! 2. Otherwise the syndrome is restricted to the three color-induced cycle
//!    codes ([`lattice::TorusLattice::restrict_syndrome`]), the SPA runs on
//!    each, and its soft output is decomposed into weighted paths between
//!    unsatisfied checks ([`pcwd::decompose`]).
//! 3. Paths are converted into face vectors ("generalized paths") with known
//!    residual syndromes ([`convert::enumerate_candidates`]), and an exact
//!    LP/ILP picks a minimum-cost collection whose combined syndrome matches
//!    ([`select::solve`]).
//!
//! [`decoder::decode`] orchestrates the stages and [`sim`] wraps everything
//! in seeded Monte Carlo sweeps. Start with the `examples/` directory: each
//! example exercises one capability end to end, e.g.
//!
//! ```bash
//! cargo run --example build_code
//! cargo run --example two_stage_decode
//! cargo run --example error_rate_sweep
//! ```
//!
//! A thin `color-pcwd` binary exposes the same functionality as `build`,
//! `decode` and `sweep` subcommands.

pub mod config;
pub mod convert;
pub mod decoder;
pub mod gf2;
pub mod io;
pub mod lattice;
pub mod pcwd;
pub mod select;
pub mod sim;
pub mod spa;

#[cfg(test)]
pub(crate) mod testpatch;

pub use decoder::{decode, is_logical_success, DecodeOutcome, Stage, Status};
pub use gf2::{BitMatrix, BitVector};
pub use lattice::{Color, TorusLattice};

/// Library-level error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}
