//! Exact symbolic computation for virtual braid groups `VB_n`.
//!
//! The workbench represents `VB_n` as the semidirect product `KB_n ⋊ S_n`,
//! where `KB_n` is the Artin group on the generators `δ_{i,j}`. On top of
//! that representation it provides
//!
//! - permutation arithmetic and brute-force subgroup computations ([`perm`]),
//! - Coxeter matrices and parabolic bookkeeping for `KB_n` ([`artin`]),
//! - words, the semidirect decomposition and the homomorphism catalog ([`vb`]),
//! - a tiered, certified equality oracle for `KB_n` ([`kbeq`]),
//! - normal forms in amalgamated products and the constructive
//!   decomposition procedures built on them ([`amalgam`]),
//! - exhaustive classification of homomorphisms into `S_m` ([`homsearch`]),
//! - JSON reports and verification suites behind the `vbw` binary ([`cli`]).

pub mod amalgam;
pub mod artin;
pub mod cli;
pub mod error;
pub mod homsearch;
pub mod kbeq;
pub mod perm;
pub mod vb;

pub use error::{Error, Result};
