//! Monotone error structure of binary linear codes under syndrome decoding
//! with ⪯-minimal coset leaders: larger halves, trial sets, minimal
//! uncorrectable errors, and exact lower/upper bounds on the number of
//! uncorrectable errors of weight half the minimum distance, verified
//! against exhaustive ground truth on desk-scale codes.

pub mod bounds;
pub mod cli;
pub mod codefactory;
pub mod error;
pub mod errorstructure;
pub mod gf2core;
pub mod largerhalf;

pub use error::{Error, Result};
pub use gf2core::{BitVector, GF2Matrix, Limits, LinearCode};
