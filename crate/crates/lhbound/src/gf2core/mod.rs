//! Bit-level GF(2) vectors and matrices, the weight/value total order and
//! the covering partial order, and exhaustive code-level computations.

mod bitvec;
mod code;
mod matrix;

pub use bitvec::{BitVector, FixedWeightIter, N_MAX};
pub use code::{parity_check_from_generator, syndrome, CodewordIter, Limits, LinearCode};
pub use matrix::{GF2Matrix, Rref};
