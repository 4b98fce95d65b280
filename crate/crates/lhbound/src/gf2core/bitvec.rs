//! Fixed-length binary vectors with the two orderings used throughout:
//! the total order `⪯` (weight first, numeric value as tie-break) and the
//! covering partial order (support inclusion).
//!
//! Positions are 1-based; position 1 is the most significant bit, so the
//! packed `u128` payload of a length-`n` vector *is* its numeric value
//! `Σ v_i 2^{n-i}`. Comparing payloads compares numeric values directly.

use std::fmt;
use std::ops::{BitAnd, BitXor};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Maximum supported vector length.
pub const N_MAX: usize = 128;

/// A binary vector of fixed length `n ≤ 128`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitVector {
    n: u32,
    bits: u128,
}

#[inline]
fn mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

impl BitVector {
    /// Creates a vector from its numeric value. High bits beyond `n` are masked off.
    pub fn from_value(n: usize, value: u128) -> Self {
        assert!(n >= 1 && n <= N_MAX, "vector length out of range: {n}");
        BitVector {
            n: n as u32,
            bits: value & mask(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_value(n, 0)
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    /// Hamming weight `w(v)`.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Numeric value `v(x) = Σ x_i 2^{n-i}`.
    pub fn numeric_value(&self) -> u128 {
        self.bits
    }

    /// Bit at 1-based position `i`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len());
        (self.bits >> (self.len() - i)) & 1 == 1
    }

    pub fn with_bit(&self, i: usize, value: bool) -> Self {
        assert!(i >= 1 && i <= self.len());
        let bit = 1u128 << (self.len() - i);
        BitVector {
            n: self.n,
            bits: if value { self.bits | bit } else { self.bits & !bit },
        }
    }

    /// Support `S(v) = {i : v_i ≠ 0}`, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.get(i)).collect()
    }

    /// Leftmost nonzero coordinate `l(v) = min S(v)`.
    pub fn leftmost(&self) -> Result<usize> {
        if self.bits == 0 {
            return Err(Error::ZeroVector);
        }
        Ok(self.len() - (127 - self.bits.leading_zeros() as usize))
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Covering: `S(self) ⊆ S(other)`.
    pub fn covers_into(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.bits & other.bits == self.bits)
    }

    /// Sort key for the total order `⪯`: weight first, numeric value second.
    pub fn order_key(&self) -> (usize, u128) {
        (self.weight(), self.bits)
    }

    /// Reflexive total order `⪯`.
    pub fn precedes(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.order_key() <= other.order_key())
    }

    /// Strict total order `≺`.
    pub fn precedes_strict(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.order_key() < other.order_key())
    }

    /// The vector with support `S(self) ∩ S(other)`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(BitVector {
            n: self.n,
            bits: self.bits & other.bits,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// All 2^n vectors of length `n`, ascending numeric value. Only for `n ≤ 64`.
    pub fn all(n: usize) -> impl Iterator<Item = BitVector> {
        assert!(n <= 64, "exhaustive vector scan requires n <= 64");
        (0..(1u128 << n)).map(move |v| BitVector::from_value(n, v))
    }

    /// All weight-`w` vectors of length `n`, ascending numeric value
    /// (Gosper's hack), which is exactly ascending `⪯` within the weight class.
    pub fn fixed_weight(n: usize, w: usize) -> FixedWeightIter {
        assert!(n >= 1 && n <= N_MAX);
        assert!(w <= n);
        FixedWeightIter {
            n,
            next: if w == 0 { Some(0) } else { Some(mask(w)) },
            limit: mask(n),
        }
    }
}

/// Iterator over all length-`n` vectors of a fixed weight in ascending numeric order.
pub struct FixedWeightIter {
    n: usize,
    next: Option<u128>,
    limit: u128,
}

impl Iterator for FixedWeightIter {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        let cur = self.next?;
        let out = BitVector::from_value(self.n, cur);
        if cur == 0 {
            self.next = None;
            return Some(out);
        }
        // Gosper's hack: next larger integer with the same popcount.
        let c = cur & cur.wrapping_neg();
        let r = cur.checked_add(c);
        self.next = match r {
            Some(r) => {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                if nxt > self.limit {
                    None
                } else {
                    Some(nxt)
                }
            }
            None => None,
        };
        Some(out)
    }
}

impl BitXor for BitVector {
    type Output = BitVector;

    /// GF(2) vector addition. Lengths must match.
    fn bitxor(self, rhs: BitVector) -> BitVector {
        assert_eq!(self.n, rhs.n, "length mismatch in xor");
        BitVector {
            n: self.n,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl BitAnd for BitVector {
    type Output = BitVector;

    fn bitand(self, rhs: BitVector) -> BitVector {
        assert_eq!(self.n, rhs.n, "length mismatch in and");
        BitVector {
            n: self.n,
            bits: self.bits & rhs.bits,
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > N_MAX {
            return Err(Error::Parse(format!("bad vector length {}", s.len())));
        }
        let mut bits = 0u128;
        for ch in s.chars() {
            bits <<= 1;
            match ch {
                '0' => {}
                '1' => bits |= 1,
                _ => return Err(Error::Parse(format!("bad bit character '{ch}'"))),
            }
        }
        Ok(BitVector::from_value(s.len(), bits))
    }
}
