//! Linear code type: generator/parity-check pair with lazily computed
//! minimum distance and weight distribution by exhaustive codeword
//! enumeration.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2core::bitvec::BitVector;
use crate::gf2core::matrix::GF2Matrix;

/// Resource ceilings for the exhaustive computations.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Maximum code dimension for 2^k codeword enumeration.
    pub k_enum_max: usize,
    /// Maximum redundancy n-k for the dense coset leader table.
    pub r_max: usize,
    /// Maximum number of vectors classified in one weight slice.
    pub classify_max: u64,
    /// Maximum cardinality kept as an explicit vector set in a slice.
    pub slice_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            k_enum_max: 26,
            r_max: 28,
            classify_max: 100_000_000,
            slice_cap: 1_000_000,
        }
    }
}

/// Syndrome `v·Hᵀ` of a length-n vector, as a length-(n-k) vector whose
/// position j is the inner product with row j of `H`.
pub fn syndrome(v: &BitVector, h: &GF2Matrix) -> Result<BitVector> {
    if v.len() != h.num_cols() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: h.num_cols(),
        });
    }
    let r = h.num_rows().max(1);
    let mut bits = 0u128;
    for (j, row) in h.rows().enumerate() {
        if (*v & row).weight() % 2 == 1 {
            bits |= 1u128 << (r - 1 - j);
        }
    }
    Ok(BitVector::from_value(r, bits))
}

/// A parity check matrix for the row space of `G`: full rank `n-k`, with
/// `G·Hᵀ = 0`, in the original coordinate order.
pub fn parity_check_from_generator(g: &GF2Matrix) -> Result<GF2Matrix> {
    if g.rank() != g.num_rows() {
        return Err(Error::RankDeficient);
    }
    Ok(g.nullspace())
}

/// A binary linear code given by a full-rank generator matrix and a matching
/// parity check matrix. Immutable after construction; the weight
/// distribution is computed once on demand.
pub struct LinearCode {
    name: String,
    generator: GF2Matrix,
    parity_check: GF2Matrix,
    wdist: OnceLock<Vec<u64>>,
}

impl LinearCode {
    /// Builds a code from its generator matrix, deriving `H`.
    pub fn from_generator(generator: GF2Matrix, name: impl Into<String>) -> Result<Self> {
        let parity_check = parity_check_from_generator(&generator)?;
        Ok(LinearCode {
            name: name.into(),
            generator,
            parity_check,
            wdist: OnceLock::new(),
        })
    }

    /// Builds a code from its parity check matrix, deriving `G`.
    pub fn from_parity_check(parity_check: GF2Matrix, name: impl Into<String>) -> Result<Self> {
        if parity_check.rank() != parity_check.num_rows() {
            return Err(Error::RankDeficient);
        }
        let generator = parity_check.nullspace();
        Ok(LinearCode {
            name: name.into(),
            generator,
            parity_check,
            wdist: OnceLock::new(),
        })
    }

    /// Builds a code from both matrices, checking `G·Hᵀ = 0` and ranks.
    pub fn new_checked(
        generator: GF2Matrix,
        parity_check: GF2Matrix,
        name: impl Into<String>,
    ) -> Result<Self> {
        let n = generator.num_cols();
        if generator.rank() != generator.num_rows()
            || parity_check.rank() != parity_check.num_rows()
        {
            return Err(Error::RankDeficient);
        }
        if generator.num_rows() + parity_check.num_rows() != n
            || !generator.times_transpose(&parity_check)?.is_zero()
        {
            return Err(Error::InvalidParameters(
                "generator and parity check matrices are inconsistent".into(),
            ));
        }
        Ok(LinearCode {
            name: name.into(),
            generator,
            parity_check,
            wdist: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.generator.num_cols()
    }

    pub fn k(&self) -> usize {
        self.generator.num_rows()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator(&self) -> &GF2Matrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &GF2Matrix {
        &self.parity_check
    }

    pub fn syndrome(&self, v: &BitVector) -> Result<BitVector> {
        syndrome(v, &self.parity_check)
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        Ok(self.syndrome(v)?.is_zero())
    }

    fn check_enum(&self, limits: &Limits) -> Result<()> {
        if self.k() > limits.k_enum_max {
            return Err(Error::TooLarge {
                what: "code dimension k",
                value: self.k() as u64,
                limit: limits.k_enum_max as u64,
            });
        }
        Ok(())
    }

    /// Streams all 2^k codewords exactly once, in Gray-code message order.
    pub fn codewords(&self, limits: &Limits) -> Result<CodewordIter<'_>> {
        self.check_enum(limits)?;
        Ok(CodewordIter {
            code: self,
            index: 0,
            count: 1u64 << self.k(),
            current: BitVector::zero(self.n()),
        })
    }

    /// The codeword for a k-bit message mask (bit j of `mask` selects
    /// generator row j).
    pub fn encode_mask(&self, mask: u64) -> BitVector {
        let mut w = BitVector::zero(self.n());
        let mut m = mask;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            w = w ^ self.generator.row(j);
            m &= m - 1;
        }
        w
    }

    /// Weight distribution A_0..A_n by exhaustive enumeration, cached.
    pub fn weight_distribution(&self, limits: &Limits) -> Result<&[u64]> {
        self.check_enum(limits)?;
        Ok(self
            .wdist
            .get_or_init(|| weight_distribution_parallel(self))
            .as_slice())
    }

    /// Minimum nonzero codeword weight.
    pub fn min_distance(&self, limits: &Limits) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::DegenerateCode);
        }
        let dist = self.weight_distribution(limits)?;
        dist.iter()
            .enumerate()
            .skip(1)
            .find(|(_, &a)| a > 0)
            .map(|(i, _)| i)
            .ok_or(Error::DegenerateCode)
    }
}

/// Iterator over all codewords; each step XORs one generator row
/// (Gray-code walk of the message space).
pub struct CodewordIter<'a> {
    code: &'a LinearCode,
    index: u64,
    count: u64,
    current: BitVector,
}

impl Iterator for CodewordIter<'_> {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        if self.index == self.count {
            return None;
        }
        if self.index > 0 {
            let j = self.index.trailing_zeros() as usize;
            self.current = self.current ^ self.code.generator.row(j);
        }
        self.index += 1;
        Some(self.current)
    }
}

/// Weight distribution over Gray-code chunks; chunk results merge by
/// addition, so the outcome is independent of the worker count.
fn weight_distribution_parallel(code: &LinearCode) -> Vec<u64> {
    let n = code.n();
    let k = code.k();
    let total = 1u64 << k;
    let chunks = if k <= 16 {
        1
    } else {
        (rayon::current_num_threads() * 4) as u64
    };
    let chunk_size = total.div_ceil(chunks);
    let starts: Vec<u64> = (0..chunks).map(|c| c * chunk_size).collect();
    let partials: Vec<Vec<u64>> = starts
        .par_iter()
        .map(|&start| {
            let end = (start + chunk_size).min(total);
            let mut counts = vec![0u64; n + 1];
            if start >= end {
                return counts;
            }
            let mut word = code.encode_mask(start ^ (start >> 1));
            counts[word.weight()] += 1;
            for i in start + 1..end {
                word = word ^ code.generator.row(i.trailing_zeros() as usize);
                counts[word.weight()] += 1;
            }
            counts
        })
        .collect();
    let mut out = vec![0u64; n + 1];
    for p in partials {
        for (o, v) in out.iter_mut().zip(p) {
            *o += v;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming74() -> LinearCode {
        crate::codefactory::hamming(3).unwrap()
    }

    #[test]
    fn parity_check_repetition3() {
        let g = GF2Matrix::from_strings(&["111"]).unwrap();
        let h = parity_check_from_generator(&g).unwrap();
        assert_eq!(h.rank(), 2);
        assert!(g.times_transpose(&h).unwrap().is_zero());
    }

    #[test]
    fn parity_check_full_space() {
        let g = GF2Matrix::identity(4);
        let h = parity_check_from_generator(&g).unwrap();
        assert_eq!(h.num_rows(), 0);
    }

    #[test]
    fn parity_check_rank_deficient() {
        let g = GF2Matrix::from_strings(&["110", "110"]).unwrap();
        assert!(matches!(
            parity_check_from_generator(&g),
            Err(Error::RankDeficient)
        ));
    }

    #[test]
    fn syndrome_of_codewords_is_zero() {
        let code = hamming74();
        let limits = Limits::default();
        for c in code.codewords(&limits).unwrap() {
            assert!(code.syndrome(&c).unwrap().is_zero());
        }
    }

    #[test]
    fn syndrome_unit_vector_picks_column() {
        let code = hamming74();
        let e1 = "1000000".parse::<BitVector>().unwrap();
        let s = code.syndrome(&e1).unwrap();
        // Column 1 of the Hamming parity check matrix is the value-1 column.
        let h = code.parity_check();
        let expected: Vec<bool> = (0..h.num_rows()).map(|t| h.get(t, 1)).collect();
        let got: Vec<bool> = (1..=s.len()).map(|j| s.get(j)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn syndrome_linearity() {
        let code = hamming74();
        for x in 0u128..128 {
            let a = BitVector::from_value(7, x);
            let b = BitVector::from_value(7, x.wrapping_mul(37) % 128);
            let lhs = code.syndrome(&(a ^ b)).unwrap();
            let rhs = code.syndrome(&a).unwrap() ^ code.syndrome(&b).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn hamming74_weight_distribution() {
        let code = hamming74();
        let dist = code.weight_distribution(&Limits::default()).unwrap();
        assert_eq!(dist, &[1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(code.min_distance(&Limits::default()).unwrap(), 3);
    }

    #[test]
    fn repetition_enumeration() {
        let code = crate::codefactory::repetition(3).unwrap();
        let words: Vec<String> = code
            .codewords(&Limits::default())
            .unwrap()
            .map(|c| c.to_string())
            .collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["000", "111"]);
    }

    #[test]
    fn dimension_zero_code() {
        // k=0: the zero code {0}. Enumeration yields exactly the zero word.
        let h = GF2Matrix::identity(4);
        let code = LinearCode::from_parity_check(h, "zero(4)").unwrap();
        assert_eq!(code.k(), 0);
        let words: Vec<_> = code.codewords(&Limits::default()).unwrap().collect();
        assert_eq!(words, vec![BitVector::zero(4)]);
        assert!(matches!(
            code.min_distance(&Limits::default()),
            Err(Error::DegenerateCode)
        ));
    }

    #[test]
    fn enumeration_ceiling() {
        let code = hamming74();
        let tight = Limits {
            k_enum_max: 3,
            ..Limits::default()
        };
        assert!(matches!(
            code.codewords(&tight),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn weight_distribution_sums_to_2k() {
        let code = crate::codefactory::reed_muller(1, 4).unwrap();
        let limits = Limits::default();
        let dist = code.weight_distribution(&limits).unwrap();
        assert_eq!(dist.iter().sum::<u64>(), 1u64 << code.k());
        assert_eq!(dist[0], 1);
        let d = code.min_distance(&limits).unwrap();
        assert!(dist[d] > 0);
        assert!(dist[1..d].iter().all(|&a| a == 0));
    }
}
