//! Syndrome decoding with ⪯-minimal coset leaders: the coset leader table,
//! classification of correctable (E⁰) and uncorrectable (E¹) errors by
//! weight, minimal uncorrectable errors (M¹), and the monotone-structure
//! check.
//!
//! M¹ membership is decided by one-bit-down neighbor checks only: if some
//! uncorrectable x ⊂ v exists, then by the monotone structure every vector
//! between x and v is uncorrectable, in particular some one-bit deletion of
//! v. So v is minimal iff all of its one-bit deletions are correctable.

use std::io::{Read, Write};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2core::{BitVector, GF2Matrix, Limits, LinearCode};

const UNSET: u128 = u128::MAX;
const DUMP_MAGIC: &[u8; 4] = b"CLT1";
const DUMP_VERSION: u16 = 1;

/// Dense syndrome-indexed table of ⪯-minimal coset leaders.
pub struct CosetLeaderTable {
    n: usize,
    k: usize,
    name: String,
    parity_check: GF2Matrix,
    leaders: Vec<u128>,
}

fn syndrome_index(code_h: &GF2Matrix, v: &BitVector) -> Result<usize> {
    Ok(crate::gf2core::syndrome(v, code_h)?.numeric_value() as usize)
}

impl CosetLeaderTable {
    /// Builds the table by scanning vectors in ascending ⪯ order (weight
    /// ascending, numeric value ascending within a weight) with
    /// first-write-wins, stopping once every coset is filled.
    pub fn build(code: &LinearCode, limits: &Limits) -> Result<Self> {
        let (n, k) = (code.n(), code.k());
        let r = n - k;
        if r > limits.r_max {
            return Err(Error::TooLarge {
                what: "redundancy n-k",
                value: r as u64,
                limit: limits.r_max as u64,
            });
        }
        if n > 40 {
            return Err(Error::TooLarge {
                what: "code length n for exhaustive coset scan",
                value: n as u64,
                limit: 40,
            });
        }
        let mut leaders = vec![UNSET; 1usize << r];
        let mut remaining = leaders.len();
        'outer: for w in 0..=n {
            for v in BitVector::fixed_weight(n, w) {
                let idx = syndrome_index(code.parity_check(), &v)?;
                if leaders[idx] == UNSET {
                    leaders[idx] = v.numeric_value();
                    remaining -= 1;
                    if remaining == 0 {
                        break 'outer;
                    }
                }
            }
        }
        Ok(CosetLeaderTable {
            n,
            k,
            name: code.name().to_string(),
            parity_check: code.parity_check().clone(),
            leaders,
        })
    }

    /// Alternative construction: full scan of all 2^n vectors partitioned
    /// into chunks, min-merging per syndrome under ⪯. Agrees with
    /// [`CosetLeaderTable::build`]; kept as an independent route.
    pub fn build_min_merge(code: &LinearCode, limits: &Limits) -> Result<Self> {
        let (n, k) = (code.n(), code.k());
        let r = n - k;
        if r > limits.r_max || n > 28 {
            return Err(Error::TooLarge {
                what: "full 2^n min-merge scan",
                value: n as u64,
                limit: 28,
            });
        }
        let total = 1u64 << n;
        let chunks = (rayon::current_num_threads() * 2).max(1) as u64;
        let chunk_size = total.div_ceil(chunks);
        let h = code.parity_check().clone();
        let partials: Vec<Vec<u128>> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut local = vec![UNSET; 1usize << r];
                let start = c * chunk_size;
                let end = (start + chunk_size).min(total);
                for raw in start..end {
                    let v = BitVector::from_value(n, raw as u128);
                    let idx = syndrome_index(&h, &v).expect("length fixed");
                    if local[idx] == UNSET
                        || v.order_key() < BitVector::from_value(n, local[idx]).order_key()
                    {
                        local[idx] = v.numeric_value();
                    }
                }
                local
            })
            .collect();
        let mut leaders = vec![UNSET; 1usize << r];
        for p in partials {
            for (slot, cand) in leaders.iter_mut().zip(p) {
                if cand != UNSET
                    && (*slot == UNSET
                        || BitVector::from_value(n, cand).order_key()
                            < BitVector::from_value(n, *slot).order_key())
                {
                    *slot = cand;
                }
            }
        }
        Ok(CosetLeaderTable {
            n,
            k,
            name: code.name().to_string(),
            parity_check: code.parity_check().clone(),
            leaders,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_cosets(&self) -> usize {
        self.leaders.len()
    }

    pub fn leader_by_index(&self, idx: usize) -> BitVector {
        BitVector::from_value(self.n, self.leaders[idx])
    }

    /// The ⪯-minimal leader of the coset of `v`.
    pub fn leader_of(&self, v: &BitVector) -> Result<BitVector> {
        Ok(self.leader_by_index(syndrome_index(&self.parity_check, v)?))
    }

    /// Syndrome decoding: D(y) = y + leader(syndrome(y)).
    pub fn decode(&self, y: &BitVector) -> Result<BitVector> {
        Ok(*y ^ self.leader_of(y)?)
    }

    /// True iff `v` is the stored leader of its own coset.
    pub fn is_leader(&self, v: &BitVector) -> Result<bool> {
        Ok(self.leader_of(v)? == *v)
    }

    /// Binary dump: magic, version, n, k, r, name, then 2^(n-k) leaders as
    /// packed little-endian bit blocks of ⌈n/8⌉ bytes in syndrome-ascending
    /// order (byte b, bit j holds position 8b+j+1).
    pub fn write_to(&self, w: &mut impl Write) -> Result<()> {
        w.write_all(DUMP_MAGIC)?;
        w.write_all(&DUMP_VERSION.to_le_bytes())?;
        w.write_all(&(self.n as u16).to_le_bytes())?;
        w.write_all(&(self.k as u16).to_le_bytes())?;
        w.write_all(&((self.n - self.k) as u16).to_le_bytes())?;
        let name = self.name.as_bytes();
        w.write_all(&(name.len() as u32).to_le_bytes())?;
        w.write_all(name)?;
        let bytes_per = self.n.div_ceil(8);
        for &raw in &self.leaders {
            let v = BitVector::from_value(self.n, raw);
            let mut block = vec![0u8; bytes_per];
            for p in 1..=self.n {
                if v.get(p) {
                    block[(p - 1) / 8] |= 1 << ((p - 1) % 8);
                }
            }
            w.write_all(&block)?;
        }
        Ok(())
    }

    /// Reads a dump written by [`CosetLeaderTable::write_to`], attaching the
    /// parity check of `code` (validated against the header).
    pub fn read_from(r: &mut impl Read, code: &LinearCode) -> Result<Self> {
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if &magic != DUMP_MAGIC {
            return Err(Error::Parse("bad coset table magic".into()));
        }
        let mut buf2 = [0u8; 2];
        r.read_exact(&mut buf2)?;
        if u16::from_le_bytes(buf2) != DUMP_VERSION {
            return Err(Error::Parse("unsupported coset table version".into()));
        }
        r.read_exact(&mut buf2)?;
        let n = u16::from_le_bytes(buf2) as usize;
        r.read_exact(&mut buf2)?;
        let k = u16::from_le_bytes(buf2) as usize;
        r.read_exact(&mut buf2)?;
        let red = u16::from_le_bytes(buf2) as usize;
        if n != code.n() || k != code.k() || red != n - k {
            return Err(Error::Parse("coset table header does not match code".into()));
        }
        let mut buf4 = [0u8; 4];
        r.read_exact(&mut buf4)?;
        let mut name = vec![0u8; u32::from_le_bytes(buf4) as usize];
        r.read_exact(&mut name)?;
        let bytes_per = n.div_ceil(8);
        let mut leaders = Vec::with_capacity(1usize << (n - k));
        let mut block = vec![0u8; bytes_per];
        for _ in 0..(1usize << (n - k)) {
            r.read_exact(&mut block)?;
            let mut bits = 0u128;
            for p in 1..=n {
                if block[(p - 1) / 8] >> ((p - 1) % 8) & 1 == 1 {
                    bits |= 1u128 << (n - p);
                }
            }
            leaders.push(bits);
        }
        Ok(CosetLeaderTable {
            n,
            k,
            name: String::from_utf8_lossy(&name).into_owned(),
            parity_check: code.parity_check().clone(),
            leaders,
        })
    }
}

/// Per-vector leader oracle: `v` is a coset leader iff `v ⪯ v+c` for every
/// nonzero codeword `c`. Independent of the table; the two must agree.
pub fn is_coset_leader(v: &BitVector, code: &LinearCode, limits: &Limits) -> Result<bool> {
    let key = v.order_key();
    for c in code.codewords(limits)? {
        if c.is_zero() {
            continue;
        }
        if (*v ^ c).order_key() < key {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which per-vector leadership test to use.
pub enum LeaderOracle<'a> {
    /// Dense table lookup.
    Table(&'a CosetLeaderTable),
    /// 2^k codeword scan per query.
    Scan(&'a LinearCode),
}

impl LeaderOracle<'_> {
    pub fn is_leader(&self, v: &BitVector, limits: &Limits) -> Result<bool> {
        match self {
            LeaderOracle::Table(t) => t.is_leader(v),
            LeaderOracle::Scan(c) => is_coset_leader(v, c, limits),
        }
    }
}

/// Membership kind of a weight slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceKind {
    E0,
    E1,
    M1,
    LH,
}

/// A weight-indexed set of vectors with an optional explicit member list
/// (dropped to count-only above the slice cardinality cap).
pub struct WeightSlice {
    pub weight: usize,
    pub kind: SliceKind,
    pub count: u64,
    pub vectors: Option<Vec<BitVector>>,
}

impl WeightSlice {
    pub fn members(&self) -> Option<&[BitVector]> {
        self.vectors.as_deref()
    }
}

fn binomial_u128(n: usize, w: usize) -> u128 {
    if w > n {
        return 0;
    }
    (0..w).fold(1u128, |acc, t| acc * (n - t) as u128 / (t + 1) as u128)
}

fn check_classify(n: usize, w: usize, limits: &Limits) -> Result<()> {
    let count = binomial_u128(n, w);
    if count > limits.classify_max as u128 {
        return Err(Error::TooLarge {
            what: "weight-slice enumeration C(n,w)",
            value: count.min(u64::MAX as u128) as u64,
            limit: limits.classify_max,
        });
    }
    Ok(())
}

/// Partitions the weight-w vectors into E⁰ (coset leaders) or E¹ per the
/// requested kind.
pub fn classify_weight(
    code: &LinearCode,
    w: usize,
    kind: SliceKind,
    oracle: &LeaderOracle<'_>,
    limits: &Limits,
) -> Result<WeightSlice> {
    assert!(matches!(kind, SliceKind::E0 | SliceKind::E1));
    check_classify(code.n(), w, limits)?;
    let want_leader = kind == SliceKind::E0;
    let mut count = 0u64;
    let mut vectors = Some(Vec::new());
    for v in BitVector::fixed_weight(code.n(), w) {
        if oracle.is_leader(&v, limits)? == want_leader {
            count += 1;
            if let Some(vs) = vectors.as_mut() {
                if vs.len() < limits.slice_cap {
                    vs.push(v);
                } else {
                    vectors = None;
                }
            }
        }
    }
    Ok(WeightSlice {
        weight: w,
        kind,
        count,
        vectors,
    })
}

/// The minimal uncorrectable errors of weight `w`: uncorrectable vectors
/// whose every one-bit deletion is correctable.
pub fn minimal_uncorrectable(
    code: &LinearCode,
    w: usize,
    oracle: &LeaderOracle<'_>,
    limits: &Limits,
) -> Result<WeightSlice> {
    check_classify(code.n(), w, limits)?;
    let mut count = 0u64;
    let mut vectors = Some(Vec::new());
    'next: for v in BitVector::fixed_weight(code.n(), w) {
        if oracle.is_leader(&v, limits)? {
            continue;
        }
        for i in v.support() {
            if !oracle.is_leader(&v.with_bit(i, false), limits)? {
                continue 'next;
            }
        }
        count += 1;
        if let Some(vs) = vectors.as_mut() {
            if vs.len() < limits.slice_cap {
                vs.push(v);
            } else {
                vectors = None;
            }
        }
    }
    Ok(WeightSlice {
        weight: w,
        kind: SliceKind::M1,
        count,
        vectors,
    })
}

/// Exhaustive monotone-structure check over all covering-neighbor pairs:
/// returns a witness (x, y) with x ⊆ y, x uncorrectable, y correctable if
/// one exists (it must not).
pub fn verify_monotone(
    code: &LinearCode,
    table: &CosetLeaderTable,
) -> Result<Option<(BitVector, BitVector)>> {
    let n = code.n();
    if n > 20 {
        return Err(Error::TooLarge {
            what: "code length n for exhaustive monotone check",
            value: n as u64,
            limit: 20,
        });
    }
    for y in BitVector::all(n) {
        if !table.is_leader(&y)? {
            continue;
        }
        for i in y.support() {
            let x = y.with_bit(i, false);
            if !table.is_leader(&x)? {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Sampled monotone check for codes too large to scan: draws `samples`
/// random correctable-or-not vectors and tests random covering neighbors.
pub fn verify_monotone_sampled(
    code: &LinearCode,
    table: &CosetLeaderTable,
    samples: u64,
    seed: u64,
) -> Result<Option<(BitVector, BitVector)>> {
    let n = code.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let raw = ((rng.next_u64() as u128) << 64 | rng.next_u64() as u128)
            & if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let y = BitVector::from_value(n, raw);
        if y.is_zero() || !table.is_leader(&y)? {
            continue;
        }
        for i in y.support() {
            let x = y.with_bit(i, false);
            if !table.is_leader(&x)? {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}
