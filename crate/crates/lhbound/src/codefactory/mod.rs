//! Constructors for the analyzed code families: Hamming, Reed-Muller,
//! narrow-sense primitive BCH (and extensions), repetition, and seeded
//! random linear codes, plus the Gilbert-Varshamov diagnostic.

mod gf2m;

pub use gf2m::{bch_generator_poly, gf2_poly_mul, GF2mField, PRIMITIVE_POLYS};

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2core::{GF2Matrix, LinearCode, N_MAX};

/// Parameters of a seeded random linear code.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RandomCodeSpec {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
}

/// JSON code specification consumed by the CLI.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum CodeSpec {
    Hamming { m: usize },
    Rm { r: usize, m: usize },
    Bch { m: usize, designed_distance: usize },
    Ebch { m: usize, designed_distance: usize },
    Random { n: usize, k: usize, seed: u64 },
    Explicit { generator_rows: Vec<String> },
}

/// Builds the code described by a [`CodeSpec`].
pub fn build(spec: &CodeSpec) -> Result<LinearCode> {
    match spec {
        CodeSpec::Hamming { m } => hamming(*m),
        CodeSpec::Rm { r, m } => reed_muller(*r, *m),
        CodeSpec::Bch {
            m,
            designed_distance,
        } => bch(*m, *designed_distance),
        CodeSpec::Ebch {
            m,
            designed_distance,
        } => extend(&bch(*m, *designed_distance)?),
        CodeSpec::Random { n, k, seed } => Ok(random_code(&RandomCodeSpec {
            n: *n,
            k: *k,
            seed: *seed,
        })?
        .0),
        CodeSpec::Explicit { generator_rows } => {
            let rows: Vec<&str> = generator_rows.iter().map(|s| s.as_str()).collect();
            let g = GF2Matrix::from_strings(&rows)?;
            LinearCode::from_generator(g, "explicit")
        }
    }
}

/// The (2^m-1, 2^m-1-m, 3) Hamming code. Column j of H is the m-bit binary
/// representation of j, so columns run over all nonzero vectors in
/// ascending numeric order.
pub fn hamming(m: usize) -> Result<LinearCode> {
    if m < 2 || (1usize << m) - 1 > N_MAX {
        return Err(Error::InvalidParameters(format!("hamming m={m}")));
    }
    let n = (1usize << m) - 1;
    let rows: Vec<u128> = (1..=m)
        .map(|t| {
            let mut bits = 0u128;
            for j in 1..=n {
                if (j >> (m - t)) & 1 == 1 {
                    bits |= 1u128 << (n - j);
                }
            }
            bits
        })
        .collect();
    LinearCode::from_parity_check(GF2Matrix::new(n, rows), format!("hamming({m})"))
}

/// The (n, 1, n) repetition code.
pub fn repetition(n: usize) -> Result<LinearCode> {
    if n < 1 || n > N_MAX {
        return Err(Error::InvalidParameters(format!("repetition n={n}")));
    }
    let all_ones = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    LinearCode::from_generator(GF2Matrix::new(n, vec![all_ones]), format!("repetition({n})"))
}

/// The r-th order Reed-Muller code of length 2^m: generator rows are the
/// evaluation vectors of all monomials of degree at most r, in
/// degree-lexicographic order. Variable x_1 is the lowest bit of the point
/// index, i.e. the fastest-alternating pattern.
pub fn reed_muller(r: usize, m: usize) -> Result<LinearCode> {
    if r > m || (1usize << m) > N_MAX {
        return Err(Error::InvalidParameters(format!("reed-muller r={r} m={m}")));
    }
    let n = 1usize << m;
    let mut rows = Vec::new();
    for deg in 0..=r {
        for vars in combinations(m, deg) {
            let mut bits = 0u128;
            for t in 0..n {
                if vars.iter().all(|&j| (t >> (j - 1)) & 1 == 1) {
                    // point t maps to position t+1
                    bits |= 1u128 << (n - 1 - t);
                }
            }
            rows.push(bits);
        }
    }
    LinearCode::from_generator(GF2Matrix::new(n, rows), format!("rm({r},{m})"))
}

/// All size-`deg` subsets of {1..m} in lexicographic order.
fn combinations(m: usize, deg: usize) -> Vec<Vec<usize>> {
    if deg == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(deg);
    fn rec(start: usize, m: usize, deg: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == deg {
            out.push(cur.clone());
            return;
        }
        for j in start..=m {
            cur.push(j);
            rec(j + 1, m, deg, cur, out);
            cur.pop();
        }
    }
    rec(1, m, deg, &mut cur, &mut out);
    out
}

/// Narrow-sense primitive BCH code of length 2^m-1 with the given odd
/// designed distance. The generator matrix rows are the shifts of the
/// generator polynomial's coefficient vector.
pub fn bch(m: usize, designed_distance: usize) -> Result<LinearCode> {
    let n = (1usize << m) - 1;
    if designed_distance < 3 || designed_distance > n || designed_distance % 2 == 0 {
        return Err(Error::InvalidParameters(format!(
            "bch designed distance {designed_distance} for n={n} (must be odd, 3..={n})"
        )));
    }
    let field = GF2mField::new(m)?;
    let g = bch_generator_poly(&field, designed_distance);
    let deg = (127 - g.leading_zeros()) as usize;
    if deg >= n {
        return Err(Error::InvalidParameters(format!(
            "bch generator polynomial has degree {deg} >= n={n}"
        )));
    }
    let k = n - deg;
    // Row i places the coefficient of X^(deg-t) at position i+1+t.
    let rows: Vec<u128> = (0..k)
        .map(|i| {
            let mut bits = 0u128;
            for t in 0..=deg {
                if (g >> (deg - t)) & 1 == 1 {
                    bits |= 1u128 << (n - 1 - (i + t));
                }
            }
            bits
        })
        .collect();
    LinearCode::from_generator(
        GF2Matrix::new(n, rows),
        format!("bch({n},{k};d0={designed_distance};poly={:#x})", field.primitive_poly),
    )
}

/// Appends an overall parity bit at position n+1.
pub fn extend(code: &LinearCode) -> Result<LinearCode> {
    let n = code.n();
    if n + 1 > N_MAX {
        return Err(Error::InvalidParameters("extended length exceeds 128".into()));
    }
    let rows: Vec<u128> = code
        .generator()
        .rows()
        .map(|row| {
            let parity = (row.weight() % 2) as u128;
            (row.numeric_value() << 1) | parity
        })
        .collect();
    LinearCode::from_generator(
        GF2Matrix::new(n + 1, rows),
        format!("ext[{}]", code.name()),
    )
}

/// Random linear code with equiprobable generator entries, drawn from
/// ChaCha8 seeded with the 64-bit seed. Rows are drawn as little-endian
/// 64-bit words (position p takes bit (p-1)%64 of word (p-1)/64); a row
/// that is linearly dependent on the accepted rows is redrawn, and the
/// number of redraws is returned alongside the code.
pub fn random_code(spec: &RandomCodeSpec) -> Result<(LinearCode, u64)> {
    if spec.k < 1 || spec.k > spec.n || spec.n > N_MAX {
        return Err(Error::InvalidParameters(format!(
            "random code n={} k={}",
            spec.n, spec.k
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let words_per_row = spec.n.div_ceil(64);
    let draw_row = |rng: &mut ChaCha8Rng| -> u128 {
        let words: Vec<u64> = (0..words_per_row).map(|_| rng.next_u64()).collect();
        let mut bits = 0u128;
        for p in 1..=spec.n {
            if (words[(p - 1) / 64] >> ((p - 1) % 64)) & 1 == 1 {
                bits |= 1u128 << (spec.n - p);
            }
        }
        bits
    };
    let mut accepted: Vec<u128> = Vec::with_capacity(spec.k);
    // Basis in echelon form for the independence test, keyed by leading bit.
    let mut basis: Vec<u128> = Vec::with_capacity(spec.k);
    let mut resamples = 0u64;
    while accepted.len() < spec.k {
        let row = draw_row(&mut rng);
        let mut reduced = row;
        for &b in &basis {
            let lead = 1u128 << (127 - b.leading_zeros());
            if reduced & lead != 0 {
                reduced ^= b;
            }
        }
        if reduced == 0 {
            resamples += 1;
            continue;
        }
        accepted.push(row);
        basis.push(reduced);
        basis.sort_unstable_by(|a, b| b.cmp(a));
    }
    let code = LinearCode::from_generator(
        GF2Matrix::new(spec.n, accepted),
        format!("random(n={},k={},seed={})", spec.n, spec.k, spec.seed),
    )?;
    Ok((code, resamples))
}

/// Binary entropy function H(x) = -x log2 x - (1-x) log2 (1-x).
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// The Gilbert-Varshamov relative distance: the unique δ in (0, 1/2) with
/// 1 - H(δ) = rate, by bisection to 1e-12.
pub fn gv_relative_distance(rate: f64) -> Result<f64> {
    if !(rate > 0.0 && rate < 1.0) {
        return Err(Error::OutOfRange(format!("rate {rate} not in (0,1)")));
    }
    let target = 1.0 - rate;
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if binary_entropy(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let delta = 0.5 * (lo + hi);
    debug_assert!((1.0 - binary_entropy(delta) - rate).abs() <= 1e-12);
    Ok(delta)
}

/// The classical upper bound (2^(m+1)-2)^r on the number of minimum-weight
/// codewords of the r-th order Reed-Muller code of length 2^m.
pub fn rm_min_weight_count_bound(r: usize, m: usize) -> Result<BigUint> {
    if r < 1 || r > m {
        return Err(Error::OutOfRange(format!("rm bound r={r} m={m}")));
    }
    let base = BigUint::from((1u128 << (m + 1)) - 2);
    Ok(base.pow(r as u32))
}
