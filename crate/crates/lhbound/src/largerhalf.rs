//! Larger halves of codewords, the LH⁻/LH⁺ split, weight slices LH_i(U),
//! trial sets, minimal codewords, and the pairwise-intersection caps on
//! common larger halves.
//!
//! The closed form enumerates subsets of S(c) of the admissible sizes.
//! Although the definition quantifies v over all of F^n, any v with
//! v + c ≺ v that carries a bit outside S(c) stays in that relation after
//! deleting the bit (both v and v + c lose the same bit, shrinking both
//! sides of the comparison identically), so it is not ⊆-minimal. The
//! definitional oracle therefore also enumerates subsets of S(c) only.

use std::collections::{BTreeMap, HashSet};

use crate::bounds::{even_condition, odd_condition, Condition};
use crate::error::{Error, Result};
use crate::errorstructure::{minimal_uncorrectable, LeaderOracle};
use crate::gf2core::{BitVector, Limits, LinearCode};

/// All subsets of the support of `c` of size `size`, optionally constrained
/// on containing the leftmost coordinate of `c`.
fn support_subsets(c: &BitVector, size: usize, leftmost: Option<bool>) -> Vec<BitVector> {
    let support = c.support();
    let w = support.len();
    if size > w {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in BitVector::fixed_weight(w.max(1), size) {
        if w == 0 {
            break;
        }
        let mut v = BitVector::zero(c.len());
        for (t, &pos) in support.iter().enumerate() {
            if mask.get(t + 1) {
                v = v.with_bit(pos, true);
            }
        }
        if let Some(must_contain) = leftmost {
            if v.get(support[0]) != must_contain {
                continue;
            }
        }
        out.push(v);
    }
    out
}

/// Larger halves of `c` by the closed-form conditions: v ⊆ c with
/// w(c) ≤ 2w(v) ≤ w(c)+2, and for even w(c) the leftmost-coordinate
/// constraint (l(v) = l(c) at weight w(c)/2, l(v) > l(c) at w(c)/2+1).
pub fn larger_halves(c: &BitVector) -> Result<Vec<BitVector>> {
    if c.is_zero() {
        return Err(Error::ZeroVector);
    }
    let w = c.weight();
    if w % 2 == 1 {
        // only weight (w+1)/2 is admissible; no leftmost constraint
        Ok(support_subsets(c, (w + 1) / 2, None))
    } else {
        let mut out = support_subsets(c, w / 2, Some(true));
        out.extend(support_subsets(c, w / 2 + 1, Some(false)));
        Ok(out)
    }
}

/// Definitional oracle: enumerates every subset v of S(c), keeps those with
/// v + c ≺ v, and filters to the ⊆-minimal ones. Independent of the
/// closed-form conditions.
pub fn larger_halves_oracle(c: &BitVector) -> Result<Vec<BitVector>> {
    if c.is_zero() {
        return Err(Error::ZeroVector);
    }
    let support = c.support();
    let w = support.len();
    if w > 24 {
        return Err(Error::TooLarge {
            what: "codeword weight for 2^w subset enumeration",
            value: w as u64,
            limit: 24,
        });
    }
    let mut satisfying: Vec<BitVector> = Vec::new();
    for mask in 0u64..(1u64 << w) {
        let mut v = BitVector::zero(c.len());
        for (t, &pos) in support.iter().enumerate() {
            if (mask >> t) & 1 == 1 {
                v = v.with_bit(pos, true);
            }
        }
        if (v ^ *c).precedes_strict(&v)? {
            satisfying.push(v);
        }
    }
    let mut minimal = Vec::new();
    'outer: for v in &satisfying {
        for u in &satisfying {
            if u != v && u.covers_into(v)? {
                continue 'outer;
            }
        }
        minimal.push(*v);
    }
    Ok(minimal)
}

/// The weight-w(c)/2 part of LH(c) for even-weight `c`.
pub fn lh_minus(c: &BitVector) -> Result<Vec<BitVector>> {
    if c.is_zero() {
        return Err(Error::ZeroVector);
    }
    if c.weight() % 2 == 1 {
        return Err(Error::OddWeight);
    }
    Ok(support_subsets(c, c.weight() / 2, Some(true)))
}

/// The weight-(w(c)/2+1) part of LH(c) for even-weight `c`.
pub fn lh_plus(c: &BitVector) -> Result<Vec<BitVector>> {
    if c.is_zero() {
        return Err(Error::ZeroVector);
    }
    if c.weight() % 2 == 1 {
        return Err(Error::OddWeight);
    }
    Ok(support_subsets(c, c.weight() / 2 + 1, Some(false)))
}

/// The weight-i slice of LH(U) with a per-vector multiplicity map counting
/// how many codewords of `U` produced each larger half.
pub struct LHSlice {
    pub n: usize,
    pub weight: usize,
    /// numeric value of each larger half -> number of distinct sources
    multiplicity: BTreeMap<u128, usize>,
    /// number of codewords of U that contributed at least one vector
    pub source_count: usize,
}

impl LHSlice {
    pub fn count(&self) -> u64 {
        self.multiplicity.len() as u64
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.multiplicity.contains_key(&v.numeric_value())
    }

    pub fn multiplicity_of(&self, v: &BitVector) -> usize {
        self.multiplicity.get(&v.numeric_value()).copied().unwrap_or(0)
    }

    /// Members ascending by numeric value.
    pub fn members(&self) -> impl Iterator<Item = (BitVector, usize)> + '_ {
        self.multiplicity
            .iter()
            .map(|(&v, &m)| (BitVector::from_value(self.n, v), m))
    }

    /// CSV export: vector_bits, weight, multiplicity, source_count.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vector_bits,weight,multiplicity,source_count\n");
        for (v, m) in self.members() {
            out.push_str(&format!("{v},{},{m},{}\n", self.weight, self.source_count));
        }
        out
    }
}

/// Builds LH_i(U) via the decomposition
/// LH_i(U) = LH⁺(A_{2i-2}(U)) ∪ LH(A_{2i-1}(U)) ∪ LH⁻(A_{2i}(U)):
/// only codewords of weights 2i-2, 2i-1, 2i contribute weight-i halves.
pub fn lh_weight_slice(u: &[BitVector], n: usize, i: usize) -> Result<LHSlice> {
    let mut multiplicity = BTreeMap::new();
    let mut source_count = 0usize;
    for c in u {
        if c.is_zero() {
            continue;
        }
        let w = c.weight();
        let part = if w + 2 == 2 * i {
            lh_plus(c)?
        } else if w + 1 == 2 * i {
            larger_halves(c)?
        } else if w == 2 * i {
            lh_minus(c)?
        } else {
            continue;
        };
        if part.is_empty() {
            continue;
        }
        source_count += 1;
        for v in part {
            debug_assert_eq!(v.weight(), i);
            *multiplicity.entry(v.numeric_value()).or_insert(0) += 1;
        }
    }
    Ok(LHSlice {
        n,
        weight: i,
        multiplicity,
        source_count,
    })
}

/// Provenance of a trial-set candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialSetProvenance {
    AllNonzero,
    MinimalCodewords,
    Explicit,
}

/// A candidate trial set: nonzero codewords of a code.
pub struct TrialSet {
    pub codewords: Vec<BitVector>,
    pub provenance: TrialSetProvenance,
}

impl TrialSet {
    /// T = C \ {0}.
    pub fn all_nonzero(code: &LinearCode, limits: &Limits) -> Result<Self> {
        let codewords = code
            .codewords(limits)?
            .filter(|c| !c.is_zero())
            .collect();
        Ok(TrialSet {
            codewords,
            provenance: TrialSetProvenance::AllNonzero,
        })
    }

    /// T = the minimal codewords of C.
    pub fn minimal(code: &LinearCode, limits: &Limits) -> Result<Self> {
        Ok(TrialSet {
            codewords: minimal_codewords(code, limits)?,
            provenance: TrialSetProvenance::MinimalCodewords,
        })
    }

    /// An explicit codeword set; each member is checked against the code.
    pub fn explicit(code: &LinearCode, codewords: Vec<BitVector>) -> Result<Self> {
        for c in &codewords {
            if c.is_zero() || !code.contains(c)? {
                return Err(Error::InvalidParameters(format!(
                    "trial set member {c} is not a nonzero codeword"
                )));
            }
        }
        Ok(TrialSet {
            codewords,
            provenance: TrialSetProvenance::Explicit,
        })
    }

    /// Weight-i members.
    pub fn weight_class(&self, i: usize) -> Vec<BitVector> {
        self.codewords.iter().copied().filter(|c| c.weight() == i).collect()
    }
}

/// The minimal codewords: nonzero codewords covering no other nonzero
/// codeword. Pairwise O(|C|²) covering scan.
pub fn minimal_codewords(code: &LinearCode, limits: &Limits) -> Result<Vec<BitVector>> {
    if code.k() > 20 {
        return Err(Error::TooLarge {
            what: "dimension k for pairwise covering scan",
            value: code.k() as u64,
            limit: 20,
        });
    }
    let nonzero: Vec<BitVector> = code
        .codewords(limits)?
        .filter(|c| !c.is_zero())
        .collect();
    let mut out = Vec::new();
    'outer: for c in &nonzero {
        for other in &nonzero {
            if other != c && other.covers_into(c)? {
                continue 'outer;
            }
        }
        out.push(*c);
    }
    Ok(out)
}

/// Checks the trial-set property M¹_w(C) ⊆ LH(T) for each weight in
/// `weights`; returns the uncovered minimal uncorrectable errors if any.
pub fn is_trial_set(
    code: &LinearCode,
    trial: &TrialSet,
    weights: impl IntoIterator<Item = usize>,
    oracle: &LeaderOracle<'_>,
    limits: &Limits,
) -> Result<(bool, Vec<BitVector>)> {
    let mut missing = Vec::new();
    for w in weights {
        let m1 = minimal_uncorrectable(code, w, oracle, limits)?;
        if m1.count == 0 {
            continue;
        }
        let members = m1.vectors.as_ref().ok_or(Error::TooLarge {
            what: "explicit M1 slice needed for trial-set check",
            value: m1.count,
            limit: limits.slice_cap as u64,
        })?;
        let slice = lh_weight_slice(&trial.codewords, code.n(), w)?;
        for v in members {
            if !slice.contains(v) {
                missing.push(*v);
            }
        }
    }
    Ok((missing.is_empty(), missing))
}

/// Observed maxima of pairwise larger-half intersections over the relevant
/// minimum-weight classes.
#[derive(Debug, Clone, Copy)]
pub enum IntersectionMaxima {
    /// Odd d: max |LH(c₁)∩LH(c₁')|, max |LH(c₁)∩LH⁻(c₂)|,
    /// max |LH⁻(c₂)∩LH⁻(c₂')| over A_d and A_{d+1}.
    Odd {
        lh_lh: usize,
        lh_lhminus: usize,
        lhminus_lhminus: usize,
    },
    /// Even d: max |LH⁻(c₁)∩LH⁻(c₂)| over A_d.
    Even { lhminus_lhminus: usize },
}

impl IntersectionMaxima {
    /// True iff the observed maxima satisfy the caps (0, ≤1, ≤1) for odd d
    /// and ≤1 for even d.
    pub fn within_caps(&self) -> bool {
        match *self {
            IntersectionMaxima::Odd {
                lh_lh,
                lh_lhminus,
                lhminus_lhminus,
            } => lh_lh == 0 && lh_lhminus <= 1 && lhminus_lhminus <= 1,
            IntersectionMaxima::Even { lhminus_lhminus } => lhminus_lhminus <= 1,
        }
    }
}

fn as_set(vs: &[BitVector]) -> HashSet<u128> {
    vs.iter().map(|v| v.numeric_value()).collect()
}

fn max_pairwise(left: &[HashSet<u128>], right: &[HashSet<u128>], same: bool) -> usize {
    let mut max = 0;
    for (i, a) in left.iter().enumerate() {
        let start = if same { i + 1 } else { 0 };
        for b in &right[start.min(right.len())..] {
            max = max.max(a.intersection(b).count());
        }
    }
    max
}

/// Exhaustive pairwise intersection maxima over the codewords of weights d
/// (and d+1 when d is odd).
pub fn pairwise_lh_intersection_check(
    code: &LinearCode,
    limits: &Limits,
) -> Result<IntersectionMaxima> {
    let d = code.min_distance(limits)?;
    let trial = TrialSet::all_nonzero(code, limits)?;
    if d % 2 == 1 {
        let a_d: Vec<HashSet<u128>> = trial
            .weight_class(d)
            .iter()
            .map(|c| larger_halves(c).map(|v| as_set(&v)))
            .collect::<Result<_>>()?;
        let a_d1: Vec<HashSet<u128>> = trial
            .weight_class(d + 1)
            .iter()
            .map(|c| lh_minus(c).map(|v| as_set(&v)))
            .collect::<Result<_>>()?;
        Ok(IntersectionMaxima::Odd {
            lh_lh: max_pairwise(&a_d, &a_d, true),
            lh_lhminus: max_pairwise(&a_d, &a_d1, false),
            lhminus_lhminus: max_pairwise(&a_d1, &a_d1, true),
        })
    } else {
        let a_d: Vec<HashSet<u128>> = trial
            .weight_class(d)
            .iter()
            .map(|c| lh_minus(c).map(|v| as_set(&v)))
            .collect::<Result<_>>()?;
        Ok(IntersectionMaxima::Even {
            lhminus_lhminus: max_pairwise(&a_d, &a_d, true),
        })
    }
}

/// Per-codeword private larger halves at weight ⌈d/2⌉, showing that each
/// minimum-weight codeword (and each weight-(d+1) codeword when d is odd)
/// must belong to every trial set.
pub struct NecessityReport {
    pub condition: Condition,
    /// (codeword, number of its weight-⌈d/2⌉ larger halves produced by no
    /// other codeword)
    pub private_counts: Vec<(BitVector, u64)>,
    /// every listed codeword has at least one private larger half
    pub conclusion: bool,
}

/// Verifies the forced-membership consequence of conditions (4)/(5) for
/// T = C \ {0}: exhibits private larger halves per forced codeword.
pub fn verify_trial_set_necessity(code: &LinearCode, limits: &Limits) -> Result<NecessityReport> {
    let d = code.min_distance(limits)?;
    let dist = code.weight_distribution(limits)?;
    let condition = if d % 2 == 1 {
        odd_condition(d, dist[d], dist[d + 1])?
    } else {
        even_condition(d, dist[d])?
    };
    if !condition.flag {
        return Err(Error::ConditionNotMet(format!(
            "lhs {} <= rhs {}",
            condition.lhs, condition.rhs
        )));
    }
    let trial = TrialSet::all_nonzero(code, limits)?;
    let i = d.div_ceil(2);
    let slice = lh_weight_slice(&trial.codewords, code.n(), i)?;
    let mut forced = trial.weight_class(d);
    if d % 2 == 1 {
        forced.extend(trial.weight_class(d + 1));
    }
    let mut private_counts = Vec::new();
    for c in forced {
        let own = if c.weight() % 2 == 1 {
            larger_halves(&c)?
        } else {
            lh_minus(&c)?
        };
        let private = own
            .iter()
            .filter(|v| slice.multiplicity_of(v) == 1)
            .count() as u64;
        private_counts.push((c, private));
    }
    let conclusion = private_counts.iter().all(|&(_, p)| p >= 1);
    Ok(NecessityReport {
        condition,
        private_counts,
        conclusion,
    })
}
