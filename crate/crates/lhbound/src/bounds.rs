//! Exact-arithmetic evaluators for the lower/upper bounds on the number of
//! uncorrectable errors of weight half the minimum distance, their
//! conditions, the generalized weight-i bound, gap diagnostics, and report
//! assembly against exhaustive ground truth.
//!
//! All comparisons use big integers or rationals; no floating point enters
//! any bound or condition.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::errorstructure::{classify_weight, CosetLeaderTable, LeaderOracle, SliceKind};
use crate::gf2core::{Limits, LinearCode};
use crate::largerhalf::{TrialSet, TrialSetProvenance};

/// Exact binomial coefficient; 0 when k > n.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// An evaluated strict-inequality condition: flag = (lhs > rhs). A tie is
/// condition-false.
#[derive(Clone, Debug)]
pub struct Condition {
    pub lhs: BigUint,
    pub rhs: BigInt,
    pub flag: bool,
}

impl Condition {
    fn new(lhs: BigUint, rhs: BigInt) -> Self {
        let flag = BigInt::from(lhs.clone()) > rhs;
        Condition { lhs, rhs, flag }
    }
}

/// Condition for odd minimum distance d: C(d,(d+1)/2) > A_d + A_{d+1} - 1.
pub fn odd_condition(d: usize, ad: u64, ad1: u64) -> Result<Condition> {
    if d % 2 == 0 {
        return Err(Error::ParityMismatch { expected: "odd" });
    }
    let lhs = binomial(d, (d + 1) / 2);
    let rhs = BigInt::from(ad) + BigInt::from(ad1) - BigInt::one();
    Ok(Condition::new(lhs, rhs))
}

/// Condition for even minimum distance d: C(d,d/2)/2 > A_d - 1.
pub fn even_condition(d: usize, ad: u64) -> Result<Condition> {
    if d % 2 == 1 {
        return Err(Error::ParityMismatch { expected: "even" });
    }
    let lhs = binomial(d, d / 2) / 2u32;
    let rhs = BigInt::from(ad) - BigInt::one();
    Ok(Condition::new(lhs, rhs))
}

/// Odd-d bounds on |E¹_{(d+1)/2}|: with B = C(d,(d+1)/2),
/// lower = B(A_d+A_{d+1}) - (2A_d+A_{d+1}-1)A_{d+1} (claimed only under the
/// condition), upper = B(A_d+A_{d+1}) (unconditional).
pub fn theorem1_bounds(d: usize, ad: u64, ad1: u64) -> Result<(BigInt, BigUint)> {
    if d % 2 == 0 {
        return Err(Error::ParityMismatch { expected: "odd" });
    }
    let b = BigInt::from(binomial(d, (d + 1) / 2));
    let (ad, ad1) = (BigInt::from(ad), BigInt::from(ad1));
    let upper = (&b * (&ad + &ad1)).to_biguint().unwrap();
    let lower = &b * (&ad + &ad1) - (2 * &ad + &ad1 - BigInt::one()) * &ad1;
    Ok((lower, upper))
}

/// Even-d bounds on |E¹_{d/2}|: with B½ = C(d,d/2)/2,
/// lower = B½·A_d - (A_d-1)A_d, upper = B½·A_d.
pub fn theorem2_bounds(d: usize, ad: u64) -> Result<(BigInt, BigUint)> {
    if d % 2 == 1 {
        return Err(Error::ParityMismatch { expected: "even" });
    }
    let bh = BigInt::from(binomial(d, d / 2) / 2u32);
    let ad = BigInt::from(ad);
    let upper = (&bh * &ad).to_biguint().unwrap();
    let lower = &bh * &ad - (&ad - BigInt::one()) * &ad;
    Ok((lower, upper))
}

/// Improved even-d lower bound for T = C \ {0}:
/// B½·A_d - ⌈(A_d-1)/2⌉·A_d, under the weaker condition
/// B½ > ⌈(A_d-1)/2⌉.
pub fn theorem3_lower(d: usize, ad: u64) -> Result<BigInt> {
    if d % 2 == 1 {
        return Err(Error::ParityMismatch { expected: "even" });
    }
    let bh = binomial(d, d / 2) / 2u32;
    let half_up = BigUint::from(ad.saturating_sub(1).div_ceil(2));
    if bh <= half_up {
        return Err(Error::ConditionNotMet(format!(
            "C(d,d/2)/2 = {bh} <= ceil((A_d-1)/2) = {half_up}"
        )));
    }
    Ok(BigInt::from(bh) * BigInt::from(ad) - BigInt::from(half_up) * BigInt::from(ad))
}

/// Generalized weight-i bound report.
#[derive(Clone, Debug)]
pub struct GeneralizedBoundReport {
    pub i: usize,
    pub b_i: u64,
    pub condition: Condition,
    pub lower: BigInt,
    /// Upper bound as stated (factor 2 on the C(2i-1,i) terms).
    pub upper_as_stated: BigUint,
    /// Upper bound as the proof's inequality chain yields it (no factor 2).
    pub upper_as_proved: BigUint,
    pub lh_count: Option<u64>,
}

/// Bounds on |LH_i(T)| for ⌈d/2⌉ ≤ i ≤ ⌈n/2⌉ with
/// B_i = A_{2i-2} + A_{2i-1} + A_{2i}. Binomials with upper index below the
/// lower index evaluate to 0. The i-range is the widest one with possible
/// weight-(2i-1) contributors, so the odd-n boundary case (i = (n+1)/2,
/// where only A_{2i-1} can be nonzero) is admitted.
pub fn theorem4_bounds(
    i: usize,
    d: usize,
    n: usize,
    a2im2: u64,
    a2im1: u64,
    a2i: u64,
) -> Result<GeneralizedBoundReport> {
    if i < d.div_ceil(2) || i > n.div_ceil(2) {
        return Err(Error::OutOfRange(format!(
            "i={i} outside [ceil(d/2), ceil(n/2)] = [{}, {}]",
            d.div_ceil(2),
            n.div_ceil(2)
        )));
    }
    let b_i = a2im2 + a2im1 + a2i;
    let lead = if 2 * i >= 3 { binomial(2 * i - 3, i) } else { BigUint::zero() };
    let cap = binomial(2 * i - d.div_ceil(2), i);
    let rhs = BigUint::from(3u32) * &cap * BigUint::from(b_i);
    let condition = Condition::new(lead.clone(), BigInt::from(rhs.clone()));
    let lower = (BigInt::from(lead.clone()) - BigInt::from(rhs)) * BigInt::from(b_i);
    let tail = binomial(2 * i - 1, i) * BigUint::from(a2im1 + a2i);
    let head = &lead * BigUint::from(a2im2);
    let upper_as_proved = &head + &tail;
    let upper_as_stated = head + BigUint::from(2u32) * tail;
    Ok(GeneralizedBoundReport {
        i,
        b_i,
        condition,
        lower,
        upper_as_stated,
        upper_as_proved,
        lh_count: None,
    })
}

/// Exact gap diagnostics between the upper and lower bounds, with the
/// Reed-Muller chain values when (r, m) is supplied.
#[derive(Clone, Debug)]
pub struct GapDiagnostics {
    pub d: usize,
    /// upper - lower (0 when the lower collapses onto the upper)
    pub gap: BigUint,
    /// A_{d+1}/C(d,(d+1)/2) for odd d, A_d/C(d,d/2) for even d
    pub ratio: BigRational,
    pub ratio_decimal: f64,
    pub rm_chain: Option<RmChainDiagnostics>,
}

/// Reed-Muller chain diagnostics: ratio vs (2^(m+1)-2)^r / 2^(2^(m-r))
/// vs 2^((m+1)r - 2^(m-r)), reported exactly and flagged, not asserted.
#[derive(Clone, Debug)]
pub struct RmChainDiagnostics {
    pub mid: BigRational,
    pub exp_bound: BigRational,
    pub ratio_le_mid: bool,
    pub mid_le_exp: bool,
    pub ratio_le_exp: bool,
}

fn pow2_rational(e: i64) -> BigRational {
    let p = BigInt::from(2u32).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

pub fn gap_diagnostics(
    code: &LinearCode,
    rm_params: Option<(usize, usize)>,
    limits: &Limits,
) -> Result<GapDiagnostics> {
    let d = code.min_distance(limits)?;
    let dist = code.weight_distribution(limits)?;
    let (gap, ratio) = if d % 2 == 1 {
        let (ad, ad1) = (dist[d], dist.get(d + 1).copied().unwrap_or(0));
        let gap = if ad1 == 0 {
            BigUint::zero()
        } else {
            BigUint::from(2 * ad + ad1 - 1) * BigUint::from(ad1)
        };
        let ratio = BigRational::new(BigInt::from(ad1), BigInt::from(binomial(d, (d + 1) / 2)));
        (gap, ratio)
    } else {
        let ad = dist[d];
        let gap = BigUint::from(ad - 1) * BigUint::from(ad);
        let ratio = BigRational::new(BigInt::from(ad), BigInt::from(binomial(d, d / 2)));
        (gap, ratio)
    };
    let rm_chain = rm_params.map(|(r, m)| {
        let numer = BigInt::from((1u128 << (m + 1)) - 2).pow(r as u32);
        let denom = BigInt::from(2u32).pow(1u32 << (m - r));
        let mid = BigRational::new(numer, denom);
        let exp_bound = pow2_rational((m as i64 + 1) * r as i64 - (1i64 << (m - r)));
        RmChainDiagnostics {
            ratio_le_mid: ratio <= mid,
            mid_le_exp: mid <= exp_bound,
            ratio_le_exp: ratio <= exp_bound,
            mid,
            exp_bound,
        }
    });
    let ratio_decimal = ratio
        .numer()
        .to_f64()
        .zip(ratio.denom().to_f64())
        .map(|(a, b)| a / b)
        .unwrap_or(f64::NAN);
    Ok(GapDiagnostics {
        d,
        gap,
        ratio,
        ratio_decimal,
        rm_chain,
    })
}

/// Verdict of comparing the bounds with the exhaustive count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SandwichVerdict {
    /// condition true and lower <= count <= upper (and the improved lower,
    /// when present, also <= count)
    Pass,
    /// condition false; count <= upper still held
    UpperOnlyPass,
    Fail,
}

/// Full half-distance bound report for one code and trial set.
pub struct BoundReport {
    pub code_name: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub trial_provenance: TrialSetProvenance,
    pub ad: u64,
    pub ad1: u64,
    pub condition: Condition,
    pub lower: BigInt,
    pub upper: BigUint,
    pub improved_lower: Option<BigInt>,
    pub exhaustive_count: Option<u64>,
    pub verdict: Option<SandwichVerdict>,
    pub gap: GapDiagnostics,
}

/// Computes |E¹_{⌈d/2⌉}(C)| exhaustively, auto-selecting the leader oracle:
/// dense coset table when n-k fits, else the per-vector codeword scan.
pub fn exhaustive_half_distance_count(code: &LinearCode, limits: &Limits) -> Result<u64> {
    let d = code.min_distance(limits)?;
    let w = d.div_ceil(2);
    if code.n() - code.k() <= limits.r_max && code.n() <= 40 {
        let table = CosetLeaderTable::build(code, limits)?;
        let oracle = LeaderOracle::Table(&table);
        Ok(classify_weight(code, w, SliceKind::E1, &oracle, limits)?.count)
    } else if code.k() <= limits.k_enum_max {
        let oracle = LeaderOracle::Scan(code);
        Ok(classify_weight(code, w, SliceKind::E1, &oracle, limits)?.count)
    } else {
        Err(Error::TooLarge {
            what: "no feasible leader oracle (n-k and k both exceed ceilings)",
            value: code.k() as u64,
            limit: limits.k_enum_max as u64,
        })
    }
}

/// Assembles the theorem evaluators with optional exhaustive ground truth.
pub fn bound_report(
    code: &LinearCode,
    trial_provenance: TrialSetProvenance,
    with_ground_truth: bool,
    rm_params: Option<(usize, usize)>,
    limits: &Limits,
) -> Result<BoundReport> {
    let d = code.min_distance(limits)?;
    let (ad, ad1) = match trial_provenance {
        TrialSetProvenance::AllNonzero => {
            let dist = code.weight_distribution(limits)?;
            (dist[d], dist.get(d + 1).copied().unwrap_or(0))
        }
        TrialSetProvenance::MinimalCodewords => {
            let trial = TrialSet::minimal(code, limits)?;
            (
                trial.weight_class(d).len() as u64,
                trial.weight_class(d + 1).len() as u64,
            )
        }
        TrialSetProvenance::Explicit => {
            return Err(Error::InvalidParameters(
                "bound_report needs all-nonzero or minimal trial set".into(),
            ))
        }
    };
    let (condition, lower, upper, improved_lower) = if d % 2 == 1 {
        let condition = odd_condition(d, ad, ad1)?;
        let (lower, upper) = theorem1_bounds(d, ad, ad1)?;
        (condition, lower, upper, None)
    } else {
        let condition = even_condition(d, ad)?;
        let (lower, upper) = theorem2_bounds(d, ad)?;
        // Theorem 3 applies only to T = C \ {0}.
        let improved = if trial_provenance == TrialSetProvenance::AllNonzero {
            theorem3_lower(d, ad).ok()
        } else {
            None
        };
        (condition, lower, upper, improved)
    };
    let (exhaustive_count, verdict) = if with_ground_truth {
        let count = exhaustive_half_distance_count(code, limits)?;
        let cnt = BigInt::from(count);
        let upper_ok = cnt <= BigInt::from(upper.clone());
        let verdict = if condition.flag {
            let lower_ok = lower <= cnt
                && improved_lower.as_ref().map_or(true, |il| il <= &cnt);
            if lower_ok && upper_ok {
                SandwichVerdict::Pass
            } else {
                SandwichVerdict::Fail
            }
        } else if upper_ok {
            SandwichVerdict::UpperOnlyPass
        } else {
            SandwichVerdict::Fail
        };
        (Some(count), Some(verdict))
    } else {
        (None, None)
    };
    let gap = gap_diagnostics(code, rm_params, limits)?;
    Ok(BoundReport {
        code_name: code.name().to_string(),
        n: code.n(),
        k: code.k(),
        d,
        trial_provenance,
        ad,
        ad1,
        condition,
        lower,
        upper,
        improved_lower,
        exhaustive_count,
        verdict,
        gap,
    })
}

fn provenance_str(p: TrialSetProvenance) -> &'static str {
    match p {
        TrialSetProvenance::AllNonzero => "all-nonzero",
        TrialSetProvenance::MinimalCodewords => "minimal",
        TrialSetProvenance::Explicit => "explicit",
    }
}

fn verdict_str(v: SandwichVerdict) -> &'static str {
    match v {
        SandwichVerdict::Pass => "PASS",
        SandwichVerdict::UpperOnlyPass => "UPPER_ONLY_PASS",
        SandwichVerdict::Fail => "FAIL",
    }
}

impl BoundReport {
    /// JSON with every integer rendered as a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "lhbound.bound_report.v1",
            "code": self.code_name,
            "n": self.n.to_string(),
            "k": self.k.to_string(),
            "d": self.d.to_string(),
            "trial_set": provenance_str(self.trial_provenance),
            "a_d": self.ad.to_string(),
            "a_d1": self.ad1.to_string(),
            "condition": {
                "lhs": self.condition.lhs.to_string(),
                "rhs": self.condition.rhs.to_string(),
                "flag": self.condition.flag,
            },
            "lower": self.lower.to_string(),
            "upper": self.upper.to_string(),
            "improved_lower": self.improved_lower.as_ref().map(|v| v.to_string()),
            "exhaustive_count": self.exhaustive_count.map(|v| v.to_string()),
            "verdict": self.verdict.map(verdict_str),
            "gap": self.gap.gap.to_string(),
            "gap_ratio": self.gap.ratio.to_string(),
            "gap_ratio_decimal": self.gap.ratio_decimal,
            "rm_chain": self.gap.rm_chain.as_ref().map(|c| serde_json::json!({
                "mid": c.mid.to_string(),
                "exp_bound": c.exp_bound.to_string(),
                "ratio_le_mid": c.ratio_le_mid,
                "mid_le_exp": c.mid_le_exp,
                "ratio_le_exp": c.ratio_le_exp,
            })),
        })
    }

    pub fn csv_header() -> &'static str {
        "code,n,k,d,trial_set,a_d,a_d1,cond_lhs,cond_rhs,cond_flag,lower,upper,improved_lower,exhaustive_count,verdict,gap,gap_ratio"
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.code_name,
            self.n,
            self.k,
            self.d,
            provenance_str(self.trial_provenance),
            self.ad,
            self.ad1,
            self.condition.lhs,
            self.condition.rhs,
            self.condition.flag,
            self.lower,
            self.upper,
            self.improved_lower
                .as_ref()
                .map(|v| v.to_string())
                .unwrap_or_default(),
            self.exhaustive_count
                .map(|v| v.to_string())
                .unwrap_or_default(),
            self.verdict.map(verdict_str).unwrap_or(""),
            self.gap.gap,
            self.gap.ratio,
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "code {} (n={}, k={}, d={}), trial set {}\n",
            self.code_name,
            self.n,
            self.k,
            self.d,
            provenance_str(self.trial_provenance)
        );
        out.push_str(&format!("A_d = {}, A_d+1 = {}\n", self.ad, self.ad1));
        out.push_str(&format!(
            "condition: {} > {} -> {}\n",
            self.condition.lhs, self.condition.rhs, self.condition.flag
        ));
        out.push_str(&format!("bounds: [{}, {}]\n", self.lower, self.upper));
        if let Some(il) = &self.improved_lower {
            out.push_str(&format!("improved lower: {il}\n"));
        }
        if let Some(c) = self.exhaustive_count {
            out.push_str(&format!("exhaustive |E1_ceil(d/2)| = {c}\n"));
        }
        if let Some(v) = self.verdict {
            out.push_str(&format!("verdict: {}\n", verdict_str(v)));
        }
        out.push_str(&format!(
            "gap = {}, ratio = {} ({:.6})\n",
            self.gap.gap, self.gap.ratio, self.gap.ratio_decimal
        ));
        if let Some(c) = &self.gap.rm_chain {
            out.push_str(&format!(
                "rm chain: ratio <= {} : {}; <= {} : {}\n",
                c.mid, c.ratio_le_mid, c.exp_bound, c.ratio_le_exp
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codefactory::{extend, hamming, reed_muller, repetition};

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn binomials_exact() {
        assert_eq!(binomial(21, 11), BigUint::from(352716u64));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn odd_condition_examples() {
        let c = odd_condition(3, 7, 7).unwrap();
        assert_eq!((c.lhs.to_string(), c.rhs.to_string(), c.flag), ("3".into(), "13".into(), false));
        let c = odd_condition(5, 1, 0).unwrap();
        assert_eq!((c.lhs.to_string(), c.rhs.to_string(), c.flag), ("10".into(), "0".into(), true));
        assert!(matches!(odd_condition(4, 1, 0), Err(Error::ParityMismatch { .. })));
    }

    #[test]
    fn even_condition_examples() {
        let c = even_condition(8, 30).unwrap();
        assert_eq!((c.lhs.to_string(), c.rhs.to_string(), c.flag), ("35".into(), "29".into(), true));
        let c = even_condition(4, 14).unwrap();
        assert_eq!((c.lhs.to_string(), c.rhs.to_string(), c.flag), ("3".into(), "13".into(), false));
        let c = even_condition(16, 2604).unwrap();
        assert_eq!((c.lhs.to_string(), c.rhs.to_string(), c.flag), ("6435".into(), "2603".into(), true));
    }

    #[test]
    fn theorem1_examples() {
        let (lo, up) = theorem1_bounds(5, 1, 0).unwrap();
        assert_eq!((lo.to_string(), up.to_string()), ("10".into(), "10".into()));
        let (_, up) = theorem1_bounds(3, 7, 7).unwrap();
        assert_eq!(up.to_string(), "42");
        // Ad1=0 collapses lower = upper = B*Ad
        let (lo, up) = theorem1_bounds(7, 5, 0).unwrap();
        assert_eq!(lo, BigInt::from(up.clone()));
    }

    #[test]
    fn theorem2_examples() {
        let (lo, up) = theorem2_bounds(8, 30).unwrap();
        assert_eq!((lo.to_string(), up.to_string()), ("180".into(), "1050".into()));
        let (lo, up) = theorem2_bounds(6, 1).unwrap();
        assert_eq!((lo.to_string(), up.to_string()), ("10".into(), "10".into()));
    }

    #[test]
    fn theorem3_examples() {
        assert_eq!(theorem3_lower(8, 30).unwrap().to_string(), "600");
        assert_eq!(theorem3_lower(6, 1).unwrap().to_string(), "10");
        assert!(matches!(theorem3_lower(4, 14), Err(Error::ConditionNotMet(_))));
    }

    #[test]
    fn theorem3_at_least_theorem2() {
        for d in (2..=16usize).step_by(2) {
            for ad in 1..40u64 {
                if let Ok(t3) = theorem3_lower(d, ad) {
                    let (t2, _) = theorem2_bounds(d, ad).unwrap();
                    assert!(t3 >= t2, "d={d} ad={ad}");
                }
            }
        }
    }

    #[test]
    fn theorem4_examples() {
        // repetition(5,1), i=3
        let r = theorem4_bounds(3, 5, 5, 0, 1, 0).unwrap();
        assert_eq!(r.b_i, 1);
        assert!(!r.condition.flag);
        assert_eq!(r.upper_as_proved.to_string(), "10");

        // Hamming(7,4), i=3
        let r = theorem4_bounds(3, 3, 7, 7, 0, 0).unwrap();
        assert_eq!(r.b_i, 7);
        assert_eq!(r.upper_as_proved.to_string(), "7");

        assert!(theorem4_bounds(1, 3, 7, 0, 0, 0).is_err());
        assert!(theorem4_bounds(5, 3, 7, 0, 0, 0).is_err());
    }

    #[test]
    fn theorem4_proved_le_stated() {
        for i in 2..10usize {
            for d in 1..=2 * i {
                let r = theorem4_bounds(i, d, 2 * i + 4, 3, 5, 7);
                if let Ok(r) = r {
                    assert!(r.upper_as_proved <= r.upper_as_stated);
                }
            }
        }
    }

    #[test]
    fn gap_examples() {
        let l = limits();
        let rm = reed_muller(1, 4).unwrap();
        let g = gap_diagnostics(&rm, Some((1, 4)), &l).unwrap();
        assert_eq!(g.ratio, BigRational::new(BigInt::from(3), BigInt::from(7)));
        let chain = g.rm_chain.unwrap();
        // exp bound is 2^(5-8) = 1/8 < 3/7: the literature's chained
        // inequality does not hold numerically here; flagged, not asserted.
        assert_eq!(chain.exp_bound, BigRational::new(BigInt::from(1), BigInt::from(8)));
        assert!(!chain.ratio_le_exp);
        assert!(chain.mid_le_exp);

        let rep = repetition(6).unwrap();
        let g = gap_diagnostics(&rep, None, &l).unwrap();
        assert!(g.gap.is_zero());
    }

    #[test]
    fn report_repetition5() {
        let l = limits();
        let code = repetition(5).unwrap();
        let r = bound_report(&code, TrialSetProvenance::AllNonzero, true, None, &l).unwrap();
        assert!(r.condition.flag);
        assert_eq!(r.lower.to_string(), "10");
        assert_eq!(r.upper.to_string(), "10");
        assert_eq!(r.exhaustive_count, Some(10));
        assert_eq!(r.verdict, Some(SandwichVerdict::Pass));
    }

    #[test]
    fn report_rm14() {
        let l = limits();
        let code = reed_muller(1, 4).unwrap();
        let r = bound_report(&code, TrialSetProvenance::AllNonzero, true, Some((1, 4)), &l).unwrap();
        assert!(r.condition.flag);
        assert_eq!(r.lower.to_string(), "180");
        assert_eq!(r.upper.to_string(), "1050");
        assert_eq!(r.improved_lower.as_ref().unwrap().to_string(), "600");
        let count = r.exhaustive_count.unwrap();
        assert!((600..=1050).contains(&count));
        assert_eq!(r.verdict, Some(SandwichVerdict::Pass));
    }

    #[test]
    fn report_hamming_upper_only() {
        let l = limits();
        let code = hamming(3).unwrap();
        let r = bound_report(&code, TrialSetProvenance::AllNonzero, true, None, &l).unwrap();
        assert!(!r.condition.flag);
        assert_eq!(r.upper.to_string(), "42");
        assert_eq!(r.exhaustive_count, Some(21));
        assert_eq!(r.verdict, Some(SandwichVerdict::UpperOnlyPass));
    }

    #[test]
    fn report_extended_hamming_no_improved() {
        let l = limits();
        let code = extend(&hamming(3).unwrap()).unwrap();
        let r = bound_report(&code, TrialSetProvenance::AllNonzero, true, None, &l).unwrap();
        assert!(!r.condition.flag);
        assert!(r.improved_lower.is_none());
        assert_eq!(r.verdict, Some(SandwichVerdict::UpperOnlyPass));
    }

    #[test]
    fn report_json_uses_strings() {
        let l = limits();
        let code = repetition(5).unwrap();
        let r = bound_report(&code, TrialSetProvenance::AllNonzero, false, None, &l).unwrap();
        let json = r.to_json();
        assert_eq!(json["lower"], serde_json::json!("10"));
        assert_eq!(json["upper"], serde_json::json!("10"));
    }
}
