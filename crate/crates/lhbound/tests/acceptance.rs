//! End-to-end acceptance gate. Runs one numbered check per release
//! criterion and prints a PASS/FAIL line for each; exits nonzero if any
//! check fails.

use std::process::Command;

use num_bigint::{BigInt, BigUint};

use lhbound::bounds::{
    bound_report, even_condition, odd_condition, theorem3_lower, theorem4_bounds, SandwichVerdict,
};
use lhbound::codefactory::{self, RandomCodeSpec};
use lhbound::errorstructure::{
    classify_weight, minimal_uncorrectable, verify_monotone, CosetLeaderTable, LeaderOracle,
    SliceKind,
};
use lhbound::gf2core::{Limits, LinearCode};
use lhbound::largerhalf::{
    larger_halves, larger_halves_oracle, lh_weight_slice, pairwise_lh_intersection_check,
    TrialSet, TrialSetProvenance,
};

fn random_fleet(count: u64) -> Vec<LinearCode> {
    (0..count)
        .map(|seed| {
            let n = 10 + (seed as usize % 5);
            let k = 4 + (seed as usize % 5);
            codefactory::random_code(&RandomCodeSpec { n, k, seed })
                .expect("random code")
                .0
        })
        .collect()
}

/// Codes shared by the larger-half and half-distance criteria.
fn small_fleet(limits: &Limits) -> Vec<LinearCode> {
    let _ = limits;
    let mut fleet = vec![
        codefactory::hamming(3).unwrap(),
        codefactory::reed_muller(1, 3).unwrap(),
        codefactory::reed_muller(1, 4).unwrap(),
    ];
    for n in 2..=8 {
        fleet.push(codefactory::repetition(n).unwrap());
    }
    fleet.extend(random_fleet(50));
    fleet
}

fn sorted_values(vs: &[lhbound::BitVector]) -> Vec<u128> {
    let mut out: Vec<u128> = vs.iter().map(|v| v.numeric_value()).collect();
    out.sort_unstable();
    out
}

fn criterion_lh_equivalence(limits: &Limits) -> bool {
    for code in small_fleet(limits) {
        for c in code.codewords(limits).unwrap() {
            if c.is_zero() || c.weight() > 16 {
                continue;
            }
            let closed = sorted_values(&larger_halves(&c).unwrap());
            let oracle = sorted_values(&larger_halves_oracle(&c).unwrap());
            if closed != oracle {
                eprintln!("  mismatch at codeword {c} of {}", code.name());
                return false;
            }
        }
    }
    true
}

fn criterion_half_distance_identity(limits: &Limits) -> bool {
    for code in small_fleet(limits) {
        let d = code.min_distance(limits).unwrap();
        let w = d.div_ceil(2);
        let table = CosetLeaderTable::build(&code, limits).unwrap();
        let oracle = LeaderOracle::Table(&table);
        let e1 = classify_weight(&code, w, SliceKind::E1, &oracle, limits).unwrap();
        let m1 = minimal_uncorrectable(&code, w, &oracle, limits).unwrap();
        let trial = TrialSet::all_nonzero(&code, limits).unwrap();
        let lh = lh_weight_slice(&trial.codewords, code.n(), w).unwrap();
        let e1v = sorted_values(e1.members().unwrap());
        let m1v = sorted_values(m1.members().unwrap());
        let mut lhv: Vec<u128> = lh.members().map(|(v, _)| v.numeric_value()).collect();
        lhv.sort_unstable();
        if e1v != m1v || e1v != lhv {
            eprintln!(
                "  identity fails at weight {w} of {}: |E1|={} |M1|={} |LH|={}",
                code.name(),
                e1v.len(),
                m1v.len(),
                lhv.len()
            );
            return false;
        }
    }
    true
}

fn criterion_exact_sandwich(limits: &Limits) -> bool {
    for n in [5usize, 6] {
        let code = codefactory::repetition(n).unwrap();
        let report =
            bound_report(&code, TrialSetProvenance::AllNonzero, true, None, limits).unwrap();
        let count = report.exhaustive_count.unwrap();
        let ok = report.lower == BigInt::from(10)
            && report.upper == BigUint::from(10u32)
            && count == 10
            && report.verdict == Some(SandwichVerdict::Pass);
        if !ok {
            eprintln!(
                "  repetition({n}): lower={} count={count} upper={}",
                report.lower, report.upper
            );
            return false;
        }
    }
    true
}

fn criterion_rm14_pipeline(limits: &Limits) -> bool {
    let code = codefactory::reed_muller(1, 4).unwrap();
    let report =
        bound_report(&code, TrialSetProvenance::AllNonzero, true, Some((1, 4)), limits).unwrap();
    let count = report.exhaustive_count.unwrap();
    let improved = report.improved_lower.clone().unwrap();
    let ok = report.d == 8
        && report.ad == 30
        && report.condition.lhs == BigUint::from(35u32)
        && report.condition.rhs == BigInt::from(29)
        && report.condition.flag
        && report.lower == BigInt::from(180)
        && report.upper == BigUint::from(1050u32)
        && improved == BigInt::from(600)
        && theorem3_lower(8, 30).unwrap() == BigInt::from(600)
        && (600..=1050).contains(&count);
    if !ok {
        eprintln!(
            "  got d={} A_8={} cond=({},{},{}) bounds=({},{}) improved={} count={}",
            report.d,
            report.ad,
            report.condition.lhs,
            report.condition.rhs,
            report.condition.flag,
            report.lower,
            report.upper,
            improved,
            count
        );
    }
    ok
}

fn criterion_rm_condition_grid(limits: &Limits) -> bool {
    let mut ok = true;
    for (r, m, expect) in [
        (1usize, 3usize, false),
        (1, 4, true),
        (1, 5, true),
        (1, 6, true),
        (2, 5, false),
        (2, 6, true),
    ] {
        let code = codefactory::reed_muller(r, m).unwrap();
        let d = 1usize << (m - r);
        let ad = code.weight_distribution(limits).unwrap()[d];
        if r == 2 && m == 6 && ad != 2604 {
            eprintln!("  RM(2,6): A_16 = {ad}, expected 2604");
            ok = false;
        }
        let cond = even_condition(d, ad).unwrap();
        if cond.flag != expect {
            eprintln!("  RM({r},{m}): flag {} expected {expect}", cond.flag);
            ok = false;
        }
    }
    ok
}

fn criterion_bch63(limits: &Limits) -> bool {
    let code = codefactory::bch(6, 15).unwrap();
    if code.n() != 63 || code.k() != 24 {
        eprintln!("  expected (63,24), got ({},{})", code.n(), code.k());
        return false;
    }
    let d = code.min_distance(limits).unwrap();
    if d != 15 {
        eprintln!("  minimum distance {d}, expected 15");
        return false;
    }
    let dist = code.weight_distribution(limits).unwrap();
    let cond = odd_condition(15, dist[15], dist[16]).unwrap();
    if !cond.flag {
        eprintln!(
            "  condition C(15,8) = {} > {} = A_15 + A_16 - 1 failed",
            cond.lhs, cond.rhs
        );
    }
    cond.flag
}

fn criterion_intersection_caps(limits: &Limits) -> bool {
    let codes = [
        codefactory::hamming(3).unwrap(),
        codefactory::bch(4, 7).unwrap(),
        codefactory::reed_muller(1, 4).unwrap(),
        codefactory::extend(&codefactory::hamming(3).unwrap()).unwrap(),
    ];
    let mut ok = true;
    for code in &codes {
        let maxima = pairwise_lh_intersection_check(code, limits).unwrap();
        if !maxima.within_caps() {
            eprintln!("  caps exceeded on {}: {maxima:?}", code.name());
            ok = false;
        }
    }
    ok
}

fn criterion_monotonicity(limits: &Limits) -> bool {
    let mut fleet = vec![
        codefactory::hamming(3).unwrap(),
        codefactory::reed_muller(1, 3).unwrap(),
        codefactory::extend(&codefactory::hamming(3).unwrap()).unwrap(),
    ];
    for n in 2..=8 {
        fleet.push(codefactory::repetition(n).unwrap());
    }
    fleet.extend(random_fleet(100));
    for code in &fleet {
        assert!(code.n() <= 14);
        let table = CosetLeaderTable::build(code, limits).unwrap();
        if let Some((x, y)) = verify_monotone(code, &table).unwrap() {
            eprintln!(
                "  {}: uncorrectable {x} covered by correctable {y}",
                code.name()
            );
            return false;
        }
    }
    true
}

fn criterion_generalized_bounds(limits: &Limits) -> bool {
    let codes = [
        codefactory::hamming(3).unwrap(),
        codefactory::bch(4, 7).unwrap(),
    ];
    let mut ok = true;
    for code in &codes {
        let d = code.min_distance(limits).unwrap();
        let dist = code.weight_distribution(limits).unwrap();
        let a = |w: usize| dist.get(w).copied().unwrap_or(0);
        let trial = TrialSet::all_nonzero(code, limits).unwrap();
        for i in d.div_ceil(2)..=code.n() / 2 {
            let report =
                theorem4_bounds(i, d, code.n(), a(2 * i - 2), a(2 * i - 1), a(2 * i)).unwrap();
            let lh = lh_weight_slice(&trial.codewords, code.n(), i).unwrap().count();
            let lh_big = BigUint::from(lh);
            if !(lh_big <= report.upper_as_proved
                && report.upper_as_proved <= report.upper_as_stated)
            {
                eprintln!(
                    "  {} i={i}: |LH_i|={lh} proved={} stated={}",
                    code.name(),
                    report.upper_as_proved,
                    report.upper_as_stated
                );
                ok = false;
            }
            if report.condition.flag && report.lower > BigInt::from(lh) {
                eprintln!(
                    "  {} i={i}: lower {} > |LH_i| = {lh}",
                    code.name(),
                    report.lower
                );
                ok = false;
            }
        }
    }
    ok
}

fn run_cli(args: &[&str], threads: &str) -> Option<Vec<u8>> {
    let out = Command::new(env!("CARGO_BIN_EXE_lhbound"))
        .args(args)
        .args(["--threads", threads])
        .output()
        .expect("spawn lhbound");
    if !out.status.success() {
        eprintln!(
            "  `lhbound {}` exited with {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        );
        return None;
    }
    Some(out.stdout)
}

fn criterion_determinism() -> bool {
    let commands: [&[&str]; 4] = [
        &["analyze", "--family", "hamming", "--m", "3", "--weights", "0..7", "--format", "json"],
        &["bounds", "--family", "rm", "--r", "1", "--rm-m", "4", "--ground-truth", "--format", "json"],
        &["table", "--r", "1", "--m", "3..5", "--format", "csv"],
        &["verify", "--family", "hamming", "--m", "3", "--suite", "all"],
    ];
    for args in commands {
        let runs = [
            run_cli(args, "1"),
            run_cli(args, "1"),
            run_cli(args, "4"),
            run_cli(args, "4"),
        ];
        let first = match &runs[0] {
            Some(bytes) => bytes,
            None => return false,
        };
        for run in &runs[1..] {
            match run {
                Some(bytes) if bytes == first => {}
                Some(_) => {
                    eprintln!("  output of `lhbound {}` not byte-identical", args.join(" "));
                    return false;
                }
                None => return false,
            }
        }
    }
    true
}

fn main() {
    let limits = Limits::default();
    let checks: [(&str, Box<dyn Fn() -> bool>); 10] = [
        (
            "larger-half closed form = oracle on the small fleet",
            Box::new(|| criterion_lh_equivalence(&limits)),
        ),
        (
            "half-distance identity M1 = LH = E1 on the small fleet",
            Box::new(|| criterion_half_distance_identity(&limits)),
        ),
        (
            "exact sandwich lower = count = upper = 10 on repetition(5)/(6)",
            Box::new(|| criterion_exact_sandwich(&limits)),
        ),
        (
            "RM(1,4) pipeline: condition (35,29,true), bounds (180,1050), improved 600",
            Box::new(|| criterion_rm14_pipeline(&limits)),
        ),
        (
            "even-d condition grid r=1,m=3..6 and r=2,m=5..6 with RM(2,6) A_16=2604",
            Box::new(|| criterion_rm_condition_grid(&limits)),
        ),
        (
            "BCH(63,24) designed distance 15 condition via 2^24 enumeration",
            Box::new(|| criterion_bch63(&limits)),
        ),
        (
            "pairwise larger-half intersection caps on the lemma fleet",
            Box::new(|| criterion_intersection_caps(&limits)),
        ),
        (
            "monotone structure exhaustive on all n<=14 codes incl. 100 random",
            Box::new(|| criterion_monotonicity(&limits)),
        ),
        (
            "generalized weight-i bounds sandwich on Hamming(7,4) and BCH(15,7)",
            Box::new(|| criterion_generalized_bounds(&limits)),
        ),
        (
            "byte-identical CLI output across reruns and thread counts",
            Box::new(criterion_determinism),
        ),
    ];
    let mut failures = 0;
    for (idx, (name, check)) in checks.iter().enumerate() {
        let ok = check();
        println!(
            "criterion {:02} {}: {}",
            idx + 1,
            name,
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failures += 1;
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criterion(s) failed");
        std::process::exit(1);
    }
}
