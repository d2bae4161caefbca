//! Self-check suite: twelve end-to-end criteria covering the distance
//! engines, the Thue-Morse bounds, the dichotomy classifier, the language
//! builder, the spectral constants, and the reproducibility guarantees.
//! Each criterion reports pass/fail plus a short evidence string.

use num_rational::Ratio;
use num_traits::ToPrimitive;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use rayon::ThreadPoolBuilder;
use std::time::Instant;

use crate::alphabet::{Alphabet, Word};
use crate::catalogue;
use crate::classify::{self, Verdict};
use crate::edit::{
    diameter, indel_distance, indel_distance_with, oracle, DiameterMode, Engine,
};
use crate::error::Result;
use crate::experiments::{rk_estimate, rk_recursion_check, RecursionVerdict, RkEstimate, RkSampling};
use crate::fixtures;
use crate::language::{self, FactorClosure};
use crate::perron;
use crate::render;
use crate::sampling::uniform_below;
use crate::thue_morse;

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    /// 1-based criterion number, stable across releases.
    pub index: u32,
    /// Short kebab-case label.
    pub name: &'static str,
    pub passed: bool,
    /// One-line evidence: counts, extremal values, or the failure reason.
    pub detail: String,
    pub elapsed_ms: u128,
}

/// Runs every criterion in order. Never panics; failures are reported in the
/// results. Total runtime is a few minutes on one core.
pub fn run_all() -> Vec<CriterionResult> {
    let criteria: Vec<(&'static str, fn() -> Result<(bool, String)>)> = vec![
        ("distance-worked-examples", c01_worked_examples),
        ("oracle-agreement", c02_oracle_agreement),
        ("engine-agreement", c03_engine_agreement),
        ("sqrt-floor-exact", c04_sqrt_floor),
        ("forbidden-patterns", c05_forbidden_patterns),
        ("shift-property", c06_shift_property),
        ("dichotomy-catalogue", c07_dichotomy),
        ("language-oracle-and-power", c08_language_oracle),
        ("perron-constants", c09_perron),
        ("diameter-fixture-replay", c10_fixture_replay),
        ("ratio-recursion", c11_ratio_recursion),
        ("thread-invariance", c12_thread_invariance),
    ];
    criteria
        .into_iter()
        .enumerate()
        .map(|(i, (name, f))| {
            let start = Instant::now();
            let (passed, detail) = match f() {
                Ok(pair) => pair,
                Err(e) => (false, format!("error: {e}")),
            };
            CriterionResult {
                index: i as u32 + 1,
                name,
                passed,
                detail,
                elapsed_ms: start.elapsed().as_millis(),
            }
        })
        .collect()
}

/// Renders one line per criterion plus a trailing summary line.
pub fn render_report(results: &[CriterionResult]) -> String {
    let mut out = String::new();
    for r in results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "criterion {:02} {:<28} {}  [{} ms] {}\n",
            r.index, r.name, status, r.elapsed_ms, r.detail
        ));
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        out.push_str(&format!("all {} criteria passed\n", results.len()));
    } else {
        out.push_str(&format!("{failed} of {} criteria FAILED\n", results.len()));
    }
    out
}

fn random_word(rng: &mut ChaCha8Rng, len: usize, alphabet_size: u64) -> Vec<u32> {
    (0..len)
        .map(|_| uniform_below(rng, alphabet_size) as u32)
        .collect()
}

/// Two pinned distances over the ten-digit alphabet and the binary alphabet.
fn c01_worked_examples() -> Result<(bool, String)> {
    let digits = Alphabet::numeric(10);
    let x = Word::parse("10002", &digits)?;
    let y = Word::parse("03004", &digits)?;
    let d1 = indel_distance(&x.0, &y.0);

    let bits = Alphabet::numeric(2);
    let a = Word::parse("000", &bits)?;
    let b = Word::parse("111", &bits)?;
    let d2 = indel_distance(&a.0, &b.0);

    let ok = d1.doubled() == 4 && d1.to_string() == "2" && d2.doubled() == 6;
    Ok((ok, format!("d(10002,03004)={d1} d(000,111)={d2}")))
}

/// 500 seeded random pairs with |x|+|y| <= 16 against the bidirectional
/// search oracle, alternating binary and ternary alphabets.
fn c02_oracle_agreement() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0002);
    let mut mismatches = 0u32;
    for i in 0..500 {
        let m = 2 + (i % 2) as u64;
        let lx = uniform_below(&mut rng, 17) as usize;
        let ly = uniform_below(&mut rng, 17 - lx as u64) as usize;
        let x = random_word(&mut rng, lx, m);
        let y = random_word(&mut rng, ly, m);
        let fast = indel_distance(&x, &y);
        let slow = oracle::indel_distance_oracle(&x, &y)?;
        if fast != slow {
            mismatches += 1;
        }
    }
    Ok((mismatches == 0, format!("500 pairs, {mismatches} mismatches")))
}

/// 10^4 seeded random pairs with lengths up to 256: the quadratic table, the
/// bit-parallel row, and the greedy band must agree pairwise.
fn c03_engine_agreement() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0003);
    let mut mismatches = 0u32;
    for i in 0..10_000 {
        let m = 2 + (i % 3) as u64;
        let lx = uniform_below(&mut rng, 257) as usize;
        let ly = uniform_below(&mut rng, 257) as usize;
        let x = random_word(&mut rng, lx, m);
        let y = random_word(&mut rng, ly, m);
        let dp = indel_distance_with(&x, &y, Engine::Dp);
        let bp = indel_distance_with(&x, &y, Engine::BitParallel);
        let band = indel_distance_with(&x, &y, Engine::Band);
        if dp != bp || dp != band {
            mismatches += 1;
        }
    }
    Ok((mismatches == 0, format!("10000 pairs, {mismatches} mismatches")))
}

/// Exact integer form of the square-root floor, 6(d+1)^2 >= n, for every
/// n <= 4096 and for the four powers 2^13..2^16.
fn c04_sqrt_floor() -> Result<(bool, String)> {
    let mut lengths: Vec<u64> = (1..=4096).collect();
    lengths.extend([1u64 << 13, 1 << 14, 1 << 15, 1 << 16]);
    let records = thue_morse::tm_growth(&lengths, 1.0)?;
    let mut violations = 0u64;
    let mut parity_faults = 0u64;
    for r in &records {
        let doubled = r.d_e.doubled();
        if doubled % 2 != 0 {
            parity_faults += 1;
            continue;
        }
        if !thue_morse::sqrt_bound_holds(r.n, doubled / 2) {
            violations += 1;
        }
    }
    let ok = violations == 0 && parity_faults == 0;
    Ok((
        ok,
        format!(
            "{} lengths, {violations} bound violations, {parity_faults} parity faults",
            records.len()
        ),
    ))
}

/// No alternating block of length five and no cube www with |w| <= 4 occurs
/// in the first 10^6 letters.
fn c05_forbidden_patterns() -> Result<(bool, String)> {
    let patterns = thue_morse::standard_forbidden_patterns(4);
    let hits = thue_morse::forbidden_pattern_scan(1_000_000, &patterns)?;
    let total: usize = hits.iter().map(Vec::len).sum();
    Ok((
        total == 0,
        format!("{} patterns over 10^6 letters, {total} occurrences", patterns.len()),
    ))
}

/// Complementary equal blocks force an offset of magnitude at least k/3:
/// exhaustive over starts below 1024 and block lengths up to 64.
fn c06_shift_property() -> Result<(bool, String)> {
    let violations = thue_morse::shift_property_check(1024, 64)?;
    Ok((
        violations.is_empty(),
        format!("{} violations (starts < 1024, blocks <= 64)", violations.len()),
    ))
}

/// Classifier verdicts on the catalogue, with the linear-regime members
/// achieving diameter n for all n <= 64 and their witnesses verified through
/// six iterate levels.
fn c07_dichotomy() -> Result<(bool, String)> {
    let tm = catalogue::thue_morse();
    let tm_verdict = classify::analyze(&tm)?.verdict;
    let mut ok = tm_verdict == Verdict::Sublinear;
    let mut notes = vec![format!("tm={tm_verdict:?}")];

    for sub in [catalogue::doubling(), catalogue::crossed_doubling()] {
        let analysis = classify::analyze(&sub)?;
        if analysis.verdict != Verdict::Full {
            ok = false;
            notes.push(format!("verdict={:?}", analysis.verdict));
            continue;
        }
        let sets = language::languages_up_to(&sub, 64)?;
        let mut full_diam = true;
        for set in &sets {
            let report = diameter(set, DiameterMode::Exact)?;
            if report.value.doubled() != 2 * set.n as u64 {
                full_diam = false;
            }
        }
        let witness = analysis.witness.expect("linear verdict carries a witness");
        let check = classify::verify_full_witness(&sub, witness, 6, 1 << 14)?;
        if !(full_diam && check.all_hold && check.checked == 6) {
            ok = false;
        }
        notes.push(format!(
            "full: diam=n up to 64 {}, witness levels {} all_hold {}",
            full_diam, check.checked, check.all_hold
        ));
    }
    Ok((ok, notes.join("; ")))
}

/// Closure-based language sets equal the brute-force scan of long iterates,
/// and the Fibonacci language agrees with its square's language.
fn c08_language_oracle() -> Result<(bool, String)> {
    let mut mismatches = 0u32;
    for sub in [catalogue::thue_morse(), catalogue::fibonacci()] {
        for n in 1..=12usize {
            let built = language::language(&sub, n)?;
            let scanned = language::language_oracle_scan(&sub, n, 16)?;
            if built.words != scanned {
                mismatches += 1;
            }
        }
    }
    let power_equal = crate::experiments::words_power_equality(&catalogue::fibonacci(), 10)?;
    let ok = mismatches == 0 && power_equal;
    Ok((
        ok,
        format!("24 length/scan checks, {mismatches} mismatches; fib power-language equal: {power_equal}"),
    ))
}

/// Spectral data of the Fibonacci substitution: positivity index 2 and
/// dominant eigenvalue (3+sqrt(5))/2 of the squared matrix, cross-checked
/// against the characteristic-polynomial root; non-uniform primitive
/// catalogue members all have eigenvalue at least 2.
fn c09_perron() -> Result<(bool, String)> {
    let fib = catalogue::fibonacci();
    let data = perron::perron(&fib)?;
    let expected = (3.0 + 5.0f64.sqrt()) / 2.0;
    let gap = (data.lambda - expected).abs();
    let root = perron::perron_char_poly_root(&fib)?;
    let root_gap = (data.lambda - root).abs();

    let mut min_lambda = f64::INFINITY;
    for sub in catalogue::all() {
        if sub.uniform_length().is_some() || !crate::graph::is_primitive(&sub) {
            continue;
        }
        min_lambda = min_lambda.min(perron::perron(&sub)?.lambda);
    }

    let ok = data.p == 2 && gap < 1e-9 && root_gap < 1e-9 && min_lambda >= 2.0;
    Ok((
        ok,
        format!(
            "p={} lambda={:.12} gap={gap:.2e} root_gap={root_gap:.2e} min_nonuniform_lambda={min_lambda:.6}",
            data.p, data.lambda
        ),
    ))
}

/// Recomputes the bundled power-of-two diameter rows from scratch and
/// requires byte equality, plus a strictly smaller diameter-to-length ratio
/// at 256 than at 8.
fn c10_fixture_replay() -> Result<(bool, String)> {
    let rows = fixtures::tm_diam_pow2()?;
    if rows.is_empty() {
        return Ok((false, "bundled fixture is empty".into()));
    }
    let tm = catalogue::thue_morse();
    let n_max = rows.iter().map(|r| r.n).max().unwrap() as usize;
    let closure = FactorClosure::compute(&tm, n_max)?;
    let mut replayed = 0u32;
    let mut diffs = 0u32;
    let mut ratios: Vec<(u64, Ratio<u64>)> = Vec::new();
    for row in &rows {
        let set = closure.set(row.n as usize);
        let report = diameter(&set, DiameterMode::Exact)?;
        let line = render::csv_diam_row(&report, tm.alphabet());
        replayed += 1;
        if line != row.raw {
            diffs += 1;
        }
        ratios.push((row.n, Ratio::new(report.value.doubled(), 2 * row.n)));
    }
    let ratio_of = |n: u64| ratios.iter().find(|(m, _)| *m == n).map(|(_, r)| *r);
    let shrinking = match (ratio_of(8), ratio_of(256)) {
        (Some(r8), Some(r256)) => r256 < r8,
        _ => false,
    };
    let ok = diffs == 0 && shrinking && replayed == rows.len() as u32;
    Ok((
        ok,
        format!("{replayed} rows replayed, {diffs} byte diffs, ratio(256)<ratio(8): {shrinking}"),
    ))
}

/// Exact window-2 ratio from the bundled exhaustive range, a seeded sampled
/// lower bound for window 3, and the decay recursion between them. The
/// verdict must be conclusive.
fn c11_ratio_recursion() -> Result<(bool, String)> {
    let rows = fixtures::tm_diam_range()?;
    if rows.is_empty() {
        return Ok((false, "bundled fixture is empty".into()));
    }
    let mut value = Ratio::new(0u64, 1u64);
    let mut n_at = 0u64;
    let mut doubled_at = 0u64;
    for row in &rows {
        let ratio = Ratio::new(row.doubled, 2 * row.n);
        if ratio > value {
            value = ratio;
            n_at = row.n;
            doubled_at = row.doubled;
        }
    }
    let est2 = RkEstimate {
        k: 2,
        base: 2.0,
        n_lo: 16,
        n_hi: 512,
        n_evaluated: rows.iter().map(|r| r.n).collect(),
        value,
        n_at_max: n_at,
        doubled_at_max: doubled_at,
        exact: true,
    };

    let tm = catalogue::thue_morse();
    let sampling = RkSampling {
        n_count: 6,
        pair_budget: 12,
        seed: 0xA11CE,
    };
    let est3 = rk_estimate(&tm, 3, 2.0, 0, &sampling)?;
    let report = rk_recursion_check(&tm, &est2, &est3)?;
    let conclusive = report.verdict != RecursionVerdict::Inconclusive;
    let consistent = report.verdict == RecursionVerdict::Consistent;
    let ok = conclusive && consistent && !est3.exact;
    let lhs = report.lhs.to_f64().unwrap_or(f64::NAN);
    let rhs = report.rhs.to_f64().unwrap_or(f64::NAN);
    Ok((
        ok,
        format!(
            "r2={} at n={n_at}; sampled r3 lower bound {:.6} <= {rhs:.6} (lhs {lhs:.6}), verdict {:?}",
            value, est3.value.to_f64().unwrap_or(f64::NAN), report.verdict
        ),
    ))
}

/// Sampled diameter and sampled ratio estimates render byte-identically
/// under thread pools of size 1 and 8.
fn c12_thread_invariance() -> Result<(bool, String)> {
    let tm = catalogue::thue_morse();
    let closure = FactorClosure::compute(&tm, 32)?;

    let run = |threads: usize| -> Result<(String, String, String)> {
        let pool = ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| crate::error::Error::Resource(e.to_string()))?;
        pool.install(|| {
            let set = closure.set(32);
            let report = diameter(
                &set,
                DiameterMode::Sample {
                    budget: 300,
                    seed: 99,
                },
            )?;
            let diam_csv = render::csv_diam(&report, tm.alphabet());
            let sampling = RkSampling {
                n_count: 4,
                pair_budget: 10,
                seed: 7,
            };
            let est = rk_estimate(&tm, 2, 2.0, 0, &sampling)?;
            let rows = crate::experiments::diam_curve(
                &tm,
                &[8, 16, 24],
                DiameterMode::Sample {
                    budget: 60,
                    seed: 13,
                },
            )?;
            Ok((diam_csv, render::csv_rk(&est), render::csv_curve(&rows)))
        })
    };

    let one = run(1)?;
    let eight = run(8)?;
    let ok = one == eight;
    Ok((
        ok,
        format!(
            "pool(1) vs pool(8) byte-equal: diam {}, ratio {}, curve {}",
            one.0 == eight.0,
            one.1 == eight.1,
            one.2 == eight.2
        ),
    ))
}
