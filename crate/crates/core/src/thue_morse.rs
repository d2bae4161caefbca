//! The Thue-Morse word: prefix generation by recurrence, pattern scans,
//! shift checks, and the growth of the distance between a prefix and its
//! own complement.

use rayon::prelude::*;

use crate::alphabet::{Letter, Word};
use crate::edit::{indel_distance, HalfDistance};
use crate::error::{Error, Result};

/// Largest prefix the generator will materialize (letters).
const MAX_PREFIX: usize = 1 << 27;

/// A prefix of the Thue-Morse word over {0, 1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmPrefix {
    pub bits: Word,
}

impl TmPrefix {
    pub fn len(&self) -> usize {
        self.bits.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.0.is_empty()
    }
}

/// First `n` letters, built from the even/odd index recurrence.
pub fn tm_prefix(n: usize) -> Result<TmPrefix> {
    if n == 0 {
        return Err(Error::Input("prefix length must be positive".into()));
    }
    if n > MAX_PREFIX {
        return Err(Error::Resource(format!(
            "prefix of {n} letters exceeds the cap of {MAX_PREFIX}"
        )));
    }
    let mut bits: Vec<Letter> = Vec::with_capacity(n);
    bits.push(0);
    for i in 1..n {
        let parent = bits[i / 2];
        bits.push(if i % 2 == 0 { parent } else { 1 - parent });
    }
    Ok(TmPrefix { bits: Word(bits) })
}

/// Letterwise complement of a binary word.
pub fn complement(w: &[Letter]) -> Vec<Letter> {
    w.iter().map(|&c| 1 - c).collect()
}

/// Occurrence positions of each pattern in the length-n prefix.
pub fn forbidden_pattern_scan(n: usize, patterns: &[Word]) -> Result<Vec<Vec<usize>>> {
    if patterns.is_empty() {
        return Err(Error::Input("pattern list is empty".into()));
    }
    let prefix = tm_prefix(n)?;
    let bits = &prefix.bits.0;
    Ok(patterns
        .par_iter()
        .map(|pattern| {
            let p = &pattern.0;
            if p.is_empty() || p.len() > bits.len() {
                return Vec::new();
            }
            (0..=bits.len() - p.len())
                .filter(|&s| &bits[s..s + p.len()] == p.as_slice())
                .collect()
        })
        .collect())
}

/// The scan list asserted empty by the test suite: both alternating
/// length-5 words plus every cube of a word of length at most `w_len_max`.
pub fn standard_forbidden_patterns(w_len_max: usize) -> Vec<Word> {
    let mut patterns = vec![Word(vec![0, 1, 0, 1, 0]), Word(vec![1, 0, 1, 0, 1])];
    for len in 1..=w_len_max {
        for code in 0..(1u32 << len) {
            let w: Vec<Letter> = (0..len).map(|i| (code >> (len - 1 - i)) & 1).collect();
            patterns.push(Word([w.as_slice(), &w, &w].concat()));
        }
    }
    patterns
}

/// A window pair matching its shifted complement closer than allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftViolation {
    pub a: usize,
    pub b: usize,
    pub k: usize,
    pub shift: i64,
}

/// Search for windows x_[a, a+k) equal to the complement of x_[b, b+k)
/// with 0 < |a-b| < k/3; the returned list is expected to be empty.
pub fn shift_property_check(a_max: usize, k_max: usize) -> Result<Vec<ShiftViolation>> {
    let prefix = tm_prefix(a_max + 2 * k_max)?;
    Ok(shift_violations_in(&prefix.bits.0, a_max, k_max))
}

// Only shifts with 3|s| < k can violate the bound, so only those are
// scanned; matches at larger shifts are allowed and not reported.
fn shift_violations_in(bits: &[Letter], a_max: usize, k_max: usize) -> Vec<ShiftViolation> {
    let mut violations = Vec::new();
    for a in 0..a_max {
        for k in 1..=k_max {
            if a + k > bits.len() {
                break;
            }
            let s_cap = (k as i64 - 1) / 3;
            for s in -s_cap..=s_cap {
                if s == 0 {
                    continue;
                }
                let b = a as i64 + s;
                if b < 0 || (b as usize + k) > bits.len() {
                    continue;
                }
                let b = b as usize;
                let matches = (0..k).all(|i| bits[a + i] == 1 - bits[b + i]);
                if matches {
                    violations.push(ShiftViolation { a, b, k, shift: s });
                }
            }
        }
    }
    violations
}

/// One row of the prefix-versus-complement growth table.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRecord {
    pub n: u64,
    /// Distance between x_[0,n) and its complement.
    pub d_e: HalfDistance,
    /// Letters that survive in a common subsequence: n minus the distance.
    pub bb: u64,
    /// Square-root floor the distance must dominate.
    pub lower: f64,
    /// Reference envelope with a caller-chosen constant, not a bound.
    pub blikstad_upper: f64,
}

/// Exact integer form of the square-root floor: 6(d+1)^2 >= n.
pub fn sqrt_bound_holds(n: u64, d_e: u64) -> bool {
    let d = d_e as u128 + 1;
    6 * d * d >= n as u128
}

/// Reference curve c * n * sqrt(log2 n) / 2^(beta * sqrt(log2 n)).
pub fn blikstad_envelope(n: u64, c: f64) -> f64 {
    let log = (n as f64).log2();
    c * n as f64 * log.sqrt() / 2f64.powf(blikstad_beta() * log.sqrt())
}

/// Exponent constant sqrt(2 * log2 3) of the reference envelope.
pub fn blikstad_beta() -> f64 {
    (2.0 * 3f64.log2()).sqrt()
}

/// Growth rows for each length, sorted ascending; distances are exact.
pub fn tm_growth(n_list: &[u64], envelope_c: f64) -> Result<Vec<GrowthRecord>> {
    let mut lengths: Vec<u64> = n_list.to_vec();
    lengths.sort_unstable();
    lengths.dedup();
    if lengths.is_empty() {
        return Err(Error::Input("length list is empty".into()));
    }
    let max_n = *lengths.last().expect("nonempty") as usize;
    let prefix = tm_prefix(max_n)?;
    let bits = &prefix.bits.0;
    Ok(lengths
        .par_iter()
        .map(|&n| {
            let x = &bits[..n as usize];
            let y = complement(x);
            let d_e = indel_distance(x, &y);
            debug_assert!(d_e.is_integral());
            GrowthRecord {
                n,
                d_e,
                bb: n - d_e.doubled() / 2,
                lower: (n as f64 / 6.0).sqrt() - 1.0,
                blikstad_upper: blikstad_envelope(n, envelope_c),
            }
        })
        .collect())
}

/// Least-squares slopes of log2(distance) against log2(n), fitted
/// separately over lengths n = 2^k and n = 3*2^k.
pub fn growth_exponent_estimate(points: &[(u64, f64)]) -> Result<(f64, f64)> {
    if points.len() < 8 {
        return Err(Error::Input("need at least 8 growth points".into()));
    }
    let min_n = points.iter().map(|p| p.0).min().expect("nonempty");
    let max_n = points.iter().map(|p| p.0).max().expect("nonempty");
    if min_n == 0 || max_n / min_n < 8 {
        return Err(Error::Input("growth points must span 3 doublings".into()));
    }
    let upper: Vec<(u64, f64)> = points
        .iter()
        .copied()
        .filter(|p| p.0.is_power_of_two())
        .collect();
    let lower: Vec<(u64, f64)> = points
        .iter()
        .copied()
        .filter(|p| p.0 % 3 == 0 && (p.0 / 3).is_power_of_two())
        .collect();
    Ok((log_log_slope(&upper)?, log_log_slope(&lower)?))
}

/// Slope helper for growth records, pairing each n with its distance.
pub fn growth_exponent_from_records(records: &[GrowthRecord]) -> Result<(f64, f64)> {
    let points: Vec<(u64, f64)> = records.iter().map(|r| (r.n, r.d_e.as_f64())).collect();
    growth_exponent_estimate(&points)
}

fn log_log_slope(points: &[(u64, f64)]) -> Result<f64> {
    if points.len() < 2 {
        return Err(Error::Input(
            "each envelope family needs at least 2 points".into(),
        ));
    }
    if points.iter().any(|p| p.1 <= 0.0) {
        return Err(Error::Input("distances must be positive to fit".into()));
    }
    let m = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(n, d) in points {
        let x = (n as f64).log2();
        let y = d.log2();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    Ok((m * sxy - sx * sy) / (m * sxx - sx * sx))
}
