//! Measurable growth quantities: windowed diameter ratios over geometric
//! length ranges, their one-step contraction inequality, factor-set
//! stability under powering, and diameter curves against a reference
//! envelope.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::One;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use rayon::prelude::*;

use crate::alphabet::{Letter, Word};
use crate::classify::{self, Verdict};
use crate::edit::{diameter, indel_distance, DiameterMode, DiameterReport};
use crate::error::{Error, Result};
use crate::graph;
use crate::language::FactorClosure;
use crate::matrix::{positivity_index, IncidenceMatrix};
use crate::sampling::uniform_below;
use crate::substitution::Substitution;

/// Largest word length the sampled estimator will touch.
const MAX_SAMPLED_N: u64 = 1 << 20;

/// Budget for the sampled estimator: how many lengths to probe across the
/// range, how many word pairs to score per length, and the seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RkSampling {
    pub n_count: usize,
    pub pair_budget: u64,
    pub seed: u64,
}

/// Largest observed diameter-to-length ratio over one geometric length range.
#[derive(Debug, Clone, PartialEq)]
pub struct RkEstimate {
    pub k: u32,
    pub base: f64,
    /// Inclusive lower end of the length range.
    pub n_lo: u64,
    /// Exclusive upper end of the length range.
    pub n_hi: u64,
    /// Lengths actually scored, ascending.
    pub n_evaluated: Vec<u64>,
    /// Max of (diameter at n) / n over the scored lengths.
    pub value: Ratio<u64>,
    /// Smallest length attaining the max.
    pub n_at_max: u64,
    /// Doubled diameter value observed at that length.
    pub doubled_at_max: u64,
    /// True when every length in range was scored with exact diameters.
    pub exact: bool,
}

/// Length range [ceil(base^(k^2)), ceil(base^((k+1)^2))) for the window index k.
pub fn rk_range(k: u32, base: f64) -> Result<(u64, u64)> {
    if k < 2 {
        return Err(Error::Input("window index k must be at least 2".into()));
    }
    if !(base >= 2.0) {
        return Err(Error::Input("base must be at least 2".into()));
    }
    let lo = base.powi((k * k) as i32).ceil();
    let hi = base.powi(((k + 1) * (k + 1)) as i32).ceil();
    if !lo.is_finite() || lo >= u64::MAX as f64 {
        return Err(Error::Resource("length range exceeds u64".into()));
    }
    let lo = lo as u64;
    let hi = if hi.is_finite() && hi < u64::MAX as f64 {
        hi as u64
    } else {
        u64::MAX
    };
    if lo >= hi {
        return Err(Error::Input("length range is empty".into()));
    }
    Ok((lo, hi))
}

/// Estimate the peak diameter ratio over the k-th length range: exact when
/// the whole range fits under `exact_n_cap`, otherwise a certified lower
/// bound from seeded sampling.
pub fn rk_estimate(
    sub: &Substitution,
    k: u32,
    base: f64,
    exact_n_cap: u64,
    sampling: &RkSampling,
) -> Result<RkEstimate> {
    let (n_lo, n_hi) = rk_range(k, base)?;
    if n_hi - 1 <= exact_n_cap {
        rk_exact(sub, k, base, n_lo, n_hi)
    } else {
        rk_sampled(sub, k, base, n_lo, n_hi, sampling)
    }
}

fn rk_exact(sub: &Substitution, k: u32, base: f64, n_lo: u64, n_hi: u64) -> Result<RkEstimate> {
    let closure = FactorClosure::compute(sub, (n_hi - 1) as usize)?;
    let mut best: Option<(Ratio<u64>, u64, u64)> = None;
    let mut evaluated = Vec::new();
    for n in n_lo..n_hi {
        let set = closure.set(n as usize);
        if set.words.is_empty() {
            return Err(Error::Domain(format!("no factors of length {n}")));
        }
        let report = diameter(&set, DiameterMode::Exact)?;
        evaluated.push(n);
        let ratio = Ratio::new(report.value.doubled(), 2 * n);
        let replace = match &best {
            None => true,
            Some((current, _, _)) => ratio > *current,
        };
        if replace {
            best = Some((ratio, n, report.value.doubled()));
        }
    }
    let (value, n_at_max, doubled_at_max) =
        best.ok_or_else(|| Error::Input("length range is empty".into()))?;
    Ok(RkEstimate {
        k,
        base,
        n_lo,
        n_hi,
        n_evaluated: evaluated,
        value,
        n_at_max,
        doubled_at_max,
        exact: true,
    })
}

// Geometric grid of `count` lengths across [lo, hi), endpoints included.
fn geometric_grid(lo: u64, hi: u64, count: usize) -> Vec<u64> {
    let top = hi - 1;
    let mut grid: Vec<u64> = (0..count)
        .map(|i| {
            if count <= 1 {
                return lo;
            }
            let t = i as f64 / (count - 1) as f64;
            let value = (lo as f64) * (top as f64 / lo as f64).powf(t);
            (value.round() as u64).clamp(lo, top)
        })
        .collect();
    grid.sort_unstable();
    grid.dedup();
    grid
}

// Letters whose iterates grow to length `n`, each materialized just past n.
fn growing_iterates(sub: &Substitution, n: u64) -> Result<Vec<Word>> {
    let mut iterates = Vec::new();
    for a in 0..sub.size() as Letter {
        let mut k = 0u32;
        let mut len = 1u128;
        while len < n as u128 && k < 64 {
            k += 1;
            len = sub.iterate_len(a, k);
        }
        if len >= n as u128 {
            iterates.push(sub.iterate(a, k, None)?);
        }
    }
    if iterates.is_empty() {
        return Err(Error::Domain(format!(
            "no letter grows to factors of length {n}"
        )));
    }
    Ok(iterates)
}

fn rk_sampled(
    sub: &Substitution,
    k: u32,
    base: f64,
    n_lo: u64,
    n_hi: u64,
    sampling: &RkSampling,
) -> Result<RkEstimate> {
    if sampling.n_count == 0 || sampling.pair_budget == 0 {
        return Err(Error::Input("sampling budget must be positive".into()));
    }
    if n_hi - 1 > MAX_SAMPLED_N {
        return Err(Error::Resource(format!(
            "sampled lengths up to {} exceed the cap of {MAX_SAMPLED_N}",
            n_hi - 1
        )));
    }
    let grid = geometric_grid(n_lo, n_hi, sampling.n_count);
    let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
    let mut best: Option<(Ratio<u64>, u64, u64)> = None;
    for &n in &grid {
        let iterates = growing_iterates(sub, n)?;
        // Windows of the iterates are factors, so every scored pair gives a
        // certified lower bound on the diameter at this length.
        let picks: Vec<(usize, usize, usize, usize)> = (0..sampling.pair_budget)
            .map(|_| {
                let mut window = || {
                    let which = uniform_below(&mut rng, iterates.len() as u64) as usize;
                    let span = iterates[which].0.len() - n as usize;
                    let start = uniform_below(&mut rng, span as u64 + 1) as usize;
                    (which, start)
                };
                let (wa, sa) = window();
                let (wb, sb) = window();
                (wa, sa, wb, sb)
            })
            .collect();
        let doubled = picks
            .par_iter()
            .map(|&(wa, sa, wb, sb)| {
                let x = &iterates[wa].0[sa..sa + n as usize];
                let y = &iterates[wb].0[sb..sb + n as usize];
                indel_distance(x, y).doubled()
            })
            .max()
            .unwrap_or(0);
        let ratio = Ratio::new(doubled, 2 * n);
        let replace = match &best {
            None => true,
            Some((current, _, _)) => ratio > *current,
        };
        if replace {
            best = Some((ratio, n, doubled));
        }
    }
    let (value, n_at_max, doubled_at_max) =
        best.ok_or_else(|| Error::Input("sampling grid is empty".into()))?;
    Ok(RkEstimate {
        k,
        base,
        n_lo,
        n_hi,
        n_evaluated: grid,
        value,
        n_at_max,
        doubled_at_max,
        exact: false,
    })
}

/// Outcome of the one-step contraction check between adjacent windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecursionVerdict {
    /// The observed values satisfy the inequality.
    Consistent,
    /// A certified lower bound at k+1 exceeds the bound built from an exact
    /// value at k; worth investigating.
    ViolationCandidate,
    /// The right side rests on a sampled (lower-bound) value, so exceeding
    /// it proves nothing.
    Inconclusive,
}

/// The compared sides of the contraction inequality, kept as exact rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct RecursionReport {
    pub k: u32,
    /// Value observed on the k+1 window.
    pub lhs: BigRational,
    /// 1/l^k + (1 - 1/(2 l^2)) times the value on the k window.
    pub rhs: BigRational,
    pub verdict: RecursionVerdict,
}

fn big_ratio(r: Ratio<u64>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Check value(k+1) <= 1/l^k + (1 - 1/(2 l^2)) * value(k) for a uniform
/// substitution with some letter occurring in every image.
pub fn rk_recursion_check(
    sub: &Substitution,
    est_k: &RkEstimate,
    est_k1: &RkEstimate,
) -> Result<RecursionReport> {
    let l = match sub.uniform_length() {
        Some(l) if l >= 2 => l as u64,
        _ => {
            return Err(Error::Domain(
                "contraction check needs a uniform substitution with blocks >= 2".into(),
            ))
        }
    };
    if !IncidenceMatrix::of(sub).has_positive_column() {
        return Err(Error::Domain(
            "contraction check needs a letter occurring in every image".into(),
        ));
    }
    if est_k1.k != est_k.k + 1 {
        return Err(Error::Input("estimates must cover adjacent windows".into()));
    }
    let k = est_k.k;
    let l_big = BigInt::from(l);
    let lhs = big_ratio(est_k1.value);
    let step = BigRational::new(BigInt::from(2 * l * l - 1), BigInt::from(2 * l * l));
    let rhs = BigRational::new(BigInt::one(), l_big.pow(k)) + step * big_ratio(est_k.value);
    let verdict = if lhs <= rhs {
        RecursionVerdict::Consistent
    } else if est_k.exact {
        RecursionVerdict::ViolationCandidate
    } else {
        RecursionVerdict::Inconclusive
    };
    Ok(RecursionReport {
        k,
        lhs,
        rhs,
        verdict,
    })
}

/// Geometric decay ceiling 3 * (1 - 1/(2 l^2))^k implied by the contraction.
pub fn decay_bound(l: u64, k: u32) -> BigRational {
    let step = BigRational::new(BigInt::from(2 * l * l - 1), BigInt::from(2 * l * l));
    BigRational::from(BigInt::from(3)) * step.pow(k as i32)
}

/// Do the factor sets of the substitution and of its positivity power agree
/// at every length up to `n_max`.
pub fn words_power_equality(sub: &Substitution, n_max: usize) -> Result<bool> {
    let p = positivity_index(sub)?;
    let powered = sub.power(p)?;
    let base_closure = FactorClosure::compute(sub, n_max)?;
    let power_closure = FactorClosure::compute(&powered, n_max)?;
    for n in 1..=n_max {
        if base_closure.set(n).words != power_closure.set(n).words {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row of the diameter growth curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveRow {
    pub n: u64,
    pub doubled_diam: u64,
    /// Diameter over length.
    pub ratio: f64,
    /// Reference curve n / sqrt(log2 n), scaled to match at the first row.
    pub envelope: f64,
    pub exact: bool,
}

/// Diameter per length with a sublinearity reference curve; rejects
/// substitutions whose diameter provably stays at the full length.
pub fn diam_curve(
    sub: &Substitution,
    n_list: &[u64],
    mode: DiameterMode,
) -> Result<Vec<CurveRow>> {
    let analysis = classify::analyze(sub)?;
    if analysis.verdict != Verdict::Sublinear && !graph::is_primitive(sub) {
        return Err(Error::Domain(
            "growth curve needs a sublinear verdict or a primitive substitution".into(),
        ));
    }
    let mut lengths: Vec<u64> = n_list.to_vec();
    lengths.sort_unstable();
    lengths.dedup();
    if lengths.is_empty() {
        return Err(Error::Input("length list is empty".into()));
    }
    if lengths[0] < 2 {
        return Err(Error::Input("curve lengths must be at least 2".into()));
    }
    let closure = FactorClosure::compute(sub, *lengths.last().expect("nonempty") as usize)?;
    let mut rows: Vec<CurveRow> = Vec::with_capacity(lengths.len());
    let mut scale = 1.0;
    for (idx, &n) in lengths.iter().enumerate() {
        let set = closure.set(n as usize);
        if set.words.is_empty() {
            return Err(Error::Domain(format!("no factors of length {n}")));
        }
        let report: DiameterReport = diameter(&set, mode)?;
        let diam = report.value.as_f64();
        let reference = n as f64 / (n as f64).log2().sqrt();
        if idx == 0 {
            scale = diam / reference;
        }
        rows.push(CurveRow {
            n,
            doubled_diam: report.value.doubled(),
            ratio: diam / n as f64,
            envelope: scale * reference,
            exact: report.exact,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;
    use crate::perron;

    #[test]
    fn ranges_follow_the_ceiling_convention() {
        assert_eq!(rk_range(2, 2.0).unwrap(), (16, 512));
        assert_eq!(rk_range(3, 2.0).unwrap(), (512, 65536));
        let lambda = perron::perron(&catalogue::fibonacci()).unwrap().lambda;
        let (lo, hi) = rk_range(2, lambda).unwrap();
        assert_eq!((lo, hi), (47, 5778));
    }

    #[test]
    fn bad_range_parameters_are_rejected() {
        assert!(rk_range(1, 2.0).is_err());
        assert!(rk_range(2, 1.5).is_err());
    }

    #[test]
    fn exact_value_for_split_components_is_one() {
        let sub = catalogue::doubling();
        let sampling = RkSampling {
            n_count: 4,
            pair_budget: 8,
            seed: 1,
        };
        let est = rk_estimate(&sub, 2, 2.0, 512, &sampling).unwrap();
        assert!(est.exact);
        assert_eq!(est.value, Ratio::new(1, 1));
        assert_eq!(est.n_at_max, 16, "ties resolve to the smallest length");
        assert_eq!(est.n_evaluated.len(), 496);
    }

    #[test]
    fn exact_value_for_the_absorbing_example_is_one_sixteenth() {
        let sub = catalogue::absorbing();
        let sampling = RkSampling {
            n_count: 4,
            pair_budget: 8,
            seed: 1,
        };
        let est = rk_estimate(&sub, 2, 2.0, 512, &sampling).unwrap();
        assert!(est.exact);
        assert_eq!(est.value, Ratio::new(1, 16));
        assert_eq!(est.n_at_max, 16);
        assert_eq!(est.doubled_at_max, 2);
    }

    #[test]
    fn sampled_estimates_are_deterministic_and_bounded() {
        let sub = catalogue::thue_morse();
        let sampling = RkSampling {
            n_count: 3,
            pair_budget: 6,
            seed: 11,
        };
        let a = rk_estimate(&sub, 2, 2.0, 0, &sampling).unwrap();
        let b = rk_estimate(&sub, 2, 2.0, 0, &sampling).unwrap();
        assert_eq!(a, b);
        assert!(!a.exact);
        assert!(a.value <= Ratio::new(1, 1));
        assert!(a.value > Ratio::new(0, 1));
        assert_eq!(a.n_evaluated.first(), Some(&16));
        assert_eq!(a.n_evaluated.last(), Some(&511));
    }

    #[test]
    fn sampled_estimates_lower_bound_the_exact_value() {
        let sub = catalogue::doubling();
        let sampling = RkSampling {
            n_count: 3,
            pair_budget: 10,
            seed: 5,
        };
        let sampled = rk_estimate(&sub, 2, 2.0, 0, &sampling).unwrap();
        assert!(sampled.value <= Ratio::new(1, 1));
    }

    #[test]
    fn recursion_check_is_consistent_for_the_absorbing_example() {
        let sub = catalogue::absorbing();
        let sampling = RkSampling {
            n_count: 4,
            pair_budget: 8,
            seed: 3,
        };
        let est2 = rk_estimate(&sub, 2, 2.0, 512, &sampling).unwrap();
        let est3 = rk_estimate(&sub, 3, 2.0, 0, &sampling).unwrap();
        let report = rk_recursion_check(&sub, &est2, &est3).unwrap();
        assert_eq!(report.verdict, RecursionVerdict::Consistent);
        assert_eq!(
            report.rhs,
            BigRational::new(BigInt::from(1), BigInt::from(4))
                + BigRational::new(BigInt::from(7), BigInt::from(8))
                    * BigRational::new(BigInt::from(1), BigInt::from(16))
        );
    }

    #[test]
    fn recursion_check_rejects_unsuitable_substitutions() {
        let est = RkEstimate {
            k: 2,
            base: 2.0,
            n_lo: 16,
            n_hi: 512,
            n_evaluated: vec![16],
            value: Ratio::new(1, 2),
            n_at_max: 16,
            doubled_at_max: 16,
            exact: true,
        };
        let mut est3 = est.clone();
        est3.k = 3;
        assert!(rk_recursion_check(&catalogue::fibonacci(), &est, &est3).is_err());
        assert!(rk_recursion_check(&catalogue::doubling(), &est, &est3).is_err());
        assert!(rk_recursion_check(&catalogue::thue_morse(), &est, &est).is_err());
    }

    #[test]
    fn violations_need_an_exact_base_estimate() {
        let sub = catalogue::thue_morse();
        let mut est2 = RkEstimate {
            k: 2,
            base: 2.0,
            n_lo: 16,
            n_hi: 512,
            n_evaluated: vec![16],
            value: Ratio::new(0, 1),
            n_at_max: 16,
            doubled_at_max: 0,
            exact: false,
        };
        let est3 = RkEstimate {
            k: 3,
            base: 2.0,
            n_lo: 512,
            n_hi: 65536,
            n_evaluated: vec![512],
            value: Ratio::new(1, 1),
            n_at_max: 512,
            doubled_at_max: 1024,
            exact: false,
        };
        let report = rk_recursion_check(&sub, &est2, &est3).unwrap();
        assert_eq!(report.verdict, RecursionVerdict::Inconclusive);
        est2.exact = true;
        let report = rk_recursion_check(&sub, &est2, &est3).unwrap();
        assert_eq!(report.verdict, RecursionVerdict::ViolationCandidate);
    }

    #[test]
    fn decay_bound_at_small_k() {
        assert_eq!(
            decay_bound(2, 3),
            BigRational::new(BigInt::from(3 * 343), BigInt::from(512))
        );
    }

    #[test]
    fn factor_sets_are_stable_under_powering() {
        assert!(words_power_equality(&catalogue::fibonacci(), 10).unwrap());
        assert!(words_power_equality(&catalogue::thue_morse(), 12).unwrap());
        assert!(words_power_equality(&catalogue::doubling(), 8).is_err());
    }

    #[test]
    fn curves_decay_for_the_thue_morse_substitution() {
        let sub = catalogue::thue_morse();
        let rows = diam_curve(&sub, &[8, 16, 32, 64], DiameterMode::Exact).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.ratio < 1.0));
        assert!(rows.last().unwrap().ratio < rows[0].ratio);
        assert!((rows[0].envelope - rows[0].doubled_diam as f64 / 2.0).abs() < 1e-9);
    }

    #[test]
    fn curves_reject_full_diameter_substitutions() {
        assert!(diam_curve(&catalogue::doubling(), &[8, 16], DiameterMode::Exact).is_err());
        assert!(diam_curve(&catalogue::crossed_doubling(), &[8, 16], DiameterMode::Exact).is_err());
    }

    #[test]
    fn curves_allow_primitive_non_uniform_substitutions() {
        let rows = diam_curve(&catalogue::fibonacci(), &[8, 16, 32], DiameterMode::Exact).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.exact));
    }

    #[test]
    fn eq_13_style_pair_bound_against_an_exact_estimate() {
        // Every sampled pair ratio at a length inside the window is at most
        // the exact window maximum, by definition of the maximum.
        let sub = catalogue::absorbing();
        let sampling = RkSampling {
            n_count: 4,
            pair_budget: 8,
            seed: 7,
        };
        let exact = rk_estimate(&sub, 2, 2.0, 512, &sampling).unwrap();
        let sampled = rk_estimate(&sub, 2, 2.0, 0, &sampling).unwrap();
        assert!(sampled.value <= exact.value);
    }
}
