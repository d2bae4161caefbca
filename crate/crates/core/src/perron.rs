//! Perron data of a primitive substitution: the positivity index p, the
//! Perron eigenvalue λ of `M^p` via power iteration, and an empirical window
//! of the ratios `Len(σ^{pn}(a)) / λ^n` witnessing two-sided geometric
//! growth.

use crate::error::{Error, Result};
use crate::matrix::{positivity_index, IncidenceMatrix};
use crate::substitution::Substitution;

/// Relative tolerance for power-iteration convergence.
const POWER_TOL: f64 = 1e-12;
const POWER_MAX_ITERS: usize = 100_000;

/// Default number of iterate levels sampled for the empirical constants.
pub const DEFAULT_WINDOW: u32 = 20;

#[derive(Debug, Clone)]
pub struct PerronData {
    /// Minimal p with `M^p` entrywise positive.
    pub p: u32,
    /// Perron eigenvalue of `M^p`.
    pub lambda: f64,
    /// Perron eigenvector of `M^p`, normalized to sum 1.
    pub eigvec: Vec<f64>,
    /// Observed min of `Len(τ^n(a)) / λ^n` over the window, τ = σ^p.
    pub empirical_c1: f64,
    /// Observed max of the same ratios.
    pub empirical_c2: f64,
}

/// Computes [`PerronData`] for a primitive substitution (domain error
/// otherwise). Deterministic: all-ones start vector, fixed tolerance.
pub fn perron(sub: &Substitution) -> Result<PerronData> {
    perron_with_window(sub, DEFAULT_WINDOW)
}

pub fn perron_with_window(sub: &Substitution, window: u32) -> Result<PerronData> {
    let p = positivity_index(sub)?;
    let n = sub.size();
    let mp = IncidenceMatrix::of(sub).pow(p);
    let a: Vec<f64> = (0..n * n)
        .map(|i| mp.get(i / n, i % n) as f64)
        .collect();

    let (lambda, eigvec) = power_iteration(&a, n)?;

    // Ratios Len(τ^k(a)) / λ^k for k in 1..=window; the length vector obeys
    // len_{k+1} = M^p · len_k.
    let mut lengths: Vec<f64> = vec![1.0; n];
    let mut c1 = f64::INFINITY;
    let mut c2 = f64::NEG_INFINITY;
    let mut scale = 1.0f64;
    for _ in 1..=window {
        lengths = mat_vec(&a, n, &lengths);
        scale *= lambda;
        for &len in &lengths {
            let ratio = len / scale;
            c1 = c1.min(ratio);
            c2 = c2.max(ratio);
        }
    }

    Ok(PerronData {
        p,
        lambda,
        eigvec,
        empirical_c1: c1,
        empirical_c2: c2,
    })
}

fn mat_vec(a: &[f64], n: usize, v: &[f64]) -> Vec<f64> {
    (0..n)
        .map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum())
        .collect()
}

fn power_iteration(a: &[f64], n: usize) -> Result<(f64, Vec<f64>)> {
    let mut v = vec![1.0f64; n];
    let mut lambda = 0.0f64;
    for _ in 0..POWER_MAX_ITERS {
        let w = mat_vec(a, n, &v);
        let norm: f64 = w.iter().sum();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::Domain("power iteration degenerated".into()));
        }
        let next_lambda = norm / v.iter().sum::<f64>();
        let next: Vec<f64> = w.iter().map(|x| x / norm).collect();
        let done = (next_lambda - lambda).abs() <= POWER_TOL * next_lambda.abs();
        v = next;
        lambda = next_lambda;
        if done {
            return Ok((lambda, v));
        }
    }
    Err(Error::Domain("power iteration failed to converge".into()))
}

/// Independent cross-check for alphabets of at most 4 letters: the dominant
/// root of det(xI - M^p), with exact integer coefficients
/// (Faddeev–LeVerrier) and sign-change bisection.
pub fn perron_char_poly_root(sub: &Substitution) -> Result<f64> {
    let p = positivity_index(sub)?;
    let n = sub.size();
    if n > 4 {
        return Err(Error::Input(
            "characteristic-polynomial cross-check supports |A| <= 4".into(),
        ));
    }
    let mp = IncidenceMatrix::of(sub).pow(p);
    let a: Vec<i128> = (0..n * n)
        .map(|i| mp.get(i / n, i % n) as i128)
        .collect();

    // Faddeev–LeVerrier: char poly x^n + c[1] x^{n-1} + ... + c[n].
    let mut coeffs = vec![0i128; n + 1];
    coeffs[0] = 1;
    let mut m_aux = vec![0i128; n * n];
    for k in 1..=n {
        // m_aux := a * (m_aux + c_{k-1} I)
        let mut shifted = m_aux.clone();
        for i in 0..n {
            shifted[i * n + i] += coeffs[k - 1];
        }
        let mut prod = vec![0i128; n * n];
        for i in 0..n {
            for l in 0..n {
                let x = a[i * n + l];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    prod[i * n + j] += x * shifted[l * n + j];
                }
            }
        }
        m_aux = prod;
        let trace: i128 = (0..n).map(|i| m_aux[i * n + i]).sum();
        coeffs[k] = -trace / k as i128;
    }

    let eval = |x: f64| -> f64 {
        coeffs.iter().fold(0.0, |acc, &c| acc * x + c as f64)
    };

    // The Perron root is the largest real root; p(x) > 0 beyond it. Scan down
    // from above the max row sum for the first sign change, then bisect.
    let hi0 = (0..n).map(|i| mp.row_sum(i)).max().unwrap() as f64 + 1.0;
    let steps = 1 << 12;
    let mut hi = hi0;
    let mut lo = None;
    for s in 1..=steps {
        let x = hi0 * (1.0 - s as f64 / steps as f64);
        if eval(x) < 0.0 {
            lo = Some(x);
            break;
        }
        hi = x;
    }
    let mut lo = lo.ok_or_else(|| Error::Domain("no sign change for Perron root".into()))?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if eval(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Letter;
    use crate::catalogue;

    #[test]
    fn fibonacci_perron_data() {
        let data = perron(&catalogue::fibonacci()).unwrap();
        assert_eq!(data.p, 2);
        // Dominant root of x^2 - 3x + 1.
        let expected = (3.0 + 5.0f64.sqrt()) / 2.0;
        assert!((data.lambda - expected).abs() <= 1e-9, "λ = {}", data.lambda);
        let vec_sum: f64 = data.eigvec.iter().sum();
        assert!((vec_sum - 1.0).abs() <= 1e-12);
        assert!(data.eigvec.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn thue_morse_perron_data() {
        let data = perron(&catalogue::thue_morse()).unwrap();
        assert_eq!(data.p, 1);
        assert!((data.lambda - 2.0).abs() <= 1e-12);
        assert!((data.eigvec[0] - 0.5).abs() <= 1e-9);
    }

    #[test]
    fn char_poly_root_agrees_with_power_iteration() {
        for sub in [catalogue::thue_morse(), catalogue::fibonacci()] {
            let by_power = perron(&sub).unwrap().lambda;
            let by_poly = perron_char_poly_root(&sub).unwrap();
            assert!(
                (by_power - by_poly).abs() <= 1e-9,
                "power {by_power} vs poly {by_poly}"
            );
        }
    }

    #[test]
    fn non_primitive_inputs_are_domain_errors() {
        assert!(perron(&catalogue::doubling()).is_err());
        assert!(perron(&catalogue::absorbing()).is_err());
    }

    #[test]
    fn nonuniform_primitive_lambda_at_least_two() {
        // Eigenvalue bound for the non-uniform primitive catalogue member.
        let data = perron(&catalogue::fibonacci()).unwrap();
        assert!(data.lambda >= 2.0);
    }

    #[test]
    fn growth_ratio_window_is_stable() {
        // Len(τ^n(a))/λ^n stays inside a narrow band, and the band computed
        // from levels 11..=20 agrees with levels 5..=14 within 10%.
        for sub in [catalogue::thue_morse(), catalogue::fibonacci()] {
            let d = perron_with_window(&sub, 20).unwrap();
            assert!(d.empirical_c1 > 0.0);
            assert!(d.empirical_c2 >= d.empirical_c1);
            assert!(d.empirical_c2 / d.empirical_c1 < 4.0);

            let early = window_ratios(&sub, 5, 14);
            let late = window_ratios(&sub, 11, 20);
            assert!((late.0 / early.0 - 1.0).abs() < 0.10);
            assert!((late.1 / early.1 - 1.0).abs() < 0.10);
        }
    }

    fn window_ratios(sub: &Substitution, from: u32, to: u32) -> (f64, f64) {
        let d = perron(sub).unwrap();
        let tau = sub.power(d.p).unwrap();
        let mut c1 = f64::INFINITY;
        let mut c2 = f64::NEG_INFINITY;
        for k in from..=to {
            for a in 0..sub.size() {
                let len = tau.iterate_len(a as Letter, k) as f64;
                let ratio = len / d.lambda.powi(k as i32);
                c1 = c1.min(ratio);
                c2 = c2.max(ratio);
            }
        }
        (c1, c2)
    }
}
