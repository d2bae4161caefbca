//! Growth classification of uniform substitutions from letter-flow structure.
//!
//! For a length-uniform substitution the diameter of the factor sets either
//! stays a vanishing fraction of the length or is the full length for every
//! length; which side holds is readable off the letter graph. A single
//! closed, aperiodic component forces every long iterate to share most of
//! its letters with every other, while two closed components, or one closed
//! component of period p, yield a pair of letters whose iterated images use
//! disjoint alphabets, so matched-length factors at maximal distance exist
//! at every scale.

use num_rational::Ratio;

use crate::alphabet::{Letter, Word};
use crate::edit::indel_distance;
use crate::error::{Error, Result};
use crate::graph::{self, SubstitutionGraph};
use crate::substitution::Substitution;

/// Growth class of the factor-set diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Diameter over length tends to zero.
    Sublinear,
    /// Diameter equals the factor length, at every length.
    Full,
    /// Classification needs a length-uniform substitution with blocks >= 2.
    NotApplicable,
}

/// Letter pair whose images under every multiple of `power` are disjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FullWitness {
    pub a: Letter,
    pub b: Letter,
    pub power: u32,
}

/// Letter-graph structure together with the resulting verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccAnalysis {
    /// Strongly connected components, sorted by smallest member.
    pub components: Vec<Vec<Letter>>,
    /// Per component: do all its edges stay inside it.
    pub essential: Vec<bool>,
    /// Per component: gcd of its closed-walk lengths (0 when none).
    pub periods: Vec<u64>,
    /// Per letter: does it belong to an essential component.
    pub essential_letters: Vec<bool>,
    pub verdict: Verdict,
    pub witness: Option<FullWitness>,
}

/// Classify a substitution by the component structure of its letter graph.
pub fn analyze(sub: &Substitution) -> Result<SccAnalysis> {
    let graph = SubstitutionGraph::of(sub);
    let part = graph::scc(&graph);
    let essential = graph::essential_flags(&graph, &part);
    let periods = graph::periods(&graph, &part);
    let mut essential_letters = vec![false; sub.size()];
    for (idx, comp) in part.components.iter().enumerate() {
        if essential[idx] {
            for &c in comp {
                essential_letters[c as usize] = true;
            }
        }
    }

    let applicable = matches!(sub.uniform_length(), Some(l) if l >= 2);
    let essential_idx: Vec<usize> = (0..part.components.len())
        .filter(|&i| essential[i])
        .collect();

    let (verdict, witness) = if !applicable {
        (Verdict::NotApplicable, None)
    } else if essential_idx.len() >= 2 {
        // Two closed components never exchange letters, so their smallest
        // members already witness disjoint images at every power.
        let a = part.components[essential_idx[0]][0];
        let b = part.components[essential_idx[1]][0];
        (Verdict::Full, Some(FullWitness { a, b, power: 1 }))
    } else {
        let idx = essential_idx[0];
        let p = periods[idx];
        if p <= 1 {
            (Verdict::Sublinear, None)
        } else {
            let power = u32::try_from(p)
                .map_err(|_| Error::Domain(format!("component period {p} is out of range")))?;
            let (a, b) = split_pair(sub, &part.components[idx], power)?;
            (Verdict::Full, Some(FullWitness { a, b, power }))
        }
    };

    Ok(SccAnalysis {
        components: part.components,
        essential,
        periods,
        essential_letters,
        verdict,
        witness,
    })
}

// Inside a closed component of period p, the p-th power substitution keeps
// each cyclic class to itself; two letters from distinct classes therefore
// never mix. Pick the two smallest class representatives.
fn split_pair(sub: &Substitution, comp: &[Letter], power: u32) -> Result<(Letter, Letter)> {
    let powered = sub.power(power)?;
    let graph = SubstitutionGraph::of(&powered);
    let part = graph::scc(&graph);
    let mut first: Option<(usize, Letter)> = None;
    for &c in comp {
        let class = part.comp_of[c as usize];
        match first {
            None => first = Some((class, c)),
            Some((seen, a)) if seen != class => return Ok((a.min(c), a.max(c))),
            Some(_) => {}
        }
    }
    Err(Error::Domain(
        "periodic component did not split under the powered substitution".into(),
    ))
}

/// How a witness pair held up under direct distance checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessReport {
    /// Number of powers tested before the length cap.
    pub checked: u32,
    /// Longest iterate compared.
    pub max_length: u64,
    /// True when every tested power reached distance equal to length.
    pub all_hold: bool,
}

/// Check `d(sigma^(k*power)(a), sigma^(k*power)(b)) = length` for k up to
/// `k_max`, skipping powers whose iterates would exceed `max_letters`.
pub fn verify_full_witness(
    sub: &Substitution,
    witness: FullWitness,
    k_max: u32,
    max_letters: usize,
) -> Result<WitnessReport> {
    let mut report = WitnessReport {
        checked: 0,
        max_length: 0,
        all_hold: true,
    };
    for k in 1..=k_max {
        let power = k * witness.power;
        if sub.iterate_len(witness.a, power) > max_letters as u128 {
            break;
        }
        let x = sub.iterate(witness.a, power, Some(max_letters))?;
        let y = sub.iterate(witness.b, power, Some(max_letters))?;
        let full = (x.0.len() + y.0.len()) as u64;
        let holds = indel_distance(&x.0, &y.0).doubled() == full;
        report.checked += 1;
        report.max_length = report.max_length.max(x.0.len() as u64);
        report.all_hold &= holds;
    }
    Ok(report)
}

/// Fraction of letters of `w` lying outside the essential components.
pub fn non_essential_fraction(w: &Word, essential_letters: &[bool]) -> Ratio<u64> {
    let outside = w
        .0
        .iter()
        .filter(|&&c| !essential_letters[c as usize])
        .count() as u64;
    Ratio::new(outside, w.0.len() as u64)
}

/// Rows (iterate length, non-essential fraction) for powers `1..=k_max`
/// applied to `seed`.
pub fn rho_decay_profile(
    sub: &Substitution,
    seed: Letter,
    k_max: u32,
) -> Result<Vec<(u64, Ratio<u64>)>> {
    let analysis = analyze(sub)?;
    let mut rows = Vec::new();
    for k in 1..=k_max {
        let w = sub.iterate(seed, k, None)?;
        rows.push((
            w.0.len() as u64,
            non_essential_fraction(&w, &analysis.essential_letters),
        ));
    }
    Ok(rows)
}
