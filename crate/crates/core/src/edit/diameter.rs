//! Diameter of a finite word set under the insert-delete metric.
//!
//! The exact mode evaluates every unordered pair, ordered so that a cheap
//! triangle-inequality bound anchored at the first word can skip pairs that
//! provably cannot beat the best value already found. Pruning decisions use
//! a snapshot taken at fixed chunk boundaries, so the reported value, witness
//! and counters do not depend on the number of worker threads.

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use rayon::prelude::*;

use crate::alphabet::Word;
use crate::edit::{indel_distance, HalfDistance};
use crate::error::{Error, Result};
use crate::language::LanguageSet;
use crate::sampling::distinct_pair;

/// How much work a diameter computation is allowed to do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiameterMode {
    /// Evaluate all pairs (with sound pruning); the result is exact.
    Exact,
    /// Evaluate `budget` seeded random pairs; the result is a lower bound.
    Sample { budget: u64, seed: u64 },
}

/// Outcome of a diameter computation over a set of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiameterReport {
    /// Factor length the set was drawn from, echoed into rendered output.
    pub n: usize,
    /// Largest pairwise distance found.
    pub value: HalfDistance,
    /// First pair attaining `value` in sorted-set order.
    pub witness: (Word, Word),
    /// True when every pair was either evaluated or soundly excluded.
    pub exact: bool,
    /// Number of pairwise distances actually computed.
    pub pairs_evaluated: u64,
    /// Number of pairs skipped by the triangle-inequality bound.
    pub pairs_pruned: u64,
}

/// Pairs per pruning chunk; fixed so results are thread-count independent.
const CHUNK: usize = 8192;

#[derive(Debug, Clone, Copy)]
struct Best {
    doubled: u64,
    pair: (usize, usize),
}

fn better(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(p), Some(q)) => {
            let q_wins = q.doubled > p.doubled || (q.doubled == p.doubled && q.pair < p.pair);
            Some(if q_wins { q } else { p })
        }
    }
}

/// Diameter of a factor set.
pub fn diameter(lang: &LanguageSet, mode: DiameterMode) -> Result<DiameterReport> {
    diameter_over_words(&lang.words, lang.n, mode)
}

/// Diameter of an arbitrary slice of words; `n` is echoed into the report.
pub fn diameter_over_words(words: &[Word], n: usize, mode: DiameterMode) -> Result<DiameterReport> {
    if words.is_empty() {
        return Err(Error::Input("diameter of an empty word set".into()));
    }
    if words.len() == 1 {
        return Ok(DiameterReport {
            n,
            value: HalfDistance::zero(),
            witness: (words[0].clone(), words[0].clone()),
            exact: true,
            pairs_evaluated: 0,
            pairs_pruned: 0,
        });
    }
    match mode {
        DiameterMode::Exact => Ok(exact_with_chunk(words, n, CHUNK)),
        DiameterMode::Sample { budget, seed } => Ok(sampled(words, n, budget, seed)),
    }
}

fn exact_with_chunk(words: &[Word], n: usize, chunk: usize) -> DiameterReport {
    let m = words.len();

    // Anchor phase: distances from the first word give both the initial best
    // and the radii used by the pruning bound.
    let d0: Vec<u64> = (0..m)
        .into_par_iter()
        .map(|i| indel_distance(&words[0].0, &words[i].0).doubled())
        .collect();
    let mut evaluated = (m - 1) as u64;
    let mut best = (1..m)
        .map(|i| Best {
            doubled: d0[i],
            pair: (0, i),
        })
        .fold(None, |acc, b| better(acc, Some(b)));

    // Remaining pairs (i, j) with 1 <= i < j, enumerated in lexicographic
    // order via a prefix-sum unranking. off[i] counts pairs whose first
    // index is below i.
    let mut off = vec![0usize; m + 1];
    for i in 2..=m {
        off[i] = off[i - 1] + (m - 1 - (i - 1));
    }
    let total = off[m];
    let mut pruned = 0u64;

    let mut start = 0usize;
    while start < total {
        let end = (start + chunk).min(total);
        let snapshot = best.map_or(0, |b| b.doubled);
        let (chunk_best, chunk_eval, chunk_pruned) = (start..end)
            .into_par_iter()
            .fold(
                || (None, 0u64, 0u64),
                |(acc, eval, skip), t| {
                    let i = off.partition_point(|&s| s <= t) - 1;
                    let j = i + 1 + (t - off[i]);
                    // d(i, j) <= d(0, i) + d(0, j): a pair under the snapshot
                    // can at most tie it, and the tied witness seen earlier
                    // is lexicographically smaller, so skipping is exact.
                    if d0[i] + d0[j] <= snapshot {
                        return (acc, eval, skip + 1);
                    }
                    let doubled = indel_distance(&words[i].0, &words[j].0).doubled();
                    (
                        better(acc, Some(Best { doubled, pair: (i, j) })),
                        eval + 1,
                        skip,
                    )
                },
            )
            .reduce(
                || (None, 0, 0),
                |(a, e1, p1), (b, e2, p2)| (better(a, b), e1 + e2, p1 + p2),
            );
        best = better(best, chunk_best);
        evaluated += chunk_eval;
        pruned += chunk_pruned;
        start = end;
    }

    let best = best.expect("at least one pair was scored");
    DiameterReport {
        n,
        value: HalfDistance::from_doubled(best.doubled),
        witness: (words[best.pair.0].clone(), words[best.pair.1].clone()),
        exact: true,
        pairs_evaluated: evaluated,
        pairs_pruned: pruned,
    }
}

fn sampled(words: &[Word], n: usize, budget: u64, seed: u64) -> DiameterReport {
    let m = words.len() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Draw sequentially so the pair list depends only on the seed, then
    // score in parallel under a commutative reduction.
    let pairs: Vec<(usize, usize)> = (0..budget)
        .map(|_| {
            let (a, b) = distinct_pair(&mut rng, m);
            (a as usize, b as usize)
        })
        .collect();
    let best = pairs
        .par_iter()
        .map(|&(i, j)| {
            Some(Best {
                doubled: indel_distance(&words[i].0, &words[j].0).doubled(),
                pair: (i, j),
            })
        })
        .reduce(|| None, better);

    let best = best.unwrap_or(Best {
        doubled: 0,
        pair: (0, 1),
    });
    DiameterReport {
        n,
        value: HalfDistance::from_doubled(best.doubled),
        witness: (words[best.pair.0].clone(), words[best.pair.1].clone()),
        exact: false,
        pairs_evaluated: pairs.len() as u64,
        pairs_pruned: 0,
    }
}
