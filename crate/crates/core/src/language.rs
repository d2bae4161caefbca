//! Factor sets of a substitution at a fixed length.
//!
//! The set of all factors of length at most n across every iterate is the
//! least fixpoint of "apply the substitution, cut windows". Every factor of
//! an image block sequence has a minimal run of blocks covering it, so it
//! suffices to cut only windows that touch both the first and the last block
//! of an image, and to expand a word u at all only when a window spanning
//! sigma(u) can still fit in the length budget. Both reductions are exact;
//! tests compare against the unreduced fixpoint and a direct iterate scan.

use std::collections::HashSet;

use crate::alphabet::{Letter, Word};
use crate::error::{Error, Result};
use crate::substitution::Substitution;

/// All factors of a given length, with bookkeeping from the closure run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageSet {
    /// Factor length.
    pub n: usize,
    /// The factors, sorted ascending.
    pub words: Vec<Word>,
    /// Expansion rounds the fixpoint needed.
    pub iterations: u32,
    /// Distinct factors of length at most `n` discovered along the way.
    pub closure_size: usize,
}

/// Total letters the closure may hold before giving up; roughly 1.6 GB.
const MAX_CLOSURE_LETTERS: u64 = 400_000_000;

/// Every factor of length at most some bound, reusable across lengths.
#[derive(Debug, Clone)]
pub struct FactorClosure {
    items: Vec<Vec<Letter>>,
    rounds: u32,
}

impl FactorClosure {
    /// Run the fixpoint up to factors of length `n_max`.
    pub fn compute(sub: &Substitution, n_max: usize) -> Result<Self> {
        closure(sub, n_max, MAX_CLOSURE_LETTERS)
    }

    /// Same fixpoint under a caller-chosen cap on total stored letters.
    pub fn compute_capped(sub: &Substitution, n_max: usize, max_letters: u64) -> Result<Self> {
        closure(sub, n_max, max_letters.min(MAX_CLOSURE_LETTERS))
    }

    /// Factors of one length, cut out of the shared closure.
    pub fn set(&self, n: usize) -> LanguageSet {
        slice(self, n)
    }

    /// Distinct factors across all lengths.
    pub fn size(&self) -> usize {
        self.items.len()
    }

    /// Expansion rounds the fixpoint needed.
    pub fn rounds(&self) -> u32 {
        self.rounds
    }
}

// Windows of `source` with start below `start_lt` and end strictly past
// `end_gt`; pass (len, 0) to enumerate every window.
fn push_windows(
    source: &[Letter],
    start_lt: usize,
    end_gt: usize,
    n_max: usize,
    seen: &mut HashSet<Vec<Letter>>,
    fresh: &mut Vec<Vec<Letter>>,
    letters: &mut u64,
    cap: u64,
) -> Result<()> {
    for s in 0..start_lt {
        let lo = (s + 1).max(end_gt + 1);
        for e in lo..=source.len() {
            if e - s > n_max {
                break;
            }
            let w = source[s..e].to_vec();
            if !seen.contains(&w) {
                *letters += w.len() as u64;
                if *letters > cap {
                    return Err(Error::Resource(
                        "factor closure exceeds the letter budget".into(),
                    ));
                }
                seen.insert(w.clone());
                fresh.push(w);
            }
        }
    }
    Ok(())
}

fn closure(sub: &Substitution, n_max: usize, cap: u64) -> Result<FactorClosure> {
    if n_max == 0 {
        return Err(Error::Input("factor length must be positive".into()));
    }
    let lmin = sub.min_image_len();
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut letters = 0u64;
    let mut frontier: Vec<Vec<Letter>> = Vec::new();

    // Seed with every window of every single image; these are the factors
    // contributed by the first application on its own.
    for a in 0..sub.size() as Letter {
        let img = &sub.image(a).0;
        push_windows(img, img.len(), 0, n_max, &mut seen, &mut frontier, &mut letters, cap)?;
    }

    let mut rounds = 0u32;
    while !frontier.is_empty() {
        let mut fresh: Vec<Vec<Letter>> = Vec::new();
        for u in &frontier {
            // Single letters were seeded in full; longer words are worth
            // expanding only while a spanning window can still fit.
            if u.len() < 2 || (u.len() - 2) * lmin + 2 > n_max {
                continue;
            }
            let image = sub.apply(&Word(u.clone())).0;
            let first = sub.image(u[0]).0.len();
            let last = sub.image(*u.last().expect("nonempty")).0.len();
            push_windows(
                &image,
                first,
                image.len() - last,
                n_max,
                &mut seen,
                &mut fresh,
                &mut letters,
                cap,
            )?;
        }
        if !fresh.is_empty() {
            rounds += 1;
        }
        frontier = fresh;
    }

    let mut items: Vec<Vec<Letter>> = seen.into_iter().collect();
    items.sort();
    Ok(FactorClosure { items, rounds })
}

/// Factors of length exactly `n` over all iterates of `sub`.
pub fn language(sub: &Substitution, n: usize) -> Result<LanguageSet> {
    let closure = closure(sub, n, MAX_CLOSURE_LETTERS)?;
    Ok(slice(&closure, n))
}

/// Factor sets for every length `1..=n_max`, sharing one closure run.
pub fn languages_up_to(sub: &Substitution, n_max: usize) -> Result<Vec<LanguageSet>> {
    let closure = closure(sub, n_max, MAX_CLOSURE_LETTERS)?;
    Ok((1..=n_max).map(|n| slice(&closure, n)).collect())
}

fn slice(closure: &FactorClosure, n: usize) -> LanguageSet {
    let words: Vec<Word> = closure
        .items
        .iter()
        .filter(|w| w.len() == n)
        .map(|w| Word(w.clone()))
        .collect();
    LanguageSet {
        n,
        words,
        iterations: closure.rounds,
        closure_size: closure.items.len(),
    }
}

/// Factor counts (n, count) for each length `1..=n_max`.
pub fn complexity_profile(sub: &Substitution, n_max: usize) -> Result<Vec<(usize, usize)>> {
    let closure = closure(sub, n_max, MAX_CLOSURE_LETTERS)?;
    let mut counts = vec![0usize; n_max + 1];
    for w in &closure.items {
        counts[w.len()] += 1;
    }
    Ok((1..=n_max).map(|n| (n, counts[n])).collect())
}

/// Independent check: collect length-n windows of sigma^k(a) directly for
/// every letter and every k up to `k_max`. Exhaustive only once the iterates
/// are long enough to express every factor, so callers pick `k_max` with
/// headroom; used as a cross-check for the fixpoint construction.
pub fn language_oracle_scan(sub: &Substitution, n: usize, k_max: u32) -> Result<Vec<Word>> {
    if n == 0 {
        return Err(Error::Input("factor length must be positive".into()));
    }
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    for a in 0..sub.size() as Letter {
        for k in 1..=k_max {
            let w = sub.iterate(a, k, None)?.0;
            if w.len() < n {
                continue;
            }
            for s in 0..=w.len() - n {
                let window = w[s..s + n].to_vec();
                seen.insert(window);
            }
        }
    }
    let mut words: Vec<Word> = seen.into_iter().map(Word).collect();
    words.sort();
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    fn render_all(set: &LanguageSet, sub: &Substitution) -> Vec<String> {
        set.words.iter().map(|w| w.render(sub.alphabet())).collect()
    }

    /// Unreduced fixpoint: expand everything, cut every window.
    fn full_fixpoint(sub: &Substitution, n_max: usize) -> Vec<Vec<Letter>> {
        let mut seen: HashSet<Vec<Letter>> = HashSet::new();
        let mut work: Vec<Vec<Letter>> = Vec::new();
        let add_all = |source: &[Letter],
                           seen: &mut HashSet<Vec<Letter>>,
                           work: &mut Vec<Vec<Letter>>| {
            for s in 0..source.len() {
                for e in s + 1..=source.len() {
                    if e - s > n_max {
                        break;
                    }
                    let w = source[s..e].to_vec();
                    if seen.insert(w.clone()) {
                        work.push(w);
                    }
                }
            }
        };
        for a in 0..sub.size() as Letter {
            add_all(&sub.image(a).0, &mut seen, &mut work);
        }
        while let Some(u) = work.pop() {
            let image = sub.apply(&Word(u)).0;
            add_all(&image, &mut seen, &mut work);
        }
        let mut items: Vec<Vec<Letter>> = seen.into_iter().collect();
        items.sort();
        items
    }

    #[test]
    fn thue_morse_length_three() {
        let sub = catalogue::thue_morse();
        let set = language(&sub, 3).unwrap();
        let words = render_all(&set, &sub);
        assert_eq!(words, vec!["001", "010", "011", "100", "101", "110"]);
    }

    #[test]
    fn thue_morse_length_two_is_everything() {
        let sub = catalogue::thue_morse();
        let set = language(&sub, 2).unwrap();
        assert_eq!(render_all(&set, &sub), vec!["00", "01", "10", "11"]);
    }

    #[test]
    fn fibonacci_avoids_one_one() {
        let sub = catalogue::fibonacci();
        let set = language(&sub, 2).unwrap();
        assert_eq!(render_all(&set, &sub), vec!["00", "01", "10"]);
    }

    #[test]
    fn constant_images_give_constant_factors() {
        for sub in [catalogue::doubling(), catalogue::crossed_doubling()] {
            for n in [1usize, 3, 7] {
                let set = language(&sub, n).unwrap();
                let words = render_all(&set, &sub);
                assert_eq!(words, vec!["0".repeat(n), "1".repeat(n)]);
            }
        }
    }

    #[test]
    fn seed_only_letters_are_dropped() {
        let sub = Substitution::parse("0 -> 11\n1 -> 11\n").unwrap();
        let set = language(&sub, 1).unwrap();
        assert_eq!(render_all(&set, &sub), vec!["1"]);
    }

    #[test]
    fn matches_the_unreduced_fixpoint() {
        for sub in catalogue::all() {
            for n_max in [1usize, 4, 10] {
                let closure = FactorClosure::compute(&sub, n_max).unwrap();
                assert_eq!(closure.items, full_fixpoint(&sub, n_max), "{n_max}");
            }
        }
    }

    #[test]
    fn closure_is_factor_closed() {
        let sub = catalogue::thue_morse();
        let closure = FactorClosure::compute(&sub, 9).unwrap();
        let seen: HashSet<&[Letter]> = closure.items.iter().map(|w| w.as_slice()).collect();
        for w in &closure.items {
            if w.len() >= 2 {
                assert!(seen.contains(&w[1..]));
                assert!(seen.contains(&w[..w.len() - 1]));
            }
        }
    }

    #[test]
    fn agrees_with_direct_iterate_scan() {
        for sub in [catalogue::thue_morse(), catalogue::fibonacci()] {
            for n in 1..=12 {
                let fix = language(&sub, n).unwrap().words;
                let scan = language_oracle_scan(&sub, n, 16).unwrap();
                assert_eq!(fix, scan, "length {n}");
            }
        }
    }

    #[test]
    fn thue_morse_factors_are_complement_closed() {
        let sub = catalogue::thue_morse();
        for n in [3usize, 5, 8] {
            let set = language(&sub, n).unwrap();
            for w in &set.words {
                let flipped = Word(w.0.iter().map(|&c| 1 - c).collect());
                assert!(set.words.binary_search(&flipped).is_ok());
            }
        }
    }

    #[test]
    fn shared_closure_matches_single_runs() {
        let sub = catalogue::fibonacci();
        let all = languages_up_to(&sub, 8).unwrap();
        assert_eq!(all.len(), 8);
        for set in &all {
            let single = language(&sub, set.n).unwrap();
            assert_eq!(set.words, single.words);
        }
    }

    #[test]
    fn profile_counts_match_set_sizes() {
        let sub = catalogue::thue_morse();
        let profile = complexity_profile(&sub, 10).unwrap();
        for &(n, count) in &profile {
            assert_eq!(count, language(&sub, n).unwrap().words.len());
        }
        assert_eq!(profile[0], (1, 2));
        assert_eq!(profile[1], (2, 4));
        assert_eq!(profile[2], (3, 6));
    }

    #[test]
    fn zero_length_is_rejected() {
        assert!(language(&catalogue::thue_morse(), 0).is_err());
    }

    #[test]
    fn tight_letter_cap_reports_a_resource_error() {
        let tm = catalogue::thue_morse();
        match FactorClosure::compute_capped(&tm, 32, 10) {
            Err(Error::Resource(_)) => {}
            other => panic!("expected a resource error, got {other:?}"),
        }
        let roomy = FactorClosure::compute_capped(&tm, 8, 1 << 20).unwrap();
        assert_eq!(roomy.size(), FactorClosure::compute(&tm, 8).unwrap().size());
    }
}
