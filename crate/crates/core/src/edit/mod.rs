//! Indel edit distance d_E(x, y) = (|x| + |y|)/2 − LCS(x, y), kept exact by
//! storing the doubled value as an integer. Three interchangeable LCS
//! engines (quadratic DP, bit-parallel, greedy diagonal band) plus a
//! BFS-based reference oracle for short inputs.

mod band;
mod bitparallel;
mod diameter;
mod dp;
pub mod oracle;

pub use diameter::{diameter, diameter_over_words, DiameterMode, DiameterReport};

use crate::alphabet::Letter;

/// Exact half-integer distance: `doubled` is `2·d_E`, always an integer with
/// the same parity as `|x| + |y|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfDistance {
    doubled: u64,
}

impl HalfDistance {
    pub fn from_doubled(doubled: u64) -> Self {
        HalfDistance { doubled }
    }

    pub fn zero() -> Self {
        HalfDistance { doubled: 0 }
    }

    pub fn doubled(&self) -> u64 {
        self.doubled
    }

    pub fn is_integral(&self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn as_f64(&self) -> f64 {
        self.doubled as f64 / 2.0
    }
}

impl std::ops::Add for HalfDistance {
    type Output = HalfDistance;
    fn add(self, rhs: HalfDistance) -> HalfDistance {
        HalfDistance {
            doubled: self.doubled + rhs.doubled,
        }
    }
}

impl std::fmt::Display for HalfDistance {
    /// Reduced form: `2` when integral, `3/2` otherwise.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// Quadratic dynamic program, rolling rows. The fixture engine.
    Dp,
    /// Machine-word column updates over y-positions, O(|x|·⌈|y|/w⌉).
    BitParallel,
    /// Greedy furthest-reaching diagonals, O((|x|+|y|)·D); computes the
    /// doubled distance directly.
    Band,
}

/// LCS length under a chosen engine.
pub fn lcs_len(x: &[Letter], y: &[Letter], engine: Engine) -> usize {
    match engine {
        Engine::Dp => dp::lcs(x, y),
        Engine::BitParallel => bitparallel::lcs(x, y),
        Engine::Band => {
            let doubled = band::doubled_distance(x, y);
            (x.len() + y.len() - doubled as usize) / 2
        }
    }
}

/// Exact indel distance with automatic engine selection: after trimming the
/// common prefix and suffix, the band engine runs when the remaining-length
/// upper bound on the distance is small relative to the input (cheap bound
/// D ≤ (|x|+|y|)/8), otherwise the bit-parallel engine. The choice never
/// affects the value.
pub fn indel_distance(x: &[Letter], y: &[Letter]) -> HalfDistance {
    let (tx, ty) = trim_common(x, y);
    let remaining = tx.len() + ty.len();
    if remaining == 0 {
        return HalfDistance::zero();
    }
    // remaining is an upper bound on the doubled distance; the band engine
    // costs O((|tx|+|ty|)·doubled), so it only runs when provably cheap.
    let doubled = if remaining * 4 <= x.len() + y.len() {
        band::doubled_distance(tx, ty)
    } else {
        (tx.len() + ty.len() - 2 * bitparallel::lcs(tx, ty)) as u64
    };
    HalfDistance::from_doubled(doubled)
}

/// Exact indel distance with a pinned engine.
pub fn indel_distance_with(x: &[Letter], y: &[Letter], engine: Engine) -> HalfDistance {
    let doubled = match engine {
        Engine::Band => band::doubled_distance(x, y),
        other => (x.len() + y.len() - 2 * lcs_len(x, y, other)) as u64,
    };
    HalfDistance::from_doubled(doubled)
}

/// Checks d_E(x·y, x̃·ỹ) ≤ d_E(x, x̃) + d_E(y, ỹ).
pub fn subadditivity_check(x: &[Letter], y: &[Letter], xt: &[Letter], yt: &[Letter]) -> bool {
    let mut xy = x.to_vec();
    xy.extend_from_slice(y);
    let mut xtyt = xt.to_vec();
    xtyt.extend_from_slice(yt);
    let joined = indel_distance(&xy, &xtyt);
    let split = indel_distance(x, xt) + indel_distance(y, yt);
    joined <= split
}

/// Strips the longest common prefix, then the longest common suffix of the
/// remainders. Both steps preserve the indel distance.
fn trim_common<'a>(x: &'a [Letter], y: &'a [Letter]) -> (&'a [Letter], &'a [Letter]) {
    let mut start = 0;
    let max_start = x.len().min(y.len());
    while start < max_start && x[start] == y[start] {
        start += 1;
    }
    let mut end = 0;
    let max_end = x.len().min(y.len()) - start;
    while end < max_end && x[x.len() - 1 - end] == y[y.len() - 1 - end] {
        end += 1;
    }
    (&x[start..x.len() - end], &y[start..y.len() - end])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{Alphabet, Word};

    const ENGINES: [Engine; 3] = [Engine::Dp, Engine::BitParallel, Engine::Band];

    fn word(text: &str, alphabet_size: usize) -> Vec<Letter> {
        Word::parse(text, &Alphabet::numeric(alphabet_size))
            .unwrap()
            .letters()
            .to_vec()
    }

    #[test]
    fn lcs_of_complementary_blocks() {
        let x = word("0110", 2);
        let y = word("1001", 2);
        for engine in ENGINES {
            assert_eq!(lcs_len(&x, &y, engine), 2);
        }
        let x = word("000", 2);
        let y = word("111", 2);
        for engine in ENGINES {
            assert_eq!(lcs_len(&x, &y, engine), 0);
        }
    }

    #[test]
    fn five_letter_example_has_distance_two() {
        let x = word("10002", 5);
        let y = word("03004", 5);
        let d = indel_distance(&x, &y);
        assert_eq!(d.doubled(), 4);
        assert_eq!(d.to_string(), "2");
        for engine in ENGINES {
            assert_eq!(indel_distance_with(&x, &y, engine), d);
        }
    }

    #[test]
    fn disjoint_letters_give_full_distance() {
        let x = word("000", 2);
        let y = word("111", 2);
        let d = indel_distance(&x, &y);
        assert_eq!(d.doubled(), 6);
        assert_eq!(d.to_string(), "3");
    }

    #[test]
    fn half_integer_display() {
        let d = indel_distance(&word("00", 2), &word("0", 2));
        assert_eq!(d.doubled(), 1);
        assert!(!d.is_integral());
        assert_eq!(d.to_string(), "1/2");
        assert_eq!(d.as_f64(), 0.5);
    }

    #[test]
    fn empty_word_edge_cases() {
        let e: Vec<Letter> = vec![];
        let x = word("0101", 2);
        assert_eq!(indel_distance(&e, &e).doubled(), 0);
        assert_eq!(indel_distance(&e, &x).doubled(), 4);
        assert_eq!(indel_distance(&x, &e).doubled(), 4);
        for engine in ENGINES {
            assert_eq!(lcs_len(&e, &x, engine), 0);
        }
    }

    #[test]
    fn parity_matches_total_length() {
        let words = ["", "0", "01", "0110", "11010", "001100"];
        for a in words {
            for b in words {
                let x = word(a, 2);
                let y = word(b, 2);
                if x.is_empty() && y.is_empty() {
                    continue;
                }
                let d = indel_distance(&x, &y);
                assert_eq!(
                    d.doubled() % 2,
                    ((x.len() + y.len()) % 2) as u64,
                    "parity failed for {a:?} vs {b:?}"
                );
            }
        }
    }

    #[test]
    fn subadditivity_on_small_words() {
        let x = word("01", 2);
        let y = word("10", 2);
        let xt = word("11", 2);
        let yt = word("0", 2);
        assert!(subadditivity_check(&x, &y, &xt, &yt));
    }

    #[test]
    fn trim_preserves_distance() {
        let x = word("11100111", 2);
        let y = word("11111", 2);
        let full = indel_distance_with(&x, &y, Engine::Dp);
        assert_eq!(indel_distance(&x, &y), full);
        let (tx, ty) = trim_common(&x, &y);
        assert_eq!(
            indel_distance_with(tx, ty, Engine::Dp).doubled(),
            full.doubled()
        );
    }
}
