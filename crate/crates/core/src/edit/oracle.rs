//! Path-search reference for the indel distance: bidirectional
//! layer-by-layer BFS over the graph whose edges are single-letter
//! insertions and deletions. Completely independent of any LCS reasoning,
//! which is the point; only practical for |x| + |y| ≤ 24.
//!
//! Intermediate words are capped at max(|x|, |y|) letters: an optimal path
//! that first deletes down to a common subsequence and then inserts never
//! exceeds that length, so the cap preserves the distance while keeping the
//! state space small. Layers are expanded fully before a meeting is
//! accepted; once both balls of radii dA and dB are meeting-free the true
//! distance is at least dA + dB + 1, so the minimum over the first meeting
//! layer is exact.

use std::collections::HashMap;

use super::HalfDistance;
use crate::alphabet::Letter;
use crate::error::{Error, Result};

pub const MAX_TOTAL_LEN: usize = 24;

pub fn indel_distance_oracle(x: &[Letter], y: &[Letter]) -> Result<HalfDistance> {
    if x.len() + y.len() > MAX_TOTAL_LEN {
        return Err(Error::Input(format!(
            "oracle supports |x|+|y| <= {MAX_TOTAL_LEN}, got {}",
            x.len() + y.len()
        )));
    }
    if x == y {
        return Ok(HalfDistance::zero());
    }

    let mut alphabet: Vec<Letter> = x.iter().chain(y.iter()).copied().collect();
    alphabet.sort_unstable();
    alphabet.dedup();
    let max_len = x.len().max(y.len());

    let mut sides = [
        Side::new(x.to_vec()),
        Side::new(y.to_vec()),
    ];

    loop {
        // Expand the side with the smaller frontier; scan its whole next
        // layer for meetings before concluding anything.
        let active = usize::from(sides[0].frontier.len() > sides[1].frontier.len());
        let (a, b) = if active == 0 {
            let (l, r) = sides.split_at_mut(1);
            (&mut l[0], &r[0])
        } else {
            let (l, r) = sides.split_at_mut(1);
            (&mut r[0], &l[0])
        };

        let next_depth = a.depth + 1;
        let mut best: Option<u64> = None;
        let mut next_frontier: Vec<Vec<Letter>> = Vec::new();
        for w in std::mem::take(&mut a.frontier) {
            for nb in neighbors(&w, &alphabet, max_len) {
                if let Some(&db) = b.seen.get(&nb) {
                    let candidate = next_depth + db;
                    best = Some(best.map_or(candidate, |cur| cur.min(candidate)));
                }
                if !a.seen.contains_key(&nb) {
                    a.seen.insert(nb.clone(), next_depth);
                    next_frontier.push(nb);
                }
            }
        }
        if let Some(d) = best {
            return Ok(HalfDistance::from_doubled(d));
        }
        a.frontier = next_frontier;
        a.depth = next_depth;
        // x and y are joinable through deletions alone, so a meeting always
        // happens before the frontiers die out.
        assert!(
            !a.frontier.is_empty(),
            "frontier exhausted before the words met"
        );
    }
}

struct Side {
    seen: HashMap<Vec<Letter>, u64>,
    frontier: Vec<Vec<Letter>>,
    depth: u64,
}

impl Side {
    fn new(start: Vec<Letter>) -> Self {
        let mut seen = HashMap::new();
        seen.insert(start.clone(), 0);
        Side {
            seen,
            frontier: vec![start],
            depth: 0,
        }
    }
}

fn neighbors(w: &[Letter], alphabet: &[Letter], max_len: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::with_capacity(w.len() + (w.len() + 1) * alphabet.len());
    for i in 0..w.len() {
        let mut v = Vec::with_capacity(w.len() - 1);
        v.extend_from_slice(&w[..i]);
        v.extend_from_slice(&w[i + 1..]);
        out.push(v);
    }
    if w.len() < max_len {
        for i in 0..=w.len() {
            for &c in alphabet {
                let mut v = Vec::with_capacity(w.len() + 1);
                v.extend_from_slice(&w[..i]);
                v.push(c);
                v.extend_from_slice(&w[i..]);
                out.push(v);
            }
        }
    }
    out
}
