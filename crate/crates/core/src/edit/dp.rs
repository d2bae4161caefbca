//! Reference LCS: the textbook quadratic dynamic program with two rolling
//! rows, O(|x|·|y|) time and O(min(|x|, |y|)) memory. This is the fixture
//! engine the fast paths are validated against.

use crate::alphabet::Letter;

pub fn lcs(x: &[Letter], y: &[Letter]) -> usize {
    // Roll over the shorter side.
    let (long, short) = if x.len() >= y.len() { (x, y) } else { (y, x) };
    if short.is_empty() {
        return 0;
    }
    let mut prev = vec![0usize; short.len() + 1];
    let mut curr = vec![0usize; short.len() + 1];
    for &a in long {
        for (j, &b) in short.iter().enumerate() {
            curr[j + 1] = if a == b {
                prev[j] + 1
            } else {
                prev[j + 1].max(curr[j])
            };
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[short.len()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_checked_values() {
        assert_eq!(lcs(&[0, 1, 1, 0], &[1, 0, 0, 1]), 2);
        assert_eq!(lcs(&[0, 0, 0], &[1, 1, 1]), 0);
        assert_eq!(lcs(&[0, 1, 2, 3], &[0, 1, 2, 3]), 4);
        assert_eq!(lcs(&[], &[0, 1]), 0);
        // "10002" vs "03004": the common subsequence is "000".
        assert_eq!(lcs(&[1, 0, 0, 0, 2], &[0, 3, 0, 0, 4]), 3);
    }

    #[test]
    fn symmetric_in_arguments() {
        let x = [0u32, 1, 0, 2, 1, 1, 0];
        let y = [2u32, 1, 1, 0, 0];
        assert_eq!(lcs(&x, &y), lcs(&y, &x));
    }
}
