//! Bit-parallel LCS. One bit per y-position; processing a letter of x
//! updates the whole column with a handful of word operations, giving
//! O(|x| · ⌈|y|/64⌉) time after an O(|y|) mask build.
//!
//! Column update for match mask M: with U = S & M,
//!     S' = (S + U) | (S - U).
//! Since U ⊆ S bitwise, the subtraction borrows nothing and equals S & !M;
//! only the addition needs a carry chain across words. Zero bits accumulate
//! exactly at the positions where the LCS value steps up, so the final
//! count of zeros among the low |y| bits is the LCS length. Carries past the
//! top significant bit never flow back down and are masked out at the end.

use crate::alphabet::Letter;

pub fn lcs(x: &[Letter], y: &[Letter]) -> usize {
    if x.is_empty() || y.is_empty() {
        return 0;
    }
    let m = y.len();
    let words = m.div_ceil(64);

    // Occurrence masks per letter, dense over the letter ids present in y.
    let max_letter = *y.iter().max().expect("non-empty") as usize;
    let mut masks = vec![0u64; (max_letter + 1) * words];
    for (i, &c) in y.iter().enumerate() {
        masks[c as usize * words + i / 64] |= 1u64 << (i % 64);
    }

    let mut s = vec![!0u64; words];
    if m % 64 != 0 {
        s[words - 1] = (1u64 << (m % 64)) - 1;
    }

    for &c in x {
        let c = c as usize;
        if c > max_letter {
            continue; // letter absent from y: the column is unchanged
        }
        let mask = &masks[c * words..(c + 1) * words];
        let mut carry = 0u64;
        for (sk, &mk) in s.iter_mut().zip(mask) {
            let old = *sk;
            let u = old & mk;
            let (sum, c1) = old.overflowing_add(u);
            let (sum, c2) = sum.overflowing_add(carry);
            carry = u64::from(c1 | c2);
            *sk = sum | (old & !mk);
        }
    }

    let mut ones = 0u32;
    for (k, &sk) in s.iter().enumerate() {
        let significant = if k == words - 1 && m % 64 != 0 {
            sk & ((1u64 << (m % 64)) - 1)
        } else {
            sk
        };
        ones += significant.count_ones();
    }
    m - ones as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edit::dp;

    #[test]
    fn matches_dp_on_hand_cases() {
        let cases: [(&[Letter], &[Letter]); 7] = [
            (&[0, 1, 1, 0], &[1, 0, 0, 1]),
            (&[0, 0, 0], &[1, 1, 1]),
            (&[1, 0, 0, 0, 2], &[0, 3, 0, 0, 4]),
            (&[0], &[0]),
            (&[], &[0, 1, 0]),
            (&[2, 2, 2, 2], &[2, 2]),
            (&[0, 1, 2, 3, 4, 0, 1, 2], &[4, 3, 2, 1, 0]),
        ];
        for (x, y) in cases {
            assert_eq!(lcs(x, y), dp::lcs(x, y), "mismatch on {x:?} vs {y:?}");
        }
    }

    #[test]
    fn exercises_multiword_columns() {
        // |y| spans three 64-bit words, including the exact-boundary case.
        for ylen in [64usize, 128, 130, 190, 192] {
            let y: Vec<Letter> = (0..ylen).map(|i| (i % 3) as Letter).collect();
            let x: Vec<Letter> = (0..97).map(|i| ((i * 5 + 1) % 3) as Letter).collect();
            assert_eq!(lcs(&x, &y), dp::lcs(&x, &y), "ylen={ylen}");
        }
    }

    #[test]
    fn all_equal_letters_saturate_carries() {
        // Worst case for the carry chain: every position matches.
        let x = vec![0u32; 200];
        let y = vec![0u32; 150];
        assert_eq!(lcs(&x, &y), 150);
        assert_eq!(lcs(&y, &x), 150);
    }
}
