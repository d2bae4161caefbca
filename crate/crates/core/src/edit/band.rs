//! Greedy diagonal search: furthest-reaching points per diagonal, expanding
//! one edit at a time. Returns the doubled indel distance directly (each
//! insert or delete is one unit), in O((|x|+|y|)·D) time and O(|x|+|y|)
//! memory. Cheap exactly when the distance is small, which is why the auto
//! selector gates it behind an upper-bound check.

use crate::alphabet::Letter;

const UNREACHABLE: i64 = i64::MIN / 2;

/// Doubled indel distance 2·d_E(x, y) = |x| + |y| − 2·LCS(x, y).
pub fn doubled_distance(x: &[Letter], y: &[Letter]) -> u64 {
    let n = x.len();
    let m = y.len();
    if n == 0 {
        return m as u64;
    }
    if m == 0 {
        return n as u64;
    }

    // v[k + m] is the furthest x-index reached on diagonal k = i - j.
    let mut v = vec![UNREACHABLE; n + m + 1];
    let off = m as i64;

    for d in 0..=(n + m) {
        let d_i = d as i64;
        let mut kmin = -(d_i.min(m as i64));
        if (kmin + d_i) % 2 != 0 {
            kmin += 1;
        }
        let mut kmax = d_i.min(n as i64);
        if (kmax + d_i) % 2 != 0 {
            kmax -= 1;
        }

        let mut k = kmin;
        while k <= kmax {
            let mut i: i64 = if d == 0 {
                0
            } else {
                // Predecessors from round d-1: a vertical step from diagonal
                // k+1 keeps i (valid while j < m there), a horizontal step
                // from k-1 advances i (valid while i < n there).
                let prev_lo = -((d_i - 1).min(m as i64));
                let prev_hi = (d_i - 1).min(n as i64);
                let mut best = UNREACHABLE;
                if k + 1 <= prev_hi && k + 1 >= prev_lo {
                    let iv = v[(k + 1 + off) as usize];
                    if iv >= 0 && iv - (k + 1) < m as i64 {
                        best = best.max(iv);
                    }
                }
                if k - 1 >= prev_lo && k - 1 <= prev_hi {
                    let ih = v[(k - 1 + off) as usize];
                    if ih >= 0 && ih < n as i64 {
                        best = best.max(ih + 1);
                    }
                }
                best
            };

            if i >= 0 {
                let mut j = i - k;
                debug_assert!(j >= 0 && j <= m as i64 && i <= n as i64);
                while (i as usize) < n && (j as usize) < m && x[i as usize] == y[j as usize] {
                    i += 1;
                    j += 1;
                }
                if i as usize >= n && j as usize >= m {
                    return d as u64;
                }
            }
            v[(k + off) as usize] = i;
            k += 2;
        }
    }
    unreachable!("distance is at most |x| + |y|");
}
