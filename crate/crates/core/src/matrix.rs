//! Incidence matrices `M[a][b] = number of occurrences of b in σ(a)` and the
//! positivity index (minimal p with `M^p` entrywise positive).

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::graph;
use crate::substitution::Substitution;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    /// Row-major; row a lists occurrence counts over images of a.
    data: Vec<u64>,
}

impl IncidenceMatrix {
    pub fn of(sub: &Substitution) -> Self {
        let n = sub.size();
        let mut data = vec![0u64; n * n];
        for a in 0..n {
            for &b in sub.image(a as Letter).letters() {
                data[a * n + b as usize] += 1;
            }
        }
        IncidenceMatrix { n, data }
    }

    pub fn from_rows(rows: &[&[u64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IncidenceMatrix {
            n,
            data: rows.concat(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> u64 {
        self.data[a * self.n + b]
    }

    /// Row sum of row a, i.e. the image length of a.
    pub fn row_sum(&self, a: usize) -> u64 {
        self.data[a * self.n..(a + 1) * self.n].iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.data.iter().all(|&x| x > 0)
    }

    /// True when some column is entrywise positive, i.e. some letter occurs
    /// in every image.
    pub fn has_positive_column(&self) -> bool {
        (0..self.n).any(|b| (0..self.n).all(|a| self.get(a, b) > 0))
    }

    /// Plain matrix product. Entries stay well within u64 for every use in
    /// this crate (alphabets of a handful of letters, small powers); the
    /// conversion asserts that.
    pub fn multiplied(&self, other: &IncidenceMatrix) -> IncidenceMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut data = vec![0u64; n * n];
        for a in 0..n {
            for k in 0..n {
                let x = self.get(a, k) as u128;
                if x == 0 {
                    continue;
                }
                for b in 0..n {
                    let acc = data[a * n + b] as u128 + x * other.get(k, b) as u128;
                    data[a * n + b] = u64::try_from(acc).expect("incidence product overflow");
                }
            }
        }
        IncidenceMatrix { n, data }
    }

    pub fn pow(&self, k: u32) -> IncidenceMatrix {
        let mut acc = IncidenceMatrix::identity(self.n);
        for _ in 0..k {
            acc = acc.multiplied(self);
        }
        acc
    }

    fn identity(n: usize) -> IncidenceMatrix {
        let mut data = vec![0u64; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IncidenceMatrix { n, data }
    }

    fn boolean(&self) -> Vec<bool> {
        self.data.iter().map(|&x| x > 0).collect()
    }
}

/// Upper bound on the positivity index of a primitive n×n matrix
/// (Wielandt): `(n-1)^2 + 1`.
pub fn wielandt_bound(n: usize) -> u32 {
    ((n - 1) * (n - 1) + 1) as u32
}

/// Minimal p ≥ 1 with `M_σ^p` entrywise positive. Domain error when σ is not
/// primitive; otherwise the search is bounded by [`wielandt_bound`].
pub fn positivity_index(sub: &Substitution) -> Result<u32> {
    if !graph::is_primitive(sub) {
        return Err(Error::Domain(
            "positivity index requires a primitive substitution".into(),
        ));
    }
    let m = IncidenceMatrix::of(sub);
    let n = m.size();
    let base = m.boolean();
    let mut acc = base.clone();
    for p in 1..=wielandt_bound(n) {
        if acc.iter().all(|&x| x) {
            return Ok(p);
        }
        // Boolean product acc := acc * base.
        let mut next = vec![false; n * n];
        for a in 0..n {
            for k in 0..n {
                if acc[a * n + k] {
                    for b in 0..n {
                        if base[k * n + b] {
                            next[a * n + b] = true;
                        }
                    }
                }
            }
        }
        acc = next;
    }
    if acc.iter().all(|&x| x) {
        return Ok(wielandt_bound(n));
    }
    Err(Error::Domain(
        "no positive power within the Wielandt bound; matrix is not primitive".into(),
    ))
}
