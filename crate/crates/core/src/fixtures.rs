//! Golden values computed once by the exhaustive pipeline (the
//! `gen-fixtures` binary) and frozen into the crate. The test suite
//! recomputes the cheap slices and compares byte for byte.

use crate::error::{Error, Result};

/// Full diameter rows for the two-letter block-doubling word at lengths
/// 8, 16, 32, 64, 128, 256; format matches `render::csv_diam_row`.
pub const TM_DIAM_POW2: &str = include_str!("../fixtures/tm_diam_pow2.csv");

/// Doubled diameters for every length 16..=511, the full k = 2 window.
pub const TM_DIAM_RANGE: &str = include_str!("../fixtures/tm_diam_16_511.csv");

/// A frozen diameter row, kept verbatim for byte comparisons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamFixtureRow {
    pub n: u64,
    pub doubled: u64,
    /// The raw CSV row as written by the generator.
    pub raw: String,
}

fn parse_rows(text: &str, columns: usize) -> Result<Vec<DiamFixtureRow>> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if idx == 0 || line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != columns {
            return Err(Error::Input(format!(
                "fixture row {idx} has {} fields, expected {columns}",
                fields.len()
            )));
        }
        let n = fields[0]
            .parse()
            .map_err(|_| Error::Input(format!("fixture row {idx}: bad length field")))?;
        let doubled = fields[1]
            .parse()
            .map_err(|_| Error::Input(format!("fixture row {idx}: bad value field")))?;
        rows.push(DiamFixtureRow {
            n,
            doubled,
            raw: line.to_string(),
        });
    }
    Ok(rows)
}

/// Rows of the power-of-two fixture, ascending in n.
pub fn tm_diam_pow2() -> Result<Vec<DiamFixtureRow>> {
    parse_rows(TM_DIAM_POW2, 8)
}

/// Rows of the full-window fixture, ascending in n.
pub fn tm_diam_range() -> Result<Vec<DiamFixtureRow>> {
    parse_rows(TM_DIAM_RANGE, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse_and_cover_their_ranges() {
        let pow2 = tm_diam_pow2().unwrap();
        let lengths: Vec<u64> = pow2.iter().map(|r| r.n).collect();
        assert_eq!(lengths, vec![8, 16, 32, 64, 128, 256]);
        let range = tm_diam_range().unwrap();
        assert_eq!(range.len(), 496);
        assert_eq!(range.first().unwrap().n, 16);
        assert_eq!(range.last().unwrap().n, 511);
        for r in &range {
            assert!(r.doubled <= 2 * r.n);
        }
    }

    #[test]
    fn the_two_fixtures_agree_on_shared_lengths() {
        let pow2 = tm_diam_pow2().unwrap();
        let range = tm_diam_range().unwrap();
        for p in pow2.iter().filter(|r| r.n >= 16) {
            let matching = range.iter().find(|r| r.n == p.n).unwrap();
            assert_eq!(matching.doubled, p.doubled, "length {}", p.n);
        }
    }
}
