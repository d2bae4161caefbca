//! Substitutions: maps `a -> σ(a)` extended to words by concatenation.
//!
//! The text format is one rule per line, `<letter> -> <image>`, with `#`
//! starting a comment. Images are whitespace-separated tokens; when every
//! left-hand side is a single character and no right-hand side contains
//! whitespace, the whole file is read in compact mode (`0->01` means the
//! two-letter image `0 1`). A single image token can therefore never be
//! confused with a compact letter run: multi-character letters force token
//! mode for the entire file.

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

/// Default cap on materialized word length, in letters.
pub const DEFAULT_MAX_LETTERS: usize = 1 << 28;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    alphabet: Alphabet,
    images: Vec<Word>,
    /// `Some(l)` when every image has length `l` (the substitution is
    /// `l`-uniform), `None` otherwise.
    uniform_length: Option<usize>,
}

impl Substitution {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.size() {
            return Err(Error::Input(format!(
                "expected {} images, got {}",
                alphabet.size(),
                images.len()
            )));
        }
        for (a, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(Error::Input(format!(
                    "image of {:?} is empty; images must be non-empty words",
                    alphabet.token(a as Letter)
                )));
            }
            if let Some(&bad) = img.letters().iter().find(|&&b| (b as usize) >= alphabet.size()) {
                return Err(Error::Input(format!("image of {a} uses undeclared letter id {bad}")));
            }
        }
        let first = images[0].len();
        let uniform_length = images.iter().all(|w| w.len() == first).then_some(first);
        Ok(Substitution {
            alphabet,
            images,
            uniform_length,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn size(&self) -> usize {
        self.alphabet.size()
    }

    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a as usize]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn uniform_length(&self) -> Option<usize> {
        self.uniform_length
    }

    pub fn is_uniform(&self) -> bool {
        self.uniform_length.is_some()
    }

    /// Shortest image length; at least 1.
    pub fn min_image_len(&self) -> usize {
        self.images.iter().map(Word::len).min().expect("non-empty alphabet")
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Word::len).max().expect("non-empty alphabet")
    }

    /// Applies the substitution to a word by concatenating letter images.
    /// The empty word maps to the empty word.
    pub fn apply(&self, w: &Word) -> Word {
        let total: usize = w.letters().iter().map(|&a| self.images[a as usize].len()).sum();
        let mut out = Vec::with_capacity(total);
        for &a in w.letters() {
            out.extend_from_slice(self.images[a as usize].letters());
        }
        Word::new(out)
    }

    /// Length of `σ^k(a)` with saturating arithmetic, used for cap checks
    /// before any word is materialized.
    pub fn iterate_len(&self, a: Letter, k: u32) -> u128 {
        // lengths[b] holds Len(σ^j(b)); one more round per level of k.
        let mut lengths: Vec<u128> = vec![1; self.size()];
        for _ in 0..k {
            let next: Vec<u128> = (0..self.size())
                .map(|b| {
                    self.images[b]
                        .letters()
                        .iter()
                        .fold(0u128, |acc, &c| acc.saturating_add(lengths[c as usize]))
                })
                .collect();
            lengths = next;
        }
        lengths[a as usize]
    }

    /// Materializes `σ^k(a)`, refusing (resource error) when the result would
    /// exceed `max_letters` (defaults to [`DEFAULT_MAX_LETTERS`]).
    pub fn iterate(&self, a: Letter, k: u32, max_letters: Option<usize>) -> Result<Word> {
        if (a as usize) >= self.size() {
            return Err(Error::Input(format!("letter id {a} out of range")));
        }
        let cap = max_letters.unwrap_or(DEFAULT_MAX_LETTERS);
        let len = self.iterate_len(a, k);
        if len > cap as u128 {
            return Err(Error::Resource(format!(
                "iterate(σ, {a}, {k}) has {len} letters, exceeding the cap of {cap}"
            )));
        }
        let mut w = Word::new(vec![a]);
        for _ in 0..k {
            w = self.apply(&w);
        }
        Ok(w)
    }

    /// Functional composition: `(self ∘ inner)(a) = self(inner(a))`.
    /// Both substitutions must share an alphabet.
    pub fn compose(&self, inner: &Substitution) -> Result<Substitution> {
        if self.alphabet != inner.alphabet {
            return Err(Error::Input("composition requires a shared alphabet".into()));
        }
        let images = (0..self.size())
            .map(|a| self.apply(inner.image(a as Letter)))
            .collect();
        Substitution::new(self.alphabet.clone(), images)
    }

    /// `σ^k` as a substitution; `k = 0` is the identity.
    pub fn power(&self, k: u32) -> Result<Substitution> {
        let identity = Substitution::new(
            self.alphabet.clone(),
            (0..self.size()).map(|a| Word::new(vec![a as Letter])).collect(),
        )?;
        let mut acc = identity;
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Canonical text form: one explicit token-mode rule per line, sorted by
    /// letter id. Bit-exact for fixtures; `parse` round-trips it.
    pub fn canonical_serialization(&self) -> String {
        let mut out = String::new();
        for a in 0..self.size() {
            out.push_str(self.alphabet.token(a as Letter));
            out.push_str(" ->");
            for &b in self.images[a].letters() {
                out.push(' ');
                out.push_str(self.alphabet.token(b));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the rule format described in the module docs. Letter ids are
    /// assigned in rule order, so parsing is the inverse of
    /// [`Substitution::canonical_serialization`].
    pub fn parse(text: &str) -> Result<Substitution> {
        struct RawRule {
            line_no: usize,
            lhs: String,
            rhs: String,
            rhs_col: usize,
        }

        let mut rules: Vec<RawRule> = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            };
            if line.trim().is_empty() {
                continue;
            }
            let arrow = line.find("->").ok_or_else(|| {
                Error::parse(line_no, line.len() + 1, "expected `<letter> -> <image>`")
            })?;
            let lhs = line[..arrow].trim();
            if lhs.is_empty() {
                return Err(Error::parse(line_no, 1, "missing letter before `->`"));
            }
            if lhs.split_whitespace().count() != 1 {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("left-hand side {lhs:?} must be a single letter token"),
                ));
            }
            let rhs = &line[arrow + 2..];
            if rhs.trim().is_empty() {
                return Err(Error::parse(
                    line_no,
                    arrow + 3,
                    "empty image; images must be non-empty words",
                ));
            }
            rules.push(RawRule {
                line_no,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                rhs_col: arrow + 3,
            });
        }
        if rules.is_empty() {
            return Err(Error::parse(1, 1, "no rules found"));
        }

        let mut tokens = Vec::with_capacity(rules.len());
        for rule in &rules {
            if tokens.contains(&rule.lhs) {
                return Err(Error::parse(
                    rule.line_no,
                    1,
                    format!("duplicate rule for letter {:?}", rule.lhs),
                ));
            }
            tokens.push(rule.lhs.clone());
        }
        let alphabet = Alphabet::new(tokens).map_err(|e| match e {
            Error::Input(msg) => Error::parse(1, 1, msg),
            other => other,
        })?;

        // Compact mode only when nothing in the file could be a multi-token
        // image: all letters single characters, all images whitespace-free.
        let compact = alphabet.is_compact()
            && rules.iter().all(|r| !r.rhs.trim().chars().any(char::is_whitespace));

        let mut images = Vec::with_capacity(rules.len());
        for rule in &rules {
            let mut letters = Vec::new();
            if compact {
                let body = rule.rhs.trim();
                let lead = rule.rhs.len() - rule.rhs.trim_start().len();
                for (off, ch) in body.char_indices() {
                    let tok = ch.to_string();
                    let l = alphabet.lookup(&tok).ok_or_else(|| {
                        Error::parse(
                            rule.line_no,
                            rule.rhs_col + lead + off,
                            format!("unknown letter {tok:?} in image"),
                        )
                    })?;
                    letters.push(l);
                }
            } else {
                let mut offset = 0;
                for tok in rule.rhs.split_whitespace() {
                    let pos = rule.rhs[offset..].find(tok).expect("token comes from this slice") + offset;
                    offset = pos + tok.len();
                    let l = alphabet.lookup(tok).ok_or_else(|| {
                        Error::parse(
                            rule.line_no,
                            rule.rhs_col + pos,
                            format!("unknown letter {tok:?} in image"),
                        )
                    })?;
                    letters.push(l);
                }
            }
            images.push(Word::new(letters));
        }

        Substitution::new(alphabet, images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    #[test]
    fn parses_token_and_compact_forms_identically() {
        let spaced = Substitution::parse("0 -> 0 1\n1 -> 1 0\n").unwrap();
        let compact = Substitution::parse("0->01\n1->10\n").unwrap();
        assert_eq!(spaced, compact);
        assert_eq!(spaced.uniform_length(), Some(2));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let s = Substitution::parse("# Thue-Morse\n\n0 -> 0 1  # image of 0\n1 -> 1 0\n").unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.image(0), &Word::new(vec![0, 1]));
    }

    #[test]
    fn multichar_letters_force_token_mode() {
        let s = Substitution::parse("ab -> ab b\nb -> b\n").unwrap();
        assert_eq!(s.image(0), &Word::new(vec![0, 1]));
        assert_eq!(s.image(1), &Word::new(vec![1]));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match Substitution::parse("0 -> 0 1\n0 -> 1\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected duplicate-rule error, got {other:?}"),
        }
        match Substitution::parse("0 -> 0 2\n1 -> 1\n") {
            Err(Error::Parse { line: 1, column, .. }) => assert_eq!(column, 8),
            other => panic!("expected unknown-letter error, got {other:?}"),
        }
        match Substitution::parse("0 -> \n") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("expected empty-image error, got {other:?}"),
        }
        assert!(Substitution::parse("0 0 1\n").is_err());
    }

    #[test]
    fn thue_morse_iterates() {
        let tm = catalogue::thue_morse();
        let a = tm.alphabet();
        assert_eq!(tm.iterate(0, 0, None).unwrap().render(a), "0");
        assert_eq!(tm.iterate(0, 3, None).unwrap().render(a), "01101001");
        assert_eq!(tm.iterate(1, 3, None).unwrap().render(a), "10010110");
        assert_eq!(tm.iterate_len(0, 20), 1 << 20);
    }

    #[test]
    fn fibonacci_iterates() {
        let fib = catalogue::fibonacci();
        let a = fib.alphabet();
        assert_eq!(fib.iterate(0, 3, None).unwrap().render(a), "01001");
        assert_eq!(fib.iterate(0, 5, None).unwrap().render(a), "0100101001001");
        assert!(!fib.is_uniform());
        // Len(σ^k(0)) follows the Fibonacci numbers.
        let lens: Vec<u128> = (0..10).map(|k| fib.iterate_len(0, k)).collect();
        assert_eq!(lens, vec![1, 2, 3, 5, 8, 13, 21, 34, 55, 89]);
    }

    #[test]
    fn empty_word_maps_to_empty_word() {
        let tm = catalogue::thue_morse();
        assert_eq!(tm.apply(&Word::empty()), Word::empty());
    }

    #[test]
    fn iterate_respects_letter_cap() {
        let tm = catalogue::thue_morse();
        match tm.iterate(0, 10, Some(1000)) {
            Err(Error::Resource(_)) => {}
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn compose_matches_pointwise_application() {
        let tm = catalogue::thue_morse();
        let sq = tm.power(2).unwrap();
        assert_eq!(sq.image(0), &tm.apply(tm.image(0)));
        assert_eq!(sq.image(0).render(tm.alphabet()), "0110");
        assert_eq!(sq.image(1).render(tm.alphabet()), "1001");
        let identity = tm.power(0).unwrap();
        assert_eq!(identity.image(0), &Word::new(vec![0]));
    }

    #[test]
    fn canonical_serialization_round_trips() {
        for sub in catalogue::all() {
            let text = sub.canonical_serialization();
            let back = Substitution::parse(&text).unwrap();
            assert_eq!(&back, &sub, "round trip failed for:\n{text}");
        }
        let tm = catalogue::thue_morse();
        assert_eq!(tm.canonical_serialization(), "0 -> 0 1\n1 -> 1 0\n");
    }
}
