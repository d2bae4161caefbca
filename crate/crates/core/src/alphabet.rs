//! Alphabets and words.
//!
//! Letters are dense ids `0..|A|`; an [`Alphabet`] maps them to their string
//! tokens. Words are plain id sequences, ordered lexicographically by id so
//! that sorted word lists and witness tie-breaks are well defined everywhere.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Dense letter id. Words never store tokens directly.
pub type Letter = u32;

/// Finite ordered alphabet; token strings are unique and non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new(tokens: Vec<String>) -> Result<Self> {
        if tokens.is_empty() {
            return Err(Error::Input("alphabet must be non-empty".into()));
        }
        let mut index = HashMap::with_capacity(tokens.len());
        for (id, tok) in tokens.iter().enumerate() {
            if tok.is_empty() || tok.chars().any(char::is_whitespace) {
                return Err(Error::Input(format!(
                    "invalid letter token {tok:?}: must be non-empty and whitespace-free"
                )));
            }
            if index.insert(tok.clone(), id as Letter).is_some() {
                return Err(Error::Input(format!("duplicate letter token {tok:?}")));
            }
        }
        Ok(Alphabet { tokens, index })
    }

    /// Alphabet `{"0", "1", ...}` with `size` single-character tokens.
    pub fn numeric(size: usize) -> Self {
        assert!(size >= 1 && size <= 10, "numeric alphabet supports 1..=10 letters");
        Alphabet::new((0..size).map(|i| i.to_string()).collect()).expect("tokens are valid")
    }

    pub fn size(&self) -> usize {
        self.tokens.len()
    }

    pub fn token(&self, letter: Letter) -> &str {
        &self.tokens[letter as usize]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn lookup(&self, token: &str) -> Option<Letter> {
        self.index.get(token).copied()
    }

    /// True when every token is a single character, enabling the compact
    /// word rendering `0110` instead of `0 1 1 0`.
    pub fn is_compact(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    /// Renders a letter sequence: concatenated when compact, else
    /// space-separated tokens.
    pub fn render(&self, letters: &[Letter]) -> String {
        if self.is_compact() {
            letters.iter().map(|&l| self.token(l)).collect()
        } else {
            letters
                .iter()
                .map(|&l| self.token(l))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

/// Finite word over letter ids. `Ord` is lexicographic by id, which every
/// canonical ordering and witness tie-break in this crate relies on.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        alphabet.render(&self.0)
    }

    /// Parses a word against an alphabet. Whitespace-separated input is read
    /// as tokens; input without whitespace is read character-by-character
    /// when the alphabet is compact, else as a single token.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() == 1 && alphabet.is_compact() && alphabet.lookup(tokens[0]).is_none() {
            let mut letters = Vec::with_capacity(tokens[0].len());
            for (i, ch) in tokens[0].chars().enumerate() {
                let tok = ch.to_string();
                let letter = alphabet.lookup(&tok).ok_or_else(|| {
                    Error::parse(1, i + 1, format!("unknown letter {tok:?}"))
                })?;
                letters.push(letter);
            }
            return Ok(Word(letters));
        }
        let mut letters = Vec::with_capacity(tokens.len());
        for tok in &tokens {
            let letter = alphabet
                .lookup(tok)
                .ok_or_else(|| Error::parse(1, 1, format!("unknown letter {tok:?}")))?;
            letters.push(letter);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    /// Debug-flavored display using raw ids; user-facing output goes through
    /// [`Word::render`] with an alphabet.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
