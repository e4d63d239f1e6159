//! Letters and words of the free monoid indexing table columns.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One alphabet symbol. A letter is any non-empty run of printable,
/// non-whitespace characters other than the reserved `.` and `,`
/// separators and the `@eps` marker; `.` and `,` are excluded everywhere
/// inside a letter so that dot-joined words and comma-joined word lists
/// stay parseable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(String);

impl Letter {
    pub fn new(symbol: impl Into<String>) -> Result<Self> {
        let symbol = symbol.into();
        let reserved = symbol.is_empty() || symbol == "@eps";
        let bad_char = symbol
            .chars()
            .any(|c| c.is_whitespace() || c.is_control() || c == '.' || c == ',');
        if reserved || bad_char {
            return Err(Error::InvalidLetter(symbol));
        }
        Ok(Letter(symbol))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Letter::new(s)
    }
}

/// A finite sequence of letters; the empty word is the monoid neutral.
///
/// Words order by length first, then lexicographically on their letter
/// tokens — the canonical serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word(letters.into_iter().collect())
    }

    /// Builds a word of single-character letters, for tests and terse
    /// construction over alphabets like `{a, b, c}`.
    pub fn from_chars(s: &str) -> Result<Self> {
        s.chars().map(|c| Letter::new(c.to_string())).collect()
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Parses the word syntax of the text formats: `@eps` for the empty
    /// word, dot-joined letters (`e0.e3`), or a run of single-character
    /// letters (`ab` means `a.b`).
    pub fn parse(token: &str) -> Result<Self> {
        if token == "@eps" {
            return Ok(Word::empty());
        }
        if token.contains('.') {
            return token.split('.').map(Letter::new).collect();
        }
        Word::from_chars(token)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Canonical rendering: `@eps` for the empty word, letters dot-joined
/// otherwise.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("@eps");
        }
        let mut first = true;
        for letter in &self.0 {
            if !first {
                f.write_str(".")?;
            }
            f.write_str(letter.as_str())?;
            first = false;
        }
        Ok(())
    }
}
