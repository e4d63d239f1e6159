//! Finite maps from words to coefficients, with pointwise and convolution
//! products, total mass, decomposition, and index morphisms.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::law::BinaryLaw;
use crate::semiring::SemiringSpec;
use crate::value::ExtendedReal;
use crate::word::{Letter, Word};

/// Upper bound on the number of columns a product may materialize.
pub const DEFAULT_COLUMN_BUDGET: usize = 1_000_000;

/// A two-row array: a set of index words, each carrying one coefficient.
/// Column order is irrelevant; storage is canonical (length, then
/// lexicographic) so iteration and rendering are deterministic.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    columns: BTreeMap<Word, ExtendedReal>,
}

impl Table {
    /// The empty table: no indices at all. It is the two-sided neutral of
    /// every pointwise product.
    pub fn new() -> Self {
        Table::default()
    }

    /// Builds a table from `(word, value)` pairs. Duplicate words are an
    /// error unless `merge` says how to combine them.
    pub fn from_columns(
        pairs: impl IntoIterator<Item = (Word, ExtendedReal)>,
        merge: Option<&BinaryLaw>,
    ) -> Result<Self> {
        let mut columns = BTreeMap::new();
        for (word, value) in pairs {
            match columns.entry(word) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(value);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => match merge {
                    Some(law) => {
                        let merged = law.apply(*e.get(), value)?;
                        e.insert(merged);
                    }
                    None => return Err(Error::DuplicateIndex(e.key().to_string())),
                },
            }
        }
        Ok(Table { columns })
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, word: &Word) -> Option<ExtendedReal> {
        self.columns.get(word).copied()
    }

    /// Columns in canonical word order.
    pub fn columns(&self) -> impl Iterator<Item = (&Word, ExtendedReal)> {
        self.columns.iter().map(|(w, &v)| (w, v))
    }

    /// Index words in canonical order.
    pub fn indices(&self) -> impl Iterator<Item = &Word> {
        self.columns.keys()
    }

    /// Column-wise product: the index set is the union, values merge with
    /// `law` where both tables hold the word and carry over unchanged
    /// where only one does.
    pub fn pointwise(&self, other: &Table, law: &BinaryLaw) -> Result<Table> {
        let mut columns = self.columns.clone();
        for (word, &value) in &other.columns {
            match columns.entry(word.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(value);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let merged = law.apply(*e.get(), value)?;
                    e.insert(merged);
                }
            }
        }
        Ok(Table { columns })
    }

    /// Convolution product over `spec`: indices concatenate, and every
    /// factorization `uv = w` contributes `self[u] (*) other[v]`, the
    /// contributions combined with the addition law. The addition law must
    /// be commutative and associative for the result to be well defined.
    pub fn convolution(&self, other: &Table, spec: &SemiringSpec) -> Result<Table> {
        self.convolution_budgeted(other, spec, DEFAULT_COLUMN_BUDGET)
    }

    /// [`Table::convolution`] with an explicit column budget: rejects
    /// products whose output could exceed `budget` columns.
    pub fn convolution_budgeted(
        &self,
        other: &Table,
        spec: &SemiringSpec,
        budget: usize,
    ) -> Result<Table> {
        check_budget(self.len(), other.len(), budget)?;
        let mut columns: BTreeMap<Word, ExtendedReal> = BTreeMap::new();
        for (u, &p) in &self.columns {
            for (v, &q) in &other.columns {
                let word = u.concat(v);
                let term = spec.mul().apply(p, q)?;
                match columns.entry(word) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(term);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let folded = spec.add().apply(*e.get(), term)?;
                        e.insert(folded);
                    }
                }
            }
        }
        Ok(Table { columns })
    }

    /// Folds the addition law over the values. The fold seeds on the first
    /// value, so a neutral is only required for the empty table.
    pub fn mass(&self, add: &BinaryLaw) -> Result<ExtendedReal> {
        let mut values = self.columns.values().copied();
        let Some(first) = values.next() else {
            return add
                .neutral()
                .ok_or_else(|| Error::MissingNeutral(add.name().to_string()));
        };
        values.try_fold(first, |acc, v| add.apply(acc, v))
    }

    /// Splits into single-column tables, in canonical word order. Folding
    /// them back together pointwise rebuilds the table under any law,
    /// since the pieces share no indices.
    pub fn decompose(&self) -> Vec<Table> {
        self.columns
            .iter()
            .map(|(w, &v)| Table {
                columns: BTreeMap::from([(w.clone(), v)]),
            })
            .collect()
    }

    /// Rewrites every index through `morphism` (extended letter-by-letter
    /// to a monoid morphism); columns whose images collide merge with
    /// `add`. Mapping every letter to the empty word collapses the table
    /// onto its total mass at `@eps`.
    pub fn map_indices(&self, morphism: &LetterMorphism, add: &BinaryLaw) -> Result<Table> {
        let mut columns: BTreeMap<Word, ExtendedReal> = BTreeMap::new();
        for (word, &value) in &self.columns {
            let image = morphism.apply_word(word)?;
            match columns.entry(image) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(value);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let merged = add.apply(*e.get(), value)?;
                    e.insert(merged);
                }
            }
        }
        Ok(Table { columns })
    }

    /// Drops columns whose value equals `zero` exactly. Normalizes tables
    /// before equality checks under a spec that has an addition neutral.
    pub fn prune(&self, zero: ExtendedReal) -> Table {
        Table {
            columns: self
                .columns
                .iter()
                .filter(|(_, &v)| v != zero)
                .map(|(w, &v)| (w.clone(), v))
                .collect(),
        }
    }

    /// True when the index sets coincide and all values agree within
    /// `tol` (exactly, when `tol` is 0).
    pub fn approx_eq(&self, other: &Table, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .columns
                .iter()
                .zip(&other.columns)
                .all(|((wa, &va), (wb, &vb))| wa == wb && va.approx_eq(vb, tol))
    }

    /// Parses the table text format: one `word<TAB>value` column per line,
    /// `#` comment lines and blank lines ignored. Repeating a word is an
    /// error.
    pub fn parse(text: &str) -> Result<Table> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(word), Some(value), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected `word value`, got `{line}`"),
                });
            };
            let word = Word::parse(word).map_err(|e| Error::Parse {
                line: idx + 1,
                message: e.to_string(),
            })?;
            let value: ExtendedReal = value.parse().map_err(|e: Error| Error::Parse {
                line: idx + 1,
                message: e.to_string(),
            })?;
            pairs.push((word, value));
        }
        let mut columns = BTreeMap::new();
        for (word, value) in pairs {
            if columns.insert(word.clone(), value).is_some() {
                return Err(Error::DuplicateIndex(word.to_string()));
            }
        }
        Ok(Table { columns })
    }

    /// Canonical rendering: one `word<TAB>value` line per column, sorted
    /// by (length, lexicographic), trailing newline per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (word, value) in &self.columns {
            out.push_str(&format!("{word}\t{value}\n"));
        }
        out
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub(crate) fn check_budget(lhs: usize, rhs: usize, budget: usize) -> Result<()> {
    let required = lhs.saturating_mul(rhs);
    if required > budget {
        return Err(Error::ColumnBudget { required, budget });
    }
    Ok(())
}

/// A mapping from letters to words, extended to words letter-by-letter.
#[derive(Debug, Clone, Default)]
pub struct LetterMorphism {
    map: BTreeMap<Letter, Word>,
}

impl LetterMorphism {
    pub fn new() -> Self {
        LetterMorphism::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Letter, Word)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (letter, word) in pairs {
            if map.insert(letter.clone(), word).is_some() {
                return Err(Error::DuplicateLetter(letter.to_string()));
            }
        }
        Ok(LetterMorphism { map })
    }

    pub fn insert(&mut self, letter: Letter, image: Word) {
        self.map.insert(letter, image);
    }

    pub fn apply_letter(&self, letter: &Letter) -> Result<&Word> {
        self.map
            .get(letter)
            .ok_or_else(|| Error::UndefinedLetter(letter.to_string()))
    }

    pub fn apply_word(&self, word: &Word) -> Result<Word> {
        let mut image = Word::empty();
        for letter in word.letters() {
            image = image.concat(self.apply_letter(letter)?);
        }
        Ok(image)
    }

    /// Parses one `letter word` pair per line; `#` comments and blank
    /// lines ignored; the image uses the table word syntax.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(letter), Some(image), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected `letter image-word`, got `{line}`"),
                });
            };
            let letter = Letter::new(letter).map_err(|e| Error::Parse {
                line: idx + 1,
                message: e.to_string(),
            })?;
            let image = Word::parse(image).map_err(|e| Error::Parse {
                line: idx + 1,
                message: e.to_string(),
            })?;
            pairs.push((letter, image));
        }
        Self::from_pairs(pairs)
    }
}
