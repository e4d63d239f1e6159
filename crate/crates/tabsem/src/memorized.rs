//! The memorized semiring: pairs of an argmin address set and its cost.
//!
//! Values add by keeping the cheaper side (merging address sets on ties)
//! and multiply by concatenating every address pair while summing costs.
//! [`MemorizedValue::from_table`] maps a nonnegative-coefficient table to
//! its minimum and the set of words reaching it; the map carries the
//! table operations over `(min, +)` onto these two.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::table::{check_budget, Table, DEFAULT_COLUMN_BUDGET};
use crate::value::{ExtendedReal, POS_INF};
use crate::word::Word;

/// An address set with the cost shared by all of its members.
///
/// The cost is `+inf` exactly when the set is empty; that pair is the
/// additive neutral and the multiplicative annihilator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemorizedValue {
    addresses: BTreeSet<Word>,
    cost: ExtendedReal,
}

impl MemorizedValue {
    /// `[{}, inf]`: no addresses, unreachable.
    pub fn zero() -> Self {
        MemorizedValue {
            addresses: BTreeSet::new(),
            cost: POS_INF,
        }
    }

    /// `[{@eps}, 0]`: the empty address at no cost.
    pub fn one() -> Self {
        MemorizedValue {
            addresses: BTreeSet::from([Word::empty()]),
            cost: ExtendedReal::new(0.0),
        }
    }

    /// A validated pair. The cost must be nonnegative, infinite exactly
    /// when the set is empty.
    pub fn new(addresses: BTreeSet<Word>, cost: ExtendedReal) -> Result<Self> {
        if cost.get() < 0.0 {
            return Err(Error::NegativeWeight(cost.get()));
        }
        let consistent = addresses.is_empty() == (cost == POS_INF);
        if !consistent {
            return Err(Error::InvalidParameter {
                law: "memorized",
                reason: "cost must be +inf exactly when the address set is empty".into(),
            });
        }
        Ok(MemorizedValue { addresses, cost })
    }

    /// A one-address value, e.g. an arrow's label and weight. An infinite
    /// cost collapses to [`MemorizedValue::zero`].
    pub fn single(address: Word, cost: ExtendedReal) -> Result<Self> {
        if cost == POS_INF {
            return Ok(Self::zero());
        }
        Self::new(BTreeSet::from([address]), cost)
    }

    pub fn addresses(&self) -> &BTreeSet<Word> {
        &self.addresses
    }

    pub fn cost(&self) -> ExtendedReal {
        self.cost
    }

    pub fn is_zero(&self) -> bool {
        self.addresses.is_empty()
    }

    /// Keeps the strictly cheaper side; on a tie, unions the address sets.
    pub fn plus(&self, other: &Self) -> Self {
        self.plus_with_epsilon(other, 0.0)
    }

    /// [`MemorizedValue::plus`] with costs within `tie_epsilon` counting
    /// as tied; the merged pair keeps the smaller cost.
    pub fn plus_with_epsilon(&self, other: &Self, tie_epsilon: f64) -> Self {
        if self.cost.approx_eq(other.cost, tie_epsilon) {
            return MemorizedValue {
                addresses: self.addresses.union(&other.addresses).cloned().collect(),
                cost: self.cost.min(other.cost),
            };
        }
        if self.cost < other.cost {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Concatenates every address of `self` with every address of
    /// `other` and adds the costs. Either side being zero gives zero.
    pub fn times(&self, other: &Self) -> Result<Self> {
        self.times_budgeted(other, DEFAULT_COLUMN_BUDGET)
    }

    pub fn times_budgeted(&self, other: &Self, budget: usize) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        check_budget(self.addresses.len(), other.addresses.len(), budget)?;
        let mut addresses = BTreeSet::new();
        for u in &self.addresses {
            for v in &other.addresses {
                addresses.insert(u.concat(v));
            }
        }
        Ok(MemorizedValue {
            addresses,
            // Both sides are finite here, so no indeterminate form.
            cost: self.cost.checked_add(other.cost)?,
        })
    }

    /// The image of a table with coefficients in `[0, +inf]`: its minimum
    /// value and the set of index words attaining it. The empty table maps
    /// to [`MemorizedValue::zero`].
    pub fn from_table(table: &Table) -> Self {
        let Some(min) = table.columns().map(|(_, v)| v).min() else {
            return Self::zero();
        };
        if min == POS_INF {
            return Self::zero();
        }
        MemorizedValue {
            addresses: table
                .columns()
                .filter(|&(_, v)| v == min)
                .map(|(w, _)| w.clone())
                .collect(),
            cost: min,
        }
    }
}

/// `[{w1,w2,...}, cost]` with addresses in canonical word order;
/// `[{}, inf]` for the neutral.
impl fmt::Display for MemorizedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[{")?;
        let mut first = true;
        for word in &self.addresses {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{word}")?;
            first = false;
        }
        write!(f, "}}, {}]", self.cost)
    }
}
