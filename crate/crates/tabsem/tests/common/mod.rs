//! Shared generators and oracles for the property suites.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tabsem::{ExtendedReal, Letter, SemiringSpec, Table, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer-valued coefficient in `lo..=hi`.
pub fn int_value(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> ExtendedReal {
    ExtendedReal::from(rng.random_range(lo..=hi))
}

/// Multiple of 2^-10 in `[0, 1]`; exactly representable, so sums and
/// small products stay exact.
pub fn dyadic_unit(rng: &mut ChaCha8Rng) -> ExtendedReal {
    ExtendedReal::new(f64::from(rng.random_range(0..=1024u32)) / 1024.0)
}

/// A word of up to `max_len` letters over `alphabet`.
pub fn random_word(rng: &mut ChaCha8Rng, alphabet: &[char], max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| {
            let c = alphabet[rng.random_range(0..alphabet.len())];
            Letter::new(c.to_string()).unwrap()
        })
        .collect()
}

/// A table with up to `max_cols` distinct index words.
pub fn random_table(
    rng: &mut ChaCha8Rng,
    alphabet: &[char],
    max_cols: usize,
    max_len: usize,
    mut value: impl FnMut(&mut ChaCha8Rng) -> ExtendedReal,
) -> Table {
    let cols = rng.random_range(0..=max_cols);
    let mut words = BTreeSet::new();
    // The word space over a small alphabet is finite; cap the attempts.
    let mut attempts = 0;
    while words.len() < cols && attempts < 10 * max_cols {
        words.insert(random_word(rng, alphabet, max_len));
        attempts += 1;
    }
    let pairs: Vec<(Word, ExtendedReal)> =
        words.into_iter().map(|w| (w, value(rng))).collect();
    Table::from_columns(pairs, None).unwrap()
}

/// Reference convolution: materialize every factorization term, group by
/// word, and fold each group with the addition law in canonical order.
pub fn convolution_oracle(t1: &Table, t2: &Table, spec: &SemiringSpec) -> Table {
    let mut terms: Vec<(Word, ExtendedReal)> = Vec::new();
    for (u, p) in t1.columns() {
        for (v, q) in t2.columns() {
            terms.push((u.concat(v), spec.mul().apply(p, q).unwrap()));
        }
    }
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut pairs: Vec<(Word, ExtendedReal)> = Vec::new();
    for (word, term) in terms {
        match pairs.last_mut() {
            Some((last, acc)) if *last == word => {
                *acc = spec.add().apply(*acc, term).unwrap();
            }
            _ => pairs.push((word, term)),
        }
    }
    Table::from_columns(pairs, None).unwrap()
}

/// Number of concatenation collisions a convolution of the two index
/// sets produces (factorization pairs beyond the first per word).
pub fn collision_count(t1: &Table, t2: &Table) -> usize {
    let mut products = BTreeSet::new();
    let mut pairs = 0;
    for u in t1.indices() {
        for v in t2.indices() {
            products.insert(u.concat(v));
            pairs += 1;
        }
    }
    pairs - products.len()
}
