//! Brute-force access to the factor language of the fixed point.
//!
//! Every factor of length at most `|tau^n(a)|` already occurs in
//! `tau^(n+3)(a)`, so the length-`L` factors are exactly the length-`L`
//! windows of `tau^(sufficient_power(L) + 3)(a)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::substitution::{covering_power, tau_n_a, Capacity};
use crate::word::{Alphabet, Letter, LetterSet, Word};

/// Least `n` with `2^(n+1) - 1 >= len`.
pub fn sufficient_power(len: u64) -> u32 {
    covering_power(len)
}

/// The word whose windows contain every factor of length `len`.
pub fn harvest_text(len: u64, cap: Capacity) -> Result<Word> {
    tau_n_a(sufficient_power(len) + 3, cap)
}

/// All factors of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSet {
    length: usize,
    words: BTreeSet<Word>,
    source_power: u32,
}

impl FactorSet {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    /// The `n` such that the factors were read off `tau^(n+3)(a)`.
    pub fn source_power(&self) -> u32 {
        self.source_power
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    /// One word per line in alphabet order, each line ending in `\n`.
    pub fn dump(&self) -> String {
        let mut out = String::with_capacity(self.words.len() * (self.length + 1));
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }
}

fn distinct_windows(text: &[Letter], len: usize) -> HashSet<&[Letter]> {
    debug_assert!(len >= 1);
    text.windows(len).collect()
}

pub fn factor_set(len: usize, cap: Capacity) -> Result<FactorSet> {
    if len == 0 {
        return Err(Error::ZeroLength);
    }
    let source_power = sufficient_power(len as u64);
    let text = tau_n_a(source_power + 3, cap)?;
    let words = distinct_windows(text.letters(), len)
        .into_iter()
        .map(|s| Word::from_letters_unchecked(Alphabet::AXYZ, s.to_vec()))
        .collect();
    Ok(FactorSet { length: len, words, source_power })
}

/// Number of distinct factors of length `len`.
pub fn complexity_oracle(len: usize, cap: Capacity) -> Result<u64> {
    Ok(factor_set(len, cap)?.len() as u64)
}

/// A factor together with the letters that extend it on either side.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtensionRecord {
    pub word: Word,
    pub right: LetterSet,
    pub left: LetterSet,
}

impl ExtensionRecord {
    pub fn is_right_special(&self) -> bool {
        self.right.len() >= 2
    }

    pub fn is_left_special(&self) -> bool {
        self.left.len() >= 2
    }

    pub fn is_bispecial(&self) -> bool {
        self.is_right_special() && self.is_left_special()
    }
}

fn check_axyz(w: &Word) -> Result<()> {
    if w.alphabet() == Alphabet::AXYZ {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch { expected: Alphabet::AXYZ, found: w.alphabet() })
    }
}

/// Extension sets of a single factor.
pub fn extensions(w: &Word, cap: Capacity) -> Result<ExtensionRecord> {
    check_axyz(w)?;
    let len = w.len();
    let text = harvest_text(len as u64 + 1, cap)?;
    let text = text.letters();
    let mut right = LetterSet::empty();
    let mut left = LetterSet::empty();
    for start in 0..=text.len() - len {
        if &text[start..start + len] != w.letters() {
            continue;
        }
        if let Some(&next) = text.get(start + len) {
            right.insert(next);
        }
        if start > 0 {
            left.insert(text[start - 1]);
        }
    }
    if right.is_empty() {
        return Err(Error::NotAFactor(w.to_string()));
    }
    Ok(ExtensionRecord { word: w.clone(), right, left })
}

/// Extension records of every factor of length `len`, in alphabet order.
pub fn extension_records(len: usize, cap: Capacity) -> Result<Vec<ExtensionRecord>> {
    if len == 0 {
        return Err(Error::ZeroLength);
    }
    let text = harvest_text(len as u64 + 1, cap)?;
    let text = text.letters();
    let mut sets: BTreeMap<&[Letter], (LetterSet, LetterSet)> = BTreeMap::new();
    for start in 0..=text.len() - len {
        let entry = sets.entry(&text[start..start + len]).or_default();
        if let Some(&next) = text.get(start + len) {
            entry.0.insert(next);
        }
        if start > 0 {
            entry.1.insert(text[start - 1]);
        }
    }
    Ok(sets
        .into_iter()
        .map(|(w, (right, left))| ExtensionRecord {
            word: Word::from_letters_unchecked(Alphabet::AXYZ, w.to_vec()),
            right,
            left,
        })
        .collect())
}

/// Factors of length `len` with at least two right extensions.
pub fn right_special_oracle(len: usize, cap: Capacity) -> Result<Vec<ExtensionRecord>> {
    let mut records = extension_records(len, cap)?;
    records.retain(ExtensionRecord::is_right_special);
    Ok(records)
}

/// Factors of length `len` with at least two left extensions.
pub fn left_special_oracle(len: usize, cap: Capacity) -> Result<Vec<ExtensionRecord>> {
    let mut records = extension_records(len, cap)?;
    records.retain(ExtensionRecord::is_left_special);
    Ok(records)
}

pub fn bispecial_oracle(len: usize, cap: Capacity) -> Result<Vec<ExtensionRecord>> {
    let mut records = extension_records(len, cap)?;
    records.retain(ExtensionRecord::is_bispecial);
    Ok(records)
}

/// Whether `w` occurs in the fixed point. The empty word always does.
pub fn is_factor(w: &Word, cap: Capacity) -> Result<bool> {
    check_axyz(w)?;
    if w.is_empty() {
        return Ok(true);
    }
    let text = harvest_text(w.len() as u64, cap)?;
    Ok(text.letters().windows(w.len()).any(|s| s == w.letters()))
}
