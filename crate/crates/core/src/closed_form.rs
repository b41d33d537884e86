//! Exact formulas for the complexity function and the right-special
//! factors, and the harness that checks them against brute force.
//!
//! Every length `L >= 4` is written as `L = 2^n + k` with `n >= 2` and
//! `0 <= k < 2^n`. On the first half of that dyadic block (`k < 2^(n-1)`)
//! there are two right-special factors and the complexity grows by 3 per
//! step; on the second half there is one and it grows by 2.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::factors::{sufficient_power, ExtensionRecord};
use crate::scan::FactorScan;
use crate::substitution::{tau_n_a, tau_n_x, Capacity};
use crate::word::{Alphabet, LetterSet, Word};

/// Position of a length inside its dyadic block, `len = 2^n + k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Regime {
    pub n: u32,
    pub k: u64,
}

impl Regime {
    /// `None` for `len == 0`.
    pub fn of(len: u64) -> Option<Regime> {
        if len == 0 {
            return None;
        }
        let n = len.ilog2();
        Some(Regime { n, k: len - (1 << n) })
    }

    /// `true` on the first half of the block, where `k < 2^(n-1)`.
    pub fn first_half(self) -> bool {
        self.n >= 1 && self.k < 1 << (self.n - 1)
    }
}

/// Number of factors of length `len`.
///
/// `C(0) = 1` counts the empty word.
pub fn complexity_formula(len: u64) -> u64 {
    match len {
        0 => 1,
        1 => 4,
        2 => 6,
        3 => 8,
        _ => {
            let Regime { n, k } = Regime::of(len).expect("len >= 4");
            if k < 1 << (n - 1) {
                (1 << (n + 1)) + (1 << (n - 1)) + 3 * k
            } else {
                (1 << (n + 1)) + (1 << n) + 2 * k
            }
        }
    }
}

/// `C(len + 1) - C(len)` for `len >= 4`.
pub fn complexity_delta_formula(len: u64) -> Result<u64> {
    if len < 4 {
        return Err(Error::OutOfRegime(len));
    }
    let regime = Regime::of(len).expect("len >= 4");
    Ok(if regime.first_half() { 3 } else { 2 })
}

/// `C(len + 1) - C(len)` for every length, using the small table
/// `C(1) - C(0) = 3`, `C(2) - C(1) = C(3) - C(2) = C(4) - C(3) = 2` below 4.
pub fn complexity_delta(len: u64) -> u64 {
    match len {
        0 => 3,
        1..=3 => 2,
        _ => complexity_delta_formula(len).expect("len >= 4"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SourceKind {
    Oracle,
    Formula,
}

/// `C(L)` and `C(L + 1) - C(L)` for `1 <= L <= max_length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityProfile {
    max_length: u64,
    values: Vec<u64>,
    deltas: Vec<u64>,
    source: SourceKind,
}

impl ComplexityProfile {
    pub fn from_formula(max_length: u64) -> Self {
        let values = (1..=max_length).map(complexity_formula).collect();
        let deltas = (1..=max_length).map(complexity_delta).collect();
        ComplexityProfile { max_length, values, deltas, source: SourceKind::Formula }
    }

    /// Counts factors by brute force for every length up to `max_length + 1`.
    pub fn from_oracle(max_length: u64, cap: Capacity) -> Result<Self> {
        if max_length == 0 {
            return Err(Error::ZeroLength);
        }
        let text = tau_n_a(sufficient_power(max_length + 1) + 3, cap)?;
        let mut scan = FactorScan::new(&text);
        let mut counts = Vec::with_capacity(max_length as usize + 1);
        for _ in 0..=max_length {
            scan.advance();
            counts.push(scan.distinct() as u64);
        }
        let deltas = counts.windows(2).map(|w| w[1] - w[0]).collect();
        counts.pop();
        Ok(ComplexityProfile { max_length, values: counts, deltas, source: SourceKind::Oracle })
    }

    pub fn max_length(&self) -> u64 {
        self.max_length
    }

    pub fn source(&self) -> SourceKind {
        self.source
    }

    /// `C(len)`; panics outside `1..=max_length`.
    pub fn value(&self, len: u64) -> u64 {
        self.values[(len - 1) as usize]
    }

    pub fn delta(&self, len: u64) -> u64 {
        self.deltas[(len - 1) as usize]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn deltas(&self) -> &[u64] {
        &self.deltas
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Table,
    Csv,
    Tsv,
}

pub const TABLE_COLUMNS: [&str; 6] = ["L", "C_formula", "C_oracle", "delta", "regime_n", "regime_k"];

/// Renders the per-length table with columns [`TABLE_COLUMNS`]; `delta` is
/// the oracle's first difference.
pub fn render_complexity_table(oracle: &ComplexityProfile, format: TableFormat) -> String {
    let rows: Vec<[String; 6]> = (1..=oracle.max_length())
        .map(|len| {
            let regime = Regime::of(len).expect("len >= 1");
            [
                len.to_string(),
                complexity_formula(len).to_string(),
                oracle.value(len).to_string(),
                oracle.delta(len).to_string(),
                regime.n.to_string(),
                regime.k.to_string(),
            ]
        })
        .collect();
    let header = TABLE_COLUMNS.map(String::from);
    let mut out = String::new();
    match format {
        TableFormat::Csv | TableFormat::Tsv => {
            let sep = if format == TableFormat::Csv { "," } else { "\t" };
            for row in std::iter::once(&header).chain(&rows) {
                out.push_str(&row.join(sep));
                out.push('\n');
            }
        }
        TableFormat::Table => {
            let mut widths = header.clone().map(|h| h.len());
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            for row in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> = row.iter().zip(widths).map(|(cell, w)| format!("{cell:>w$}")).collect();
                out.push_str(&cells.join("  "));
                out.push('\n');
            }
        }
    }
    out
}

/// Which clause of the classification produced a right-special factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Construction {
    /// Suffix of `tau^n(a)`, extendable by `x`, `y` and `z`.
    TauPowerSuffix,
    /// Suffix of `tau^(n-2)(a) tau^(n-2)(x) tau^(n-1)(a)`, extendable by
    /// `tau^(n-2)(x)` and `tau^(n-1)(x)`.
    JunctionSuffix,
    /// Lengths 1 to 3, below the range of the classification.
    SmallLength,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialEntry {
    pub word: Word,
    pub extensions: LetterSet,
    pub construction: Construction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialWordReport {
    pub length: u64,
    pub entries: Vec<SpecialEntry>,
}

impl SpecialWordReport {
    /// The `(word, extensions)` pairs, ignoring order and construction tags.
    pub fn pairs(&self) -> BTreeSet<(Word, LetterSet)> {
        self.entries.iter().map(|e| (e.word.clone(), e.extensions)).collect()
    }

    pub fn matches(&self, records: &[ExtensionRecord]) -> bool {
        let other: BTreeSet<(Word, LetterSet)> = records.iter().map(|r| (r.word.clone(), r.right)).collect();
        self.pairs() == other
    }
}

/// Right-special factors of lengths 1, 2, 3, read off the brute-force oracle.
const SMALL_RIGHT_SPECIAL: [&str; 3] = ["a", "xa", "axa"];

fn xyz() -> LetterSet {
    LetterSet::from_bits(0b1110)
}

/// The right-special factors of length `len` and their extensions.
pub fn right_special_formula(len: u64, cap: Capacity) -> Result<SpecialWordReport> {
    if len == 0 {
        return Err(Error::ZeroLength);
    }
    if len < 4 {
        let word = Alphabet::AXYZ.parse(SMALL_RIGHT_SPECIAL[len as usize - 1])?;
        return Ok(SpecialWordReport {
            length: len,
            entries: vec![SpecialEntry { word, extensions: xyz(), construction: Construction::SmallLength }],
        });
    }
    let regime = Regime::of(len).expect("len >= 4");
    let n = regime.n;
    let size = len as usize;

    let tau_n = tau_n_a(n, cap)?;
    let mut entries =
        vec![SpecialEntry { word: tau_n.suffix(size), extensions: xyz(), construction: Construction::TauPowerSuffix }];

    if regime.first_half() {
        // tau^(n-2)(a) is the first half of tau^(n-1)(a), which is the first half of tau^n(a).
        let prev = tau_n.prefix((1 << n) - 1);
        let prev2 = prev.prefix((1 << (n - 1)) - 1);
        let mut junction = prev2.into_letters();
        junction.push(tau_n_x(u64::from(n - 2)));
        junction.extend_from_slice(prev.letters());
        let junction = Word::from_letters(Alphabet::AXYZ, junction)?;
        entries.push(SpecialEntry {
            word: junction.suffix(size),
            extensions: [tau_n_x(u64::from(n - 2)), tau_n_x(u64::from(n - 1))].into_iter().collect(),
            construction: Construction::JunctionSuffix,
        });
    }
    Ok(SpecialWordReport { length: len, entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Complexity,
    Delta,
    RightSpecial,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Complexity => "complexity",
            CheckKind::Delta => "first difference",
            CheckKind::RightSpecial => "right-special factors",
        })
    }
}

/// First disagreement between a formula and the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub length: u64,
    pub check: CheckKind,
    pub formula: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub l_max: u64,
    /// Lengths that passed every check before the first mismatch, if any.
    pub lengths_checked: u64,
    pub mismatch: Option<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    /// `VERIFY pass L_max=<n>` or `VERIFY fail L_max=<n>`.
    pub fn summary_line(&self) -> String {
        let verdict = if self.passed() { "pass" } else { "fail" };
        format!("VERIFY {verdict} L_max={}", self.l_max)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => writeln!(
                f,
                "complexity, first differences and right-special factors agree with brute force for 1 <= L <= {}",
                self.l_max
            )?,
            Some(m) => {
                writeln!(f, "mismatch in {} at L={}: formula {}, oracle {}", m.check, m.length, m.formula, m.oracle)?
            }
        }
        write!(f, "{}", self.summary_line())
    }
}

fn render_pairs(pairs: &BTreeSet<(Word, LetterSet)>) -> String {
    let items: Vec<String> = pairs.iter().map(|(w, s)| format!("{w}:{{{}}}", s.render(Alphabet::AXYZ))).collect();
    format!("[{}]", items.join(" "))
}

/// Checks complexity, first differences and right-special factors against
/// a brute-force sweep for every `1 <= L <= l_max`, stopping at the first
/// disagreement.
pub fn verify_range(l_max: u64, cap: Capacity) -> Result<VerificationReport> {
    if l_max == 0 {
        return Err(Error::ZeroLength);
    }
    let text = tau_n_a(sufficient_power(l_max + 1) + 3, cap)?;
    let mut scan = FactorScan::new(&text);
    scan.advance();
    let mut report = VerificationReport { l_max, lengths_checked: 0, mismatch: None };

    for len in 1..=l_max {
        let count = scan.distinct() as u64;
        let oracle_special: BTreeSet<(Word, LetterSet)> = scan
            .extension_sets()
            .into_iter()
            .enumerate()
            .filter(|(_, (right, _))| right.len() >= 2)
            .map(|(class, (right, _))| {
                (Word::from_letters_unchecked(Alphabet::AXYZ, scan.factor(class).to_vec()), right)
            })
            .collect();
        scan.advance();
        let next = scan.distinct() as u64;

        let formula_special = right_special_formula(len, cap)?.pairs();
        let checks = [
            (CheckKind::Complexity, complexity_formula(len).to_string(), count.to_string()),
            (CheckKind::Delta, complexity_delta(len).to_string(), (next - count).to_string()),
            (CheckKind::RightSpecial, render_pairs(&formula_special), render_pairs(&oracle_special)),
        ];
        if let Some((check, formula, oracle)) = checks.into_iter().find(|(_, f, o)| f != o) {
            report.mismatch = Some(Mismatch { length: len, check, formula, oracle });
            return Ok(report);
        }
        report.lengths_checked = len;
    }
    Ok(report)
}
