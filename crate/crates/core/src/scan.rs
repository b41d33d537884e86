//! Streaming enumeration of factor classes, one length at a time.
//!
//! Each window of the text carries the id of its factor class. Going from
//! length `L` to `L + 1` splits every class by the letter that follows the
//! window, so a full sweep over lengths `1..=L_max` costs `O(L_max * |text|)`
//! and never hashes a word.

use crate::word::{Letter, LetterSet, Word};

const UNSEEN: u32 = u32::MAX;

pub struct FactorScan<'t> {
    text: &'t [Letter],
    sigma: usize,
    length: usize,
    /// Class id of the window starting at each position.
    class: Vec<u32>,
    /// Leftmost start of each class.
    first: Vec<u32>,
    table: Vec<u32>,
}

impl<'t> FactorScan<'t> {
    /// Starts at length 0, where the empty word is the only class.
    pub fn new(text: &'t Word) -> Self {
        let letters = text.letters();
        assert!(letters.len() < UNSEEN as usize, "text too long for 32-bit class ids");
        FactorScan {
            text: letters,
            sigma: text.alphabet().len(),
            length: 0,
            class: vec![0; letters.len() + 1],
            first: vec![0],
            table: Vec::new(),
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of distinct factors of the current length.
    pub fn distinct(&self) -> usize {
        self.first.len()
    }

    pub fn can_advance(&self) -> bool {
        self.length < self.text.len()
    }

    /// Moves to the next length.
    ///
    /// Panics when the windows would be longer than the text.
    pub fn advance(&mut self) {
        assert!(self.can_advance(), "scan already at full text length");
        let windows = self.text.len() - self.length;
        self.table.clear();
        self.table.resize(self.first.len() * self.sigma, UNSEEN);
        let mut first = Vec::with_capacity(self.first.len() * 2);
        for start in 0..windows {
            let key = self.class[start] as usize * self.sigma + self.text[start + self.length].index();
            let slot = &mut self.table[key];
            if *slot == UNSEEN {
                *slot = first.len() as u32;
                first.push(start as u32);
            }
            self.class[start] = *slot;
        }
        self.class.truncate(windows);
        self.first = first;
        self.length += 1;
    }

    pub fn advance_to(&mut self, length: usize) {
        while self.length < length {
            self.advance();
        }
    }

    /// The factor with the given class id.
    pub fn factor(&self, class: usize) -> &'t [Letter] {
        let start = self.first[class] as usize;
        &self.text[start..start + self.length]
    }

    pub fn factors(&self) -> impl Iterator<Item = &'t [Letter]> + '_ {
        (0..self.distinct()).map(|c| self.factor(c))
    }

    /// Right and left extension sets per class, as seen inside the text.
    ///
    /// These are the true extension sets when the text contains every
    /// factor of length `length() + 1`.
    pub fn extension_sets(&self) -> Vec<(LetterSet, LetterSet)> {
        let mut sets = vec![(LetterSet::empty(), LetterSet::empty()); self.distinct()];
        for (start, &class) in self.class.iter().enumerate() {
            let entry = &mut sets[class as usize];
            if let Some(&next) = self.text.get(start + self.length) {
                entry.0.insert(next);
            }
            if start > 0 {
                entry.1.insert(self.text[start - 1]);
            }
        }
        sets
    }
}
