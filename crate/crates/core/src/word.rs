//! Letters, alphabets and finite words.
//!
//! A [`Letter`] is a small integer code; the [`Alphabet`] it is read in
//! supplies the printable symbol. Codes follow the order in which the
//! alphabet lists its symbols, so comparing words compares them
//! lexicographically in alphabet order (`a < x < y < z`, `a < b < c < d`).

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    symbols: &'static str,
}

impl Alphabet {
    /// `{a, x, y, z}`, the alphabet of the substitution `a -> axa, x -> y, y -> z, z -> x`.
    pub const AXYZ: Alphabet = Alphabet { symbols: "axyz" };
    /// `{a, b, c, d}`, the generators of the Lysenok presentation.
    pub const ABCD: Alphabet = Alphabet { symbols: "abcd" };

    pub fn new(symbols: &'static str) -> Result<Self> {
        let chars: Vec<char> = symbols.chars().collect();
        let distinct = chars.iter().enumerate().all(|(i, c)| !chars[..i].contains(c));
        if chars.is_empty() || chars.len() > LetterSet::CAPACITY || !distinct || !symbols.is_ascii() {
            return Err(Error::InvalidAlphabet(symbols));
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(self) -> bool {
        self.symbols.is_empty()
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.len() as u8).map(Letter)
    }

    pub fn contains(self, letter: Letter) -> bool {
        letter.index() < self.len()
    }

    /// Printable symbol of `letter`.
    ///
    /// Panics if the letter's code is outside this alphabet.
    pub fn symbol(self, letter: Letter) -> char {
        self.symbols.as_bytes()[letter.index()] as char
    }

    pub fn letter(self, symbol: char) -> Result<Letter> {
        self.symbols
            .find(symbol)
            .filter(|_| symbol.is_ascii())
            .map(|i| Letter(i as u8))
            .ok_or(Error::UnknownSymbol { symbol, alphabet: self })
    }

    /// Parses a plain string of symbols into a word over this alphabet.
    pub fn parse(self, text: &str) -> Result<Word> {
        let letters = text.chars().map(|c| self.letter(c)).collect::<Result<Vec<_>>>()?;
        Ok(Word { alphabet: self, letters })
    }

    pub fn symbols(self) -> &'static str {
        self.symbols
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbols)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({:?})", self.symbols)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
#[repr(transparent)]
pub struct Letter(u8);

impl Letter {
    pub const fn new(code: u8) -> Self {
        Letter(code)
    }

    pub const fn code(self) -> u8 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of letters stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LetterSet(u32);

impl LetterSet {
    pub const CAPACITY: usize = 32;

    pub const fn empty() -> Self {
        LetterSet(0)
    }

    pub const fn from_bits(bits: u32) -> Self {
        LetterSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn insert(&mut self, letter: Letter) {
        self.0 |= 1 << letter.code();
    }

    pub const fn contains(self, letter: Letter) -> bool {
        self.0 & (1 << letter.code()) != 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Letter> {
        (0..Self::CAPACITY as u8).filter(move |c| self.0 & (1 << c) != 0).map(Letter)
    }

    /// Renders the set as comma-separated symbols in alphabet order, e.g. `x,y,z`.
    pub fn render(self, alphabet: Alphabet) -> String {
        self.iter().map(|l| alphabet.symbol(l).to_string()).collect::<Vec<_>>().join(",")
    }
}

impl FromIterator<Letter> for LetterSet {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        let mut set = LetterSet::empty();
        for l in iter {
            set.insert(l);
        }
        set
    }
}

impl fmt::Debug for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(Letter::code)).finish()
    }
}

/// A finite word over a fixed alphabet. The empty word is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(alphabet: Alphabet) -> Self {
        Word { alphabet, letters: Vec::new() }
    }

    pub fn from_letters(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| !alphabet.contains(**l)) {
            return Err(Error::LetterOutOfRange { code: bad.code(), alphabet });
        }
        Ok(Word { alphabet, letters })
    }

    /// Builds a word from letters already known to lie in `alphabet`.
    pub(crate) fn from_letters_unchecked(alphabet: Alphabet, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| alphabet.contains(*l)));
        Word { alphabet, letters }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { alphabet: self.alphabet, letters }
    }

    /// The last `len` letters; the whole word if it is shorter.
    pub fn suffix(&self, len: usize) -> Word {
        let start = self.len().saturating_sub(len);
        Word { alphabet: self.alphabet, letters: self.letters[start..].to_vec() }
    }

    pub fn prefix(&self, len: usize) -> Word {
        let end = len.min(self.len());
        Word { alphabet: self.alphabet, letters: self.letters[..end].to_vec() }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.alphabet == other.alphabet && other.letters.starts_with(&self.letters)
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|l| **l == letter).count()
    }

    pub fn push(&mut self, letter: Letter) {
        assert!(self.alphabet.contains(letter), "letter outside alphabet");
        self.letters.push(letter);
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch { expected: self.alphabet, found: other.alphabet });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word { alphabet: self.alphabet, letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters.iter().map(|l| self.alphabet.symbol(*l)).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_string())
    }
}

/// Letters of [`Alphabet::AXYZ`].
pub mod axyz {
    use super::Letter;

    pub const A: Letter = Letter::new(0);
    pub const X: Letter = Letter::new(1);
    pub const Y: Letter = Letter::new(2);
    pub const Z: Letter = Letter::new(3);
}

/// Letters of [`Alphabet::ABCD`].
pub mod abcd {
    use super::Letter;

    pub const A: Letter = Letter::new(0);
    pub const B: Letter = Letter::new(1);
    pub const C: Letter = Letter::new(2);
    pub const D: Letter = Letter::new(3);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w = Alphabet::AXYZ.parse("axay").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.to_string(), "axay");
        assert_eq!(w.reverse().to_string(), "yaxa");
        assert!(Alphabet::AXYZ.parse("").unwrap().is_empty());
    }

    #[test]
    fn unknown_symbol() {
        assert_eq!(Alphabet::AXYZ.parse("ab"), Err(Error::UnknownSymbol { symbol: 'b', alphabet: Alphabet::AXYZ }));
    }

    #[test]
    fn reverse_examples() {
        for (w, r) in [("axay", "yaxa"), ("", ""), ("axa", "axa")] {
            assert_eq!(Alphabet::AXYZ.parse(w).unwrap().reverse().to_string(), r);
        }
    }

    #[test]
    fn order_follows_alphabet() {
        let p = |s| Alphabet::AXYZ.parse(s).unwrap();
        assert!(p("az") < p("xa"));
        assert!(p("ax") < p("ay"));
        assert!(p("a") < p("ax"));
    }

    #[test]
    fn bad_alphabets() {
        assert!(Alphabet::new("aa").is_err());
        assert!(Alphabet::new("").is_err());
        assert!(Alphabet::new("01").is_ok());
    }

    #[test]
    fn letter_set_render() {
        let set: LetterSet = Alphabet::AXYZ.parse("zyx").unwrap().letters().iter().copied().collect();
        assert_eq!(set.len(), 3);
        assert_eq!(set.render(Alphabet::AXYZ), "x,y,z");
        assert_eq!(LetterSet::empty().render(Alphabet::AXYZ), "");
    }

    #[test]
    fn suffix_and_prefix() {
        let w = Alphabet::AXYZ.parse("axayaxa").unwrap();
        assert_eq!(w.suffix(4).to_string(), "yaxa");
        assert_eq!(w.prefix(3).to_string(), "axa");
        assert_eq!(w.suffix(100), w);
    }
}
