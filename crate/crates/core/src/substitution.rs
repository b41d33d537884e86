//! Non-erasing substitutions and the words generated by `a -> axa, x -> y, y -> z, z -> x`.

use crate::error::{Error, Result};
use crate::word::{axyz, Alphabet, Letter, Word};

/// Upper bound on the number of letters any generator may materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Capacity(usize);

impl Capacity {
    pub const DEFAULT: Capacity = Capacity(1 << 26);

    pub const fn new(max_letters: usize) -> Self {
        Capacity(max_letters)
    }

    pub const fn get(self) -> usize {
        self.0
    }

    pub fn check(self, requested: u128) -> Result<()> {
        if requested > self.0 as u128 {
            Err(Error::Capacity { requested, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity::DEFAULT
    }
}

/// A map from letters to non-empty words over the same alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Substitution {
    /// `images[i]` is the image of the `i`-th letter of `alphabet`.
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::InvalidSubstitution(format!(
                "{} images given for an alphabet of {} letters",
                images.len(),
                alphabet.len()
            )));
        }
        for (letter, image) in alphabet.letters().zip(&images) {
            if image.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch { expected: alphabet, found: image.alphabet() });
            }
            if image.is_empty() {
                return Err(Error::InvalidSubstitution(format!("image of {:?} is empty", alphabet.symbol(letter))));
            }
        }
        Ok(Substitution { alphabet, images })
    }

    /// Builds a substitution from the images written as strings, in alphabet order.
    pub fn from_strs(alphabet: Alphabet, images: &[&str]) -> Result<Self> {
        let images = images.iter().map(|s| alphabet.parse(s)).collect::<Result<Vec<_>>>()?;
        Substitution::new(alphabet, images)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter.index()]
    }

    /// Length of `self(w)` without building it.
    pub fn image_len(&self, w: &Word) -> u128 {
        w.letters().iter().map(|l| self.image(*l).len() as u128).sum()
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.check_alphabet(w)?;
        let mut letters = Vec::with_capacity(self.image_len(w) as usize);
        for l in w.letters() {
            letters.extend_from_slice(self.image(*l).letters());
        }
        Ok(Word::from_letters_unchecked(self.alphabet, letters))
    }

    /// `self` applied `n` times to the one-letter word `letter`.
    ///
    /// Chains of one-letter images (`x -> y -> z -> x` here) are followed
    /// symbolically, so `n` is reduced modulo the cycle length instead of
    /// being iterated.
    pub fn iterate(&self, letter: Letter, n: u64, cap: Capacity) -> Result<Word> {
        if !self.alphabet.contains(letter) {
            return Err(Error::LetterOutOfRange { code: letter.code(), alphabet: self.alphabet });
        }
        cap.check(1)?;

        let mut current = letter;
        let mut steps = 0u64;
        let mut first_seen: Vec<Option<u64>> = vec![None; self.alphabet.len()];
        while steps < n {
            let image = self.image(current);
            if image.len() != 1 {
                break;
            }
            if let Some(first) = first_seen[current.index()] {
                let remaining = (n - steps) % (steps - first);
                for _ in 0..remaining {
                    current = self.image(current).letters()[0];
                }
                return Ok(Word::from_letters_unchecked(self.alphabet, vec![current]));
            }
            first_seen[current.index()] = Some(steps);
            current = image.letters()[0];
            steps += 1;
        }

        let mut word = Word::from_letters_unchecked(self.alphabet, vec![current]);
        for _ in steps..n {
            cap.check(self.image_len(&word))?;
            word = self.apply(&word)?;
        }
        Ok(word)
    }

    fn check_alphabet(&self, w: &Word) -> Result<()> {
        if w.alphabet() == self.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch { expected: self.alphabet, found: w.alphabet() })
        }
    }
}

/// The substitution `a -> axa, x -> y, y -> z, z -> x` over [`Alphabet::AXYZ`].
pub fn tau() -> Substitution {
    Substitution::from_strs(Alphabet::AXYZ, &["axa", "y", "z", "x"]).expect("valid substitution")
}

/// The letter `tau^n(x)`: `x`, `y`, `z` for `n` congruent to 0, 1, 2 mod 3.
pub fn tau_n_x(n: u64) -> Letter {
    match n % 3 {
        0 => axyz::X,
        1 => axyz::Y,
        _ => axyz::Z,
    }
}

/// `|tau^n(a)| = 2^(n+1) - 1`, saturating.
pub fn tau_n_a_len(n: u32) -> u128 {
    1u128.checked_shl(n + 1).map_or(u128::MAX, |p| p - 1)
}

/// Least `n` with `|tau^n(a)| = 2^(n+1) - 1 >= len`.
pub fn covering_power(len: u64) -> u32 {
    let mut n = 0;
    while tau_n_a_len(n) < len as u128 {
        n += 1;
    }
    n
}

/// `tau^n(a)`, built with `tau^(k+1)(a) = tau^k(a) tau^k(x) tau^k(a)`.
pub fn tau_n_a(n: u32, cap: Capacity) -> Result<Word> {
    let len = tau_n_a_len(n);
    cap.check(len)?;
    let mut letters = Vec::with_capacity(len as usize);
    letters.push(axyz::A);
    for k in 0..n {
        let half = letters.len();
        letters.push(tau_n_x(k as u64));
        letters.extend_from_within(..half);
    }
    Ok(Word::from_letters_unchecked(Alphabet::AXYZ, letters))
}

/// A prefix of the one-sided fixed point `eta = lim tau^n(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointPrefix {
    word: Word,
    guaranteed_length: usize,
}

impl FixedPointPrefix {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    /// The word is a prefix of every `tau^n(a)` at least this long.
    pub fn guaranteed_length(&self) -> usize {
        self.guaranteed_length
    }

    /// The symbols `r_1, r_2, ...` sitting between consecutive `a`s.
    pub fn separators(&self) -> impl Iterator<Item = Letter> + '_ {
        self.word.letters().iter().skip(1).step_by(2).copied()
    }
}

/// The length-`len` prefix of the fixed point.
///
/// Only the prefix itself is materialized: with `n` the least power whose
/// word covers `len`, it is `tau^(n-1)(a) tau^(n-1)(x)` followed by the
/// needed head of `tau^(n-1)(a)`.
pub fn eta_prefix(len: usize, cap: Capacity) -> Result<FixedPointPrefix> {
    if len == 0 {
        return Err(Error::ZeroLength);
    }
    cap.check(len as u128)?;
    let n = covering_power(len as u64);
    let word = if n == 0 {
        tau_n_a(0, cap)?
    } else {
        let mut letters = tau_n_a(n - 1, cap)?.into_letters();
        let half = letters.len();
        letters.reserve(len - half);
        letters.push(tau_n_x(u64::from(n - 1)));
        letters.extend_from_within(..len - half - 1);
        Word::from_letters_unchecked(Alphabet::AXYZ, letters)
    };
    Ok(FixedPointPrefix { word, guaranteed_length: len })
}

/// A letter-wise bijection between two alphabets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    from: Alphabet,
    to: Alphabet,
    images: Vec<Letter>,
}

impl Relabeling {
    pub fn new(from: Alphabet, to: Alphabet, images: Vec<Letter>) -> Result<Self> {
        if from.len() != to.len() || images.len() != from.len() {
            return Err(Error::NotABijection(format!("`{from}` -> `{to}` with {} images", images.len())));
        }
        for (i, l) in images.iter().enumerate() {
            if !to.contains(*l) || images[..i].contains(l) {
                return Err(Error::NotABijection(format!("image list {images:?} for `{from}` -> `{to}`")));
            }
        }
        Ok(Relabeling { from, to, images })
    }

    /// Builds a relabeling from `(source symbol, target symbol)` pairs.
    pub fn from_pairs(from: Alphabet, to: Alphabet, pairs: &[(char, char)]) -> Result<Self> {
        let mut images = vec![None; from.len()];
        for &(s, t) in pairs {
            let slot = &mut images[from.letter(s)?.index()];
            if slot.is_some() {
                return Err(Error::NotABijection(format!("{s:?} mapped twice")));
            }
            *slot = Some(to.letter(t)?);
        }
        let images = images
            .into_iter()
            .zip(from.symbols().chars())
            .map(|(img, s)| img.ok_or_else(|| Error::NotABijection(format!("{s:?} is unmapped"))))
            .collect::<Result<Vec<_>>>()?;
        Relabeling::new(from, to, images)
    }

    pub fn source(&self) -> Alphabet {
        self.from
    }

    pub fn target(&self) -> Alphabet {
        self.to
    }

    pub fn map_letter(&self, letter: Letter) -> Letter {
        self.images[letter.index()]
    }

    pub fn inverse(&self) -> Relabeling {
        let mut images = vec![Letter::new(0); self.images.len()];
        for (src, dst) in self.from.letters().zip(&self.images) {
            images[dst.index()] = src;
        }
        Relabeling { from: self.to, to: self.from, images }
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.alphabet() != self.from {
            return Err(Error::AlphabetMismatch { expected: self.from, found: w.alphabet() });
        }
        let letters = w.letters().iter().map(|l| self.map_letter(*l)).collect();
        Ok(Word::from_letters_unchecked(self.to, letters))
    }
}
