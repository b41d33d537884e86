//! Relators of Lysenok's presentation
//! `<a, b, c, d | a^2, b^2, c^2, d^2, bcd, kappa^k((ad)^4), kappa^k((adacac)^4), k >= 0>`
//! with `kappa: a -> aca, b -> d, c -> b, d -> c`.
//!
//! `kappa` is the substitution `a -> axa, x -> y, y -> z, z -> x` read
//! through the relabeling `x -> c, y -> b, z -> d`.

use std::fmt;

use crate::error::Result;
use crate::substitution::{Capacity, Relabeling, Substitution};
use crate::word::{abcd, Alphabet, Word};

pub fn kappa() -> Substitution {
    Substitution::from_strs(Alphabet::ABCD, &["aca", "d", "b", "c"]).expect("valid substitution")
}

/// `a -> a, x -> c, y -> b, z -> d`; use [`Relabeling::inverse`] for the way back.
pub fn tau_kappa_bridge() -> Relabeling {
    Relabeling::from_pairs(Alphabet::AXYZ, Alphabet::ABCD, &[('a', 'a'), ('x', 'c'), ('y', 'b'), ('z', 'd')])
        .expect("valid bijection")
}

pub const STATIC_RELATORS: [&str; 5] = ["aa", "bb", "cc", "dd", "bcd"];

pub fn static_relators() -> Vec<Word> {
    STATIC_RELATORS.iter().map(|s| Alphabet::ABCD.parse(s).expect("abcd word")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelatorFamily {
    /// `kappa^k((ad)^4)`
    Ad4,
    /// `kappa^k((adacac)^4)`
    Adacac4,
}

impl RelatorFamily {
    pub const ALL: [RelatorFamily; 2] = [RelatorFamily::Ad4, RelatorFamily::Adacac4];

    pub fn name(self) -> &'static str {
        match self {
            RelatorFamily::Ad4 => "ad4",
            RelatorFamily::Adacac4 => "adacac4",
        }
    }

    pub fn base(self) -> Word {
        let period = match self {
            RelatorFamily::Ad4 => "ad",
            RelatorFamily::Adacac4 => "adacac",
        };
        Alphabet::ABCD.parse(&period.repeat(4)).expect("abcd word")
    }

    /// `|kappa^k(base)|`: each `kappa` step adds two letters per `a`, and the
    /// number of `a`s doubles.
    pub fn member_len(self, k: u32) -> u128 {
        let base = self.base();
        let a_count = base.count(abcd::A) as u128;
        // 2 * a_count * (1 + 2 + ... + 2^(k-1)) letters are added in total.
        let added = 1u128.checked_shl(k).and_then(|p| (p - 1).checked_mul(2 * a_count)).unwrap_or(u128::MAX);
        (base.len() as u128).saturating_add(added)
    }

    /// The members `kappa^0(base), ..., kappa^k_max(base)`.
    pub fn members(self, k_max: u32, cap: Capacity) -> Result<Vec<Word>> {
        cap.check(self.member_len(k_max))?;
        let kappa = kappa();
        let mut members = vec![self.base()];
        for _ in 0..k_max {
            let next = kappa.apply(members.last().expect("non-empty"))?;
            members.push(next);
        }
        Ok(members)
    }
}

impl fmt::Display for RelatorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `kappa^k` applied to the family's base word.
pub fn relator(family: RelatorFamily, k: u32, cap: Capacity) -> Result<Word> {
    Ok(family.members(k, cap)?.pop().expect("k + 1 members"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelatorTag {
    Static,
    Member { family: RelatorFamily, k: u32 },
}

impl fmt::Display for RelatorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelatorTag::Static => f.write_str("static"),
            RelatorTag::Member { family, k } => write!(f, "{family}:{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub tag: RelatorTag,
    pub word: Word,
}

impl Relator {
    /// `static:<word>` or `<family>:<k>:<word>`.
    pub fn annotated(&self) -> String {
        format!("{}:{}", self.tag, self.word)
    }
}

/// Members of one family for `k = 0..=k_max`, tagged.
pub fn family_relators(family: RelatorFamily, k_max: u32, cap: Capacity) -> Result<Vec<Relator>> {
    Ok(family
        .members(k_max, cap)?
        .into_iter()
        .zip(0..)
        .map(|(word, k)| Relator { tag: RelatorTag::Member { family, k }, word })
        .collect())
}

/// The static relators, then `kappa^k((ad)^4)` and `kappa^k((adacac)^4)`
/// for `k = 0, 1, ..., k_max` in that interleaved order.
pub fn lysenok_relators(k_max: u32, cap: Capacity) -> Result<Vec<Relator>> {
    let mut relators: Vec<Relator> =
        static_relators().into_iter().map(|word| Relator { tag: RelatorTag::Static, word }).collect();
    let ad4 = family_relators(RelatorFamily::Ad4, k_max, cap)?;
    let adacac4 = family_relators(RelatorFamily::Adacac4, k_max, cap)?;
    for (first, second) in ad4.into_iter().zip(adacac4) {
        relators.push(first);
        relators.push(second);
    }
    Ok(relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::substitution::{tau, tau_n_a};

    const CAP: Capacity = Capacity::DEFAULT;

    fn p(s: &str) -> Word {
        Alphabet::ABCD.parse(s).unwrap()
    }

    #[test]
    fn kappa_images() {
        let k = kappa();
        assert_eq!(k.apply(&p("a")).unwrap(), p("aca"));
        assert_eq!(k.apply(&p("b")).unwrap(), p("d"));
        assert_eq!(k.apply(&p("ad")).unwrap(), p("acac"));
    }

    #[test]
    fn relator_examples() {
        assert_eq!(relator(RelatorFamily::Ad4, 0, CAP).unwrap(), p("adadadad"));
        assert_eq!(relator(RelatorFamily::Ad4, 1, CAP).unwrap(), p("acacacacacacacac"));
        for k in 0..=10 {
            assert_eq!(relator(RelatorFamily::Ad4, k, CAP).unwrap().len(), 1 << (k + 3));
            assert_eq!(relator(RelatorFamily::Adacac4, k, CAP).unwrap().len(), 3 << (k + 3));
            for family in RelatorFamily::ALL {
                assert_eq!(family.member_len(k), relator(family, k, CAP).unwrap().len() as u128);
            }
        }
    }

    #[test]
    fn relator_capacity() {
        assert!(matches!(relator(RelatorFamily::Ad4, 20, Capacity::new(1 << 20)), Err(Error::Capacity { .. })));
        assert!(relator(RelatorFamily::Ad4, 17, Capacity::new(1 << 20)).is_ok());
        assert!(matches!(relator(RelatorFamily::Ad4, 500, CAP), Err(Error::Capacity { .. })));
    }

    #[test]
    fn lysenok_examples() {
        let words: Vec<String> = lysenok_relators(0, CAP).unwrap().iter().map(|r| r.word.to_string()).collect();
        assert_eq!(words, ["aa", "bb", "cc", "dd", "bcd", "adadadad", "adacacadacacadacacadacac"]);
        assert_eq!(lysenok_relators(1, CAP).unwrap().len(), 9);
        assert_eq!(lysenok_relators(2, CAP).unwrap().len(), 11);
        assert!(lysenok_relators(3, CAP).unwrap().iter().all(|r| r.word.alphabet() == Alphabet::ABCD));
    }

    #[test]
    fn annotation() {
        let rels = lysenok_relators(1, CAP).unwrap();
        assert_eq!(rels[0].annotated(), "static:aa");
        assert_eq!(rels[5].annotated(), "ad4:0:adadadad");
        assert_eq!(rels[8].tag, RelatorTag::Member { family: RelatorFamily::Adacac4, k: 1 });
    }

    #[test]
    fn bridge_examples() {
        let bridge = tau_kappa_bridge();
        let t = tau();
        let x = Alphabet::AXYZ.parse("x").unwrap();
        let c = bridge.apply(&x).unwrap();
        assert_eq!(c, p("c"));
        assert_eq!(bridge.apply(&t.apply(&x).unwrap()).unwrap(), kappa().apply(&c).unwrap());
        assert_eq!(bridge.apply(&tau_n_a(2, CAP).unwrap()).unwrap(), p("acabaca"));
        let axyz = Alphabet::AXYZ.parse("axyz").unwrap();
        assert_eq!(
            bridge.apply(&t.apply(&axyz).unwrap()).unwrap(),
            kappa().apply(&bridge.apply(&axyz).unwrap()).unwrap()
        );
    }
}
