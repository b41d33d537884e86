use proptest::prelude::*;
use subshift::presentation::RelatorFamily;
use subshift::word::{abcd, axyz};
use subshift::{eta_prefix, kappa, relator, tau, tau_kappa_bridge, tau_n_a, Alphabet, Capacity, Letter, Word};

const CAP: Capacity = Capacity::DEFAULT;

fn word_over(alphabet: Alphabet, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..alphabet.len() as u8, 0..=max_len)
        .prop_map(move |codes| Word::from_letters(alphabet, codes.into_iter().map(Letter::new).collect()).unwrap())
}

#[test]
fn tau_powers_double() {
    let t = tau();
    for n in 0..=16u32 {
        let w = tau_n_a(n, CAP).unwrap();
        assert_eq!(w.len(), (1 << (n + 1)) - 1);
        assert_eq!(w.count(axyz::A), 1 << n);
        assert_eq!(w.len() - w.count(axyz::A), (1 << n) - 1);
        assert!(w.is_prefix_of(&tau_n_a(n + 1, CAP).unwrap()));
        assert_eq!(w, t.iterate(axyz::A, u64::from(n), CAP).unwrap());
        assert_eq!(w, w.reverse());
    }
}

#[test]
fn conjugacy_on_long_word() {
    let bridge = tau_kappa_bridge();
    let w = eta_prefix(1 << 16, CAP).unwrap().into_word();
    assert_eq!(bridge.apply(&tau().apply(&w).unwrap()).unwrap(), kappa().apply(&bridge.apply(&w).unwrap()).unwrap());
}

proptest! {
    #[test]
    fn eta_prefixes_nest(a in 1usize..3000, b in 1usize..3000) {
        let (short, long) = (a.min(b), a.max(b));
        let p = eta_prefix(short, CAP).unwrap();
        let q = eta_prefix(long, CAP).unwrap();
        prop_assert_eq!(p.word().len(), short);
        prop_assert!(p.word().is_prefix_of(q.word()));
    }

    #[test]
    fn tau_and_kappa_are_conjugate(w in word_over(Alphabet::AXYZ, 64)) {
        let bridge = tau_kappa_bridge();
        let lhs = bridge.apply(&tau().apply(&w).unwrap()).unwrap();
        let rhs = kappa().apply(&bridge.apply(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(bridge.inverse().apply(&bridge.apply(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn kappa_length_and_a_count(w in word_over(Alphabet::ABCD, 64)) {
        let image = kappa().apply(&w).unwrap();
        prop_assert_eq!(image.len(), w.len() + 2 * w.count(abcd::A));
        prop_assert_eq!(image.count(abcd::A), 2 * w.count(abcd::A));
    }

    #[test]
    fn iterate_agrees_with_repeated_apply(code in 0u8..4, n in 0u64..12) {
        let t = tau();
        let letter = Letter::new(code);
        let mut w = Word::from_letters(Alphabet::AXYZ, vec![letter]).unwrap();
        for _ in 0..n {
            w = t.apply(&w).unwrap();
        }
        prop_assert_eq!(t.iterate(letter, n, CAP).unwrap(), w);
    }
}

#[test]
fn relator_families_follow_kappa() {
    let k = kappa();
    for family in RelatorFamily::ALL {
        for step in 0..10 {
            let here = relator(family, step, CAP).unwrap();
            let next = relator(family, step + 1, CAP).unwrap();
            assert_eq!(next, k.apply(&here).unwrap());
            assert_eq!(next.len(), here.len() + 2 * here.count(abcd::A));
        }
    }
}
