//! Cross-checks between the two brute-force routes (hashing windows and the
//! streaming class refinement) and the identities relating extension sets,
//! complexity and Rauzy graphs.

use std::collections::BTreeSet;

use subshift::factors::harvest_text;
use subshift::scan::FactorScan;
use subshift::{
    build_rauzy, complexity_formula, extension_records, factor_set, is_factor, right_special_formula,
    right_special_oracle, sufficient_power, tau_n_a, Alphabet, Capacity, ComplexityProfile, Letter, Word,
};

const CAP: Capacity = Capacity::DEFAULT;

#[test]
fn scan_agrees_with_window_hashing() {
    let text = harvest_text(161, CAP).unwrap();
    let mut scan = FactorScan::new(&text);
    for len in 1..=160 {
        scan.advance();
        let streamed: BTreeSet<Word> =
            scan.factors().map(|f| Word::from_letters(Alphabet::AXYZ, f.to_vec()).unwrap()).collect();
        assert_eq!(&streamed, factor_set(len, CAP).unwrap().words(), "length {len}");
    }
}

#[test]
fn harvest_is_stable_one_power_up() {
    for len in 1..=300usize {
        let m = sufficient_power(len as u64) + 3;
        let windows = |w: Word| -> BTreeSet<Vec<Letter>> { w.letters().windows(len).map(<[Letter]>::to_vec).collect() };
        assert_eq!(windows(tau_n_a(m, CAP).unwrap()), windows(tau_n_a(m + 1, CAP).unwrap()), "length {len}");
    }
}

#[test]
fn first_difference_counts_extra_extensions() {
    let profile = ComplexityProfile::from_oracle(300, CAP).unwrap();
    for len in 1..=300u64 {
        let surplus: usize = right_special_oracle(len as usize, CAP).unwrap().iter().map(|r| r.right.len() - 1).sum();
        assert_eq!(surplus as u64, profile.delta(len), "length {len}");
        let left_surplus: usize = extension_records(len as usize, CAP).unwrap().iter().map(|r| r.left.len() - 1).sum();
        assert_eq!(left_surplus as u64, profile.delta(len), "length {len}");
    }
}

#[test]
fn formula_words_are_factors_with_claimed_extensions() {
    for len in 1..=600u64 {
        for entry in right_special_formula(len, CAP).unwrap().entries {
            assert!(is_factor(&entry.word, CAP).unwrap());
            for letter in entry.extensions.iter() {
                let mut extended = entry.word.clone();
                extended.push(letter);
                assert!(is_factor(&extended, CAP).unwrap(), "{extended}");
            }
        }
    }
}

#[test]
fn rauzy_degrees_match_extensions() {
    for order in 1..=64usize {
        let g = build_rauzy(order, CAP).unwrap();
        assert_eq!(g.vertices().len() as u64, complexity_formula(order as u64));
        assert_eq!(g.edges().len() as u64, complexity_formula(order as u64 + 1));
        let out = g.out_degrees();
        let inc = g.in_degrees();
        for record in extension_records(order, CAP).unwrap() {
            let v = g.vertex_index(&record.word).unwrap();
            assert_eq!(out[v], record.right.len());
            assert_eq!(inc[v], record.left.len());
        }
        let surplus = |deg: &[usize]| deg.iter().map(|d| d.saturating_sub(1)).sum::<usize>() as u64;
        let delta = complexity_formula(order as u64 + 1) - complexity_formula(order as u64);
        assert_eq!(surplus(&out), delta);
        assert_eq!(surplus(&inc), delta);
        assert!(out.iter().chain(&inc).all(|d| *d >= 1));
    }
}

#[test]
fn reversal_is_rauzy_anti_isomorphism() {
    for order in 1..=64usize {
        let g = build_rauzy(order, CAP).unwrap();
        let edges: BTreeSet<(Word, Word)> =
            g.edges().iter().map(|e| (g.vertices()[e.source].clone(), g.vertices()[e.target].clone())).collect();
        for (source, target) in &edges {
            assert!(edges.contains(&(target.reverse(), source.reverse())), "order {order}");
        }
    }
}
