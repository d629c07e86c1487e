mod common;

use common::{arb_entries, naive_avoids_pair, naive_contains};
use proptest::prelude::*;
use schroder::perm::{all_permutations, generate_centrosymmetric};
use schroder::{Limits, Pattern, Permutation};

fn perm(entries: Vec<u8>) -> Permutation {
    Permutation::new(entries).unwrap()
}

proptest! {
    #[test]
    fn inverse_is_an_involution(e in arb_entries(40)) {
        let pi = perm(e);
        prop_assert_eq!(pi.inverse().inverse(), pi);
    }

    #[test]
    fn reverse_complement_is_an_involution(e in arb_entries(40)) {
        let pi = perm(e);
        prop_assert_eq!(pi.reverse_complement().reverse_complement(), pi);
    }

    #[test]
    fn rc_and_inverse_commute(e in arb_entries(40)) {
        let pi = perm(e);
        prop_assert_eq!(pi.reverse_complement().inverse(), pi.inverse().reverse_complement());
    }

    #[test]
    fn fast_check_matches_oracle(e in arb_entries(11)) {
        let pi = perm(e.clone());
        prop_assert_eq!(pi.avoids_1243_2143(), naive_avoids_pair(&e));
        prop_assert_eq!(pi.avoids_all(&Pattern::schroder_pair()), naive_avoids_pair(&e));
    }

    #[test]
    fn pattern_scan_matches_oracle(e in arb_entries(9), p in arb_entries(4)) {
        let pi = perm(e.clone());
        let pattern = Pattern::new(perm(p.clone())).unwrap();
        prop_assert_eq!(pi.contains_pattern(&pattern), naive_contains(&e, &p));
    }

    #[test]
    fn display_parse_round_trip(e in arb_entries(30)) {
        let pi = perm(e);
        prop_assert_eq!(pi.to_string().parse::<Permutation>().unwrap(), pi);
    }
}

#[test]
fn inverse_preserves_class_exhaustively() {
    let lim = Limits::default();
    for n in 1..=8 {
        for pi in all_permutations(n, &lim).unwrap() {
            assert_eq!(
                pi.avoids_1243_2143(),
                pi.inverse().avoids_1243_2143(),
                "{pi}"
            );
        }
    }
}

#[test]
fn fast_check_matches_oracle_exhaustively() {
    let lim = Limits::default();
    for n in 1..=8 {
        for pi in all_permutations(n, &lim).unwrap() {
            assert_eq!(pi.avoids_1243_2143(), naive_avoids_pair(pi.entries()), "{pi}");
        }
    }
}

#[test]
fn centrosymmetric_generator_matches_filter() {
    let lim = Limits::default();
    for n in 1..=8 {
        let generated: Vec<Permutation> = generate_centrosymmetric(n, false, &lim).unwrap().collect();
        let filtered: Vec<Permutation> = all_permutations(n, &lim)
            .unwrap()
            .filter(|p| p.reverse_complement() == *p)
            .collect();
        assert_eq!(generated, filtered, "n={n}");
        let half = n / 2;
        let factorial: usize = (1..=half).product();
        assert_eq!(generated.len(), (1 << half) * factorial);

        let involutions: Vec<Permutation> = generate_centrosymmetric(n, true, &lim).unwrap().collect();
        let expected: Vec<Permutation> = filtered.into_iter().filter(|p| p.inverse() == *p).collect();
        assert_eq!(involutions, expected, "n={n}");
    }
}

#[test]
fn length_one_is_symmetric() {
    let one = perm(vec![1]);
    assert!(one.is_centrosymmetric());
    assert!(one.is_involution());
    assert!("".parse::<Permutation>().is_err());
}
