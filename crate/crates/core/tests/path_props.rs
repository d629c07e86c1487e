mod common;

use common::{all_paths_naive, arb_path, grammar_in_d, schroder_oracle};
use proptest::prelude::*;
use schroder::enumeration::ab_sequences;
use schroder::path::{generate_paths, DScan};
use schroder::{FeatureKind, Limits, SchroderPath};

fn paths(n: usize, restrict: bool) -> Vec<SchroderPath> {
    generate_paths(n, restrict, &Limits::default()).unwrap().collect()
}

proptest! {
    #[test]
    fn rev_is_an_involution(p in arb_path(30)) {
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!(p.reverse().len(), p.len());
    }

    #[test]
    fn psi_is_an_involution(p in arb_path(30)) {
        let q = p.psi();
        prop_assert_eq!(q.len(), p.len());
        prop_assert!(SchroderPath::new(q.steps().to_vec()).is_ok());
        prop_assert_eq!(q.psi(), p);
    }

    #[test]
    fn scan_matches_grammar(p in arb_path(30)) {
        prop_assert_eq!(p.is_in_d(), grammar_in_d(p.steps()));
    }

    #[test]
    fn d_is_closed_under_rev_and_psi(p in arb_path(30)) {
        prop_assert_eq!(p.is_in_d(), p.reverse().is_in_d());
        prop_assert_eq!(p.is_in_d(), p.psi().is_in_d());
    }

    #[test]
    fn text_round_trip(p in arb_path(30)) {
        prop_assert_eq!(p.to_string().parse::<SchroderPath>().unwrap(), p);
    }
}

#[test]
fn generator_matches_naive_enumeration() {
    for n in 0..=7 {
        let mut naive = all_paths_naive(n);
        naive.sort();
        let generated: Vec<String> = paths(n, false).iter().map(|p| p.to_string()).collect();
        assert_eq!(generated, naive, "n={n}");
    }
}

#[test]
fn path_counts_are_schroder_numbers() {
    let r = schroder_oracle(9);
    for (n, &expected) in r.iter().enumerate() {
        assert_eq!(paths(n, false).len() as u128, expected, "n={n}");
    }
}

#[test]
fn d_counts_match_a() {
    let (a, _) = ab_sequences(9);
    for n in 0..=9 {
        let restricted = paths(n, true);
        let filtered = paths(n, false).into_iter().filter(|p| grammar_in_d(p.steps())).count();
        assert_eq!(restricted.len(), filtered, "n={n}");
        assert_eq!(restricted.len().to_string(), a.values[n].to_string(), "n={n}");
    }
}

#[test]
fn scan_matches_grammar_exhaustively() {
    for n in 0..=8 {
        for p in paths(n, false) {
            assert_eq!(p.is_in_d(), grammar_in_d(p.steps()), "{p}");
            let mut scan = DScan::default();
            let accepted = p.steps().iter().all(|&s| scan.push(s)) && scan.is_complete();
            assert_eq!(accepted, p.is_in_d(), "{p}");
        }
    }
}

#[test]
fn closure_exhaustively() {
    for n in 0..=8 {
        for p in paths(n, false) {
            assert_eq!(p.is_in_d(), p.reverse().is_in_d(), "{p}");
            assert_eq!(p.is_in_d(), p.psi().is_in_d(), "{p}");
            assert_eq!(p.reverse().reverse(), p);
            assert_eq!(p.psi().psi(), p);
        }
    }
}

#[test]
fn features_mirror_under_rev() {
    for n in 0..=8 {
        for p in paths(n, false) {
            let mut mirrored: Vec<(FeatureKind, usize)> = p
                .features()
                .features
                .iter()
                .map(|f| (f.kind, n - f.t))
                .collect();
            mirrored.sort_by_key(|&(_, t)| t);
            let rev: Vec<(FeatureKind, usize)> = p
                .reverse()
                .features()
                .features
                .iter()
                .map(|f| (f.kind, f.t))
                .collect();
            assert_eq!(mirrored, rev, "{p}");
        }
    }
}

#[test]
fn earliest_level_of_rev() {
    for n in 1..=8 {
        for p in paths(n, true) {
            let f = p.features();
            if f.latest_level >= 1 {
                assert_eq!(p.reverse().features().earliest_level, n - f.latest_level, "{p}");
            }
        }
    }
}

proptest! {
    #[test]
    fn grammar_paths_are_accepted(p in common::arb_d_path(24)) {
        prop_assert!(grammar_in_d(p.steps()));
        prop_assert!(p.is_in_d());
        prop_assert!(p.reverse().is_in_d());
        prop_assert!(p.psi().is_in_d());
    }
}
