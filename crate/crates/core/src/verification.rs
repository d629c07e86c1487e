//! Exhaustive desk-scale checks of every structural claim, reported as
//! [`VerificationReport`]s.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijection::{phi, phi_trace, sigma_decomposition, TranspositionWord};
use crate::enumeration::{
    ab_sequences, cd_sequences, count, pell_sequence, q_sequence, schroder_numbers, CountQuery,
    Family, Method,
};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::path::{generate_paths, SchroderPath, Step};
use crate::perm::{all_permutations, Pattern, Permutation};

/// Reports keep at most this many counterexamples.
pub const MAX_REPORTED_FAILURES: usize = 10;

/// Largest index accepted by the sequence claims.
pub const MAX_SEQUENCE_INDEX: usize = 1000;

/// Path claims that compare against the filtered symmetric group stop here.
const BRUTE_IMAGE_MAX_N: usize = 8;

/// Sequence claims cross-check against path counts up to this index.
const SEQUENCE_PATH_CHECK_MAX: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    InverseAvoidance,
    RcInverseCommute,
    NoMixing,
    InverseTheorem,
    InvolutionCorollary,
    EarliestLevelFeature,
    LatestLevelFeature,
    NoLevelFeaturesFirstEntry,
    FeaturelessBaseCase,
    MainTheorem,
    BijectionImage,
    CountSchroderPermutations,
    CountCentrosymmetric,
    CountCentrosymmetricInvolutions,
    AbRecursions,
    CdRecursions,
}

/// What `max_n` ranges over for a claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Domain {
    /// Permutation lengths `1..=max_n`.
    Permutations,
    /// Path lengths `0..=max_n`.
    Paths,
    /// Permutation lengths counted by three methods.
    Counts,
    /// Sequence indices `0..=max_n`.
    Sequences,
}

impl Claim {
    pub const ALL: [Claim; 16] = [
        Claim::InverseAvoidance,
        Claim::RcInverseCommute,
        Claim::NoMixing,
        Claim::InverseTheorem,
        Claim::InvolutionCorollary,
        Claim::EarliestLevelFeature,
        Claim::LatestLevelFeature,
        Claim::NoLevelFeaturesFirstEntry,
        Claim::FeaturelessBaseCase,
        Claim::MainTheorem,
        Claim::BijectionImage,
        Claim::CountSchroderPermutations,
        Claim::CountCentrosymmetric,
        Claim::CountCentrosymmetricInvolutions,
        Claim::AbRecursions,
        Claim::CdRecursions,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::InverseAvoidance => "inverse_avoidance",
            Claim::RcInverseCommute => "rc_inverse_commute",
            Claim::NoMixing => "no_mixing",
            Claim::InverseTheorem => "inverse_theorem",
            Claim::InvolutionCorollary => "involution_corollary",
            Claim::EarliestLevelFeature => "earliest_level_feature",
            Claim::LatestLevelFeature => "latest_level_feature",
            Claim::NoLevelFeaturesFirstEntry => "no_level_features_first_entry",
            Claim::FeaturelessBaseCase => "featureless_base_case",
            Claim::MainTheorem => "main_theorem",
            Claim::BijectionImage => "bijection_image",
            Claim::CountSchroderPermutations => "count_schroder_permutations",
            Claim::CountCentrosymmetric => "count_centrosymmetric",
            Claim::CountCentrosymmetricInvolutions => "count_centrosymmetric_involutions",
            Claim::AbRecursions => "ab_recursions",
            Claim::CdRecursions => "cd_recursions",
        }
    }

    /// One-line statement of what is checked.
    pub fn statement(self) -> &'static str {
        match self {
            Claim::InverseAvoidance => "π avoids {1243,2143} iff π⁻¹ does",
            Claim::RcInverseCommute => "(rc π)⁻¹ = rc(π⁻¹)",
            Claim::NoMixing => {
                "p has a diagonal d at t iff the t largest values fill the first t positions of φ(p)"
            }
            Claim::InverseTheorem => "φ(rev p) = φ(p)⁻¹",
            Claim::InvolutionCorollary => "φ(p) is an involution iff rev p = p",
            Claim::EarliestLevelFeature => {
                "p ∈ D_n without diagonal d, earliest level k < n: φ(p)(1) = n−k+1"
            }
            Claim::LatestLevelFeature => {
                "p ∈ D_n without diagonal d, latest level k ≥ 1: φ(p)(k+1) = 1"
            }
            Claim::NoLevelFeaturesFirstEntry => {
                "p ∈ D_n without diagonal d or level features: φ(p)(1) = 1"
            }
            Claim::FeaturelessBaseCase => {
                "p ∈ D_n without features or diagonal d: φ(p)(1) = 1 and φ(rev ψ p) = rc φ(p)"
            }
            Claim::MainTheorem => {
                "rc φ(p) avoids {1243,2143} iff p ∈ D_n, and then φ(rev ψ p) = rc φ(p)"
            }
            Claim::BijectionImage => {
                "φ maps paths of length n injectively onto 𝔖_{n+1}(1243,2143), r_n elements"
            }
            Claim::CountSchroderPermutations => "|𝔖_m(1243,2143)| = r_{m−1} by all methods",
            Claim::CountCentrosymmetric => "|𝒞_m(1243,2143)| = q_{⌊m/2⌋} by all methods",
            Claim::CountCentrosymmetricInvolutions => {
                "|𝒞ℐ_m(1243,2143)| = p_{⌊m/2⌋} by all methods"
            }
            Claim::AbRecursions => {
                "b_{k+1} = 4b_k − b_{k−1}, a_k = 1 + Σb_i, q_n = 2b_n − b_{n−1}, a/b count D-paths"
            }
            Claim::CdRecursions => {
                "d_{k+1} = 2d_k + d_{k−1}, c_k = 1 + Σd_i, p_n = d_{n+1}, c/d count featureless D-paths"
            }
        }
    }

    pub fn default_max_n(self) -> usize {
        match self.domain() {
            Domain::Permutations => 8,
            Domain::Paths => 8,
            Domain::Counts if self == Claim::CountSchroderPermutations => 9,
            Domain::Counts => 12,
            Domain::Sequences => 20,
        }
    }

    fn domain(self) -> Domain {
        match self {
            Claim::InverseAvoidance | Claim::RcInverseCommute => Domain::Permutations,
            Claim::CountSchroderPermutations
            | Claim::CountCentrosymmetric
            | Claim::CountCentrosymmetricInvolutions => Domain::Counts,
            Claim::AbRecursions | Claim::CdRecursions => Domain::Sequences,
            _ => Domain::Paths,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('-', "_");
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == key)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// One counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Result of one exhaustive check.
///
/// JSON: `{"claim", "range", "cases", "failures", "failure_count", "ms"}`.
/// `failures` holds the first [`MAX_REPORTED_FAILURES`] counterexamples in
/// generation order; `failure_count` is the total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub range: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub failure_count: u64,
    pub ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: Vec<Failure>,
    failure_count: u64,
}

impl Tally {
    fn case(&mut self) {
        self.cases += 1;
    }

    fn expect(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(failure());
            }
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(&mut self, input: impl fmt::Display, expected: T, actual: T) {
        self.expect(expected == actual, || Failure {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn into_report(self, claim: &str, range: String, started: Instant) -> VerificationReport {
        VerificationReport {
            claim: claim.to_string(),
            range,
            cases: self.cases,
            failures: self.failures,
            failure_count: self.failure_count,
            ms: started.elapsed().as_millis() as u64,
        }
    }
}

pub fn verify(claim: Claim, max_n: usize) -> Result<VerificationReport> {
    verify_with(claim, max_n, &Limits::default())
}

/// Runs `claim` on every object of every size up to `max_n`.
pub fn verify_with(claim: Claim, max_n: usize, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut tally = Tally::default();
    let range = match claim.domain() {
        Domain::Permutations => {
            Error::check_cap("permutation length", max_n, limits.max_full_perm_len)?;
            format!("permutations of length 1..={max_n}")
        }
        Domain::Paths => {
            Error::check_cap("path length", max_n, limits.max_path_len)?;
            format!("paths of length 0..={max_n}")
        }
        Domain::Counts => {
            let lo = if claim == Claim::CountSchroderPermutations { 1 } else { 2 };
            format!("permutation lengths {lo}..={max_n}")
        }
        Domain::Sequences => {
            Error::check_cap("sequence index", max_n, MAX_SEQUENCE_INDEX)?;
            format!("indices 0..={max_n}")
        }
    };
    match claim {
        Claim::InverseAvoidance => {
            let pair = Pattern::schroder_pair();
            for m in 1..=max_n {
                for pi in all_permutations(m, limits)? {
                    tally.case();
                    let inv = pi.inverse();
                    tally.expect_eq(&pi, pi.avoids_all(&pair), inv.avoids_all(&pair));
                }
            }
        }
        Claim::RcInverseCommute => {
            for m in 1..=max_n {
                for pi in all_permutations(m, limits)? {
                    tally.case();
                    tally.expect_eq(
                        &pi,
                        pi.inverse().reverse_complement(),
                        pi.reverse_complement().inverse(),
                    );
                }
            }
        }
        Claim::NoMixing => for_paths(max_n, false, limits, |p| {
            tally.case();
            let pi = phi(p);
            let n = p.len();
            for t in 1..=n {
                let diagonal = p.has_diagonal_d_at(t).expect("t in range");
                let top_first = pi.entries()[..t]
                    .iter()
                    .all(|&v| usize::from(v) > n + 1 - t);
                tally.expect(diagonal == top_first, || Failure {
                    input: format!("{p} t={t}"),
                    expected: format!("diagonal d at t: {diagonal}"),
                    actual: format!("largest values first in {pi}: {top_first}"),
                });
            }
        })?,
        Claim::InverseTheorem => for_paths(max_n, false, limits, |p| {
            tally.case();
            tally.expect_eq(p, phi(p).inverse(), phi(&p.reverse()));
        })?,
        Claim::InvolutionCorollary => for_paths(max_n, false, limits, |p| {
            tally.case();
            tally.expect_eq(p, p.is_palindromic(), phi(p).is_involution());
        })?,
        Claim::EarliestLevelFeature => for_paths(max_n, true, limits, |p| {
            if p.has_any_diagonal_d() {
                return;
            }
            tally.case();
            let f = p.features();
            let n = p.len();
            if f.earliest_level < n {
                tally.expect_eq(p, n - f.earliest_level + 1, phi(p).get(1));
            }
        })?,
        Claim::LatestLevelFeature => for_paths(max_n, true, limits, |p| {
            if p.has_any_diagonal_d() {
                return;
            }
            tally.case();
            let k = p.features().latest_level;
            if k >= 1 {
                tally.expect_eq(p, 1, phi(p).get(k + 1));
            }
        })?,
        Claim::NoLevelFeaturesFirstEntry => for_paths(max_n, true, limits, |p| {
            if p.has_any_diagonal_d() || !p.features().levels().is_empty() {
                return;
            }
            tally.case();
            tally.expect_eq(p, 1, phi(p).get(1));
        })?,
        Claim::FeaturelessBaseCase => for_paths(max_n, true, limits, |p| {
            if p.has_any_diagonal_d() || !p.features().is_empty() {
                return;
            }
            tally.case();
            let pi = phi(p);
            if !pi.is_empty() {
                tally.expect_eq(p, 1, pi.get(1));
            }
            tally.expect_eq(p, pi.reverse_complement(), phi(&p.psi().reverse()));
        })?,
        Claim::MainTheorem => {
            let pair = Pattern::schroder_pair();
            for_paths(max_n, false, limits, |p| {
                tally.case();
                let rc = phi(p).reverse_complement();
                let in_d = p.is_in_d();
                tally.expect(rc.avoids_all(&pair) == in_d, || Failure {
                    input: p.to_string(),
                    expected: format!("in D: {in_d}"),
                    actual: format!("rc(φ(p)) = {rc} avoids: {}", !in_d),
                });
                if in_d {
                    tally.expect_eq(p, rc, phi(&p.psi().reverse()));
                }
            })?
        }
        Claim::BijectionImage => {
            let r = schroder_numbers(max_n);
            let pair = Pattern::schroder_pair();
            for n in 0..=max_n {
                let mut image = BTreeSet::new();
                let mut paths = 0u64;
                for p in generate_paths(n, false, limits)? {
                    tally.case();
                    paths += 1;
                    let pi = phi(&p);
                    tally.expect(pi.avoids_all(&pair), || Failure {
                        input: p.to_string(),
                        expected: "image avoids 1243 and 2143".into(),
                        actual: pi.to_string(),
                    });
                    image.insert(pi);
                }
                tally.expect_eq(format!("image size n={n}"), r.values[n].clone(), BigUint::from(image.len()));
                tally.expect_eq(format!("injectivity n={n}"), paths, image.len() as u64);
                if n <= BRUTE_IMAGE_MAX_N && n < limits.max_full_perm_len {
                    let brute: BTreeSet<Permutation> = all_permutations(n + 1, limits)?
                        .filter(|pi| pi.avoids_all(&pair))
                        .collect();
                    tally.expect(brute == image, || Failure {
                        input: format!("n={n}"),
                        expected: format!("{} avoiders of length {}", brute.len(), n + 1),
                        actual: format!(
                            "{} images, first difference {}",
                            image.len(),
                            brute
                                .symmetric_difference(&image)
                                .next()
                                .map_or_else(String::new, |p| p.to_string())
                        ),
                    });
                }
            }
        }
        Claim::CountSchroderPermutations => {
            count_claim(&mut tally, Family::SchroderPerms, 1, max_n, limits)?
        }
        Claim::CountCentrosymmetric => {
            count_claim(&mut tally, Family::Centrosymmetric, 2, max_n, limits)?
        }
        Claim::CountCentrosymmetricInvolutions => count_claim(
            &mut tally,
            Family::CentrosymmetricInvolutions,
            2,
            max_n,
            limits,
        )?,
        Claim::AbRecursions => {
            let (a, b) = ab_sequences(max_n);
            let q = q_sequence(max_n);
            running_sum_checks(&mut tally, "a", &a.values, "b", &b.values, 4, true);
            for n in 1..=max_n {
                tally.case();
                tally.expect_eq(
                    format!("q_{n} = 2b_{n} − b_{}", n - 1),
                    q.values[n - 1].clone(),
                    &b.values[n] * 2u32 - &b.values[n - 1],
                );
            }
            path_count_checks(&mut tally, ("a", &a.values), ("b", &b.values), false, max_n, limits)?;
        }
        Claim::CdRecursions => {
            let (c, d) = cd_sequences(max_n + 1);
            let pell = pell_sequence(max_n);
            running_sum_checks(&mut tally, "c", &c.values, "d", &d.values, 2, false);
            for n in 1..=max_n {
                tally.case();
                tally.expect_eq(
                    format!("p_{n} = d_{}", n + 1),
                    pell.values[n - 1].clone(),
                    d.values[n + 1].clone(),
                );
            }
            path_count_checks(&mut tally, ("c", &c.values), ("d", &d.values), true, max_n, limits)?;
        }
    }
    Ok(tally.into_report(claim.id(), range, started))
}

fn for_paths(
    max_n: usize,
    restrict_to_d: bool,
    limits: &Limits,
    mut f: impl FnMut(&SchroderPath),
) -> Result<()> {
    for n in 0..=max_n {
        for p in generate_paths(n, restrict_to_d, limits)? {
            f(&p);
        }
    }
    Ok(())
}

fn count_claim(
    tally: &mut Tally,
    family: Family,
    lo: usize,
    max_n: usize,
    limits: &Limits,
) -> Result<()> {
    let mut previous: Option<u64> = None;
    for n in lo..=max_n {
        tally.case();
        let by = |method| count(&CountQuery { family, n, method }, limits);
        let rec = by(Method::Recurrence)?;
        for method in [Method::Paths, Method::BruteForce] {
            tally.expect_eq(format!("{} m={n} {}", family.as_str(), method.as_str()), rec, by(method)?);
        }
        if family != Family::SchroderPerms && n % 2 == 1 {
            if let Some(even) = previous {
                tally.expect_eq(format!("{} m={} vs m={n}", family.as_str(), n - 1), even, rec);
            }
        }
        previous = Some(rec);
    }
    Ok(())
}

/// `y_0 = 0`, `y_1 = 1`, `y_{k+1} = α y_k ± y_{k−1}` and `x_k = 1 + Σ y_i`,
/// each checked term by term.
fn running_sum_checks(
    tally: &mut Tally,
    x_name: &str,
    x: &[BigUint],
    y_name: &str,
    y: &[BigUint],
    alpha: u32,
    subtract: bool,
) {
    let sign = if subtract { '−' } else { '+' };
    let mut sum = BigUint::from(1u32);
    for k in 0..y.len() {
        tally.case();
        let expected = match k {
            0 => BigUint::from(0u32),
            1 => BigUint::from(1u32),
            _ if subtract => &y[k - 1] * alpha - &y[k - 2],
            _ => &y[k - 1] * alpha + &y[k - 2],
        };
        tally.expect_eq(
            format!("{y_name}_{k} = {alpha}{y_name}_{} {sign} {y_name}_{}", k.saturating_sub(1), k.saturating_sub(2)),
            expected,
            y[k].clone(),
        );
        sum += &y[k];
        tally.expect_eq(format!("{x_name}_{k} = 1 + Σ {y_name}_i"), sum.clone(), x[k].clone());
    }
}

/// `x_i` counts paths in `D_i` (featureless ones when `featureless`), `y_i`
/// those among them ending with `e`.
fn path_count_checks(
    tally: &mut Tally,
    x: (&str, &[BigUint]),
    y: (&str, &[BigUint]),
    featureless: bool,
    max_n: usize,
    limits: &Limits,
) -> Result<()> {
    let top = max_n.min(SEQUENCE_PATH_CHECK_MAX).min(limits.max_path_len);
    for i in 0..=top {
        tally.case();
        let (mut all, mut ending_e) = (0u64, 0u64);
        for p in generate_paths(i, true, limits)? {
            if featureless && !p.features().is_empty() {
                continue;
            }
            all += 1;
            if p.steps().last() == Some(&Step::E) {
                ending_e += 1;
            }
        }
        tally.expect_eq(format!("{}_{i} by paths", x.0), x.1[i].clone(), BigUint::from(all));
        tally.expect_eq(format!("{}_{i} by paths", y.0), y.1[i].clone(), BigUint::from(ending_e));
    }
    Ok(())
}

/// Runs every registered claim, at `max_n` when given and otherwise at each
/// claim's default. Reports come back in registry order.
pub fn verify_all(max_n: Option<usize>, limits: &Limits, parallel: bool) -> Result<Vec<VerificationReport>> {
    let run = |&claim: &Claim| verify_with(claim, max_n.unwrap_or(claim.default_max_n()), limits);
    if parallel {
        Claim::ALL.par_iter().map(run).collect()
    } else {
        Claim::ALL.iter().map(run).collect()
    }
}

/// A worked example of the bijection: the evolution rows that must appear, in
/// order, while the blocks of `σ` are applied to the decreasing permutation.
struct TraceFixture {
    path: &'static str,
    rows: &'static [&'static str],
}

const TRACE_FIXTURES: &[TraceFixture] = &[
    TraceFixture {
        path: "nennnneeedennede",
        rows: &[
            "10,9,8,7,6,5,3,2,1,4",
            "10,9,8,7,6,5,2,3,1,4",
            "10,8,7,6,5,2,9,3,1,4",
            "10,7,6,5,8,2,9,3,1,4",
            "10,6,5,7,8,2,9,3,1,4",
            "10,5,6,7,8,2,9,3,1,4",
            "5,10,6,7,8,2,9,3,1,4",
        ],
    },
    TraceFixture {
        path: "nennedennnneeede",
        rows: &[
            "10,9,8,7,5,4,3,2,1,6",
            "10,9,8,7,4,3,2,5,1,6",
            "10,9,8,7,3,2,4,5,1,6",
            "10,9,8,7,2,3,4,5,1,6",
            "10,8,7,2,9,3,4,5,1,6",
            "10,7,8,2,9,3,4,5,1,6",
            "7,10,8,2,9,3,4,5,1,6",
        ],
    },
    TraceFixture {
        path: "ndndneeennneneee",
        rows: &["10,9,8,7,6,1,3,2,4,5", "9,7,1,6,8,10,3,2,4,5"],
    },
    TraceFixture {
        path: "nnneennnnneeeeenee",
        rows: &[
            "9,8,7,6,5,4,3,2,1,10",
            "9,8,7,6,5,4,3,1,2,10",
            "9,8,1,3,4,5,6,7,2,10",
            "1,8,9,3,4,5,6,7,2,10",
        ],
    },
    TraceFixture {
        path: "nnennnnneeeeenneee",
        rows: &[
            "9,8,7,6,5,4,3,2,1,10",
            "9,8,7,6,5,4,1,2,3,10",
            "9,1,4,5,6,7,8,2,3,10",
            "1,9,4,5,6,7,8,2,3,10",
        ],
    },
    TraceFixture {
        path: "nneneennedneennee",
        rows: &[
            "10,9,8,7,6,5,4,1,2,3",
            "10,9,8,6,5,4,1,7,2,3",
            "10,9,8,6,5,1,4,7,2,3",
            "5,9,8,10,6,1,4,7,2,3",
        ],
    },
    TraceFixture {
        path: "nnedennneeennenee",
        rows: &["10,9,8,7,6,5,1,3,2,4", "8,9,1,10,5,6,7,3,2,4"],
    },
];

/// `φ(path) = perm` equalities from the worked examples.
const IMAGE_FIXTURES: &[(&str, &str)] = &[
    ("d", "2,1"),
    ("ne", "1,2"),
    ("dd", "3,2,1"),
    ("dne", "3,1,2"),
    ("ned", "2,3,1"),
    ("nde", "2,1,3"),
    ("nene", "1,3,2"),
    ("nnee", "1,2,3"),
    ("ndndneee", "5,3,1,2,4,6"),
    ("nnnedede", "3,4,2,5,1,6"),
    ("nnneneee", "1,3,2,4,5"),
    ("nneneennee", "1,5,4,6,2,3"),
    ("nnenee", "1,3,2,4"),
    ("nnedennneee", "5,6,1,7,2,3,4"),
];

fn parse_perm(s: &str) -> Permutation {
    s.parse().expect("fixture permutation")
}

fn parse_path(s: &str) -> SchroderPath {
    s.parse().expect("fixture path")
}

/// Replays the evolution traces and stated equalities of the worked examples.
pub fn regression_fixtures() -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();

    for fixture in TRACE_FIXTURES {
        tally.case();
        let p = parse_path(fixture.path);
        let (start, trace) = phi_trace(&p);
        let mut states = std::iter::once(start).chain(trace.into_iter().map(|r| r.permutation));
        for row in fixture.rows {
            let want = parse_perm(row);
            let found = states.by_ref().any(|s| s == want);
            tally.expect(found, || Failure {
                input: fixture.path.to_string(),
                expected: format!("trace row {want}"),
                actual: "row missing or out of order".into(),
            });
        }
        let last = parse_perm(fixture.rows.last().expect("nonempty rows"));
        tally.expect_eq(fixture.path, last, phi(&p));
    }

    for (path, perm) in IMAGE_FIXTURES {
        tally.case();
        tally.expect_eq(path, parse_perm(perm), phi(&parse_path(path)));
    }

    let p1 = parse_path("nennnneeedennede");
    let pi1 = phi(&p1);
    let p1_prime = p1.psi().reverse();
    let f = p1.features();
    for (input, expected, actual) in [
        ("ψ(p)", "ndnnneeeendneene".to_string(), p1.psi().to_string()),
        ("rev ψ(p)", "nennedennnneeede".to_string(), p1_prime.to_string()),
        ("p ∈ D", "true".into(), p1.is_in_d().to_string()),
        ("diagonal d", "false".into(), p1.has_any_diagonal_d().to_string()),
        ("level features", "[5, 8]".into(), format!("{:?}", f.levels())),
        ("π(1)", "5".into(), pi1.get(1).to_string()),
        ("π(9)", "1".into(), pi1.get(9).to_string()),
        ("φ(rev ψ p) = rc φ(p)", pi1.reverse_complement().to_string(), phi(&p1_prime).to_string()),
    ] {
        tally.case();
        tally.expect_eq(format!("{p1}: {input}"), expected, actual);
    }

    let q = parse_path("ndndneee");
    let r = parse_path("nnneneee");
    let qr = q.concat(&r);
    tally.case();
    tally.expect_eq("ndndneee·nnneneee", "ndndneeennneneee".to_string(), qr.to_string());
    tally.case();
    tally.expect_eq("rev r = r", true, r.is_palindromic());
    tally.case();
    tally.expect_eq("φ(rev q) = φ(q)⁻¹", phi(&q).inverse(), phi(&q.reverse()));
    tally.case();
    let mut joined = sigma_decomposition(&r).shifted(q.len()).blocks;
    joined.extend(sigma_decomposition(&q).blocks);
    tally.expect_eq(
        "σ(q·r) = σ(r) shifted, then σ(q)",
        TranspositionWord { blocks: joined },
        sigma_decomposition(&qr),
    );

    let p3 = parse_path("nnneennnnneeeeenee");
    tally.case();
    tally.expect_eq("rev p", "nnennnnneeeeenneee".to_string(), p3.reverse().to_string());
    tally.case();
    tally.expect_eq("φ(rev p) = φ(p)⁻¹", phi(&p3).inverse(), phi(&p3.reverse()));

    let p4 = parse_path("nnenee").concat(&parse_path("nnedneennee"));
    tally.case();
    tally.expect_eq("earliest level", 5, p4.features().earliest_level);
    tally.case();
    tally.expect_eq("π(1) = n − k + 1", 5, phi(&p4).get(1));

    let p2 = p1_prime;
    tally.case();
    tally.expect_eq(
        "blocks of rev ψ(p)",
        "[[9, 8, 7, 6, 5], [7, 6, 5], [6, 5], [5], [4, 3, 2], [2], [1]]".to_string(),
        format!("{:?}", sigma_decomposition(&p2).blocks),
    );

    let p6 = parse_path("nnedennneeennenee");
    let q6 = parse_path("nnedennneee");
    let r6 = parse_path("nnenee");
    tally.case();
    tally.expect_eq("q·r", p6.clone(), q6.concat(&r6));
    tally.case();
    tally.expect_eq("rc φ(q)", parse_perm("4,5,6,1,7,2,3"), phi(&q6).reverse_complement());
    let p6_prime = p6.psi().reverse();
    let (start, trace) = phi_trace(&p6_prime);
    let mut states = std::iter::once(start).chain(trace.into_iter().map(|r| r.permutation));
    for row in ["9,8,7,4,5,6,1,10,2,3", "7,9,8,4,5,6,1,10,2,3"] {
        tally.case();
        let want = parse_perm(row);
        let found = states.by_ref().any(|s| s == want);
        tally.expect(found, || Failure {
            input: p6_prime.to_string(),
            expected: format!("trace row {want}"),
            actual: "row missing or out of order".into(),
        });
    }
    tally.case();
    tally.expect_eq("φ(rev ψ p) = rc φ(p)", phi(&p6).reverse_complement(), phi(&p6_prime));

    tally.into_report("regression_fixtures", "worked examples".into(), started)
}
