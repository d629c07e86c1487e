//! Integer sequences and the three counting methods for the classes
//! `𝔖_n(1243,2143)`, `𝒞_n(1243,2143)` and `𝒞ℐ_n(1243,2143)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::path::generate_paths;
use crate::perm::{all_permutations, generate_centrosymmetric, Pattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceName {
    /// Large Schroder numbers.
    R,
    /// Centrosymmetric class counts, `q_n = 4q_{n−1} − q_{n−2}`.
    Q,
    /// Pell numbers, `p_n = 2p_{n−1} + p_{n−2}`.
    Pell,
    /// `D`-prefixes ending at `(i,i)`.
    A,
    /// `D`-prefixes ending at `(i−1,i)`.
    B,
    /// Featureless `D`-prefixes ending at `(i,i)`.
    C,
    /// Featureless `D`-prefixes ending at `(i−1,i)`.
    D,
    /// Paths of length `2n−1` fixed by `rev∘ψ`.
    U,
    /// Paths of length `2n−1` fixed by both `rev` and `ψ`.
    V,
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SequenceName::R => "r",
            SequenceName::Q => "q",
            SequenceName::Pell => "pell",
            SequenceName::A => "a",
            SequenceName::B => "b",
            SequenceName::C => "c",
            SequenceName::D => "d",
            SequenceName::U => "u",
            SequenceName::V => "v",
        };
        f.write_str(s)
    }
}

impl FromStr for SequenceName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "r" => SequenceName::R,
            "q" => SequenceName::Q,
            "pell" | "p" => SequenceName::Pell,
            "a" => SequenceName::A,
            "b" => SequenceName::B,
            "c" => SequenceName::C,
            "d" => SequenceName::D,
            "u" => SequenceName::U,
            "v" => SequenceName::V,
            other => return Err(Error::UnsupportedQuery(format!("unknown sequence `{other}`"))),
        })
    }
}

/// `values[k]` is the term with index `base_index + k`.
///
/// Serializes as `{"name": "q", "base_index": 1, "values": [2, 7, 26]}`
/// with values as exact JSON integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceTable {
    pub name: SequenceName,
    pub base_index: usize,
    #[serde(serialize_with = "ser_big", deserialize_with = "de_big")]
    pub values: Vec<BigUint>,
}

impl SequenceTable {
    /// Term at absolute index `i`, if computed.
    pub fn get(&self, i: usize) -> Option<&BigUint> {
        i.checked_sub(self.base_index)
            .and_then(|k| self.values.get(k))
    }

    /// Largest index computed (`None` when empty).
    pub fn max_index(&self) -> Option<usize> {
        (!self.values.is_empty()).then(|| self.base_index + self.values.len() - 1)
    }

    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.values.iter().map(|v| v.to_u64()).collect()
    }
}

fn ser_big<S: Serializer>(values: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        let n: serde_json::Number = v
            .to_string()
            .parse()
            .map_err(serde::ser::Error::custom)?;
        seq.serialize_element(&n)?;
    }
    seq.end()
}

fn de_big<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigUint>, D::Error> {
    let nums = Vec::<serde_json::Number>::deserialize(d)?;
    nums.iter()
        .map(|n| {
            n.to_string()
                .parse::<BigUint>()
                .map_err(|_| serde::de::Error::custom(format!("{n} is not a non-negative integer")))
        })
        .collect()
}

/// `r_0 … r_max` from `r_n = r_{n−1} + Σ_{k=1}^{n} r_{k−1} r_{n−k}`.
pub fn schroder_numbers(max_n: usize) -> SequenceTable {
    let mut r: Vec<BigUint> = vec![BigUint::one()];
    for n in 1..=max_n {
        let conv: BigUint = (1..=n).map(|k| &r[k - 1] * &r[n - k]).sum();
        let next = &r[n - 1] + conv;
        r.push(next);
    }
    SequenceTable {
        name: SequenceName::R,
        base_index: 0,
        values: r,
    }
}

/// `r_n` as a machine integer (panics past 64 bits, i.e. beyond `n = 27`).
pub fn schroder_number(n: usize) -> u64 {
    schroder_numbers(n).values[n]
        .to_u64()
        .expect("Schroder number exceeds 64 bits")
}

/// Terms `x_1 … x_max` of `x_n = α x_{n−1} + β x_{n−2}`, where `β` is `+1`
/// or `−1` (passed as `subtract`).
fn two_term(
    name: SequenceName,
    first: u32,
    second: u32,
    alpha: u32,
    subtract: bool,
    max_n: usize,
) -> SequenceTable {
    let mut v: Vec<BigUint> = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let term = match n {
            1 => BigUint::from(first),
            2 => BigUint::from(second),
            _ => {
                let scaled = &v[n - 2] * alpha;
                if subtract {
                    scaled - &v[n - 3]
                } else {
                    scaled + &v[n - 3]
                }
            }
        };
        v.push(term);
    }
    SequenceTable {
        name,
        base_index: 1,
        values: v,
    }
}

/// `q_1 … q_max` with `q_1 = 2`, `q_2 = 7`, `q_n = 4q_{n−1} − q_{n−2}`.
pub fn q_sequence(max_n: usize) -> SequenceTable {
    two_term(SequenceName::Q, 2, 7, 4, true, max_n)
}

/// Pell numbers `p_1 … p_max` with `p_1 = 2`, `p_2 = 5`,
/// `p_n = 2p_{n−1} + p_{n−2}`.
pub fn pell_sequence(max_n: usize) -> SequenceTable {
    two_term(SequenceName::Pell, 2, 5, 2, false, max_n)
}

/// Running-sum pair: `y_0 = 0`, `y_1 = 1`, `y_{k+1} = α y_k ± y_{k−1}` and
/// `x_k = 1 + Σ_{i≤k} y_i`.
fn prefix_pair(
    names: (SequenceName, SequenceName),
    alpha: u32,
    subtract: bool,
    max_i: usize,
) -> (SequenceTable, SequenceTable) {
    let mut y: Vec<BigUint> = vec![BigUint::zero()];
    if max_i >= 1 {
        y.push(BigUint::one());
    }
    for k in 2..=max_i {
        let scaled = &y[k - 1] * alpha;
        let next = if subtract {
            scaled - &y[k - 2]
        } else {
            scaled + &y[k - 2]
        };
        y.push(next);
    }
    let mut x = Vec::with_capacity(max_i + 1);
    let mut acc = BigUint::one();
    for yi in &y {
        acc += yi;
        x.push(acc.clone());
    }
    (
        SequenceTable {
            name: names.0,
            base_index: 0,
            values: x,
        },
        SequenceTable {
            name: names.1,
            base_index: 0,
            values: y,
        },
    )
}

/// `(a, b)` for indices `0..=max_i`: `b_0 = 0`, `b_1 = 1`,
/// `b_{k+1} = 4b_k − b_{k−1}`, `a_k = 1 + Σ_{i≤k} b_i`.
pub fn ab_sequences(max_i: usize) -> (SequenceTable, SequenceTable) {
    prefix_pair((SequenceName::A, SequenceName::B), 4, true, max_i)
}

/// `(c, d)` for indices `0..=max_i`: `d_0 = 0`, `d_1 = 1`,
/// `d_{k+1} = 2d_k + d_{k−1}`, `c_k = 1 + Σ_{i≤k} d_i`.
pub fn cd_sequences(max_i: usize) -> (SequenceTable, SequenceTable) {
    prefix_pair((SequenceName::C, SequenceName::D), 2, false, max_i)
}

/// Any table by name, up to `max_index`. `u` and `v` are counted on paths
/// and therefore need generator limits.
pub fn sequence_by_name(name: SequenceName, max_index: usize, limits: &Limits) -> Result<SequenceTable> {
    Ok(match name {
        SequenceName::R => schroder_numbers(max_index),
        SequenceName::Q => q_sequence(max_index),
        SequenceName::Pell => pell_sequence(max_index),
        SequenceName::A => ab_sequences(max_index).0,
        SequenceName::B => ab_sequences(max_index).1,
        SequenceName::C => cd_sequences(max_index).0,
        SequenceName::D => cd_sequences(max_index).1,
        SequenceName::U | SequenceName::V => {
            let family = if name == SequenceName::U {
                Family::Centrosymmetric
            } else {
                Family::CentrosymmetricInvolutions
            };
            let mut values = Vec::with_capacity(max_index);
            for n in 1..=max_index {
                let c = count(
                    &CountQuery {
                        family,
                        n: 2 * n,
                        method: Method::Paths,
                    },
                    limits,
                )?;
                values.push(BigUint::from(c));
            }
            SequenceTable {
                name,
                base_index: 1,
                values,
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `𝔖_n(1243, 2143)`.
    SchroderPerms,
    /// `𝒞_n(1243, 2143)`.
    Centrosymmetric,
    /// `𝒞ℐ_n(1243, 2143)`.
    CentrosymmetricInvolutions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Recurrence,
    Paths,
    BruteForce,
}

impl Family {
    pub const ALL: [Family; 3] = [
        Family::SchroderPerms,
        Family::Centrosymmetric,
        Family::CentrosymmetricInvolutions,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::SchroderPerms => "schroder_perms",
            Family::Centrosymmetric => "centrosymmetric",
            Family::CentrosymmetricInvolutions => "centrosymmetric_involutions",
        }
    }
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Recurrence, Method::Paths, Method::BruteForce];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Paths => "paths",
            Method::BruteForce => "brute_force",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s.replace('-', "_"))
            .ok_or_else(|| Error::UnsupportedQuery(format!("unknown family `{s}`")))
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s.replace('-', "_"))
            .ok_or_else(|| Error::UnsupportedQuery(format!("unknown method `{s}`")))
    }
}

/// A request to count one class at one permutation length `n ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountQuery {
    pub family: Family,
    pub n: usize,
    pub method: Method,
}

/// Counts the class of `query.family` at permutation length `query.n`.
///
/// * `recurrence` reads the closed-form tables: `r_{n−1}`, `q_{⌊n/2⌋}`,
///   or the Pell number `p_{⌊n/2⌋}` (length 1 counts as 1).
/// * `paths` counts paths of length `n−1`: all of them, those in `D` fixed by
///   `rev∘ψ`, or those in `D` fixed by both `rev` and `ψ`.
/// * `brute_force` filters `𝔖_n` (or the centrosymmetric generator) with the
///   direct pattern scan.
pub fn count(query: &CountQuery, limits: &Limits) -> Result<u64> {
    let n = query.n;
    if n == 0 {
        return Err(Error::UnsupportedQuery(
            "permutation length must be at least 1".into(),
        ));
    }
    let pair = Pattern::schroder_pair();
    match (query.family, query.method) {
        (Family::SchroderPerms, Method::Recurrence) => {
            to_u64(&schroder_numbers(n - 1).values[n - 1])
        }
        (Family::Centrosymmetric, Method::Recurrence) => {
            if n == 1 {
                Ok(1)
            } else {
                to_u64(&q_sequence(n / 2).values[n / 2 - 1])
            }
        }
        (Family::CentrosymmetricInvolutions, Method::Recurrence) => {
            if n == 1 {
                Ok(1)
            } else {
                to_u64(&pell_sequence(n / 2).values[n / 2 - 1])
            }
        }
        (Family::SchroderPerms, Method::Paths) => {
            Ok(generate_paths(n - 1, false, limits)?.count() as u64)
        }
        (Family::Centrosymmetric, Method::Paths) => Ok(generate_paths(n - 1, true, limits)?
            .filter(|p| &p.psi().reverse() == p)
            .count() as u64),
        (Family::CentrosymmetricInvolutions, Method::Paths) => {
            Ok(generate_paths(n - 1, true, limits)?
                .filter(|p| p.is_palindromic() && &p.psi() == p)
                .count() as u64)
        }
        (Family::SchroderPerms, Method::BruteForce) => Ok(all_permutations(n, limits)?
            .filter(|pi| pi.avoids_all(&pair))
            .count() as u64),
        (Family::Centrosymmetric, Method::BruteForce) => {
            Ok(generate_centrosymmetric(n, false, limits)?
                .filter(|pi| pi.avoids_all(&pair))
                .count() as u64)
        }
        (Family::CentrosymmetricInvolutions, Method::BruteForce) => {
            Ok(generate_centrosymmetric(n, true, limits)?
                .filter(|pi| pi.avoids_all(&pair))
                .count() as u64)
        }
    }
}

fn to_u64(v: &BigUint) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::UnsupportedQuery(format!("count {v} does not fit in 64 bits")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u64s(t: &SequenceTable) -> Vec<u64> {
        t.to_u64s().unwrap()
    }

    #[test]
    fn schroder_examples() {
        assert_eq!(u64s(&schroder_numbers(0)), vec![1]);
        assert_eq!(u64s(&schroder_numbers(4)), vec![1, 2, 6, 22, 90]);
        assert_eq!(
            u64s(&schroder_numbers(9)),
            vec![1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098]
        );
        assert_eq!(schroder_number(3), 22);
    }

    #[test]
    fn q_and_pell_examples() {
        assert_eq!(u64s(&q_sequence(2)), vec![2, 7]);
        assert_eq!(u64s(&q_sequence(5)), vec![2, 7, 26, 97, 362]);
        assert_eq!(u64s(&pell_sequence(2)), vec![2, 5]);
        assert_eq!(u64s(&pell_sequence(5)), vec![2, 5, 12, 29, 70]);
        assert!(q_sequence(0).values.is_empty());
        assert_eq!(q_sequence(3).get(3).unwrap(), &BigUint::from(26u32));
        assert_eq!(q_sequence(3).max_index(), Some(3));
    }

    #[test]
    fn ab_cd_examples() {
        let (a, b) = ab_sequences(4);
        assert_eq!(u64s(&b), vec![0, 1, 4, 15, 56]);
        assert_eq!(u64s(&a)[..3], [1, 2, 6]);
        let (c, d) = cd_sequences(5);
        assert_eq!(u64s(&d), vec![0, 1, 2, 5, 12, 29]);
        assert_eq!(c.get(1).unwrap(), &BigUint::from(2u32));
        let pell = pell_sequence(4);
        for n in 1..=4 {
            assert_eq!(pell.get(n), d.get(n + 1));
        }
        let (a0, b0) = ab_sequences(0);
        assert_eq!(u64s(&a0), vec![1]);
        assert_eq!(u64s(&b0), vec![0]);
    }

    #[test]
    fn json_form() {
        let t = q_sequence(3);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"name":"q","base_index":1,"values":[2,7,26]}"#);
        let back: SequenceTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);

        // Past 64 bits the values stay exact integers.
        let big = schroder_numbers(40);
        let json = serde_json::to_string(&big).unwrap();
        assert!(json.contains(&big.values[40].to_string()));
        let back: SequenceTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn count_examples() {
        let lim = Limits::default();
        let q = |family, n, method| count(&CountQuery { family, n, method }, &lim).unwrap();
        assert_eq!(q(Family::Centrosymmetric, 4, Method::BruteForce), 7);
        assert_eq!(q(Family::Centrosymmetric, 3, Method::Recurrence), 2);
        assert_eq!(q(Family::CentrosymmetricInvolutions, 5, Method::BruteForce), 5);
        assert_eq!(q(Family::SchroderPerms, 4, Method::BruteForce), 22);
        assert_eq!(q(Family::SchroderPerms, 4, Method::Recurrence), 22);
        assert_eq!(q(Family::SchroderPerms, 4, Method::Paths), 22);
        for family in Family::ALL {
            for method in Method::ALL {
                assert_eq!(q(family, 1, method), 1, "{family:?} {method:?}");
            }
        }
    }

    #[test]
    fn count_errors() {
        let lim = Limits::default();
        let err = count(
            &CountQuery {
                family: Family::SchroderPerms,
                n: 11,
                method: Method::BruteForce,
            },
            &lim,
        )
        .unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
        assert!(matches!(
            count(
                &CountQuery {
                    family: Family::Centrosymmetric,
                    n: 14,
                    method: Method::Paths,
                },
                &lim
            ),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            count(
                &CountQuery {
                    family: Family::Centrosymmetric,
                    n: 0,
                    method: Method::Paths,
                },
                &lim
            ),
            Err(Error::UnsupportedQuery(_))
        ));
        assert!("nope".parse::<Family>().is_err());
        assert_eq!("brute-force".parse::<Method>().unwrap(), Method::BruteForce);
    }
}
