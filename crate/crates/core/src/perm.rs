//! Permutations in one-line notation.
//!
//! Entries are stored as the 1-based values `π(1), …, π(n)`; every accessor
//! taking a position is 1-based as well. The text form is the comma-separated
//! list of entries, e.g. `5,10,6,7,8,2,9,3,1,4`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Longest permutation representable (entries are stored as `u8`).
pub const MAX_LEN: usize = u8::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u8>,
}

impl Permutation {
    /// Validates that `entries` is a rearrangement of `1..=n`.
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if entries.len() > MAX_LEN {
            return Err(Error::parse(
                MAX_LEN + 1,
                format!("permutations longer than {MAX_LEN} are not supported"),
            ));
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in entries.iter().enumerate() {
            let v = v as usize;
            if v == 0 {
                return Err(Error::parse(i + 1, "entry 0 is not allowed"));
            }
            if v > n {
                return Err(Error::parse(
                    i + 1,
                    format!("entry {v} is out of range 1..={n}"),
                ));
            }
            if seen[v] {
                return Err(Error::parse(i + 1, format!("entry {v} is repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation { entries }
    }

    pub fn identity(n: usize) -> Self {
        Permutation::from_vec_unchecked((1..=n as u8).collect())
    }

    /// `(n, n-1, …, 1)`.
    pub fn decreasing(n: usize) -> Self {
        Permutation::from_vec_unchecked((1..=n as u8).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u8> {
        self.entries
    }

    /// `π(i)` for 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        self.entries[i - 1] as usize
    }

    /// Swaps the entries at 1-based positions `t` and `t + 1`.
    pub fn apply_adjacent(&mut self, t: usize) {
        self.entries.swap(t - 1, t);
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { entries: inv }
    }

    /// `π'(i) = (n+1) − π(n+1−i)`.
    pub fn reverse_complement(&self) -> Permutation {
        let n1 = self.len() as u8 + 1;
        Permutation {
            entries: self.entries.iter().rev().map(|&v| n1 - v).collect(),
        }
    }

    pub fn is_centrosymmetric(&self) -> bool {
        let n1 = self.len() as u8 + 1;
        self.entries
            .iter()
            .zip(self.entries.iter().rev())
            .all(|(&a, &b)| a + b == n1)
    }

    pub fn is_involution(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &v)| self.entries[v as usize - 1] as usize == i + 1)
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    ///
    /// Direct scan over index subsequences, extended one index at a time and
    /// abandoned as soon as the chosen prefix stops matching the pattern's
    /// relative order.
    pub fn contains_pattern(&self, pattern: &Pattern) -> bool {
        let tau = pattern.entries();
        if tau.len() > self.len() {
            return false;
        }
        if tau.is_empty() {
            return true;
        }
        let mut chosen = Vec::with_capacity(tau.len());
        extend_occurrence(&self.entries, tau, 0, &mut chosen)
    }

    pub fn avoids_all(&self, patterns: &[Pattern]) -> bool {
        patterns.iter().all(|p| !self.contains_pattern(p))
    }

    /// Fast test for membership in the class avoiding both 1243 and 2143.
    ///
    /// Both patterns are "two small entries, then a descent `c > d` whose
    /// lower value exceeds both": an occurrence exists iff for some position
    /// `l` there is an earlier `k` with `π(k) > π(l)` lying after the second
    /// position whose value is below `π(l)`.
    pub fn avoids_1243_2143(&self) -> bool {
        let e = &self.entries;
        for l in 0..e.len() {
            let target = e[l];
            let mut smaller_seen = 0;
            for &v in &e[..l] {
                if smaller_seen >= 2 && v > target {
                    return false;
                }
                if v < target {
                    smaller_seen += 1;
                }
            }
        }
        true
    }
}

fn extend_occurrence(entries: &[u8], tau: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
    let depth = chosen.len();
    if depth == tau.len() {
        return true;
    }
    let remaining = tau.len() - depth;
    for idx in start..=(entries.len() - remaining) {
        let v = entries[idx];
        let consistent = chosen
            .iter()
            .zip(tau)
            .all(|(&prev, &tprev)| (prev < v) == (tprev < tau[depth]));
        if consistent {
            chosen.push(v);
            if extend_occurrence(entries, tau, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses the comma-separated form. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(1, "empty permutation"));
        }
        let tokens: Vec<&str> = compact.split(',').collect();
        let n = tokens.len();
        if n > MAX_LEN {
            return Err(Error::parse(
                MAX_LEN + 1,
                format!("permutations longer than {MAX_LEN} are not supported"),
            ));
        }
        let mut entries = Vec::with_capacity(n);
        for (i, tok) in tokens.iter().enumerate() {
            if tok.is_empty() {
                return Err(Error::parse(i + 1, "empty entry"));
            }
            let v: u64 = tok
                .parse()
                .map_err(|_| Error::parse(i + 1, format!("entry `{tok}` is not a decimal integer")))?;
            if v == 0 {
                return Err(Error::parse(i + 1, "entry 0 is not allowed"));
            }
            if v > n as u64 {
                return Err(Error::parse(i + 1, format!("entry {v} is out of range 1..={n}")));
            }
            entries.push(v as u8);
        }
        Permutation::new(entries)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A classical pattern; any permutation of length at least 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(perm: Permutation) -> Result<Self> {
        if perm.is_empty() {
            return Err(Error::parse(1, "empty pattern"));
        }
        Ok(Pattern(perm))
    }

    pub fn p1243() -> Self {
        Pattern(Permutation::from_vec_unchecked(vec![1, 2, 4, 3]))
    }

    pub fn p2143() -> Self {
        Pattern(Permutation::from_vec_unchecked(vec![2, 1, 4, 3]))
    }

    /// `rc(1243)`.
    pub fn p2134() -> Self {
        Pattern(Permutation::from_vec_unchecked(vec![2, 1, 3, 4]))
    }

    /// The pair {1243, 2143}.
    pub fn schroder_pair() -> [Pattern; 2] {
        [Pattern::p1243(), Pattern::p2143()]
    }

    pub fn entries(&self) -> &[u8] {
        self.0.entries()
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Single-digit patterns print without separators, as in "1243".
        if self.0.len() < 10 {
            for v in self.0.entries() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts the comma-separated form or, when no comma is present, a run
    /// of single digits such as `1243`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let perm = if s.contains(',') {
            s.parse()?
        } else {
            let mut entries = Vec::with_capacity(s.len());
            for (i, c) in s.chars().enumerate() {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| Error::parse(i + 1, format!("`{c}` is not a digit")))?;
                entries.push(d as u8);
            }
            Permutation::new(entries)?
        };
        Pattern::new(perm)
    }
}

/// Returns the first of `patterns` contained in `perm`, if any.
pub fn first_contained<'a>(perm: &Permutation, patterns: &'a [Pattern]) -> Option<&'a Pattern> {
    patterns.iter().find(|p| perm.contains_pattern(p))
}

/// All of `𝔖_n` in lexicographic order.
pub fn all_permutations(n: usize, limits: &Limits) -> Result<AllPermutations> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "permutation length",
            value: 0,
            min: 1,
            max: limits.max_full_perm_len,
        });
    }
    Error::check_cap("full permutation generation", n, limits.max_full_perm_len)?;
    Ok(AllPermutations {
        next: Some((1..=n as u8).collect()),
    })
}

pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(current))
    }
}

fn next_lexicographic(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// The centrosymmetric permutations of length `n` (or only the involutions
/// among them), in lexicographic order of the first `⌊n/2⌋` entries.
///
/// Only the first half is chosen; the rest is forced by `π(n+1−i) = n+1−π(i)`
/// and, for odd `n`, the middle entry is the middle value.
pub fn generate_centrosymmetric(
    n: usize,
    involutions_only: bool,
    limits: &Limits,
) -> Result<Centrosymmetric> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "permutation length",
            value: 0,
            min: 1,
            max: limits.max_centrosymmetric_len,
        });
    }
    Error::check_cap(
        "centrosymmetric generation",
        n,
        limits.max_centrosymmetric_len.min(MAX_LEN),
    )?;
    let half = n / 2;
    let mut used = vec![false; n + 1];
    if n % 2 == 1 {
        used[half + 1] = true;
    }
    Ok(Centrosymmetric {
        n,
        half,
        involutions_only,
        prefix: Vec::with_capacity(half),
        cursor: vec![1; half + 1],
        used,
        done: false,
    })
}

pub struct Centrosymmetric {
    n: usize,
    half: usize,
    involutions_only: bool,
    prefix: Vec<u8>,
    // Next candidate value to try at each depth.
    cursor: Vec<usize>,
    // Values already taken, together with their mirrors.
    used: Vec<bool>,
    done: bool,
}

impl Centrosymmetric {
    fn build(&self) -> Permutation {
        let n = self.n;
        let mut entries = vec![0u8; n];
        for (i, &v) in self.prefix.iter().enumerate() {
            entries[i] = v;
            entries[n - 1 - i] = (n + 1) as u8 - v;
        }
        if n % 2 == 1 {
            entries[self.half] = (self.half + 1) as u8;
        }
        Permutation::from_vec_unchecked(entries)
    }

    fn pop(&mut self) {
        if let Some(v) = self.prefix.pop() {
            let v = v as usize;
            self.used[v] = false;
            self.used[self.n + 1 - v] = false;
        }
    }
}

impl Iterator for Centrosymmetric {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            if self.done {
                return None;
            }
            let depth = self.prefix.len();
            if depth == self.half {
                let perm = self.build();
                if self.half == 0 {
                    self.done = true;
                } else {
                    self.pop();
                }
                if !self.involutions_only || perm.is_involution() {
                    return Some(perm);
                }
                continue;
            }
            let start = self.cursor[depth];
            match (start..=self.n).find(|&v| !self.used[v]) {
                Some(v) => {
                    self.used[v] = true;
                    self.used[self.n + 1 - v] = true;
                    self.prefix.push(v as u8);
                    self.cursor[depth] = v + 1;
                    self.cursor[depth + 1] = 1;
                }
                None => {
                    if depth == 0 {
                        self.done = true;
                    } else {
                        self.pop();
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("5,3,1,2,4,6").inverse(), p("3,4,2,5,1,6"));
        assert_eq!(p("1,2,3").inverse(), p("1,2,3"));
        assert_eq!(
            p("5,10,6,7,8,2,9,3,1,4").inverse(),
            p("9,6,8,10,1,3,4,5,7,2")
        );
    }

    #[test]
    fn reverse_complement_examples() {
        assert_eq!(
            p("5,10,6,7,8,2,9,3,1,4").reverse_complement(),
            p("7,10,8,2,9,3,4,5,1,6")
        );
        assert_eq!(p("1,2").reverse_complement(), p("1,2"));
        assert_eq!(p("1,3,2").reverse_complement(), p("2,1,3"));
    }

    #[test]
    fn symmetry_predicates() {
        assert!(p("3,2,1").is_centrosymmetric());
        assert!(Permutation::identity(7).is_centrosymmetric());
        assert!(!p("1,3,2").is_centrosymmetric());
        assert!(p("1").is_centrosymmetric());

        assert!(p("1,3,2,4").is_involution());
        assert!(p("1,2,3").is_involution());
        assert!(!p("2,4,1,3").is_involution());
        assert!(p("1").is_involution());
    }

    #[test]
    fn pattern_examples() {
        assert!(p("1,2,4,3").contains_pattern(&pat("1243")));
        assert!(!p("5,10,6,7,8,2,9,3,1,4").contains_pattern(&pat("1243")));
        assert!(!p("1,3,4,2").contains_pattern(&pat("1243")));
        assert!(!p("1,2").contains_pattern(&pat("1243")));

        let pair = Pattern::schroder_pair();
        assert!(!p("2,1,4,3").avoids_all(&pair));
        assert!(p("7,10,8,2,9,3,4,5,1,6").avoids_all(&pair));
        assert!(p("3,2,1").avoids_all(&pair));
    }

    #[test]
    fn parse_diagnostics_name_the_entry() {
        let err = "1,2,2".parse::<Permutation>().unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                position: 3,
                message: "entry 2 is repeated".into()
            }
        );
        assert!(matches!(
            "1,0,2".parse::<Permutation>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            "1,4,2".parse::<Permutation>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            "1,x".parse::<Permutation>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!("".parse::<Permutation>().is_err());
        assert_eq!(p(" 5, 3,1 ,2,4,6"), p("5,3,1,2,4,6"));
    }

    #[test]
    fn display_round_trip() {
        let q = p("5,10,6,7,8,2,9,3,1,4");
        assert_eq!(q.to_string(), "5,10,6,7,8,2,9,3,1,4");
        assert_eq!(q.to_string().parse::<Permutation>().unwrap(), q);
    }

    #[test]
    fn centrosymmetric_small_cases() {
        let lim = Limits::default();
        let two: Vec<_> = generate_centrosymmetric(2, false, &lim).unwrap().collect();
        assert_eq!(two, vec![p("1,2"), p("2,1")]);

        let four: Vec<String> = generate_centrosymmetric(4, false, &lim)
            .unwrap()
            .map(|q| q.to_string().replace(',', ""))
            .collect();
        assert_eq!(
            four,
            ["1234", "1324", "2143", "2413", "3142", "3412", "4231", "4321"]
        );

        let four_inv: Vec<String> = generate_centrosymmetric(4, true, &lim)
            .unwrap()
            .map(|q| q.to_string().replace(',', ""))
            .collect();
        assert_eq!(four_inv, ["1234", "1324", "2143", "3412", "4231", "4321"]);

        let one: Vec<_> = generate_centrosymmetric(1, false, &lim).unwrap().collect();
        assert_eq!(one, vec![p("1")]);
    }

    #[test]
    fn generators_enforce_caps() {
        let lim = Limits::default();
        assert!(matches!(
            generate_centrosymmetric(lim.max_centrosymmetric_len + 1, false, &lim),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            all_permutations(lim.max_full_perm_len + 1, &lim),
            Err(Error::CapExceeded { .. })
        ));
        assert!(all_permutations(0, &lim).is_err());
    }

    #[test]
    fn all_permutations_is_lexicographic_and_complete() {
        let lim = Limits::default();
        let perms: Vec<_> = all_permutations(4, &lim).unwrap().collect();
        assert_eq!(perms.len(), 24);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_permutations(1, &lim).unwrap().count(), 1);
    }
}
