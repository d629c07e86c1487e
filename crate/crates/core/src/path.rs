//! Schroder paths and the level/notch feature calculus.
//!
//! A path of length `n` runs from `(0,0)` to `(n,n)` with steps
//! `e = (1,0)`, `n = (0,1)` and `d = (1,1)`, never dipping below `y = x`.
//! The text form is the lowercase step string, e.g. `nennnneeedennede`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// Diagonal step `(1,1)`.
    D,
    /// East step `(1,0)`.
    E,
    /// North step `(0,1)`.
    N,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::D => 'd',
            Step::E => 'e',
            Step::N => 'n',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c.to_ascii_lowercase() {
            'd' => Some(Step::D),
            'e' => Some(Step::E),
            'n' => Some(Step::N),
            _ => None,
        }
    }

    /// `e ↔ n`, `d` fixed.
    pub fn transpose(self) -> Step {
        match self {
            Step::D => Step::D,
            Step::E => Step::N,
            Step::N => Step::E,
        }
    }

    fn delta(self) -> (usize, usize) {
        match self {
            Step::D => (1, 1),
            Step::E => (1, 0),
            Step::N => (0, 1),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SchroderPath {
    steps: Vec<Step>,
    len: usize,
}

impl SchroderPath {
    /// Validates the prefix condition and the endpoint.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let (mut x, mut y) = (0usize, 0usize);
        for (i, &s) in steps.iter().enumerate() {
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
            if y < x {
                return Err(Error::NotAPath {
                    step: i + 1,
                    reason: format!("reaches ({x},{y}) below the diagonal"),
                });
            }
        }
        if x != y {
            return Err(Error::NotAPath {
                step: steps.len(),
                reason: format!("ends at ({x},{y}), off the diagonal"),
            });
        }
        Ok(SchroderPath { steps, len: x })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        let len = steps.iter().filter(|s| **s != Step::N).count();
        debug_assert!(SchroderPath::new(steps.clone()).is_ok());
        SchroderPath { steps, len }
    }

    pub fn empty() -> Self {
        SchroderPath::default()
    }

    /// The path length `n` (the endpoint is `(n,n)`).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Lattice points visited, starting with `(0,0)`.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        pts.push((x, y));
        for s in &self.steps {
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
            pts.push((x, y));
        }
        pts
    }

    /// Each step paired with its starting point.
    fn located(&self) -> impl Iterator<Item = (Step, usize, usize)> + '_ {
        let (mut x, mut y) = (0usize, 0usize);
        self.steps.iter().map(move |&s| {
            let at = (s, x, y);
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
            at
        })
    }

    pub fn concat(&self, other: &SchroderPath) -> SchroderPath {
        let mut steps = Vec::with_capacity(self.steps.len() + other.steps.len());
        steps.extend_from_slice(&self.steps);
        steps.extend_from_slice(&other.steps);
        SchroderPath {
            steps,
            len: self.len + other.len,
        }
    }

    /// `rev`: the steps in reverse order with `e` and `n` exchanged.
    pub fn reverse(&self) -> SchroderPath {
        SchroderPath {
            steps: self.steps.iter().rev().map(|s| s.transpose()).collect(),
            len: self.len,
        }
    }

    pub fn is_palindromic(&self) -> bool {
        let k = self.steps.len();
        (0..k).all(|i| self.steps[i] == self.steps[k - 1 - i].transpose())
    }

    pub fn features(&self) -> FeatureSummary {
        let mut features = Vec::new();
        for (i, (s, x, y)) in self.located().enumerate() {
            if y != x + 1 {
                continue;
            }
            match s {
                Step::D => features.push(Feature {
                    kind: FeatureKind::Level,
                    t: x + 1,
                }),
                Step::E if self.steps.get(i + 1) == Some(&Step::N) => features.push(Feature {
                    kind: FeatureKind::Notch,
                    t: x + 1,
                }),
                _ => {}
            }
        }
        FeatureSummary::from_features(self.len, features)
    }

    /// `ψ`: every level feature becomes a notch at the same position and
    /// vice versa; all other steps are kept.
    pub fn psi(&self) -> SchroderPath {
        let mut out = Vec::with_capacity(self.steps.len() + 4);
        let (mut x, mut y) = (0usize, 0usize);
        let mut i = 0;
        while i < self.steps.len() {
            let s = self.steps[i];
            let on_superdiagonal = y == x + 1;
            if on_superdiagonal && s == Step::D {
                out.push(Step::E);
                out.push(Step::N);
                x += 1;
                y += 1;
                i += 1;
            } else if on_superdiagonal && s == Step::E && self.steps.get(i + 1) == Some(&Step::N) {
                out.push(Step::D);
                x += 1;
                y += 1;
                i += 2;
            } else {
                out.push(s);
                let (dx, dy) = s.delta();
                x += dx;
                y += dy;
                i += 1;
            }
        }
        SchroderPath {
            steps: out,
            len: self.len,
        }
    }

    /// Membership in `D_n`: the path is a concatenation of blocks `d` and
    /// `n P e`, where `P` is a concatenation of `d` and pyramids `nᵏeᵏ`.
    pub fn is_in_d(&self) -> bool {
        let mut scan = DScan::default();
        self.steps.iter().all(|&s| scan.push(s)) && scan.is_complete()
    }

    /// True iff a `d` step joins `(t−1,t−1)` to `(t,t)`.
    pub fn has_diagonal_d_at(&self, t: usize) -> Result<bool> {
        if t == 0 || t > self.len {
            return Err(Error::OutOfRange {
                what: "diagonal position t",
                value: t,
                min: 1,
                max: self.len,
            });
        }
        Ok(self
            .located()
            .any(|(s, x, y)| s == Step::D && x == t - 1 && y == t - 1))
    }

    /// True iff some `d` step lies on the diagonal `y = x`.
    pub fn has_any_diagonal_d(&self) -> bool {
        self.located().any(|(s, x, y)| s == Step::D && x == y)
    }

    /// ASCII drawing: one character per lattice point, top row `y = n`.
    /// Path points are `o`, diagonal points off the path are `/`, points
    /// strictly above the diagonal are `.`, and points below are blank.
    pub fn render(&self) -> String {
        let n = self.len;
        let mut on_path = vec![vec![false; n + 1]; n + 1];
        for (x, y) in self.points() {
            on_path[y][x] = true;
        }
        let width = n.to_string().len();
        let mut out = String::new();
        for y in (0..=n).rev() {
            out.push_str(&format!("{y:>width$} "));
            let mut row = String::new();
            for (x, &hit) in on_path[y].iter().enumerate() {
                row.push(if hit {
                    'o'
                } else if x == y {
                    '/'
                } else if y > x {
                    '.'
                } else {
                    ' '
                });
            }
            out.push_str(row.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for SchroderPath {
    type Err = Error;

    /// Case-insensitive; whitespace is not allowed.
    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            let step = Step::from_letter(c)
                .ok_or_else(|| Error::parse(i + 1, format!("`{c}` is not one of e, n, d")))?;
            steps.push(step);
        }
        SchroderPath::new(steps)
    }
}

impl Serialize for SchroderPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SchroderPath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeatureKind {
    Level,
    Notch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Feature {
    pub kind: FeatureKind,
    pub t: usize,
}

/// All features of a path plus earliest/latest positions.
///
/// Absent earliest positions are `n`; absent latest positions are `0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureSummary {
    pub n: usize,
    pub features: Vec<Feature>,
    pub earliest_level: usize,
    pub latest_level: usize,
    pub earliest_notch: usize,
    pub latest_notch: usize,
    pub earliest_any: usize,
    pub latest_any: usize,
}

impl FeatureSummary {
    fn from_features(n: usize, features: Vec<Feature>) -> Self {
        let positions = |kind: Option<FeatureKind>| {
            features
                .iter()
                .filter(move |f| kind.is_none_or(|k| f.kind == k))
                .map(|f| f.t)
        };
        let earliest = |kind| positions(kind).min().unwrap_or(n);
        let latest = |kind| positions(kind).max().unwrap_or(0);
        FeatureSummary {
            n,
            earliest_level: earliest(Some(FeatureKind::Level)),
            latest_level: latest(Some(FeatureKind::Level)),
            earliest_notch: earliest(Some(FeatureKind::Notch)),
            latest_notch: latest(Some(FeatureKind::Notch)),
            earliest_any: earliest(None),
            latest_any: latest(None),
            features,
        }
    }

    pub fn levels(&self) -> Vec<usize> {
        self.of_kind(FeatureKind::Level)
    }

    pub fn notches(&self) -> Vec<usize> {
        self.of_kind(FeatureKind::Notch)
    }

    fn of_kind(&self, kind: FeatureKind) -> Vec<usize> {
        self.features
            .iter()
            .filter(|f| f.kind == kind)
            .map(|f| f.t)
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }
}

/// Incremental `D_n` recognizer over the height `h = y − x`.
///
/// `d` steps are allowed only at heights 0 and 1. An `n` taken from height 1
/// opens an excursion: a run of `n` steps to a peak, then exactly as many
/// `e` steps back down to height 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DScan {
    height: usize,
    mode: ScanMode,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
enum ScanMode {
    #[default]
    Free,
    Rising(usize),
    Falling(usize),
}

impl DScan {
    /// Feeds one step; returns false once the prefix can no longer be
    /// extended to a member of `D`.
    pub fn push(&mut self, step: Step) -> bool {
        let next = match (self.mode, step) {
            (ScanMode::Free, Step::D) if self.height <= 1 => Some(ScanMode::Free),
            (ScanMode::Free, Step::N) if self.height == 0 => Some(ScanMode::Free),
            (ScanMode::Free, Step::N) if self.height == 1 => Some(ScanMode::Rising(1)),
            (ScanMode::Free, Step::E) if self.height == 1 => Some(ScanMode::Free),
            (ScanMode::Rising(k), Step::N) => Some(ScanMode::Rising(k + 1)),
            (ScanMode::Rising(1), Step::E) | (ScanMode::Falling(1), Step::E) => {
                Some(ScanMode::Free)
            }
            (ScanMode::Rising(k), Step::E) | (ScanMode::Falling(k), Step::E) => {
                Some(ScanMode::Falling(k - 1))
            }
            _ => None,
        };
        match next {
            Some(mode) => {
                self.mode = mode;
                match step {
                    Step::N => self.height += 1,
                    Step::E => self.height -= 1,
                    Step::D => {}
                }
                true
            }
            None => false,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.mode == ScanMode::Free && self.height == 0
    }
}

/// Every path of length `n` (or only those in `D_n`), depth first with step
/// order `d < e < n` at each choice point.
pub fn generate_paths(n: usize, restrict_to_d: bool, limits: &Limits) -> Result<PathGenerator> {
    Error::check_cap("path generation", n, limits.max_path_len)?;
    Ok(PathGenerator::new(n, restrict_to_d))
}

const STEP_ORDER: [Step; 3] = [Step::D, Step::E, Step::N];

pub struct PathGenerator {
    n: usize,
    restrict_to_d: bool,
    steps: Vec<Step>,
    // Per depth: index into STEP_ORDER of the next step to try.
    cursor: Vec<u8>,
    // Per depth: position before the step, and the D scanner state.
    frames: Vec<(usize, usize, DScan)>,
    done: bool,
}

impl PathGenerator {
    fn new(n: usize, restrict_to_d: bool) -> Self {
        PathGenerator {
            n,
            restrict_to_d,
            steps: Vec::with_capacity(3 * n),
            cursor: vec![0],
            frames: vec![(0, 0, DScan::default())],
            done: false,
        }
    }

    fn allowed(&self, step: Step, x: usize, y: usize) -> bool {
        match step {
            Step::D => x < self.n && y < self.n,
            Step::E => x < self.n && y > x,
            Step::N => y < self.n,
        }
    }

    fn backtrack(&mut self) {
        self.steps.pop();
        self.cursor.pop();
        self.frames.pop();
        if self.cursor.is_empty() {
            self.done = true;
        }
    }
}

impl Iterator for PathGenerator {
    type Item = SchroderPath;

    fn next(&mut self) -> Option<SchroderPath> {
        while !self.done {
            let depth = self.steps.len();
            let (x, y, scan) = self.frames[depth];
            if x == self.n && y == self.n {
                let out = SchroderPath {
                    steps: self.steps.clone(),
                    len: self.n,
                };
                self.backtrack();
                return Some(out);
            }
            let mut advanced = false;
            while (self.cursor[depth] as usize) < STEP_ORDER.len() {
                let step = STEP_ORDER[self.cursor[depth] as usize];
                self.cursor[depth] += 1;
                if !self.allowed(step, x, y) {
                    continue;
                }
                let mut next_scan = scan;
                if self.restrict_to_d && !next_scan.push(step) {
                    continue;
                }
                let (dx, dy) = step.delta();
                self.steps.push(step);
                self.cursor.push(0);
                self.frames.push((x + dx, y + dy, next_scan));
                advanced = true;
                break;
            }
            if !advanced {
                self.backtrack();
            }
        }
        None
    }
}
