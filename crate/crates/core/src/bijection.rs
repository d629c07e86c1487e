//! The Egge–Mansour bijection `φ : 𝒮_n → 𝔖_{n+1}(1243, 2143)`.
//!
//! Construction: every unit square `Γ_{r,s}` (corners `(r−1,s−1)` and
//! `(r,s)`) whose top-left corner lies weakly below the path and strictly
//! above `y = x` carries the label `r`. Blocks are peeled off repeatedly:
//! start from the lowest remaining square of the rightmost labelled column
//! and walk diagonally down-left, emitting each label, until the square's
//! left edge is an `n` step of the path. With `s_t` swapping positions `t`
//! and `t+1`, `φ(p) = σ_k ⋯ σ_1 (n+1, n, …, 1)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::path::{generate_paths, SchroderPath, Step};
use crate::perm::{first_contained, Pattern, Permutation};

/// A product of blocks `σ_1, σ_2, …`, each a product of adjacent
/// transpositions written left to right as in `σ_1 = s_9 s_8 s_7`.
///
/// Blocks apply in order (`σ_1` first); within a block the rightmost
/// transposition applies first, so `s_9 s_8 s_7 π = s_9(s_8(s_7(π)))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TranspositionWord {
    pub blocks: Vec<Vec<usize>>,
}

impl TranspositionWord {
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total number of transpositions.
    pub fn length(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn apply_block(block: &[usize], perm: &mut Permutation) {
        for &t in block.iter().rev() {
            perm.apply_adjacent(t);
        }
    }

    pub fn apply(&self, perm: &mut Permutation) {
        for block in &self.blocks {
            Self::apply_block(block, perm);
        }
    }

    /// Every `s_t` replaced by `s_{t+offset}`.
    pub fn shifted(&self, offset: usize) -> TranspositionWord {
        TranspositionWord {
            blocks: self
                .blocks
                .iter()
                .map(|b| b.iter().map(|t| t + offset).collect())
                .collect(),
        }
    }

    pub fn contains(&self, t: usize) -> bool {
        self.blocks.iter().any(|b| b.contains(&t))
    }
}

impl fmt::Display for TranspositionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "σ{}=", i + 1)?;
            for t in block {
                write!(f, "s{t}")?;
            }
        }
        Ok(())
    }
}

/// The block sequence `σ_1, …, σ_k` of `p`.
pub fn sigma_decomposition(p: &SchroderPath) -> TranspositionWord {
    let n = p.len();
    // exit[r]: height at which the path leaves the line x = r−1 (r = 1..n).
    // enter[x]: height at which the path arrives on the line x.
    let mut exit = vec![0usize; n + 1];
    let mut enter = vec![0usize; n + 1];
    let (mut x, mut y) = (0usize, 0usize);
    for &s in p.steps() {
        match s {
            Step::N => y += 1,
            Step::E => {
                exit[x + 1] = y;
                x += 1;
                enter[x] = y;
            }
            Step::D => {
                exit[x + 1] = y;
                x += 1;
                y += 1;
                enter[x] = y;
            }
        }
    }

    // used[r][s] for labelled squares r <= s <= exit[r].
    let mut used: Vec<Vec<bool>> = (0..=n).map(|_| vec![false; n + 1]).collect();
    let lowest_free = |used: &Vec<Vec<bool>>, r: usize| (r..=exit[r]).find(|&s| !used[r][s]);

    let mut blocks = Vec::new();
    loop {
        let start = (1..=n)
            .rev()
            .find_map(|r| lowest_free(&used, r).map(|s| (r, s)));
        let Some((mut r, mut s)) = start else { break };
        let mut block = Vec::new();
        loop {
            assert!(
                s >= r && s <= exit[r] && !used[r][s],
                "diagonal walk left the labelled region at ({r},{s}) for {p}"
            );
            used[r][s] = true;
            block.push(r);
            // Left edge of Γ_{r,s} runs from (r−1,s−1) to (r−1,s).
            let left_edge_is_north = enter[r - 1] < s && s <= exit[r];
            if left_edge_is_north {
                break;
            }
            r -= 1;
            s -= 1;
        }
        blocks.push(block);
    }
    TranspositionWord { blocks }
}

pub fn phi(p: &SchroderPath) -> Permutation {
    let mut perm = Permutation::decreasing(p.len() + 1);
    sigma_decomposition(p).apply(&mut perm);
    perm
}

/// One row of the evolution table: the block just applied and the result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub block: Vec<usize>,
    pub permutation: Permutation,
}

/// The starting permutation followed by the result after each block.
pub fn phi_trace(p: &SchroderPath) -> (Permutation, Vec<TraceRow>) {
    let start = Permutation::decreasing(p.len() + 1);
    let mut perm = start.clone();
    let rows = sigma_decomposition(p)
        .blocks
        .into_iter()
        .map(|block| {
            TranspositionWord::apply_block(&block, &mut perm);
            TraceRow {
                block,
                permutation: perm.clone(),
            }
        })
        .collect();
    (start, rows)
}

/// The unique path `p` with `φ(p) = π`.
///
/// Peels off the last prime component of the path. If `π(n+1) = 1` the path
/// ends in `d` and `π − 1` on the first `n` positions is the image of the
/// rest. Otherwise the last component is `n r e` of length `i = π(n+1) − 1`:
/// the last `i` positions hold the tail of `φ(n r e)`, whose first entry sits
/// at the unique earlier position carrying a value `≤ i+1`, and the remaining
/// entries shifted down by `i` (with `1` at that position) form the image of
/// the prefix.
pub fn phi_inverse(pi: &Permutation) -> Result<SchroderPath> {
    if pi.is_empty() {
        return Err(Error::parse(1, "empty permutation"));
    }
    if !pi.avoids_1243_2143() {
        let pair = Pattern::schroder_pair();
        let pattern = first_contained(pi, &pair).expect("fast and direct pattern scans disagree");
        return Err(Error::NotInClass {
            permutation: pi.to_string(),
            pattern: pattern.to_string(),
        });
    }
    let mut steps = Vec::with_capacity(2 * pi.len());
    invert_into(pi.entries(), &mut steps)
        .expect("class member outside the image of the bijection");
    let path = SchroderPath::from_steps_unchecked(steps);
    debug_assert_eq!(&phi(&path), pi);
    Ok(path)
}

fn invert_into(vals: &[u8], out: &mut Vec<Step>) -> Option<()> {
    let m = vals.len();
    if m <= 1 {
        return Some(());
    }
    let last = vals[m - 1] as usize;
    if last == 1 {
        let rest: Vec<u8> = vals[..m - 1].iter().map(|v| v - 1).collect();
        invert_into(&rest, out)?;
        out.push(Step::D);
        return Some(());
    }
    let i = last - 1;
    let (head, tail) = vals.split_at(m - i);
    let mut small = head.iter().enumerate().filter(|(_, &v)| v as usize <= i + 1);
    let (pos, &first) = small.next()?;
    if small.next().is_some() {
        return None;
    }

    let prefix: Vec<u8> = head
        .iter()
        .enumerate()
        .map(|(t, &v)| if t == pos { 1 } else { v - i as u8 })
        .collect();
    let mut inner = Vec::with_capacity(i);
    inner.push(first);
    inner.extend_from_slice(&tail[..i - 1]);

    invert_into(&prefix, out)?;
    out.push(Step::N);
    invert_into(&inner, out)?;
    out.push(Step::E);
    Some(())
}

/// Memoized `φ⁻¹` for one path length: every path of `𝒮_n` keyed by its image.
#[derive(Clone, Debug)]
pub struct InverseTable {
    n: usize,
    map: HashMap<Permutation, SchroderPath>,
}

const TABLE_FORMAT: &str = "schroder-phi-inverse";
const TABLE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct TableFile {
    format: String,
    version: u32,
    n: usize,
    entries: Vec<(Permutation, SchroderPath)>,
}

impl InverseTable {
    pub fn build(n: usize, limits: &Limits) -> Result<Self> {
        Error::check_cap("inverse table", n, limits.max_inverse_table_len)?;
        let map = generate_paths(n, false, &Limits::uniform(n))?
            .map(|p| (phi(&p), p))
            .collect();
        Ok(InverseTable { n, map })
    }

    /// Path length `n`; the table covers permutations of length `n + 1`.
    pub fn path_len(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn lookup(&self, pi: &Permutation) -> Result<SchroderPath> {
        if pi.len() != self.n + 1 {
            return Err(Error::OutOfRange {
                what: "permutation length for this table",
                value: pi.len(),
                min: self.n + 1,
                max: self.n + 1,
            });
        }
        match self.map.get(pi) {
            Some(p) => Ok(p.clone()),
            None => {
                let pattern = first_contained(pi, &Pattern::schroder_pair())
                    .map(|p| p.to_string())
                    .unwrap_or_else(|| "?".into());
                Err(Error::NotInClass {
                    permutation: pi.to_string(),
                    pattern,
                })
            }
        }
    }

    /// File name used for this path length inside a cache directory.
    pub fn file_name(n: usize) -> String {
        format!("phi-inverse-v{TABLE_VERSION}-n{n}.json")
    }

    pub fn save(&self, file: &Path) -> Result<()> {
        let mut entries: Vec<(Permutation, SchroderPath)> =
            self.map.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        entries.sort();
        let doc = TableFile {
            format: TABLE_FORMAT.into(),
            version: TABLE_VERSION,
            n: self.n,
            entries,
        };
        let cache_err = |message: String| Error::Cache {
            path: file.display().to_string(),
            message,
        };
        let text = serde_json::to_string(&doc).map_err(|e| cache_err(e.to_string()))?;
        fs::write(file, text).map_err(|e| cache_err(e.to_string()))
    }

    /// Loads a table written by [`InverseTable::save`]; the entry count must
    /// match the number of paths of that length.
    pub fn load(file: &Path) -> Result<Self> {
        let cache_err = |message: String| Error::Cache {
            path: file.display().to_string(),
            message,
        };
        let text = fs::read_to_string(file).map_err(|e| cache_err(e.to_string()))?;
        let doc: TableFile = serde_json::from_str(&text).map_err(|e| cache_err(e.to_string()))?;
        if doc.format != TABLE_FORMAT || doc.version != TABLE_VERSION {
            return Err(cache_err(format!(
                "unsupported format {} v{}",
                doc.format, doc.version
            )));
        }
        let expected = crate::enumeration::schroder_number(doc.n);
        if doc.entries.len() as u64 != expected {
            return Err(cache_err(format!(
                "{} entries, expected {expected}",
                doc.entries.len()
            )));
        }
        let mut map = HashMap::with_capacity(doc.entries.len());
        for (perm, path) in doc.entries {
            if perm.len() != doc.n + 1 || path.len() != doc.n {
                return Err(cache_err(format!("entry {perm} -> {path} has the wrong size")));
            }
            map.insert(perm, path);
        }
        Ok(InverseTable { n: doc.n, map })
    }
}

/// Per-length inverse tables, built on first use and shared afterwards.
///
/// With a directory attached, tables are read from and written to
/// `<dir>/phi-inverse-v1-n<N>.json`.
#[derive(Debug, Default)]
pub struct InverseCache {
    limits: Limits,
    dir: Option<PathBuf>,
    tables: RwLock<BTreeMap<usize, Arc<InverseTable>>>,
}

impl InverseCache {
    pub fn new(limits: Limits, dir: Option<PathBuf>) -> Self {
        InverseCache {
            limits,
            dir,
            tables: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn table(&self, n: usize) -> Result<Arc<InverseTable>> {
        if let Some(t) = self.tables.read().expect("cache lock poisoned").get(&n) {
            return Ok(Arc::clone(t));
        }
        Error::check_cap("inverse table", n, self.limits.max_inverse_table_len)?;
        let mut tables = self.tables.write().expect("cache lock poisoned");
        if let Some(t) = tables.get(&n) {
            return Ok(Arc::clone(t));
        }
        let table = match &self.dir {
            Some(dir) => {
                let file = dir.join(InverseTable::file_name(n));
                if file.exists() {
                    InverseTable::load(&file)?
                } else {
                    let t = InverseTable::build(n, &self.limits)?;
                    fs::create_dir_all(dir).map_err(|e| Error::Cache {
                        path: dir.display().to_string(),
                        message: e.to_string(),
                    })?;
                    t.save(&file)?;
                    t
                }
            }
            None => InverseTable::build(n, &self.limits)?,
        };
        let table = Arc::new(table);
        tables.insert(n, Arc::clone(&table));
        Ok(table)
    }

    pub fn phi_inverse(&self, pi: &Permutation) -> Result<SchroderPath> {
        if pi.is_empty() {
            return Err(Error::parse(1, "empty permutation"));
        }
        self.table(pi.len() - 1)?.lookup(pi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> SchroderPath {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    const EXAMPLE_1: &str = "nennnneeedennede";

    #[test]
    fn decomposition_examples() {
        let w = sigma_decomposition(&path(EXAMPLE_1));
        assert_eq!(
            w.blocks,
            vec![
                vec![9, 8, 7],
                vec![7],
                vec![6, 5, 4, 3, 2],
                vec![4, 3, 2],
                vec![3, 2],
                vec![2],
                vec![1]
            ]
        );
        assert_eq!(sigma_decomposition(&path("ne")).blocks, vec![vec![1]]);
        assert!(sigma_decomposition(&path("d")).is_empty());
        assert!(sigma_decomposition(&path("")).is_empty());
    }

    #[test]
    fn word_display() {
        let w = sigma_decomposition(&path("nnee"));
        assert_eq!(w.to_string(), "σ1=s2s1 σ2=s1");
        assert_eq!(w.length(), 3);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&path(EXAMPLE_1)), perm("5,10,6,7,8,2,9,3,1,4"));
        assert_eq!(phi(&SchroderPath::empty()), perm("1"));
        assert_eq!(phi(&path("ndndneee")), perm("5,3,1,2,4,6"));
        assert_eq!(phi(&path("ne")), perm("1,2"));
        assert_eq!(phi(&path("d")), perm("2,1"));
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(
            phi_inverse(&perm("5,10,6,7,8,2,9,3,1,4")).unwrap(),
            path(EXAMPLE_1)
        );
        assert_eq!(phi_inverse(&perm("1")).unwrap(), SchroderPath::empty());
        assert_eq!(phi_inverse(&perm("2,1")).unwrap(), path("d"));
        assert_eq!(
            phi_inverse(&perm("1,2,4,3")).unwrap_err(),
            Error::NotInClass {
                permutation: "1,2,4,3".into(),
                pattern: "1243".into()
            }
        );
        assert!(matches!(
            phi_inverse(&perm("3,2,1,5,4")),
            Err(Error::NotInClass { pattern, .. }) if pattern == "2143"
        ));
    }

    #[test]
    fn table_agrees_with_structural_inverse() {
        let lim = Limits::default();
        for n in 0..=6 {
            let table = InverseTable::build(n, &lim).unwrap();
            assert_eq!(table.len() as u64, crate::enumeration::schroder_number(n));
            for p in generate_paths(n, false, &lim).unwrap() {
                let pi = phi(&p);
                assert_eq!(table.lookup(&pi).unwrap(), p);
                assert_eq!(phi_inverse(&pi).unwrap(), p);
            }
        }
        let t3 = InverseTable::build(3, &lim).unwrap();
        assert!(matches!(
            t3.lookup(&perm("1,2,4,3")),
            Err(Error::NotInClass { .. })
        ));
        assert!(matches!(
            InverseTable::build(lim.max_inverse_table_len + 1, &lim),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn trace_ends_at_phi() {
        let p = path(EXAMPLE_1);
        let (start, rows) = phi_trace(&p);
        assert_eq!(start, Permutation::decreasing(10));
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[0].permutation, perm("10,9,8,7,6,5,3,2,1,4"));
        assert_eq!(rows.last().unwrap().permutation, phi(&p));
    }
}
