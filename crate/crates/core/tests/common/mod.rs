#![allow(dead_code)]

use proptest::prelude::*;
use schroder::{SchroderPath, Step};

/// Does `entries` contain `pattern` as a subsequence in the same relative order?
/// Tries every index combination.
pub fn naive_contains(entries: &[u8], pattern: &[u8]) -> bool {
    let k = pattern.len();
    let n = entries.len();
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let ok = (0..k).all(|a| {
            (0..k).all(|b| (entries[idx[a]] < entries[idx[b]]) == (pattern[a] < pattern[b]))
        });
        if ok {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn naive_avoids_pair(entries: &[u8]) -> bool {
    !naive_contains(entries, &[1, 2, 4, 3]) && !naive_contains(entries, &[2, 1, 4, 3])
}

/// Recursive-descent recognizer for `D = (d | n P e)*`, `P = (d | n^k e^k)*`.
pub fn grammar_in_d(steps: &[Step]) -> bool {
    let mut pos = 0;
    while pos < steps.len() {
        match steps[pos] {
            Step::D => pos += 1,
            Step::N => {
                pos += 1;
                pos = match parse_p(steps, pos) {
                    Some(p) => p,
                    None => return false,
                };
                if steps.get(pos) != Some(&Step::E) {
                    return false;
                }
                pos += 1;
            }
            Step::E => return false,
        }
    }
    true
}

fn parse_p(steps: &[Step], mut pos: usize) -> Option<usize> {
    loop {
        match steps.get(pos) {
            Some(Step::D) => pos += 1,
            Some(Step::N) => {
                let start = pos;
                while steps.get(pos) == Some(&Step::N) {
                    pos += 1;
                }
                let k = pos - start;
                for _ in 0..k {
                    if steps.get(pos) != Some(&Step::E) {
                        return None;
                    }
                    pos += 1;
                }
            }
            _ => return Some(pos),
        }
    }
}

/// Large Schroder numbers from `(n+1) r_n = 3(2n−1) r_{n−1} − (n−2) r_{n−2}`.
pub fn schroder_oracle(max_n: usize) -> Vec<u128> {
    let mut r: Vec<u128> = vec![1, 2];
    for n in 2..=max_n {
        let n128 = n as u128;
        let num = 3 * (2 * n128 - 1) * r[n - 1] - (n128 - 2) * r[n - 2];
        assert_eq!(num % (n128 + 1), 0);
        r.push(num / (n128 + 1));
    }
    r.truncate(max_n + 1);
    r
}

/// Every step string over {d, e, n} of total weight `n` that stays weakly
/// above the diagonal, built by plain recursion.
pub fn all_paths_naive(n: usize) -> Vec<String> {
    fn go(x: usize, y: usize, n: usize, cur: &mut String, out: &mut Vec<String>) {
        if x == n && y == n {
            out.push(cur.clone());
            return;
        }
        for (c, dx, dy) in [('d', 1, 1), ('e', 1, 0), ('n', 0, 1)] {
            let (nx, ny) = (x + dx, y + dy);
            if nx <= n && ny <= n && nx <= ny {
                cur.push(c);
                go(nx, ny, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut String::new(), &mut out);
    out
}

/// Random Schroder path of length `n`, driven by `choices`.
pub fn path_from_choices(n: usize, choices: &[u8]) -> SchroderPath {
    let (mut x, mut y) = (0usize, 0usize);
    let mut steps = Vec::new();
    let mut i = 0;
    while (x, y) != (n, n) {
        let mut options = Vec::with_capacity(3);
        if x < n && y < n {
            options.push(Step::D);
        }
        if x < y {
            options.push(Step::E);
        }
        if y < n {
            options.push(Step::N);
        }
        let c = choices.get(i).copied().unwrap_or(0) as usize;
        i += 1;
        let s = options[c % options.len()];
        match s {
            Step::D => {
                x += 1;
                y += 1;
            }
            Step::E => x += 1,
            Step::N => y += 1,
        }
        steps.push(s);
    }
    SchroderPath::new(steps).expect("valid by construction")
}

pub fn arb_path(max_n: usize) -> impl Strategy<Value = SchroderPath> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<u8>(), 2 * n).prop_map(move |c| path_from_choices(n, &c))
    })
}

pub fn arb_entries(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    (1..=max_len).prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
}

/// Random member of `D`, produced by expanding `D = (d | n P e)*`,
/// `P = (d | n^k e^k)*` with sizes drawn from `choices`.
pub fn d_path_from_choices(choices: &[u8]) -> SchroderPath {
    let mut text = String::new();
    let mut it = choices.iter().copied();
    while let Some(c) = it.next() {
        if c % 2 == 0 {
            text.push('d');
            continue;
        }
        text.push('n');
        let items = it.next().unwrap_or(0) % 4;
        for _ in 0..items {
            let c = it.next().unwrap_or(0);
            if c % 2 == 0 {
                text.push('d');
            } else {
                let k = 1 + (c as usize / 2) % 4;
                text.push_str(&"n".repeat(k));
                text.push_str(&"e".repeat(k));
            }
        }
        text.push('e');
    }
    text.parse().expect("grammar output is a path")
}

pub fn arb_d_path(max_items: usize) -> impl Strategy<Value = SchroderPath> {
    proptest::collection::vec(any::<u8>(), 0..=max_items).prop_map(|c| d_path_from_choices(&c))
}
