//! Elementary string queries shared by the reductions: longest common
//! extensions, shortest periods, occurrence sets, suffix-rank ranges,
//! longest common factors, and the cyclic infinite extension.

use crate::{Error, Pos, Result, Symbol, Text};

/// Length of the longest common prefix of `t[i..]` and `t[j..]` (1-based).
pub fn lce(t: &Text, i: Pos, j: Pos) -> usize {
    let n = t.len();
    let mut l = 0;
    while i + l <= n && j + l <= n && t.at(i + l) == t.at(j + l) {
        l += 1;
    }
    l
}

/// Length of the longest common prefix of two slices.
pub fn lcp(a: &[Symbol], b: &[Symbol]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Shortest period of `s`, via the prefix function; `per(s) = |s| - pi(|s|)`.
pub fn shortest_period(s: &[Symbol]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    n - pi[n - 1]
}

/// `Occ(P,T)`: all 1-based positions `j` with `j + |P| <= |T| + 1` and
/// `T[j..j+|P|) = P`. The empty pattern matches every position in `[1..=|T|]`.
pub fn occurrences(p: &[Symbol], t: &Text) -> Vec<Pos> {
    let n = t.len();
    let m = p.len();
    if m == 0 {
        return (1..=n).collect();
    }
    if m > n {
        return Vec::new();
    }
    (1..=n - m + 1).filter(|&j| t.slice(j, j + m) == p).collect()
}

/// `RangeBeg(P,T)`: the number of suffixes of `T` lexicographically below `P`.
pub fn range_beg(p: &[Symbol], t: &Text) -> usize {
    (1..=t.len()).filter(|&j| t.slice(j, t.len() + 1) < p).count()
}

/// `RangeEnd(P,T) = RangeBeg(P,T) + |Occ(P,T)|`.
pub fn range_end(p: &[Symbol], t: &Text) -> usize {
    range_beg(p, t) + occurrences(p, t).len()
}

/// Length of the longest common factor (substring) of `s1` and `s2`,
/// by dynamic programming over suffix extensions.
pub fn lcf(s1: &[Symbol], s2: &[Symbol]) -> usize {
    if s1.is_empty() || s2.is_empty() {
        return 0;
    }
    let mut best = 0;
    let mut prev = vec![0usize; s2.len() + 1];
    let mut cur = vec![0usize; s2.len() + 1];
    for &a in s1 {
        for (j, &b) in s2.iter().enumerate() {
            cur[j + 1] = if a == b { prev[j] + 1 } else { 0 };
            best = best.max(cur[j + 1]);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    best
}

/// `S^inf[i] = S[1 + (i-1) mod |S|]` for any integer index `i`.
pub fn infinite_at(t: &Text, i: i64) -> Result<Symbol> {
    if t.is_empty() {
        return Err(Error::EmptyInfiniteText);
    }
    let n = t.len() as i64;
    Ok(t.at(1 + (i - 1).rem_euclid(n) as usize))
}

/// The slice `S^inf[i..j)` of the cyclic extension, for any integers `i <= j`.
pub fn infinite_slice(t: &Text, i: i64, j: i64) -> Result<Vec<Symbol>> {
    (i..j).map(|k| infinite_at(t, k)).collect()
}

pub fn reverse(s: &[Symbol]) -> Vec<Symbol> {
    s.iter().rev().copied().collect()
}

pub fn is_prefix(p: &[Symbol], s: &[Symbol]) -> bool {
    p.len() <= s.len() && &s[..p.len()] == p
}

pub fn is_suffix(p: &[Symbol], s: &[Symbol]) -> bool {
    p.len() <= s.len() && &s[s.len() - p.len()..] == p
}
