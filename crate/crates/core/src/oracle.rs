//! Definition-literal brute force for every decision problem and array in the
//! pipeline. Nothing here shares a code path with the implementations it
//! checks: suffix arrays come from sorting suffix slices, factor arrays from
//! scanning all earlier occurrences, and counts from pair enumeration.

use crate::rps::RpsInstance;
use crate::{DmInstance, Error, Pos, Result, SnInstance, Symbol, Text};

/// Guard against accidentally quadratic (or worse) blowups.
const ARRAY_GUARD: usize = 4096;
const COUNT_GUARD: usize = 8192;

/// Does any pattern of the dictionary occur in the text? Naive scan of every
/// pattern at every position.
pub fn oracle_dm(inst: &DmInstance) -> bool {
    let t = &inst.text;
    let n = t.len();
    inst.patterns.iter().any(|p| {
        let m = p.len();
        m <= n && (1..=n - m + 1).any(|j| t.slice(j, j + m) == &p[..])
    })
}

/// Does any `(A,B)` of `pairs_q` nest in any `(X,Y)` of `pairs_p`?
pub fn oracle_sn(inst: &SnInstance) -> bool {
    inst.pairs_q.iter().any(|(a, b)| {
        inst.pairs_p.iter().any(|(x, y)| {
            a.len() <= x.len()
                && b.len() <= y.len()
                && x[x.len() - a.len()..] == a[..]
                && y[..b.len()] == b[..]
        })
    })
}

/// Per-query match counts `n_i = |{t in (b_i..e_i] : Q_i prefixes S[t]}|`
/// plus the overall yes/no answer.
pub fn oracle_rps(inst: &RpsInstance) -> (bool, Vec<u64>) {
    let counts: Vec<u64> = inst
        .queries
        .iter()
        .map(|q| {
            (q.b..q.e)
                .filter(|&t| {
                    let s = &inst.strings[t];
                    q.pattern.len() <= s.len() && s[..q.pattern.len()] == q.pattern[..]
                })
                .count() as u64
        })
        .collect();
    (counts.iter().any(|&c| c > 0), counts)
}

/// All baseline arrays of one text, computed by definition chasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleArrays {
    pub sa: Vec<Pos>,
    pub bwt: Vec<Symbol>,
    pub lpf: Vec<usize>,
    pub lpnf: Vec<usize>,
    pub z: usize,
    pub z_no: usize,
}

pub fn oracle_arrays(t: &Text) -> Result<OracleArrays> {
    let n = t.len();
    if n == 0 {
        return Err(Error::EmptyText);
    }
    if n > ARRAY_GUARD {
        return Err(Error::SizeGuard { len: n, guard: ARRAY_GUARD });
    }
    let mut sa: Vec<Pos> = (1..=n).collect();
    sa.sort_by(|&a, &b| t.slice(a, n + 1).cmp(t.slice(b, n + 1)));
    let bwt: Vec<Symbol> = sa.iter().map(|&s| if s > 1 { t.at(s - 1) } else { t.at(n) }).collect();

    let mut lpf = vec![0usize; n];
    let mut lpnf = vec![0usize; n];
    for j in 2..=n {
        for i in 1..j {
            let mut ext = 0usize;
            while j + ext <= n && t.at(i + ext) == t.at(j + ext) {
                ext += 1;
            }
            lpf[j - 1] = lpf[j - 1].max(ext);
            lpnf[j - 1] = lpnf[j - 1].max(ext.min(j - i));
        }
    }
    let greedy = |arr: &[usize]| {
        let mut consumed = 0usize;
        let mut phrases = 0usize;
        while consumed < n {
            consumed += arr[consumed].max(1);
            phrases += 1;
        }
        phrases
    };
    Ok(OracleArrays { z: greedy(&lpf), z_no: greedy(&lpnf), sa, bwt, lpf, lpnf })
}

/// Inversions via full pair enumeration.
pub fn oracle_inversions<T: Ord>(a: &[T]) -> Result<u64> {
    if a.len() > COUNT_GUARD {
        return Err(Error::SizeGuard { len: a.len(), guard: COUNT_GUARD });
    }
    let mut count = 0u64;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] > a[j] {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Colored inversions via full pair enumeration.
pub fn oracle_colored<T: Ord>(colors: &[u8], values: &[T]) -> Result<u64> {
    if colors.len() != values.len() {
        return Err(Error::ColorLengthMismatch { colors: colors.len(), values: values.len() });
    }
    if values.len() > COUNT_GUARD {
        return Err(Error::SizeGuard { len: values.len(), guard: COUNT_GUARD });
    }
    let mut count = 0u64;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if colors[i] != colors[j] && values[i] > values[j] {
                count += 1;
            }
        }
    }
    Ok(count)
}
