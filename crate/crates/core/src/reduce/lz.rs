//! Dictionary matching to LZ77 size/parity: the gadget string whose phrase
//! count past a known prefix reveals whether any pattern occurs, plus the
//! alphabet reduction taking any text to a binary one with the same phrase
//! count up to a computable offset.

use super::{ceil_log2, ensure_binary, rank_compress};
use crate::codec::{bin_k, pad_k, substitute};
use crate::{DmInstance, Error, Result, Symbol, Text};

/// Output of the direct reduction: `z(S) - z(S[1..=delta])` equals `2k` when
/// some pattern occurs in the text and `2k + 1` otherwise, for both the
/// overlapping and the non-overlapping factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmToLz {
    /// Gadget over the alphabet `{0..6}`.
    pub s: Text,
    /// Length of the prefix whose phrase count is subtracted.
    pub delta: usize,
    pub k: usize,
}

pub fn reduce_dm_to_lz(inst: &DmInstance) -> Result<DmToLz> {
    ensure_binary(inst)?;
    let m = inst.pattern_len();
    if !inst.patterns.is_empty() && m < 3 {
        return Err(Error::PatternTooShort { m });
    }
    super::ensure_distinct(inst)?;
    let n = inst.text.len();
    let k = inst.patterns.len();
    let primed: Vec<Vec<Symbol>> = inst
        .patterns
        .iter()
        .map(|p| substitute(&substitute(p, 0, &[2]), 1, &[3]))
        .collect();
    let next_first = |i: usize| -> Symbol {
        // P_{k+1} = 0^m, so the sentinel successor starts with 0.
        if i + 1 < inst.patterns.len() { inst.patterns[i + 1][0] } else { 0 }
    };

    let mut s: Vec<Symbol> = inst.text.symbols.clone();
    s.push(5);
    for (i, p) in inst.patterns.iter().enumerate() {
        s.extend_from_slice(&p[1..]); // P_i(1..m]
        s.push(4);
        s.extend_from_slice(&p[..m - 1]); // P_i[1..m)
        s.push(4);
        s.push(p[m - 1]); // P_i[m]
        s.extend_from_slice(&primed[i]);
        s.push(4);
        s.extend_from_slice(&primed[i]);
        s.push(next_first(i)); // P_{i+1}[1]
        s.push(4);
    }
    s.push(6);
    let delta = s.len();
    assert_eq!(delta, n + k * (4 * m + 4) + 2);
    for (i, p) in inst.patterns.iter().enumerate() {
        s.extend_from_slice(p);
        s.extend_from_slice(&primed[i]);
    }
    s.push(0); // P_{k+1}[1]
    assert_eq!(s.len(), n + k * (6 * m + 4) + 3);
    Ok(DmToLz { s: Text::new(s, 7)?, delta, k })
}

/// Takes `t` over any alphabet to a binary string `s` and an offset `delta`
/// such that `z(s) - z(s[1..=delta]) = z(t)`, and the same for the
/// non-overlapping variant. Texts already binary pass through with `delta=0`;
/// alphabets larger than `|t|` are first rank-compressed.
pub fn lz_alphabet_reduce(t: &Text) -> Result<(Text, usize)> {
    if t.is_empty() {
        return Err(Error::EmptyText);
    }
    let t = if (t.sigma as usize) > t.len() { rank_compress(t) } else { t.clone() };
    let sigma = t.sigma;
    if sigma <= 2 {
        return Ok((Text::new(t.symbols, 2)?, 0));
    }
    let k = ceil_log2(sigma as u64 + 1);
    let code = |a: Symbol| -> Result<Vec<Symbol>> {
        let padded = pad_k(&bin_k(k, a as u64)?);
        let mut c = vec![1; 2 * k - 1];
        c.push(0);
        c.extend_from_slice(&padded);
        c.extend_from_slice(&padded);
        Ok(c)
    };
    let mut s: Vec<Symbol> = Vec::new();
    for a in 0..sigma {
        s.extend(code(a)?);
        s.extend(code(sigma)?);
    }
    s.push(1);
    let delta = s.len();
    assert_eq!(delta, 12 * k * sigma as usize + 1);
    for &a in &t.symbols {
        s.extend(code(a)?);
    }
    Ok((Text::new(s, 2)?, delta))
}

/// Binary composition: four binary strings whose LZ77 parities decode the
/// dictionary matching answer via `((x1-x2)-(x3-x4)) mod 2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmToLzBinary {
    pub texts: [Text; 4],
    pub k: usize,
}

pub fn reduce_dm_to_lz_binary(inst: &DmInstance) -> Result<DmToLzBinary> {
    let direct = reduce_dm_to_lz(inst)?;
    let prefix = Text::new(direct.s.symbols[..direct.delta].to_vec(), direct.s.sigma)?;
    let (t1, d1) = lz_alphabet_reduce(&direct.s)?;
    let t2 = Text::new(t1.symbols[..d1].to_vec(), 2)?;
    let (t3, d3) = lz_alphabet_reduce(&prefix)?;
    let t4 = Text::new(t3.symbols[..d3].to_vec(), 2)?;
    Ok(DmToLzBinary { texts: [t1, t2, t3, t4], k: direct.k })
}

/// Decode of the binary composition from the four phrase counts.
pub fn lz_binary_decode(sizes: [usize; 4]) -> bool {
    let x: Vec<i64> = sizes.iter().map(|&z| (z % 2) as i64).collect();
    ((x[0] - x[1]) - (x[2] - x[3])).rem_euclid(2) == 0
}
