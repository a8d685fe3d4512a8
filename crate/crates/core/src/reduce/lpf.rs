//! Dictionary matching to batched longest-previous-factor queries: each
//! pattern occupies a slot whose LPF (equivalently LPnF) value equals the
//! pattern length exactly when the pattern occurs in the text, plus the
//! alphabet reduction with per-index floor identities.

use super::{ceil_log2, ensure_binary};
use crate::codec::{bin_k, pad_k};
use crate::{DmInstance, Error, Result, Symbol, Text};

/// Pattern `i` (1-based) occurs iff
/// `LPF[big_delta + (i-1)*small_delta + 1] = m`, and the same with LPnF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmToLpf {
    /// Gadget over `{0..3}`.
    pub s: Text,
    pub big_delta: usize,
    pub small_delta: usize,
    pub m: usize,
    pub k: usize,
}

impl DmToLpf {
    /// 1-based probe position for pattern `i`.
    pub fn probe(&self, i: usize) -> usize {
        self.big_delta + (i - 1) * self.small_delta + 1
    }
}

pub fn reduce_dm_to_lpf(inst: &DmInstance) -> Result<DmToLpf> {
    ensure_binary(inst)?;
    super::ensure_distinct(inst)?;
    if inst.patterns.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let n = inst.text.len();
    let m = inst.pattern_len();
    let k = inst.patterns.len();
    let mut s: Vec<Symbol> = inst.text.symbols.clone();
    s.push(2);
    for p in &inst.patterns {
        s.extend_from_slice(p);
        s.push(3);
    }
    assert_eq!(s.len(), n + k * (m + 1) + 1);
    Ok(DmToLpf { s: Text::new(s, 4)?, big_delta: n + 1, small_delta: m + 1, m, k })
}

/// Encodes `t` into a binary string with
/// `LPF_t[i] = floor(LPF_enc[(i-1)*delta + 1] / delta)` at every index `i`,
/// and the same identity for LPnF. Binary texts pass through with `delta=1`.
pub fn lpf_alphabet_reduce(t: &Text) -> Result<(Text, usize)> {
    if t.is_empty() {
        return Err(Error::EmptyText);
    }
    let sigma = t.sigma;
    if sigma <= 2 {
        return Ok((Text::new(t.symbols.clone(), 2)?, 1));
    }
    let k = ceil_log2(sigma as u64);
    let delta = 4 * k;
    let mut out: Vec<Symbol> = Vec::with_capacity(t.len() * delta);
    for &a in &t.symbols {
        out.extend(std::iter::repeat_n(1, 2 * k - 1));
        out.push(0);
        out.extend(pad_k(&bin_k(k, a as u64)?));
    }
    Ok((Text::new(out, 2)?, delta))
}

/// Binary composition: pattern `i` occurs iff
/// `floor(LPF[alpha + (i-1)*beta + 1] / gamma) = m` (same with LPnF).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmToLpfBinary {
    pub s: Text,
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub m: usize,
    pub k: usize,
}

impl DmToLpfBinary {
    pub fn probe(&self, i: usize) -> usize {
        self.alpha + (i - 1) * self.beta + 1
    }

    pub fn decode(&self, lpf_value: usize) -> bool {
        lpf_value / self.gamma == self.m
    }
}

pub fn reduce_dm_to_lpf_binary(inst: &DmInstance) -> Result<DmToLpfBinary> {
    let direct = reduce_dm_to_lpf(inst)?;
    let (s, delta2) = lpf_alphabet_reduce(&direct.s)?;
    Ok(DmToLpfBinary {
        s,
        alpha: direct.big_delta * delta2,
        beta: direct.small_delta * delta2,
        gamma: delta2,
        m: direct.m,
        k: direct.k,
    })
}
