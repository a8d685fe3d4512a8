//! Dictionary matching to batched inverse-suffix-array queries: a gadget in
//! which pattern `i` occurs iff two probed ISA entries differ by more than
//! one, plus the alphabet reduction mapping ISA entries of an arbitrary text
//! to ISA entries of a binary one.

use super::{ceil_log2, ensure_binary};
use crate::codec::bin_k;
use crate::suffix::SuffixStructures;
use crate::{DmInstance, Error, Result, Symbol, Text};

/// Pattern `i` (1-based) occurs iff
/// `ISA[big_delta + (i-1)*small_delta + 1] + 1 < ISA[big_delta + (i-1)*small_delta + m + 2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmToIsa {
    /// Gadget over `{0..4}`.
    pub s: Text,
    pub big_delta: usize,
    pub small_delta: usize,
    pub m: usize,
    pub k: usize,
}

impl DmToIsa {
    pub fn holds(&self, structures: &SuffixStructures, i: usize) -> bool {
        let base = self.big_delta + (i - 1) * self.small_delta;
        structures.isa_at(base + 1) + 1 < structures.isa_at(base + self.m + 2)
    }
}

pub fn reduce_dm_to_isa(inst: &DmInstance) -> Result<DmToIsa> {
    ensure_binary(inst)?;
    super::ensure_distinct(inst)?;
    let n = inst.text.len();
    let m = inst.pattern_len();
    let k = inst.patterns.len();
    let mut s: Vec<Symbol> = inst.text.symbols.iter().map(|&c| c + 1).collect();
    s.push(3);
    for p in &inst.patterns {
        s.extend(p.iter().map(|&c| c + 1));
        s.push(0);
        s.extend(p.iter().map(|&c| c + 1));
        s.push(4);
    }
    assert_eq!(s.len(), n + 2 * k * (m + 1) + 1);
    Ok(DmToIsa {
        s: Text::new(s, 5)?,
        big_delta: n + 1,
        small_delta: 2 * (m + 1),
        m,
        k,
    })
}

/// Encodes `t` into a binary string `s` with
/// `ISA_t[j] = ISA_s[(j-1)*small_delta + 1] - big_delta` for every `j`.
/// Binary texts pass through with `(0, 1)`.
pub fn isa_alphabet_reduce(t: &Text) -> Result<(Text, usize, usize)> {
    if t.is_empty() {
        return Err(Error::EmptyText);
    }
    let sigma = t.sigma;
    if sigma <= 2 {
        return Ok((Text::new(t.symbols.clone(), 2)?, 0, 1));
    }
    let k = ceil_log2(sigma as u64);
    let small_delta = 2 * k + 3;
    let mut s: Vec<Symbol> = Vec::with_capacity(t.len() * small_delta);
    for &a in &t.symbols {
        s.extend(std::iter::repeat_n(1, k + 1));
        s.push(0);
        s.extend(bin_k(k, a as u64)?);
        s.push(0);
    }
    let big_delta = s.len() - t.len();
    Ok((Text::new(s, 2)?, big_delta, small_delta))
}

/// Binary composition: pattern `i` occurs iff
/// `ISA[alpha + (i-1)*beta + 1] + 1 < ISA[alpha + (i-1)*beta + gamma + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmToIsaBinary {
    pub s: Text,
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub k: usize,
}

impl DmToIsaBinary {
    pub fn holds(&self, structures: &SuffixStructures, i: usize) -> bool {
        let base = self.alpha + (i - 1) * self.beta;
        structures.isa_at(base + 1) + 1 < structures.isa_at(base + self.gamma + 1)
    }
}

pub fn reduce_dm_to_isa_binary(inst: &DmInstance) -> Result<DmToIsaBinary> {
    let direct = reduce_dm_to_isa(inst)?;
    let (s, _delta2_big, delta2) = isa_alphabet_reduce(&direct.s)?;
    Ok(DmToIsaBinary {
        s,
        alpha: direct.big_delta * delta2,
        beta: direct.small_delta * delta2,
        gamma: (direct.m + 1) * delta2,
        k: direct.k,
    })
}
