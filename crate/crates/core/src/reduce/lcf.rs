//! Dictionary matching to longest common factor: some pattern occurs iff the
//! LCF of the text and the separator-joined dictionary reaches the pattern
//! length, plus the alphabet reduction with its floor-divide decode.

use super::{ceil_log2, ensure_binary};
use crate::codec::{bin_k, pad_k};
use crate::{DmInstance, Result, Symbol, Text};

/// Answer is YES iff `lcf(s1, s2) = m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmToLcf {
    pub s1: Text,
    pub s2: Text,
    pub m: usize,
    pub k: usize,
}

pub fn reduce_dm_to_lcf(inst: &DmInstance) -> Result<DmToLcf> {
    ensure_binary(inst)?;
    super::ensure_distinct(inst)?;
    let m = inst.pattern_len();
    let k = inst.patterns.len();
    let s1 = Text::new(inst.text.symbols.clone(), 3)?;
    let mut joined: Vec<Symbol> = Vec::with_capacity(k * (m + 1));
    for p in &inst.patterns {
        joined.extend_from_slice(p);
        joined.push(2);
    }
    let s2 = Text::new(joined, 3)?;
    assert_eq!(s1.len() + s2.len(), inst.text.len() + k * (m + 1));
    Ok(DmToLcf { s1, s2, m, k })
}

/// Encodes a pair of strings over a shared alphabet into binary strings with
/// `lcf(s1, s2) = floor((lcf(s1', s2') - alpha) / beta)`. Binary pairs pass
/// through with `(alpha, beta) = (0, 1)`.
pub fn lcf_alphabet_reduce(s1: &Text, s2: &Text) -> Result<(Text, Text, usize, usize)> {
    let sigma = s1.sigma.max(s2.sigma);
    if sigma <= 2 {
        return Ok((
            Text::new(s1.symbols.clone(), 2)?,
            Text::new(s2.symbols.clone(), 2)?,
            0,
            1,
        ));
    }
    let k = ceil_log2(sigma as u64);
    let encode = |s: &Text| -> Result<Text> {
        let mut out: Vec<Symbol> = Vec::new();
        let boundary = {
            let mut b = vec![1; 2 * k - 1];
            b.push(0);
            b
        };
        out.extend_from_slice(&boundary);
        for &a in &s.symbols {
            out.extend(pad_k(&bin_k(k, a as u64)?));
            out.extend_from_slice(&boundary);
        }
        Text::new(out, 2)
    };
    Ok((encode(s1)?, encode(s2)?, 2 * k, 4 * k))
}

/// Binary composition: answer is YES iff
/// `floor((lcf(s1, s2) - alpha) / beta) = m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmToLcfBinary {
    pub s1: Text,
    pub s2: Text,
    pub alpha: usize,
    pub beta: usize,
    pub m: usize,
    pub k: usize,
}

impl DmToLcfBinary {
    pub fn decode(&self, lcf_value: usize) -> bool {
        lcf_value >= self.alpha && (lcf_value - self.alpha) / self.beta == self.m
    }
}

pub fn reduce_dm_to_lcf_binary(inst: &DmInstance) -> Result<DmToLcfBinary> {
    let direct = reduce_dm_to_lcf(inst)?;
    let (s1, s2, alpha, beta) = lcf_alphabet_reduce(&direct.s1, &direct.s2)?;
    Ok(DmToLcfBinary { s1, s2, alpha, beta, m: direct.m, k: direct.k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strutil::lcf;
    use proptest::prelude::*;

    fn dm(text: &str, patterns: &[&str]) -> DmInstance {
        let t = Text::from_digits(text, 2).unwrap();
        let ps = patterns
            .iter()
            .map(|p| Text::from_digits(p, 2).unwrap().symbols)
            .collect();
        DmInstance::new(t, ps).unwrap()
    }

    #[test]
    fn lcf_reaches_m_exactly_on_yes() {
        let inst = dm("0100", &["010", "111"]);
        let out = reduce_dm_to_lcf(&inst).unwrap();
        assert_eq!(lcf(&out.s1.symbols, &out.s2.symbols), 3);

        let inst = dm("0100", &["111"]);
        let out = reduce_dm_to_lcf(&inst).unwrap();
        assert_eq!(lcf(&out.s1.symbols, &out.s2.symbols), 1);
    }

    #[test]
    fn boundary_encoding_sanity() {
        // S1 = S2 = "0" over sigma=3: both encode to B C(0) B of length 12,
        // so the encoded LCF is 12 and the decode gives floor((12-4)/8) = 1.
        let s = Text::new(vec![0], 3).unwrap();
        let (e1, e2, alpha, beta) = lcf_alphabet_reduce(&s, &s).unwrap();
        assert_eq!(e1.len(), 12);
        assert_eq!(lcf(&e1.symbols, &e2.symbols), 12);
        assert_eq!((12 - alpha) / beta, 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn floor_decode_matches(
            a in proptest::collection::vec(0u32..3, 1..24),
            b in proptest::collection::vec(0u32..3, 1..24),
        ) {
            let s1 = Text::new(a, 3).unwrap();
            let s2 = Text::new(b, 3).unwrap();
            let (e1, e2, alpha, beta) = lcf_alphabet_reduce(&s1, &s2).unwrap();
            let plain = lcf(&s1.symbols, &s2.symbols);
            let encoded = lcf(&e1.symbols, &e2.symbols);
            prop_assert_eq!(plain, (encoded - alpha) / beta);
        }

        #[test]
        fn end_to_end(
            text in proptest::collection::vec(0u32..2, 3..40),
            pats in proptest::collection::btree_set(
                proptest::collection::vec(0u32..2, 3..=3), 1..5),
        ) {
            let inst = DmInstance::new(
                Text::new(text, 2).unwrap(),
                pats.into_iter().collect(),
            ).unwrap();
            let yes = crate::oracle::oracle_dm(&inst);
            let out = reduce_dm_to_lcf(&inst).unwrap();
            prop_assert_eq!(lcf(&out.s1.symbols, &out.s2.symbols) == out.m, yes);
            let bin = reduce_dm_to_lcf_binary(&inst).unwrap();
            prop_assert_eq!(bin.decode(lcf(&bin.s1.symbols, &bin.s2.symbols)), yes);
        }
    }
}
