//! Longest-previous-factor arrays (overlapping and non-overlapping) and the
//! greedy LZ77 factorizations they induce.

use crate::suffix::SuffixIndex;
use crate::{Pos, Result, Symbol, Text};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LzVariant {
    Overlapping,
    NonOverlapping,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhraseSource {
    Literal(Symbol),
    /// 1-based start of an earlier occurrence of the phrase text.
    Repeat(Pos),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phrase {
    pub start: Pos,
    pub len: usize,
    pub source: PhraseSource,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LzFactorization {
    pub phrases: Vec<Phrase>,
    pub variant: LzVariant,
}

impl LzFactorization {
    pub fn size(&self) -> usize {
        self.phrases.len()
    }
}

/// Computes both per-position factor arrays of `t`:
/// `lpf[j-1]` is the largest `l` such that `T[j..j+l)` has an occurrence
/// starting before `j`, and `lpnf[j-1]` additionally requires the occurrence
/// to end before `j`.
pub fn lpf_arrays(t: &Text) -> Result<(Vec<usize>, Vec<usize>)> {
    let idx = SuffixIndex::new(t)?;
    Ok((lpf_from_index(t, &idx, LzVariant::Overlapping),
        lpf_from_index(t, &idx, LzVariant::NonOverlapping)))
}

pub(crate) fn lpf_from_index(t: &Text, idx: &SuffixIndex, variant: LzVariant) -> Vec<usize> {
    let n = t.len();
    let mut out = vec![0usize; n];
    let qualifies = |j: Pos, len: usize| {
        let min_occ = idx.min_occurrence(j, len);
        match variant {
            LzVariant::Overlapping => min_occ < j,
            // min Occ + len - 1 < j, i.e. the source ends before j.
            LzVariant::NonOverlapping => min_occ + len <= j,
        }
    };
    let mut l = 0usize;
    for j in 2..=n {
        // LPF[j] >= LPF[j-1] - 1, and extensions are monotone in length.
        l = l.saturating_sub(1);
        while j + l <= n && qualifies(j, l + 1) {
            l += 1;
        }
        out[j - 1] = l;
    }
    out
}

/// Greedy left-to-right factorization: the `i`-th phrase has length
/// `max(1, LPF[j+1])` (resp. `LPnF`) where `j` is the total length of the
/// preceding phrases.
pub fn lz_factorize(t: &Text, variant: LzVariant) -> Result<LzFactorization> {
    let idx = SuffixIndex::new(t)?;
    Ok(factorize_from_index(t, &idx, variant))
}

fn factorize_from_index(t: &Text, idx: &SuffixIndex, variant: LzVariant) -> LzFactorization {
    let arr = lpf_from_index(t, idx, variant);
    let n = t.len();
    let mut phrases = Vec::new();
    let mut consumed = 0usize;
    while consumed < n {
        let start = consumed + 1;
        let factor = arr[start - 1];
        if factor == 0 {
            phrases.push(Phrase { start, len: 1, source: PhraseSource::Literal(t.at(start)) });
            consumed += 1;
        } else {
            let src = idx.min_occurrence(start, factor);
            phrases.push(Phrase { start, len: factor, source: PhraseSource::Repeat(src) });
            consumed += factor;
        }
    }
    LzFactorization { phrases, variant }
}

/// Number of phrases in the factorization of `t` under `variant`.
pub fn lz_size(t: &Text, variant: LzVariant) -> Result<usize> {
    Ok(lz_factorize(t, variant)?.size())
}

/// `(z, z_no)` of `t`, sharing one suffix index between the two variants.
pub fn lz_sizes(t: &Text) -> Result<(usize, usize)> {
    let idx = SuffixIndex::new(t)?;
    Ok((
        factorize_from_index(t, &idx, LzVariant::Overlapping).size(),
        factorize_from_index(t, &idx, LzVariant::NonOverlapping).size(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;

    fn txt(s: &str, sigma: Symbol) -> Text {
        let symbols: Vec<Symbol> = s
            .chars()
            .map(|c| if c.is_ascii_digit() { c.to_digit(10).unwrap() } else { (c as u32) - ('a' as u32) })
            .collect();
        Text::new(symbols, sigma).unwrap()
    }

    fn phrase_strings(t: &Text, f: &LzFactorization) -> Vec<Vec<Symbol>> {
        f.phrases.iter().map(|p| t.slice(p.start, p.start + p.len).to_vec()).collect()
    }

    #[test]
    fn lpf_of_aaab() {
        let t = txt("aaab", 2);
        let (lpf, lpnf) = lpf_arrays(&t).unwrap();
        assert_eq!(lpf, vec![0, 2, 1, 0]);
        assert_eq!(lpnf, vec![0, 1, 1, 0]);
    }

    #[test]
    fn lpf_first_position() {
        let t = txt("b", 2);
        let (lpf, lpnf) = lpf_arrays(&t).unwrap();
        assert_eq!(lpf, vec![0]);
        assert_eq!(lpnf, vec![0]);
    }

    #[test]
    fn running_example_factorizations() {
        let t = txt("bbabaababababaababa", 2);
        let f = lz_factorize(&t, LzVariant::Overlapping).unwrap();
        let expected: Vec<Vec<Symbol>> =
            ["b", "b", "a", "ba", "aba", "bababa", "ababa"]
                .iter()
                .map(|s| s.chars().map(|c| (c as u32) - ('a' as u32)).collect())
                .collect();
        assert_eq!(phrase_strings(&t, &f), expected);

        let f = lz_factorize(&t, LzVariant::NonOverlapping).unwrap();
        let expected: Vec<Vec<Symbol>> =
            ["b", "b", "a", "ba", "aba", "baba", "baababa"]
                .iter()
                .map(|s| s.chars().map(|c| (c as u32) - ('a' as u32)).collect())
                .collect();
        assert_eq!(phrase_strings(&t, &f), expected);
    }

    #[test]
    fn aaab_nonoverlapping() {
        let t = txt("aaab", 2);
        let f = lz_factorize(&t, LzVariant::NonOverlapping).unwrap();
        assert_eq!(f.size(), 4);
        assert!(f.phrases.iter().all(|p| p.len == 1));
    }

    fn arb_text() -> impl Strategy<Value = Text> {
        (2u32..=4).prop_flat_map(|sigma| {
            proptest::collection::vec(0..sigma, 1..72)
                .prop_map(move |symbols| Text::new(symbols, sigma).unwrap())
        })
    }

    proptest! {
        #[test]
        fn arrays_match_oracle(t in arb_text()) {
            let (lpf, lpnf) = lpf_arrays(&t).unwrap();
            let ora = oracle::oracle_arrays(&t).unwrap();
            prop_assert_eq!(&lpf, &ora.lpf);
            prop_assert_eq!(&lpnf, &ora.lpnf);
        }

        #[test]
        fn factor_array_laws(t in arb_text()) {
            let n = t.len();
            let (lpf, lpnf) = lpf_arrays(&t).unwrap();
            for i in 1..n {
                prop_assert!(lpf[i] + 1 >= lpf[i - 1]);
                prop_assert!(lpnf[i] + 1 >= lpnf[i - 1]);
                prop_assert!((i + 1) + lpf[i] >= i + lpf[i - 1]);
                prop_assert!((i + 1) + lpnf[i] >= i + lpnf[i - 1]);
            }
            for i in 0..n {
                prop_assert!(lpnf[i] <= lpf[i]);
            }
        }

        #[test]
        fn factorization_reconstructs_text(t in arb_text()) {
            let (lpf, lpnf) = lpf_arrays(&t).unwrap();
            for variant in [LzVariant::Overlapping, LzVariant::NonOverlapping] {
                let f = lz_factorize(&t, variant).unwrap();
                let mut rebuilt = Vec::new();
                let arr = if variant == LzVariant::Overlapping { &lpf } else { &lpnf };
                let mut consumed = 0usize;
                for p in &f.phrases {
                    prop_assert_eq!(p.start, consumed + 1);
                    prop_assert_eq!(p.len, arr[consumed].max(1));
                    match &p.source {
                        PhraseSource::Literal(c) => {
                            prop_assert_eq!(p.len, 1);
                            rebuilt.push(*c);
                        }
                        PhraseSource::Repeat(src) => {
                            prop_assert!(*src < p.start);
                            if variant == LzVariant::NonOverlapping {
                                prop_assert!(src + p.len <= p.start);
                            }
                            prop_assert_eq!(
                                t.slice(*src, src + p.len),
                                t.slice(p.start, p.start + p.len)
                            );
                            rebuilt.extend_from_slice(t.slice(p.start, p.start + p.len));
                        }
                    }
                    consumed += p.len;
                }
                prop_assert_eq!(rebuilt, t.symbols.clone());
            }
        }
    }
}
