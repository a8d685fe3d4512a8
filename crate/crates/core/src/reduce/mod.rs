//! The dictionary-matching-to-string-problem reductions with their alphabet
//! reduction chains. Each construction exposes the scalar parameters of its
//! decode identity so a harness can verify the identity generically.

pub mod isa;
pub mod lcf;
pub mod lpf;
pub mod lz;
pub mod rlbwt;

use crate::{DmInstance, Error, Result, Symbol, Text};

/// `ceil(log2(x))` for `x >= 1`.
pub(crate) fn ceil_log2(x: u64) -> usize {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros() as usize
    }
}

/// The string-problem gadgets treat the dictionary as a set: several of the
/// uniqueness arguments (prefix-freeness of the separated patterns, single
/// occurrences of marker-flanked copies) fail on duplicated patterns.
pub(crate) fn ensure_distinct(inst: &DmInstance) -> Result<()> {
    for (i, p) in inst.patterns.iter().enumerate() {
        if inst.patterns[i + 1..].contains(p) {
            return Err(Error::DuplicatePatterns);
        }
    }
    Ok(())
}

pub(crate) fn ensure_binary(inst: &DmInstance) -> Result<()> {
    let check = |c: Symbol| {
        if c >= 2 {
            Err(Error::SymbolOutOfRange { symbol: c, sigma: 2 })
        } else {
            Ok(())
        }
    };
    for &c in &inst.text.symbols {
        check(c)?;
    }
    for p in &inst.patterns {
        for &c in p {
            check(c)?;
        }
    }
    Ok(())
}

/// Replaces each symbol by its rank among the distinct symbols present.
/// Preserves every equality and order comparison between substrings, hence
/// all factorization sizes and suffix ranks.
pub(crate) fn rank_compress(t: &Text) -> Text {
    let mut present: Vec<Symbol> = t.symbols.clone();
    present.sort_unstable();
    present.dedup();
    let symbols = t
        .symbols
        .iter()
        .map(|c| present.binary_search(c).expect("symbol present") as Symbol)
        .collect();
    Text::new(symbols, (present.len() as Symbol).max(1)).expect("ranks fit alphabet")
}
