//! Dictionary matching to RLBWT size: two gadget strings whose BWT run
//! counts differ by exactly the number of non-occurring patterns (decimal
//! alphabet) or twice that number (binary alphabet).

use super::ensure_binary;
use crate::{DmInstance, Result, Symbol, Text};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmToRlbwt {
    pub s1: Text,
    pub s2: Text,
    pub k: usize,
    /// The decode divides the run-count difference by this: 1 for the decimal
    /// gadget, 2 for the binary one. Answer is YES iff the difference is
    /// strictly below `scale * k`.
    pub scale: usize,
}

/// Interleaves `4` between consecutive symbols: `a1 4 a2 4 ... 4 aq`.
fn tilde_decimal(s: &[Symbol]) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(2 * s.len());
    for (i, &a) in s.iter().enumerate() {
        if i > 0 {
            out.push(4);
        }
        out.push(a);
    }
    out
}

/// Appends `10` after every symbol: `a1 1 0 a2 1 0 ... aq 1 0`.
fn tilde_binary(s: &[Symbol]) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(3 * s.len());
    for &a in s {
        out.push(a);
        out.push(1);
        out.push(0);
    }
    out
}

pub fn reduce_dm_to_rlbwt(inst: &DmInstance) -> Result<DmToRlbwt> {
    ensure_binary(inst)?;
    super::ensure_distinct(inst)?;
    let n = inst.text.len();
    let m = inst.pattern_len();
    let k = inst.patterns.len();
    let build = |swap: bool| -> Vec<Symbol> {
        let mut s = vec![4];
        s.extend(tilde_decimal(&inst.text.symbols));
        s.push(4);
        for p in &inst.patterns {
            let tilde = tilde_decimal(p);
            let seps: [Symbol; 5] = if swap { [2, 6, 5, 7, 3] } else { [2, 5, 6, 7, 3] };
            let heads: [Symbol; 5] = [4, 8, 4, 4, 9];
            for (head, sep) in heads.iter().zip(&seps) {
                s.push(*head);
                s.extend_from_slice(&tilde);
                s.push(*sep);
            }
        }
        s
    };
    let s1 = build(false);
    let s2 = build(true);
    assert_eq!(s1.len(), 2 * n + 1 + 5 * k * (2 * m + 1));
    assert_eq!(s1.len(), s2.len());
    Ok(DmToRlbwt { s1: Text::new(s1, 10)?, s2: Text::new(s2, 10)?, k, scale: 1 })
}

pub fn reduce_dm_to_rlbwt_binary(inst: &DmInstance) -> Result<DmToRlbwt> {
    ensure_binary(inst)?;
    super::ensure_distinct(inst)?;
    let n = inst.text.len();
    let m = inst.pattern_len();
    let k = inst.patterns.len();
    // Chunk tails, as (count of 0s, count of 1s) groups.
    const TAILS: [&[Symbol]; 4] = [
        &[0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],          // 0^7 1^4
        &[0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1],          // 0^6 1^5
        &[1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1],          // 1^3 0^3 1^5
        &[1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1],          // 1^4 0^3 1^4
    ];
    const LAST_TAIL: &[Symbol] = &[0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1]; // 0^8 1^3
    let build = |swap: bool| -> Vec<Symbol> {
        let mut s = vec![1, 0];
        s.extend(tilde_binary(&inst.text.symbols));
        for p in &inst.patterns {
            let tilde = tilde_binary(p);
            let tails: [&[Symbol]; 5] = if swap {
                [TAILS[1], TAILS[0], TAILS[2], TAILS[3], LAST_TAIL]
            } else {
                [TAILS[0], TAILS[1], TAILS[2], TAILS[3], LAST_TAIL]
            };
            for (c, tail) in tails.iter().enumerate() {
                s.extend_from_slice(if c == 0 { &[1, 0] } else { &[0, 0] });
                s.extend_from_slice(&tilde);
                s.extend_from_slice(tail);
            }
        }
        s
    };
    let s1 = build(false);
    let s2 = build(true);
    assert_eq!(s1.len(), 3 * n + 2 + 5 * k * (3 * m + 13));
    assert_eq!(s1.len(), s2.len());
    Ok(DmToRlbwt { s1: Text::new(s1, 2)?, s2: Text::new(s2, 2)?, k, scale: 2 })
}
