//! Order-preserving string codecs used by the alphabet reductions:
//! fixed-width binary encodings, zero padding, symbol substitution, and the
//! base-sigma integer embedding of variable-length strings.

use crate::{Error, Result, Symbol};

/// `bin_k(x)`: the length-`k` binary representation of `x`, leading zeros kept.
pub fn bin_k(k: usize, x: u64) -> Result<Vec<Symbol>> {
    if k == 0 || (k < 64 && x >= 1u64 << k) {
        return Err(Error::IntEncoding {
            reason: format!("bin_{k}({x}) undefined: x must lie in [0..2^{k})"),
        });
    }
    Ok((0..k).rev().map(|b| ((x >> b) & 1) as Symbol).collect())
}

/// `pad_k(X)`: inserts a `0` after each symbol of the length-`k` string `X`,
/// yielding a length-`2k` string with `Y[2i-1] = X[i]` and `Y[2i] = 0`.
pub fn pad_k(x: &[Symbol]) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(2 * x.len());
    for &c in x {
        out.push(c);
        out.push(0);
    }
    out
}

/// `substitute(u, c, v)`: replaces every occurrence of the symbol `c` in `u`
/// with the string `v`.
pub fn substitute(u: &[Symbol], c: Symbol, v: &[Symbol]) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(u.len());
    for &a in u {
        if a == c {
            out.extend_from_slice(v);
        } else {
            out.push(a);
        }
    }
    out
}

/// The base-`sigma` digit string behind `Int(m, sigma, X)`: the length-`2m`
/// string `X · 0^(2m-2|X|) · (sigma-1)^|X|`. Its numeric value is
/// [`int_encode`]; since all digit strings share length `2m`, their numeric
/// order coincides with their lexicographic order.
pub fn int_digits(m: usize, sigma: Symbol, x: &[Symbol]) -> Result<Vec<Symbol>> {
    if sigma < 2 {
        return Err(Error::IntEncoding { reason: format!("base sigma={sigma} must be > 1") });
    }
    if x.len() > m {
        return Err(Error::IntEncoding {
            reason: format!("string length {} exceeds m={m}", x.len()),
        });
    }
    if let Some(&bad) = x.iter().find(|&&c| c >= sigma) {
        return Err(Error::IntEncoding { reason: format!("symbol {bad} not below sigma={sigma}") });
    }
    Ok(x.iter()
        .copied()
        .chain(std::iter::repeat_n(0, 2 * m - 2 * x.len()))
        .chain(std::iter::repeat_n(sigma - 1, x.len()))
        .collect())
}

/// `Int(m, sigma, X)` for `X` of length at most `m` over `[0..sigma)`:
/// the base-`sigma` value of `X · 0^(2m-2|X|) · (sigma-1)^|X|`, a strictly
/// order-preserving embedding of strings of length `<= m` into `[0..sigma^2m)`.
pub fn int_encode(m: usize, sigma: Symbol, x: &[Symbol]) -> Result<u128> {
    let mut value: u128 = 0;
    for d in int_digits(m, sigma, x)? {
        value = value
            .checked_mul(sigma as u128)
            .and_then(|v| v.checked_add(d as u128))
            .ok_or_else(|| Error::IntEncoding {
                reason: format!("sigma^(2m) overflows u128 for m={m}, sigma={sigma}"),
            })?;
    }
    Ok(value)
}
