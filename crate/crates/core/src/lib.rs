//! A verification laboratory for constructive reductions among string
//! problems: dictionary matching, LZ77 factorization, BWT construction,
//! batched ISA/LPF queries, longest common factor, string nesting, range
//! prefix search, and (colored) inversion counting.
//!
//! Every reduction comes with a decode formula exposing the exact identity
//! it relies on, and every identity is checkable against the definition-literal
//! brute-force implementations in [`oracle`]. All positions and arrays follow
//! the 1-based conventions of the underlying combinatorics: an array value
//! that denotes a text position is in `[1..=n]`, and `sa[i]` is the start of
//! the `(i+1)`-st smallest suffix.
//!
//! ```
//! use strred::reduce::lz::reduce_dm_to_lz;
//! use strred::lz::lz_sizes;
//! use strred::{DmInstance, Text};
//!
//! // Does "010" or "111" occur in "0100"? Ask the LZ77 phrase counts.
//! let inst = DmInstance::new(
//!     Text::from_digits("0100", 2)?,
//!     vec![vec![0, 1, 0], vec![1, 1, 1]],
//! )?;
//! let gadget = reduce_dm_to_lz(&inst)?;
//! let prefix = Text::new(gadget.s.symbols[..gadget.delta].to_vec(), gadget.s.sigma)?;
//! let diff = lz_sizes(&gadget.s)?.0 - lz_sizes(&prefix)?.0;
//! assert_eq!(diff, 2 * gadget.k); // 2k exactly: some pattern occurs
//! # Ok::<(), strred::Error>(())
//! ```

pub mod codec;
pub mod inversions;
pub mod lz;
pub mod nesting;
pub mod oracle;
pub mod periodic;
pub mod reduce;
pub mod rps;
pub mod strutil;
pub mod suffix;
pub mod sync;
pub mod text;

mod error;

pub use error::{Error, Result};
pub use text::{Symbol, Text};

/// A 1-based position inside a text.
pub type Pos = usize;

/// An instance of the dictionary matching problem: a text plus a collection
/// of patterns of one common length, over the text's alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmInstance {
    pub text: Text,
    /// All patterns share length `m >= 1`; symbols are below `text.sigma`.
    pub patterns: Vec<Vec<Symbol>>,
}

impl DmInstance {
    pub fn new(text: Text, patterns: Vec<Vec<Symbol>>) -> Result<Self> {
        let inst = DmInstance { text, patterns };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.text.is_empty() {
            return Err(Error::EmptyText);
        }
        if let Some(first) = self.patterns.first() {
            let m = first.len();
            if m == 0 {
                return Err(Error::EmptyPattern);
            }
            for p in &self.patterns {
                if p.len() != m {
                    return Err(Error::UnequalPatternLengths);
                }
                if p.iter().any(|&c| c >= self.text.sigma) {
                    return Err(Error::SymbolOutOfRange {
                        symbol: *p.iter().find(|&&c| c >= self.text.sigma).unwrap(),
                        sigma: self.text.sigma,
                    });
                }
            }
        }
        Ok(())
    }

    /// Common pattern length; 0 only when the dictionary is empty.
    pub fn pattern_len(&self) -> usize {
        self.patterns.first().map_or(0, |p| p.len())
    }
}

/// An instance of the string nesting problem: does some `(A,B)` from `pairs_q`
/// nest in some `(X,Y)` from `pairs_p`, i.e. is `A` a suffix of `X` and `B`
/// a prefix of `Y`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnInstance {
    /// Common length of both components of every pair in `pairs_p`,
    /// and of `|A| + |B|` for every pair in `pairs_q`.
    pub m: usize,
    pub sigma: Symbol,
    pub pairs_p: Vec<(Vec<Symbol>, Vec<Symbol>)>,
    pub pairs_q: Vec<(Vec<Symbol>, Vec<Symbol>)>,
}

impl SnInstance {
    pub fn new(
        m: usize,
        sigma: Symbol,
        pairs_p: Vec<(Vec<Symbol>, Vec<Symbol>)>,
        pairs_q: Vec<(Vec<Symbol>, Vec<Symbol>)>,
    ) -> Result<Self> {
        let inst = SnInstance { m, sigma, pairs_p, pairs_q };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::EmptyPattern);
        }
        for (x, y) in &self.pairs_p {
            if x.len() != self.m || y.len() != self.m {
                return Err(Error::UnequalPatternLengths);
            }
            for &c in x.iter().chain(y) {
                if c >= self.sigma {
                    return Err(Error::SymbolOutOfRange { symbol: c, sigma: self.sigma });
                }
            }
        }
        for (a, b) in &self.pairs_q {
            if a.len() + b.len() != self.m {
                return Err(Error::UnequalPatternLengths);
            }
            for &c in a.iter().chain(b) {
                if c >= self.sigma {
                    return Err(Error::SymbolOutOfRange { symbol: c, sigma: self.sigma });
                }
            }
        }
        Ok(())
    }
}
