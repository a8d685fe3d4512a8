//! The universal string carrier: a symbol sequence over a declared alphabet.

use crate::{Error, Pos, Result};

/// Symbols are plain unsigned integers; alphabets of any polynomial size are
/// representable without packing.
pub type Symbol = u32;

/// A string over the alphabet `[0..sigma)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Text {
    pub symbols: Vec<Symbol>,
    pub sigma: Symbol,
}

impl Text {
    pub fn new(symbols: Vec<Symbol>, sigma: Symbol) -> Result<Self> {
        if sigma == 0 {
            return Err(Error::ZeroAlphabet);
        }
        if let Some(&bad) = symbols.iter().find(|&&c| c >= sigma) {
            return Err(Error::SymbolOutOfRange { symbol: bad, sigma });
        }
        Ok(Text { symbols, sigma })
    }

    /// Builds a text from a decimal digit string; handy for the worked examples.
    pub fn from_digits(digits: &str, sigma: Symbol) -> Result<Self> {
        let symbols = digits
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as Symbol).ok_or(Error::ZeroAlphabet))
            .collect::<Result<Vec<_>>>()?;
        Text::new(symbols, sigma)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at 1-based position `pos`.
    pub fn at(&self, pos: Pos) -> Symbol {
        self.symbols[pos - 1]
    }

    /// The substring `T[i..j)` in 1-based, half-open notation.
    pub fn slice(&self, i: Pos, j: Pos) -> &[Symbol] {
        &self.symbols[i - 1..j - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols_must_fit_alphabet() {
        assert!(Text::new(vec![0, 1, 2], 3).is_ok());
        assert_eq!(
            Text::new(vec![0, 3], 3),
            Err(Error::SymbolOutOfRange { symbol: 3, sigma: 3 })
        );
        assert_eq!(Text::new(vec![], 0), Err(Error::ZeroAlphabet));
        assert!(Text::new(vec![], 1).is_ok());
    }

    #[test]
    fn digit_parsing() {
        let t = Text::from_digits("0100", 2).unwrap();
        assert_eq!(t.symbols, vec![0, 1, 0, 0]);
        assert_eq!(t.at(2), 1);
        assert_eq!(t.slice(2, 4), &[1, 0]);
    }
}
