//! String nesting to range prefix search, and range prefix search to
//! counting colored inversions: sorting by the prefix side turns nesting
//! into range queries, and sentinel-bracketed insertions turn range queries
//! into a difference of two colored inversion counts.

use crate::codec::int_digits;
use crate::inversions::insert_subseq;
use crate::{Error, Result, SnInstance, Symbol};

/// One range prefix query: does `pattern` prefix any string in `S(b..e]`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpsQuery {
    pub b: usize,
    pub e: usize,
    pub pattern: Vec<Symbol>,
}

/// An array of equal-length binary strings plus range prefix queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpsInstance {
    pub strings: Vec<Vec<Symbol>>,
    pub queries: Vec<RpsQuery>,
}

impl RpsInstance {
    pub fn new(strings: Vec<Vec<Symbol>>, queries: Vec<RpsQuery>) -> Result<Self> {
        let inst = RpsInstance { strings, queries };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let len = self.strings.first().map_or(0, |s| s.len());
        if self.strings.iter().any(|s| s.len() != len) {
            return Err(Error::UnequalPatternLengths);
        }
        for q in &self.queries {
            if q.b > q.e || q.e > self.strings.len() {
                return Err(Error::QueryRangeOutOfBounds {
                    b: q.b,
                    e: q.e,
                    m: self.strings.len(),
                });
            }
            if q.pattern.len() > len {
                return Err(Error::UnequalPatternLengths);
            }
        }
        Ok(())
    }

    pub fn string_len(&self) -> usize {
        self.strings.first().map_or(0, |s| s.len())
    }
}

/// Sorts the `(X,Y)` pairs by `Y`, converts each query `(A,B)` into the rank
/// range of the `Y`s having `B` as a prefix, and reverses the `X` side so
/// suffix tests become prefix tests.
pub fn sn_to_rps(inst: &SnInstance) -> Result<RpsInstance> {
    inst.validate()?;
    if inst.sigma > 2 {
        return Err(Error::SymbolOutOfRange { symbol: inst.sigma - 1, sigma: 2 });
    }
    let mut sorted = inst.pairs_p.clone();
    sorted.sort_by(|(_, y1), (_, y2)| y1.cmp(y2));
    let ys: Vec<&Vec<Symbol>> = sorted.iter().map(|(_, y)| y).collect();
    let strings: Vec<Vec<Symbol>> =
        sorted.iter().map(|(x, _)| x.iter().rev().copied().collect()).collect();
    let queries = inst
        .pairs_q
        .iter()
        .map(|(a, b)| {
            let b_low = ys.partition_point(|y| y[..] < b[..]);
            // B followed by 1^(m+1) is above every Y that B prefixes.
            let mut high = b.clone();
            high.extend(std::iter::repeat_n(1, inst.m + 1));
            let b_high = ys.partition_point(|y| y[..] < high[..]);
            RpsQuery { b: b_low, e: b_high, pattern: a.iter().rev().copied().collect() }
        })
        .collect();
    RpsInstance::new(strings, queries)
}

/// Output of the colored-inversion reduction: one color array shared by two
/// value arrays, with `CCI(colors, values_add) - CCI(colors, values_sub)`
/// equal to twice the total number of range prefix matches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpsToCci {
    pub colors: Vec<u8>,
    pub values_add: Vec<u64>,
    pub values_sub: Vec<u64>,
}

/// Builds the colored difference pair. Construction order: remap symbols so
/// `0` and `4` are free to act as the low/high sentinels, close every array
/// entry with a fresh symbol so queries are strictly shorter, bracket each
/// query range with sentinel-extended copies at its two boundaries, insert
/// everything at stable shifted positions, then embed the strings into
/// integers and compress ranks.
pub fn rps_to_cci(inst: &RpsInstance) -> Result<RpsToCci> {
    let stage = build_difference_pair(inst)?;
    let len = inst.string_len();
    // The base-5 digit strings carry the numeric order of the Int embedding
    // without a word-size cap; dense ranks of either are identical.
    let embed = |strings: &[Vec<Symbol>]| -> Result<Vec<u64>> {
        let raw = strings
            .iter()
            .map(|s| int_digits(len + 1, 5, s))
            .collect::<Result<Vec<Vec<Symbol>>>>()?;
        Ok(compress_ranks(&raw))
    };
    Ok(RpsToCci {
        values_add: embed(&stage.strings_add)?,
        values_sub: embed(&stage.strings_sub)?,
        colors: stage.colors,
    })
}

/// Colors plus the two string-valued arrays of the difference pair, before
/// the integer embedding; the colored counts are already exact at this stage.
pub(crate) struct StringStage {
    pub colors: Vec<u8>,
    pub strings_add: Vec<Vec<Symbol>>,
    pub strings_sub: Vec<Vec<Symbol>>,
}

pub(crate) fn build_difference_pair(inst: &RpsInstance) -> Result<StringStage> {
    inst.validate()?;
    if inst.queries.is_empty() {
        return Err(Error::NoQueries);
    }
    let remap = |s: &[Symbol]| -> Vec<Symbol> { s.iter().map(|&c| c + 2).collect() };
    let entries: Vec<Vec<Symbol>> = inst
        .strings
        .iter()
        .map(|s| {
            let mut e = remap(s);
            e.push(1);
            e
        })
        .collect();

    // Two triples per query: (b+1, Q4, Q0) and (e+1, Q0, Q4).
    let mut triples: Vec<(usize, Vec<Symbol>, Vec<Symbol>)> = Vec::new();
    for q in &inst.queries {
        let base = remap(&q.pattern);
        let mut high = base.clone();
        high.push(4);
        let mut low = base;
        low.push(0);
        triples.push((q.b + 1, high.clone(), low.clone()));
        triples.push((q.e + 1, low, high));
    }
    // Stable by construction order: ties keep (query index, begin-then-end).
    triples.sort_by_key(|(p, _, _)| *p);

    let zeros = vec![0u8; entries.len()];
    let color_inserts: Vec<(usize, u8)> =
        triples.iter().enumerate().map(|(i, (p, _, _))| (p + i, 1u8)).collect();
    let add_inserts: Vec<(usize, Vec<Symbol>)> =
        triples.iter().enumerate().map(|(i, (p, a, _))| (p + i, a.clone())).collect();
    let sub_inserts: Vec<(usize, Vec<Symbol>)> =
        triples.iter().enumerate().map(|(i, (p, _, s))| (p + i, s.clone())).collect();
    Ok(StringStage {
        colors: insert_subseq(&zeros, &color_inserts)?,
        strings_add: insert_subseq(&entries, &add_inserts)?,
        strings_sub: insert_subseq(&entries, &sub_inserts)?,
    })
}

/// Dense ranks: order-isomorphic image of `values` inside `[0..n)`.
pub fn compress_ranks<T: Ord + Clone>(values: &[T]) -> Vec<u64> {
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort();
    sorted.dedup();
    values
        .iter()
        .map(|v| sorted.binary_search(v).expect("value present") as u64)
        .collect()
}
