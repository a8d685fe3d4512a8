//! Suffix array, inverse suffix array, BWT, and run-length measurements,
//! together with an LCE/range index over the suffix array used by the
//! longest-previous-factor computations.

use crate::{Error, Pos, Result, Symbol, Text};

/// Suffix array, its inverse, and the BWT of one text.
///
/// `sa[i]` is the 1-based start of the `(i+1)`-st lexicographically smallest
/// suffix; `isa[j-1]` is the 1-based rank of the suffix starting at `j`;
/// `bwt[i] = T[sa[i] - 1]` with the cyclic rule `bwt[i] = T[n]` when
/// `sa[i] = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixStructures {
    pub sa: Vec<Pos>,
    pub isa: Vec<Pos>,
    pub bwt: Text,
}

impl SuffixStructures {
    /// Rank (1-based) of the suffix starting at 1-based position `j`.
    pub fn isa_at(&self, j: Pos) -> Pos {
        self.isa[j - 1]
    }

    /// Start position (1-based) of the suffix with 1-based rank `r`.
    pub fn sa_at(&self, r: Pos) -> Pos {
        self.sa[r - 1]
    }
}

/// Builds the suffix structures by prefix doubling; any comparison-correct
/// construction is acceptable at desk scale.
pub fn suffix_structures(t: &Text) -> Result<SuffixStructures> {
    let sa = suffix_array(t)?;
    let n = t.len();
    let mut isa = vec![0usize; n];
    for (i, &s) in sa.iter().enumerate() {
        isa[s - 1] = i + 1;
    }
    let bwt_symbols: Vec<Symbol> =
        sa.iter().map(|&s| if s > 1 { t.at(s - 1) } else { t.at(n) }).collect();
    let bwt = Text::new(bwt_symbols, t.sigma)?;
    Ok(SuffixStructures { sa, isa, bwt })
}

fn suffix_array(t: &Text) -> Result<Vec<Pos>> {
    let n = t.len();
    if n == 0 {
        return Err(Error::EmptyText);
    }
    // rank[i] is the sort key of the suffix at 0-based i for the current
    // prefix length; a packed (rank, successor-rank) pair, with 0 marking
    // positions past the end (ranks are stored shifted by one).
    let mut rank: Vec<u32> = t.symbols.iter().map(|&c| c + 1).collect();
    let mut order: Vec<u32> = (0..n as u32).collect();
    let mut tmp = vec![0u32; n];
    let mut k = 1usize;
    loop {
        let key = |i: u32| {
            let i = i as usize;
            ((rank[i] as u64) << 32) | if i + k < n { rank[i + k] as u64 } else { 0 }
        };
        order.sort_unstable_by_key(|&i| key(i));
        tmp[order[0] as usize] = 1;
        for w in 1..n {
            let (a, b) = (order[w - 1], order[w]);
            tmp[b as usize] = tmp[a as usize] + u32::from(key(a) < key(b));
        }
        rank.copy_from_slice(&tmp);
        if rank[order[n - 1] as usize] as usize == n {
            break;
        }
        k *= 2;
    }
    Ok(order.into_iter().map(|i| i as usize + 1).collect())
}

/// Number of equal-letter runs in `s`.
pub fn run_count(s: &[Symbol]) -> usize {
    if s.is_empty() {
        return 0;
    }
    1 + s.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `|RL(BWT(T))|`, the run-length-compressed BWT size.
pub fn rlbwt_size(t: &Text) -> Result<usize> {
    Ok(run_count(&suffix_structures(t)?.bwt.symbols))
}

/// Sparse-table range-minimum structure.
struct Rmq {
    table: Vec<Vec<usize>>,
    log: Vec<usize>,
}

impl Rmq {
    fn new(values: &[usize]) -> Rmq {
        let n = values.len();
        let mut log = vec![0usize; n + 1];
        for i in 2..=n {
            log[i] = log[i / 2] + 1;
        }
        let levels = if n == 0 { 1 } else { log[n] + 1 };
        let mut table = Vec::with_capacity(levels);
        table.push(values.to_vec());
        for j in 1..levels {
            let half = 1usize << (j - 1);
            let prev = &table[j - 1];
            let row: Vec<usize> =
                (0..n + 1 - (1 << j)).map(|i| prev[i].min(prev[i + half])).collect();
            table.push(row);
        }
        Rmq { table, log }
    }

    /// Minimum over the inclusive 0-based range `[lo..=hi]`.
    fn min(&self, lo: usize, hi: usize) -> usize {
        let j = self.log[hi - lo + 1];
        self.table[j][lo].min(self.table[j][hi + 1 - (1 << j)])
    }
}

/// LCE, suffix-array interval, and earliest-occurrence queries over one text.
pub struct SuffixIndex {
    pub structures: SuffixStructures,
    n: usize,
    /// `lcp[i]` = longest common prefix of the suffixes ranked `i` and `i+1`.
    lcp: Vec<usize>,
    lcp_rmq: Rmq,
    sa_rmq: Rmq,
}

impl SuffixIndex {
    pub fn new(t: &Text) -> Result<SuffixIndex> {
        let structures = suffix_structures(t)?;
        let n = t.len();
        // Kasai's algorithm.
        let mut lcp = vec![0usize; n.saturating_sub(1)];
        let mut l = 0usize;
        for j in 1..=n {
            let r = structures.isa_at(j);
            if r == n {
                l = 0;
                continue;
            }
            let j2 = structures.sa_at(r + 1);
            while j + l <= n && j2 + l <= n && t.at(j + l) == t.at(j2 + l) {
                l += 1;
            }
            lcp[r - 1] = l;
            l = l.saturating_sub(1);
        }
        let lcp_rmq = Rmq::new(&lcp);
        let sa_rmq = Rmq::new(&structures.sa);
        Ok(SuffixIndex { structures, n, lcp, lcp_rmq, sa_rmq })
    }

    /// Longest common extension of the suffixes at 1-based positions `i`, `j`.
    pub fn lce(&self, i: Pos, j: Pos) -> usize {
        if i == j {
            return self.n + 1 - i;
        }
        let (a, b) = {
            let (ra, rb) = (self.structures.isa_at(i), self.structures.isa_at(j));
            (ra.min(rb), ra.max(rb))
        };
        self.lcp_rmq.min(a - 1, b - 2)
    }

    /// The 1-based rank interval `[lo..=hi]` of suffixes prefixed by
    /// `T[j..j+len)`, given that position `j` carries such a suffix.
    pub fn interval_of(&self, j: Pos, len: usize) -> (Pos, Pos) {
        debug_assert!(len >= 1 && j + len <= self.n + 1);
        let r = self.structures.isa_at(j);
        // Largest interval around r where neighboring lcp values stay >= len.
        let mut lo = r;
        if r > 1 && self.lcp[r - 2] >= len {
            let (mut a, mut b) = (1usize, r - 1);
            // Invariant: min lcp over ranks [b..r) >= len; push b down.
            while a < b {
                let mid = (a + b) / 2;
                if self.lcp_rmq.min(mid - 1, r - 2) >= len {
                    b = mid;
                } else {
                    a = mid + 1;
                }
            }
            lo = a;
        }
        let mut hi = r;
        if r < self.n && self.lcp[r - 1] >= len {
            let (mut a, mut b) = (r + 1, self.n);
            while a < b {
                let mid = (a + b).div_ceil(2);
                if self.lcp_rmq.min(r - 1, mid - 2) >= len {
                    a = mid;
                } else {
                    b = mid - 1;
                }
            }
            hi = a;
        }
        (lo, hi)
    }

    /// Smallest starting position of any occurrence of `T[j..j+len)`.
    pub fn min_occurrence(&self, j: Pos, len: usize) -> Pos {
        if len == 0 {
            return 1;
        }
        let (lo, hi) = self.interval_of(j, len);
        self.sa_rmq.min(lo - 1, hi - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strutil;
    use proptest::prelude::*;

    /// The classic worked example over {a,b} as 0/1 integers.
    pub(crate) fn fig_text() -> Text {
        let symbols: Vec<Symbol> =
            "bbabaababababaababa".chars().map(|c| if c == 'a' { 0 } else { 1 }).collect();
        Text::new(symbols, 2).unwrap()
    }

    #[test]
    fn worked_example_sa_and_bwt() {
        let t = fig_text();
        let s = suffix_structures(&t).unwrap();
        assert_eq!(s.sa, vec![19, 14, 5, 17, 12, 3, 15, 10, 8, 6, 18, 13, 4, 16, 11, 2, 9, 7, 1]);
        let bwt: String =
            s.bwt.symbols.iter().map(|&c| if c == 0 { 'a' } else { 'b' }).collect();
        assert_eq!(bwt, "bbbbbbabbaaaaaabaaa");
        // b^6 a b^2 a^6 b a^3: six runs.
        assert_eq!(rlbwt_size(&t).unwrap(), 6);
        assert_eq!(run_count(&s.bwt.symbols), 6);
    }

    #[test]
    fn unary_text() {
        let t = Text::new(vec![0, 0, 0], 1).unwrap();
        let s = suffix_structures(&t).unwrap();
        assert_eq!(s.sa, vec![3, 2, 1]);
        assert_eq!(s.bwt.symbols, vec![0, 0, 0]);
        assert_eq!(rlbwt_size(&t).unwrap(), 1);
    }

    #[test]
    fn two_letter_runs() {
        let t = Text::new(vec![0, 1], 2).unwrap();
        assert_eq!(rlbwt_size(&t).unwrap(), 2);
    }

    #[test]
    fn empty_text_is_an_error() {
        let t = Text::new(vec![], 2).unwrap();
        assert_eq!(suffix_structures(&t).unwrap_err(), Error::EmptyText);
        assert_eq!(rlbwt_size(&t).unwrap_err(), Error::EmptyText);
    }

    fn arb_text() -> impl Strategy<Value = Text> {
        (2u32..=4)
            .prop_flat_map(|sigma| {
                proptest::collection::vec(0..sigma, 1..80)
                    .prop_map(move |symbols| Text::new(symbols, sigma).unwrap())
            })
    }

    proptest! {
        #[test]
        fn structure_invariants(t in arb_text()) {
            let s = suffix_structures(&t).unwrap();
            let n = t.len();
            for j in 1..=n {
                prop_assert_eq!(s.sa_at(s.isa_at(j)), j);
            }
            for r in 1..n {
                prop_assert!(t.slice(s.sa_at(r), n + 1) < t.slice(s.sa_at(r + 1), n + 1));
            }
            let mut from_bwt = s.bwt.symbols.clone();
            let mut from_text = t.symbols.clone();
            from_bwt.sort_unstable();
            from_text.sort_unstable();
            prop_assert_eq!(from_bwt, from_text);
        }

        #[test]
        fn index_queries_match_scans(t in arb_text()) {
            let idx = SuffixIndex::new(&t).unwrap();
            let n = t.len();
            for i in 1..=n {
                for j in 1..=n {
                    prop_assert_eq!(idx.lce(i, j), strutil::lce(&t, i, j));
                }
            }
            for j in 1..=n {
                for len in 1..=(n + 1 - j) {
                    let occ = strutil::occurrences(t.slice(j, j + len), &t);
                    prop_assert_eq!(idx.min_occurrence(j, len), occ[0]);
                    let (lo, hi) = idx.interval_of(j, len);
                    prop_assert_eq!(hi - lo + 1, occ.len());
                }
            }
        }
    }
}
