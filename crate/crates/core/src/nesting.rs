//! The dictionary matching / string nesting equivalence: distinguishing
//! prefixes over a synchronizing set, candidate anchors for periodic and
//! nonperiodic patterns, the padded pair encoding, and both directions of
//! the reduction with their alphabet reductions.

use crate::codec::bin_k;
use crate::periodic::{is_tau_periodic, periodic_profile_pattern, r_sets};
use crate::strutil::{infinite_slice, is_prefix, occurrences};
use crate::sync::{build_sync_set, r_positions, SyncSet};
use crate::{DmInstance, Error, Pos, Result, SnInstance, Symbol, Text};

/// Default window scale: patterns shorter than `3*tau - 1` take the direct
/// scan path, everything else goes through the synchronizing machinery.
pub fn default_tau(n: usize) -> usize {
    let log = usize::BITS as usize - 1 - n.leading_zeros() as usize;
    (log / 6).max(1)
}

/// The distinguishing prefixes `T[j..succ(S,j)+2tau)` over all positions `j`
/// whose window is not highly periodic; deduplicated and sorted.
pub fn dist_prefixes(t: &Text, sync: &SyncSet) -> Result<Vec<Vec<Symbol>>> {
    let tau = sync.tau;
    let n = t.len();
    let r = r_positions(t, tau)?;
    let mut out: Vec<Vec<Symbol>> = Vec::new();
    if n + 1 < 3 * tau {
        return Ok(out);
    }
    for j in 1..=n + 2 - 3 * tau {
        if r.binary_search(&j).is_ok() {
            continue;
        }
        let succ = sync
            .successor(j)
            .expect("density guarantees a member within tau of a non-R position");
        out.push(t.slice(j, succ + 2 * tau).to_vec());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Length of the unique distinguishing prefix of `p`, if one exists.
/// Uniqueness holds because the distinguishing prefix set is prefix-free.
pub fn dist_prefix_of(p: &[Symbol], t: &Text, sync: &SyncSet) -> Result<Option<usize>> {
    let matches: Vec<usize> = dist_prefixes(t, sync)?
        .iter()
        .filter(|d| is_prefix(d, p))
        .map(|d| d.len())
        .collect();
    debug_assert!(matches.len() <= 1, "distinguishing prefixes must be prefix-free");
    Ok(matches.first().copied())
}

/// How one pattern was split into its `(A, B)` query pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitRule {
    /// Split after the matched distinguishing prefix minus `2tau`.
    Nonperiodic { dist_len: usize },
    /// No distinguishing prefix matched (the pattern cannot occur).
    NonperiodicUnmatched,
    /// Split at the end of the full periodic run.
    Periodic,
}

/// Intermediate record of the dm -> sn construction, exposed for tests.
#[derive(Debug, Clone)]
pub struct DmToSnTrace {
    pub tau: usize,
    /// True when the common pattern length was below `3*tau - 1` and the
    /// answer was computed by direct scanning.
    pub short_path: bool,
    pub splits: Vec<SplitRule>,
    /// Candidate anchor positions in the sentinel-extended text.
    pub candidates: Vec<Pos>,
}

/// Reduces a binary dictionary matching instance to a binary string nesting
/// instance with the same answer. `tau` defaults to `max(1, log2(n)/6)`.
pub fn dm_to_sn(inst: &DmInstance, tau: Option<usize>) -> Result<SnInstance> {
    Ok(dm_to_sn_traced(inst, tau)?.0)
}

pub fn dm_to_sn_traced(
    inst: &DmInstance,
    tau: Option<usize>,
) -> Result<(SnInstance, DmToSnTrace)> {
    crate::reduce::ensure_binary(inst)?;
    if inst.text.is_empty() {
        return Err(Error::EmptyText);
    }
    // Sentinel so that no nonempty suffix of the text is a proper prefix of
    // any binary pattern.
    let mut symbols = inst.text.symbols.clone();
    symbols.push(2);
    let t = Text::new(symbols, 3)?;
    let n = t.len();
    let tau = tau.unwrap_or_else(|| default_tau(n)).clamp(1, n / 2);
    let m = inst.pattern_len();

    if inst.patterns.is_empty() || m < 3 * tau - 1 {
        let answer =
            inst.patterns.iter().any(|p| !occurrences(p, &inst.text).is_empty());
        let trace = DmToSnTrace { tau, short_path: true, splits: Vec::new(), candidates: Vec::new() };
        return Ok((encode_short_answer(answer, n, 3)?, trace));
    }

    let sync = build_sync_set(&t, tau)?;
    let sets = r_sets(&t, tau)?;
    let mut candidates: Vec<Pos> = sync.positions.clone();
    for j in &sets.r_prim {
        let prof = &sets.profiles[j];
        candidates.push(prof.run_end_full);
        candidates.push(prof.run_end_full - prof.root.len());
    }
    candidates.sort_unstable();
    candidates.dedup();

    let mut splits = Vec::with_capacity(inst.patterns.len());
    let mut pairs_q: Vec<(Vec<Symbol>, Vec<Symbol>)> = Vec::new();
    for p in &inst.patterns {
        let (rule, delta_text) = if is_tau_periodic(p, tau) {
            (SplitRule::Periodic, periodic_profile_pattern(p, tau).run_end_full - 1)
        } else {
            match dist_prefix_of(p, &t, &sync)? {
                Some(d) => (SplitRule::Nonperiodic { dist_len: d }, d - 2 * tau),
                None => (SplitRule::NonperiodicUnmatched, 0),
            }
        };
        splits.push(rule);
        let (a, b) = p.split_at(delta_text);
        pairs_q.push((a.to_vec(), b.to_vec()));
    }

    let mut pairs_p: Vec<(Vec<Symbol>, Vec<Symbol>)> = Vec::new();
    for &c in &candidates {
        let c = c as i64;
        pairs_p.push((
            infinite_slice(&t, c - m as i64, c)?,
            infinite_slice(&t, c, c + m as i64)?,
        ));
    }

    let inst = pad_pairs(m, 3, pairs_p, pairs_q)?;
    let trace = DmToSnTrace { tau, short_path: false, splits, candidates };
    Ok((binarize_sn(&inst)?, trace))
}

/// The short-path encoding: filler pairs that never nest, plus one matching
/// query pair exactly when the precomputed answer is YES.
fn encode_short_answer(answer: bool, n: usize, sigma: Symbol) -> Result<SnInstance> {
    // m' = max(1, ceil(log_sigma n)); filler count follows the same target,
    // capped by the number of distinct strings available.
    let m_f = {
        let mut len = 1usize;
        let mut reach = sigma as u128;
        while reach < n as u128 {
            reach *= sigma as u128;
            len += 1;
        }
        len
    };
    let log_floor = {
        let mut len = 0usize;
        let mut reach = 1u128;
        while reach * sigma as u128 <= n as u128 {
            reach *= sigma as u128;
            len += 1;
        }
        len.max(1)
    };
    let available = (sigma as u128).saturating_pow(m_f as u32);
    let count = (n.div_ceil(log_floor).max(1) as u128).min(available - 1) as u64;
    let encode = |value: u64| -> Vec<Symbol> {
        let mut digits = vec![0 as Symbol; m_f];
        let mut v = value;
        for d in digits.iter_mut().rev() {
            *d = (v % sigma as u64) as Symbol;
            v /= sigma as u64;
        }
        digits
    };
    let zeros = vec![0 as Symbol; m_f];
    let pairs_p: Vec<_> = (0..count).map(|v| (encode(v), zeros.clone())).collect();
    let mut pairs_q: Vec<_> = (1..=count).map(|v| (Vec::new(), encode(v))).collect();
    if answer {
        pairs_q.push((Vec::new(), zeros));
    }
    binarize_sn(&SnInstance::new(m_f, sigma, pairs_p, pairs_q)?)
}

/// Pads a raw candidate/query system so that query sides never match the
/// synthetic filler pairs added to reach the required pair-collection size:
/// queries become `(A0, 0B)`, candidate pairs `(0X0, 0Y0)`, and each query
/// additionally contributes a filler `(suffix of 0^(m+1) 1 A 1, prefix of
/// 1 B 1 0^(m+1))` of the common length `m + 2`.
fn pad_pairs(
    m: usize,
    sigma: Symbol,
    pairs_p: Vec<(Vec<Symbol>, Vec<Symbol>)>,
    pairs_q: Vec<(Vec<Symbol>, Vec<Symbol>)>,
) -> Result<SnInstance> {
    let m2 = m + 2;
    let mut padded_p: Vec<(Vec<Symbol>, Vec<Symbol>)> = Vec::new();
    for (x, y) in &pairs_p {
        let mut px = vec![0];
        px.extend_from_slice(x);
        px.push(0);
        let mut py = vec![0];
        py.extend_from_slice(y);
        py.push(0);
        padded_p.push((px, py));
    }
    for (a, b) in &pairs_q {
        let mut fa = vec![0; m + 1];
        fa.push(1);
        fa.extend_from_slice(a);
        fa.push(1);
        let fa = fa[fa.len() - m2..].to_vec();
        let mut fb = vec![1];
        fb.extend_from_slice(b);
        fb.push(1);
        fb.extend(std::iter::repeat_n(0, m + 1));
        let fb = fb[..m2].to_vec();
        padded_p.push((fa, fb));
    }
    padded_p.sort();
    padded_p.dedup();
    let padded_q: Vec<(Vec<Symbol>, Vec<Symbol>)> = pairs_q
        .into_iter()
        .map(|(a, b)| {
            let mut pa = a;
            pa.push(0);
            let mut pb = vec![0];
            pb.extend(b);
            (pa, pb)
        })
        .collect();
    SnInstance::new(m2, sigma, padded_p, padded_q)
}

/// Recodes every component with the fixed-width binary code of its symbols;
/// suffix/prefix relations are preserved exactly because every code word has
/// the same width.
pub fn binarize_sn(inst: &SnInstance) -> Result<SnInstance> {
    if inst.sigma <= 2 {
        return SnInstance::new(
            inst.m,
            2,
            inst.pairs_p.clone(),
            inst.pairs_q.clone(),
        );
    }
    let width = crate::reduce::ceil_log2(inst.sigma as u64);
    let code = |s: &[Symbol]| -> Result<Vec<Symbol>> {
        let mut out = Vec::with_capacity(s.len() * width);
        for &a in s {
            out.extend(bin_k(width, a as u64)?);
        }
        Ok(out)
    };
    let pairs_p = inst
        .pairs_p
        .iter()
        .map(|(x, y)| Ok((code(x)?, code(y)?)))
        .collect::<Result<Vec<_>>>()?;
    let pairs_q = inst
        .pairs_q
        .iter()
        .map(|(a, b)| Ok((code(a)?, code(b)?)))
        .collect::<Result<Vec<_>>>()?;
    SnInstance::new(inst.m * width, 2, pairs_p, pairs_q)
}

/// String nesting to dictionary matching: the text chains all `(X,Y)` pairs
/// as `X 2 Y 3 X 2 Y 3 ...`, and each query becomes the pattern `A 2 B`.
#[derive(Debug, Clone)]
pub struct SnToDm {
    /// Instance over the alphabet `{0..3}`.
    pub quaternary: DmInstance,
    /// The same instance recoded over the binary alphabet.
    pub binary: DmInstance,
}

pub fn sn_to_dm(inst: &SnInstance) -> Result<SnToDm> {
    inst.validate()?;
    if inst.sigma > 2 {
        return Err(Error::SymbolOutOfRange { symbol: inst.sigma - 1, sigma: 2 });
    }
    if inst.pairs_p.is_empty() {
        return Err(Error::EmptyPairCollection);
    }
    let mut text: Vec<Symbol> = Vec::new();
    for (i, (x, y)) in inst.pairs_p.iter().enumerate() {
        if i > 0 {
            text.push(3);
        }
        text.extend_from_slice(x);
        text.push(2);
        text.extend_from_slice(y);
    }
    let patterns: Vec<Vec<Symbol>> = inst
        .pairs_q
        .iter()
        .map(|(a, b)| {
            let mut p = a.clone();
            p.push(2);
            p.extend_from_slice(b);
            p
        })
        .collect();
    let quaternary = DmInstance::new(Text::new(text, 4)?, patterns)?;
    let binary = dm_alphabet_reduce(&quaternary)?;
    Ok(SnToDm { quaternary, binary })
}

/// Recodes a dictionary matching instance over `[0..sigma)` into a binary one
/// with `C(a) = 1^(k+1) 0 bin_k(a) 0`; occurrence positions map through
/// `j -> 1 + (2k+3)(j-1)`.
pub fn dm_alphabet_reduce(inst: &DmInstance) -> Result<DmInstance> {
    let sigma = inst.text.sigma;
    if sigma <= 2 {
        return DmInstance::new(
            Text::new(inst.text.symbols.clone(), 2)?,
            inst.patterns.clone(),
        );
    }
    let k = crate::reduce::ceil_log2(sigma as u64);
    let code = |s: &[Symbol]| -> Result<Vec<Symbol>> {
        let mut out = Vec::with_capacity(s.len() * (2 * k + 3));
        for &a in s {
            out.extend(std::iter::repeat_n(1, k + 1));
            out.push(0);
            out.extend(bin_k(k, a as u64)?);
            out.push(0);
        }
        Ok(out)
    };
    let text = Text::new(code(&inst.text.symbols)?, 2)?;
    let patterns = inst
        .patterns
        .iter()
        .map(|p| code(p))
        .collect::<Result<Vec<_>>>()?;
    DmInstance::new(text, patterns)
}
