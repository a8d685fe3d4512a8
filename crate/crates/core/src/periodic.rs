//! Canonical decompositions of highly periodic patterns and text positions:
//! the lexicographically least rotation of the period, run extents, and the
//! selector subsets of R used to characterize periodic occurrences.

use crate::strutil::{lce, lcp, shortest_period};
use crate::sync::r_positions;
use crate::{Error, Pos, Result, Symbol, Text};
use std::collections::BTreeMap;

/// Decomposition `P[1..RunEnd) = H' H^exp H''` of the maximal periodic prefix
/// of a tau-periodic pattern, where `H` is the least rotation of the period,
/// `H'` a proper suffix of `H` of length `head`, and `H''` a proper prefix of
/// length `tail`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicProfile {
    pub is_periodic: bool,
    /// `per(P[1..3tau-1])`.
    pub period: usize,
    /// Least rotation `H` of the period.
    pub root: Vec<Symbol>,
    pub head: usize,
    pub exp: usize,
    pub tail: usize,
    /// One past the maximal periodic prefix: `1 + p + lcp(P, P[1+p..])`.
    /// Relative (1-based within the pattern) for the pattern form, absolute
    /// for the position form.
    pub run_end: usize,
    /// `run_end - tail = 1 + head + exp * |root|` (shifted likewise).
    pub run_end_full: usize,
    /// +1 when the run is followed by a larger symbol, -1 otherwise.
    pub sign: i8,
}

/// Is `p` tau-periodic, i.e. `|p| >= 3tau-1` and `per(p[1..3tau-1]) <= tau/3`?
pub fn is_tau_periodic(p: &[Symbol], tau: usize) -> bool {
    p.len() >= 3 * tau - 1 && 3 * shortest_period(&p[..3 * tau - 1]) <= tau
}

/// Full profile of a tau-periodic pattern. Nonperiodic patterns yield a
/// profile with `is_periodic = false` and no other meaningful field.
pub fn periodic_profile_pattern(p: &[Symbol], tau: usize) -> PeriodicProfile {
    if !is_tau_periodic(p, tau) {
        return PeriodicProfile {
            is_periodic: false,
            period: 0,
            root: Vec::new(),
            head: 0,
            exp: 0,
            tail: 0,
            run_end: 0,
            run_end_full: 0,
            sign: -1,
        };
    }
    let period = shortest_period(&p[..3 * tau - 1]);
    let (head, root) = least_rotation(p, period);
    let run_end = 1 + period + lcp(p, &p[period..]);
    finish_profile(1, p.len(), period, head, root, run_end, |rel| {
        (p[rel - 1], p[rel - 1 - period])
    })
}

fn least_rotation(p: &[Symbol], period: usize) -> (usize, Vec<Symbol>) {
    let mut head = 0usize;
    for t in 1..period {
        if p[t..t + period] < p[head..head + period] {
            head = t;
        }
    }
    (head, p[head..head + period].to_vec())
}

/// Shared tail of the two profile forms. `origin` is 1 for the pattern form
/// and the suffix start `j` for the position form, so `run_end` and `end` are
/// expressed in the same (relative resp. absolute) coordinates.
fn finish_profile(
    origin: usize,
    end: usize,
    period: usize,
    head: usize,
    root: Vec<Symbol>,
    run_end: usize,
    at: impl Fn(usize) -> (Symbol, Symbol),
) -> PeriodicProfile {
    let exp = (run_end - origin - head) / period;
    let tail = (run_end - origin - head) % period;
    let sign = if run_end <= end {
        let (next, prev) = at(run_end);
        if next > prev { 1 } else { -1 }
    } else {
        -1
    };
    PeriodicProfile {
        is_periodic: true,
        period,
        root,
        head,
        exp,
        tail,
        run_end,
        run_end_full: run_end - tail,
        sign,
    }
}

/// Profile of the suffix `T[j..n]` for `j` in `R(tau, T)`; `run_end` and
/// `run_end_full` are absolute text positions.
pub fn periodic_profile_position(t: &Text, tau: usize, j: Pos) -> Result<PeriodicProfile> {
    let window_len = 3 * tau - 1;
    let n = t.len();
    let in_r = j >= 1
        && j + window_len <= n + 1
        && 3 * shortest_period(t.slice(j, j + window_len)) <= tau;
    if !in_r {
        return Err(Error::NotInR { pos: j });
    }
    let period = shortest_period(t.slice(j, j + window_len));
    let window = t.slice(j, j + window_len);
    let (head, root) = least_rotation(window, period);
    let run_end = j + period + lce(t, j, j + period);
    Ok(finish_profile(j, n, period, head, root, run_end, |abs| {
        (t.at(abs), t.at(abs - period))
    }))
}

/// `R(tau, T)`, its block starts `R'`, and the per-position profiles, with
/// selector queries over (root, head, exponent, sign).
#[derive(Debug, Clone)]
pub struct RSets {
    pub tau: usize,
    pub r: Vec<Pos>,
    /// Members of `R` whose predecessor is not in `R`.
    pub r_prim: Vec<Pos>,
    pub profiles: BTreeMap<Pos, PeriodicProfile>,
}

impl RSets {
    /// Positions of `R` matching every supplied constraint.
    pub fn select(
        &self,
        root: Option<&[Symbol]>,
        head: Option<usize>,
        exp: Option<usize>,
        sign: Option<i8>,
    ) -> Vec<Pos> {
        self.r
            .iter()
            .copied()
            .filter(|j| {
                let p = &self.profiles[j];
                root.is_none_or(|h| p.root == h)
                    && head.is_none_or(|s| p.head == s)
                    && exp.is_none_or(|k| p.exp == k)
                    && sign.is_none_or(|g| p.sign == g)
            })
            .collect()
    }

    /// The same filter restricted to block starts `R'`.
    pub fn select_prim(&self, root: Option<&[Symbol]>, sign: Option<i8>) -> Vec<Pos> {
        self.r_prim
            .iter()
            .copied()
            .filter(|j| {
                let p = &self.profiles[j];
                root.is_none_or(|h| p.root == h) && sign.is_none_or(|g| p.sign == g)
            })
            .collect()
    }
}

pub fn r_sets(t: &Text, tau: usize) -> Result<RSets> {
    let r = r_positions(t, tau)?;
    let mut profiles = BTreeMap::new();
    for &j in &r {
        profiles.insert(j, periodic_profile_position(t, tau, j)?);
    }
    let r_prim = r
        .iter()
        .copied()
        .filter(|&j| !profiles.contains_key(&(j.wrapping_sub(1))))
        .collect();
    Ok(RSets { tau, r, r_prim, profiles })
}
