//! String synchronizing sets: a verified construction and an exhaustive
//! checker for the consistency and density conditions.

use crate::strutil::shortest_period;
use crate::{Error, Pos, Result, Text};

/// A tau-synchronizing set: a content-consistent position sample whose
/// tau-windows are empty exactly over the highly periodic regions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncSet {
    /// Sorted members, all within `[1..=n-2tau+1]`.
    pub positions: Vec<Pos>,
    pub tau: usize,
}

impl SyncSet {
    pub fn contains(&self, pos: Pos) -> bool {
        self.positions.binary_search(&pos).is_ok()
    }

    /// `succ(S, j)`: the smallest member `>= j`, if any.
    pub fn successor(&self, j: Pos) -> Option<Pos> {
        let idx = self.positions.partition_point(|&p| p < j);
        self.positions.get(idx).copied()
    }
}

fn check_tau(t: &Text, tau: usize) -> Result<()> {
    let max = t.len() / 2;
    if tau < 1 || tau > max {
        return Err(Error::TauOutOfRange { tau, max });
    }
    Ok(())
}

/// Is the length-`(3tau-1)` window starting at `i` highly periodic, i.e. does
/// `per(T[i..i+3tau-2]) <= tau/3` hold?
fn window_in_r(t: &Text, tau: usize, i: Pos) -> bool {
    3 * shortest_period(t.slice(i, i + 3 * tau - 1)) <= tau
}

/// `R(tau, T)`: starting positions in `[1..=n-3tau+2]` of highly periodic
/// length-`(3tau-1)` windows.
pub fn r_positions(t: &Text, tau: usize) -> Result<Vec<Pos>> {
    check_tau(t, tau)?;
    let n = t.len();
    if n < 3 * tau - 1 {
        return Ok(Vec::new());
    }
    Ok((1..=n + 2 - 3 * tau).filter(|&i| window_in_r(t, tau, i)).collect())
}

/// Builds a tau-synchronizing set. Each position `j` gets an identifier: the
/// lexicographic rank of `T[j..j+tau)` when that window is not highly
/// periodic, and a shared top value otherwise. A position `i` joins the set
/// when the candidate window `[i..i+tau]` holds some non-top identifier and
/// the minimum is attained at `i` or `i+tau`.
pub fn build_sync_set(t: &Text, tau: usize) -> Result<SyncSet> {
    check_tau(t, tau)?;
    let n = t.len();
    let windows = n - tau + 1;
    let mut order: Vec<Pos> = (1..=windows).collect();
    order.sort_by(|&a, &b| t.slice(a, a + tau).cmp(t.slice(b, b + tau)));
    let mut id = vec![usize::MAX; windows + 1]; // 1-based
    let mut rank = 0usize;
    for w in 0..windows {
        if w > 0 {
            let (a, b) = (order[w - 1], order[w]);
            if t.slice(a, a + tau) != t.slice(b, b + tau) {
                rank += 1;
            }
        }
        id[order[w]] = rank;
    }
    for (j, slot) in id.iter_mut().enumerate().skip(1) {
        if 3 * shortest_period(t.slice(j, j + tau)) <= tau {
            *slot = usize::MAX;
        }
    }
    let positions = (1..=n - 2 * tau + 1)
        .filter(|&i| {
            let m = (i..=i + tau).map(|j| id[j]).min().unwrap();
            m != usize::MAX && (m == id[i] || m == id[i + tau])
        })
        .collect();
    Ok(SyncSet { positions, tau })
}

/// The first reason a candidate set fails the synchronizing-set definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyncViolation {
    /// A member outside `[1..=n-2tau+1]`.
    OutOfRange { pos: Pos },
    /// Equal 2tau-windows at `i` and `j`, but only one position is a member.
    Consistency { i: Pos, j: Pos },
    /// `S ∩ [i..i+tau) = ∅` disagrees with `i ∈ R(tau, T)`.
    Density { i: Pos, in_r: bool },
}

/// Exhaustively checks both conditions of the definition; `None` means valid.
pub fn verify_sync_set(t: &Text, tau: usize, s: &SyncSet) -> Option<SyncViolation> {
    let n = t.len();
    if tau < 1 || 2 * tau > n {
        // No position is admissible for such a tau.
        return s.positions.first().map(|&p| SyncViolation::OutOfRange { pos: p });
    }
    let domain_end = n - 2 * tau + 1;
    for &p in &s.positions {
        if p < 1 || p > domain_end {
            return Some(SyncViolation::OutOfRange { pos: p });
        }
    }
    // Density over all window starts.
    if n >= 3 * tau - 1 {
        for i in 1..=n + 2 - 3 * tau {
            let empty = !(i..i + tau).any(|p| s.contains(p));
            let in_r = window_in_r(t, tau, i);
            if empty != in_r {
                return Some(SyncViolation::Density { i, in_r });
            }
        }
    }
    // Consistency: group positions by 2tau-window content; membership must be
    // constant within each group (equal windows are adjacent after sorting).
    let mut order: Vec<Pos> = (1..=domain_end).collect();
    order.sort_by(|&a, &b| t.slice(a, a + 2 * tau).cmp(t.slice(b, b + 2 * tau)));
    for w in 1..order.len() {
        let (i, j) = (order[w - 1], order[w]);
        if t.slice(i, i + 2 * tau) == t.slice(j, j + 2 * tau)
            && s.contains(i) != s.contains(j)
        {
            let (i, j) = (i.min(j), i.max(j));
            return Some(SyncViolation::Consistency { i, j });
        }
    }
    None
}
