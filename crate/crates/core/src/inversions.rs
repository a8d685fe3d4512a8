//! Inversion and colored-inversion counting plus the insertion/deletion
//! sequence algebra the range-prefix-search reduction is built from.

use crate::{Error, Result};

/// A counting-colored-inversions instance: a two-coloring and a value array
/// of equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CciInstance<T> {
    pub colors: Vec<u8>,
    pub values: Vec<T>,
}

impl<T: Ord> CciInstance<T> {
    pub fn new(colors: Vec<u8>, values: Vec<T>) -> Result<Self> {
        if colors.len() != values.len() {
            return Err(Error::ColorLengthMismatch {
                colors: colors.len(),
                values: values.len(),
            });
        }
        Ok(CciInstance { colors, values })
    }
}

/// Number of pairs `i < j` with `a[i] > a[j]`, by merge sort.
pub fn inversion_count<T: Ord + Clone>(a: &[T]) -> u64 {
    let mut work: Vec<T> = a.to_vec();
    let mut buf: Vec<T> = a.to_vec();
    merge_count(&mut work, &mut buf)
}

fn merge_count<T: Ord + Clone>(a: &mut [T], buf: &mut [T]) -> u64 {
    let n = a.len();
    if n <= 1 {
        return 0;
    }
    let mid = n / 2;
    let mut inv = {
        let (left, right) = a.split_at_mut(mid);
        let (bl, br) = buf.split_at_mut(mid);
        merge_count(left, bl) + merge_count(right, br)
    };
    let (mut i, mut j) = (0usize, mid);
    for slot in buf.iter_mut().take(n) {
        // Take from the left while it does not strictly exceed the right head.
        if j >= n || (i < mid && a[i] <= a[j]) {
            *slot = a[i].clone();
            i += 1;
        } else {
            inv += (mid - i) as u64;
            *slot = a[j].clone();
            j += 1;
        }
    }
    a.clone_from_slice(&buf[..n]);
    inv
}

/// Number of pairs `i < j` with `colors[i] != colors[j]` and
/// `values[i] > values[j]`, counted directly during a merge sort (not via the
/// three-way inversion identity, which the tests check independently).
pub fn colored_inversion_count<T: Ord + Clone>(colors: &[u8], values: &[T]) -> Result<u64> {
    if colors.len() != values.len() {
        return Err(Error::ColorLengthMismatch { colors: colors.len(), values: values.len() });
    }
    let mut work: Vec<(T, u8)> =
        values.iter().cloned().zip(colors.iter().copied()).collect();
    let mut buf = work.clone();
    Ok(merge_count_colored(&mut work, &mut buf))
}

fn merge_count_colored<T: Ord + Clone>(a: &mut [(T, u8)], buf: &mut [(T, u8)]) -> u64 {
    let n = a.len();
    if n <= 1 {
        return 0;
    }
    let mid = n / 2;
    let mut inv = {
        let (left, right) = a.split_at_mut(mid);
        let (bl, br) = buf.split_at_mut(mid);
        merge_count_colored(left, bl) + merge_count_colored(right, br)
    };
    // Remaining left-half elements, bucketed by color; when a right element
    // is emitted, every remaining left element is strictly greater.
    let mut left_by_color = [0u64; 2];
    for e in a[..mid].iter() {
        left_by_color[e.1 as usize] += 1;
    }
    let (mut i, mut j) = (0usize, mid);
    for slot in buf.iter_mut().take(n) {
        if j >= n || (i < mid && a[i].0 <= a[j].0) {
            left_by_color[a[i].1 as usize] -= 1;
            *slot = a[i].clone();
            i += 1;
        } else {
            inv += left_by_color[1 - a[j].1 as usize];
            *slot = a[j].clone();
            j += 1;
        }
    }
    a.clone_from_slice(&buf[..n]);
    inv
}

/// Counts inversions of `a` by duplicating it into a colored instance with
/// `C[2i-1] = 0`, `C[2i] = 1`, `A'[2i-1] = A'[2i] = A[i]` and halving the
/// colored count.
pub fn ci_from_cci<T: Ord + Clone>(a: &[T]) -> u64 {
    let (colors, values) = duplicate_for_colored(a);
    colored_inversion_count(&colors, &values).expect("equal lengths by construction") / 2
}

/// The duplicated instance used by [`ci_from_cci`].
pub fn duplicate_for_colored<T: Clone>(a: &[T]) -> (Vec<u8>, Vec<T>) {
    let mut colors = Vec::with_capacity(2 * a.len());
    let mut values = Vec::with_capacity(2 * a.len());
    for v in a {
        colors.push(0);
        values.push(v.clone());
        colors.push(1);
        values.push(v.clone());
    }
    (colors, values)
}

/// `Insert(S, {(p_1,c_1),...,(p_k,c_k)})`: the unique sequence `S'` with
/// `S'[p_i] = c_i` and `Delete(S', {p_i}) = S`. Positions are 1-based,
/// strictly increasing, and must fit in `[1..=|S|+k]`.
pub fn insert_subseq<T: Clone>(s: &[T], inserts: &[(usize, T)]) -> Result<Vec<T>> {
    let total = s.len() + inserts.len();
    for (w, (p, _)) in inserts.iter().enumerate() {
        let increasing = w == 0 || inserts[w - 1].0 < *p;
        if !increasing || *p < 1 || *p > total {
            return Err(Error::InvalidInsertPositions);
        }
    }
    let mut out: Vec<Option<T>> = vec![None; total];
    for (p, c) in inserts {
        out[p - 1] = Some(c.clone());
    }
    let mut feed = s.iter();
    let result = out
        .into_iter()
        .map(|slot| match slot {
            Some(c) => Ok(c),
            None => feed.next().cloned().ok_or(Error::InvalidInsertPositions),
        })
        .collect::<Result<Vec<T>>>()?;
    if feed.next().is_some() {
        return Err(Error::InvalidInsertPositions);
    }
    Ok(result)
}

/// `Delete(S, Q)`: removes the elements at the 1-based positions in `Q`.
pub fn delete_subseq<T: Clone>(s: &[T], positions: &[usize]) -> Result<Vec<T>> {
    let mut drop = vec![false; s.len()];
    for &p in positions {
        if p < 1 || p > s.len() {
            return Err(Error::InvalidDeletePositions);
        }
        drop[p - 1] = true;
    }
    Ok(s.iter().zip(&drop).filter(|(_, &d)| !d).map(|(v, _)| v.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;

    #[test]
    fn plain_counting() {
        assert_eq!(inversion_count(&[0, 1, 2]), 0);
        assert_eq!(inversion_count(&[2, 1, 0]), 3);
        assert_eq!(inversion_count(&[2, 0, 1]), 2);
        assert_eq!(inversion_count::<u64>(&[]), 0);
    }

    #[test]
    fn colored_counting() {
        assert_eq!(colored_inversion_count(&[0, 1], &[1, 0]).unwrap(), 1);
        assert_eq!(colored_inversion_count(&[0, 1, 0], &[2, 0, 1]).unwrap(), 1);
        assert_eq!(colored_inversion_count(&[0, 0, 0], &[2, 1, 0]).unwrap(), 0);
        assert!(colored_inversion_count(&[0], &[1, 2]).is_err());
    }

    #[test]
    fn counting_via_duplication() {
        assert_eq!(ci_from_cci(&[1, 0]), 1);
        assert_eq!(ci_from_cci(&[0, 1]), 0);
        assert_eq!(ci_from_cci(&[2, 1, 0]), 3);
        // The duplicated instance of [1,0] has colored count 2.
        let (c, v) = duplicate_for_colored(&[1, 0]);
        assert_eq!(colored_inversion_count(&c, &v).unwrap(), 2);
        assert_eq!(oracle::oracle_colored(&c, &v).unwrap(), 2);
    }

    #[test]
    fn subseq_algebra() {
        assert_eq!(insert_subseq(&['a', 'c'], &[(2, 'b')]).unwrap(), vec!['a', 'b', 'c']);
        assert_eq!(delete_subseq(&['a', 'b', 'c'], &[2]).unwrap(), vec!['a', 'c']);
        let r = insert_subseq(&['x', 'y'], &[(1, 'a'), (4, 'b')]).unwrap();
        assert_eq!(r, vec!['a', 'x', 'y', 'b']);
        assert_eq!(delete_subseq(&r, &[1, 4]).unwrap(), vec!['x', 'y']);
        assert!(insert_subseq(&['x'], &[(2, 'a'), (2, 'b')]).is_err());
        assert!(insert_subseq(&['x'], &[(4, 'a')]).is_err());
        assert!(delete_subseq(&['x'], &[2]).is_err());
    }

    fn arb_colored() -> impl Strategy<Value = (Vec<u8>, Vec<u32>)> {
        proptest::collection::vec((0u8..=1, 0u32..24), 0..64).prop_map(|pairs| {
            pairs.into_iter().unzip()
        })
    }

    proptest! {
        #[test]
        fn counts_match_pair_enumeration(a in proptest::collection::vec(0u32..32, 0..128)) {
            prop_assert_eq!(inversion_count(&a), oracle::oracle_inversions(&a).unwrap());
            prop_assert_eq!(ci_from_cci(&a), inversion_count(&a));
        }

        #[test]
        fn colored_identities((colors, values) in arb_colored()) {
            let direct = colored_inversion_count(&colors, &values).unwrap();
            prop_assert_eq!(direct, oracle::oracle_colored(&colors, &values).unwrap());
            // Inv(A) - (Inv(A_0) + Inv(A_1)) gives the same count.
            let a0: Vec<u32> = values
                .iter()
                .zip(&colors)
                .filter(|(_, &c)| c == 0)
                .map(|(v, _)| *v)
                .collect();
            let a1: Vec<u32> = values
                .iter()
                .zip(&colors)
                .filter(|(_, &c)| c == 1)
                .map(|(v, _)| *v)
                .collect();
            prop_assert_eq!(
                direct,
                inversion_count(&values) - inversion_count(&a0) - inversion_count(&a1)
            );
        }

        #[test]
        fn insert_then_delete_roundtrip(
            s in proptest::collection::vec(0u32..8, 0..24),
            raw in proptest::collection::btree_set(1usize..32, 0..8),
            cs in proptest::collection::vec(0u32..8, 8),
        ) {
            let total = s.len() + raw.len();
            let inserts: Vec<(usize, u32)> = raw
                .into_iter()
                .filter(|&p| p <= total)
                .zip(cs)
                .collect();
            // Positions from a set are strictly increasing; clip to range.
            if inserts.iter().all(|(p, _)| *p <= s.len() + inserts.len()) {
                let grown = insert_subseq(&s, &inserts).unwrap();
                for (p, c) in &inserts {
                    prop_assert_eq!(grown[*p - 1], *c);
                }
                let positions: Vec<usize> = inserts.iter().map(|(p, _)| *p).collect();
                prop_assert_eq!(delete_subseq(&grown, &positions).unwrap(), s);
            }
        }

        #[test]
        fn batched_single_insertions_add_up(
            a in proptest::collection::vec(0u32..16, 1..24),
            raw in proptest::collection::vec((1usize..25, 0u32..16), 1..6),
        ) {
            // Position-sorted single insertions of color 1 into all-zero C:
            // the sum of the individual colored counts equals the colored
            // count of the combined instance at shifted positions p_i + i.
            let mut ins: Vec<(usize, u32)> =
                raw.into_iter().map(|(p, x)| (p.min(a.len() + 1), x)).collect();
            ins.sort_by_key(|&(p, _)| p);
            let zeros = vec![0u8; a.len()];
            let mut sum = 0u64;
            for (p, x) in &ins {
                let c = insert_subseq(&zeros, &[(*p, 1u8)]).unwrap();
                let v = insert_subseq(&a, &[(*p, *x)]).unwrap();
                sum += colored_inversion_count(&c, &v).unwrap();
            }
            let shifted: Vec<(usize, u32)> =
                ins.iter().enumerate().map(|(i, &(p, x))| (p + i, x)).collect();
            let shifted_c: Vec<(usize, u8)> =
                shifted.iter().map(|&(p, _)| (p, 1u8)).collect();
            let c_all = insert_subseq(&zeros, &shifted_c).unwrap();
            let v_all = insert_subseq(&a, &shifted).unwrap();
            prop_assert_eq!(sum, colored_inversion_count(&c_all, &v_all).unwrap());
        }
    }
}
