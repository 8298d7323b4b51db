//! Exact binomial coefficients and colex ranking of fixed-size subsets.
//!
//! Colex order compares subsets by their largest differing element. The rank
//! of a `t`-subset `s_0 < s_1 < … < s_{t-1}` is `Σ C(s_i, i + 1)`, which does
//! not depend on the size of the ground set. A coloring of `[N]^t` stored in
//! colex order therefore restricts to `[M]^t` (for `M < N`) by taking an array
//! prefix.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // Each partial product C(n - k + i + 1, i + 1) is an integer.
        acc *= n - k + i + 1;
        acc /= i + 1;
    }
    acc
}

const TABLE_SIZE: usize = 128;

fn table() -> &'static [[u64; TABLE_SIZE]] {
    static TABLE: OnceLock<Vec<[u64; TABLE_SIZE]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows = vec![[0u64; TABLE_SIZE]; TABLE_SIZE];
        for n in 0..TABLE_SIZE {
            rows[n][0] = 1;
            for k in 1..=n {
                rows[n][k] = rows[n - 1][k - 1].saturating_add(rows[n - 1][k]);
            }
        }
        rows
    })
}

/// `C(n, k)` as a machine integer, or `None` if it does not fit in a `u64`.
pub fn binomial_u64(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    if n < TABLE_SIZE {
        let v = table()[n][k];
        return (v != u64::MAX).then_some(v);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - k as u128 + i + 1) / (i + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `C(n, k)` for indices already known to be small enough to fit.
#[inline]
pub(crate) fn binom(n: usize, k: usize) -> usize {
    if n < TABLE_SIZE && k < TABLE_SIZE {
        if k > n {
            0
        } else {
            table()[n][k] as usize
        }
    } else {
        binomial_u64(n, k).expect("binomial coefficient overflows u64") as usize
    }
}

/// A finite set of points, kept as a strictly increasing sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetIndex(Vec<usize>);

impl SubsetIndex {
    pub fn new(members: Vec<usize>) -> Result<Self> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(members));
        }
        Ok(SubsetIndex(members))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colex_rank(&self) -> usize {
        colex_rank_unchecked(&self.0)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Colex rank of a non-empty strictly increasing sequence.
pub fn colex_rank(members: &[usize]) -> Result<usize> {
    if members.is_empty() || members.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotIncreasing(members.to_vec()));
    }
    Ok(colex_rank_unchecked(members))
}

#[inline]
pub(crate) fn colex_rank_unchecked(members: &[usize]) -> usize {
    members
        .iter()
        .enumerate()
        .map(|(i, &m)| binom(m, i + 1))
        .sum()
}

/// Inverse of [`colex_rank`] on `t`-subsets.
pub fn colex_unrank(mut rank: usize, t: usize) -> SubsetIndex {
    let mut members = vec![0; t];
    for pos in (0..t).rev() {
        let k = pos + 1;
        // Largest m with C(m, k) <= rank; m >= pos since C(pos, k) = 0.
        let mut m = pos;
        while binom(m + 1, k) <= rank {
            m += 1;
        }
        rank -= binom(m, k);
        members[pos] = m;
    }
    SubsetIndex(members)
}

/// Iterates over all `t`-subsets of `{0, …, n-1}` in colex order.
pub fn colex_subsets(n: usize, t: usize) -> ColexSubsets {
    ColexSubsets {
        current: if t <= n { Some((0..t).collect()) } else { None },
        n,
    }
}

pub struct ColexSubsets {
    current: Option<Vec<usize>>,
    n: usize,
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let t = next.len();
        // Bump the lowest position that can move without colliding.
        let mut i = 0;
        while i < t {
            let limit = if i + 1 < t { next[i + 1] } else { self.n };
            if next[i] + 1 < limit {
                next[i] += 1;
                for (j, slot) in next.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                self.current = Some(next);
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

/// Visits every `k`-subset of `{0, …, n-1}` in lexicographic order.
///
/// The callback returns `false` to stop early; the function reports whether
/// the enumeration ran to completion.
pub fn for_each_lex_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
