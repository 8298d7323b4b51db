//! Hiker's tracks and hiker's maps.
//!
//! Fix a coloring `f` of the `(n+1)`-subsets of `{0, …, N-1}` and a
//! destination `x`. The track starts with the points `0, …, n-1`. Having
//! chosen `x_0 < … < x_{β-1}`, the next point `x_β` is the least `y` such
//! that for every `n`-set `s` of earlier indices
//!
//! ```text
//! f({x_γ : γ ∈ s} ∪ {y}) = f({x_γ : γ ∈ s} ∪ {x})
//! ```
//!
//! The construction stops when `x_β = x`; that index is `δ(x)`. The hiker's
//! map `f_x` colors each `n`-subset `s` of `{0, …, δ(x)-1}` by
//! `f({x_γ : γ ∈ s} ∪ {x})`. Distinct destinations always give distinct
//! hiker's maps, which [`check_injectivity`] checks directly.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::combinatorics::{binom, binomial, colex_subsets, for_each_lex_subset};
use crate::{Error, Result};

/// The hiker's track toward one destination point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Track {
    destination: usize,
    points: Vec<usize>,
    arity: usize,
}

impl Track {
    pub fn destination(&self) -> usize {
        self.destination
    }

    /// `x_0 < x_1 < … < x_δ`, ending at the destination.
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    /// Index of the destination in the track.
    pub fn delta(&self) -> usize {
        self.points.len() - 1
    }

    /// `n`, where the coloring has tuple size `n + 1`.
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn into_points(self) -> Vec<usize> {
        self.points
    }
}

/// `f_x`: colors of the `n`-subsets of `{0, …, δ-1}` in colex order.
///
/// Equality compares the domain size too: the maps on `[2]^5` and `[3]^5`
/// are both empty but are different maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HikerMap {
    pub delta: usize,
    pub arity: usize,
    pub entries: Vec<Color>,
}

/// `(partial colex rank of {x_γ : γ ∈ s}, required color)` for one `n`-set `s`.
type Constraint = (usize, Color);

/// Greedy track construction toward `dest`.
pub fn build_track(c: &Coloring, dest: usize) -> Result<Track> {
    let n = c.arity();
    let t = c.tuple_size();
    if dest >= c.ground_size() {
        return Err(Error::PointOutOfRange { point: dest, ground_size: c.ground_size() });
    }
    if dest < n {
        return Ok(Track { destination: dest, points: (0..=dest).collect(), arity: n });
    }

    let mut points: Vec<usize> = (0..n).collect();
    let dest_rank = binom(dest, t);
    let mut constraints: Vec<Constraint> = Vec::new();
    let initial: usize = points.iter().enumerate().map(|(i, &p)| binom(p, i + 1)).sum();
    constraints.push((initial, c.color_at_rank(initial + dest_rank)));

    let mut next = points.last().map_or(0, |&p| p + 1);
    loop {
        // The destination satisfies every constraint, so the scan stops there.
        let y = (next..dest)
            .find(|&y| {
                let y_rank = binom(y, t);
                constraints.iter().all(|&(partial, target)| c.color_at_rank(partial + y_rank) == target)
            })
            .unwrap_or(dest);
        points.push(y);
        if y == dest {
            break;
        }
        next = y + 1;
        if n > 0 {
            // New n-sets are those containing the index just added.
            let newest = points.len() - 1;
            let top = binom(y, n);
            for_each_lex_subset(newest, n - 1, |u| {
                let partial: usize =
                    u.iter().enumerate().map(|(i, &g)| binom(points[g], i + 1)).sum::<usize>() + top;
                constraints.push((partial, c.color_at_rank(partial + dest_rank)));
                true
            });
        }
    }
    Ok(Track { destination: dest, points, arity: n })
}

/// Tracks for every destination `0, …, N-1`.
pub fn build_all_tracks(c: &Coloring) -> Vec<Track> {
    (0..c.ground_size())
        .map(|x| build_track(c, x).expect("destination is in range"))
        .collect()
}

fn check_track(c: &Coloring, tr: &Track) -> Result<()> {
    if tr.arity != c.arity() {
        return Err(Error::ArityMismatch { expected: c.tuple_size(), found: tr.arity + 1 });
    }
    if let Some(&bad) = tr.points.iter().find(|&&p| p >= c.ground_size()) {
        return Err(Error::PointOutOfRange { point: bad, ground_size: c.ground_size() });
    }
    if tr.points.windows(2).any(|w| w[0] >= w[1]) || tr.points.last() != Some(&tr.destination) {
        return Err(Error::NotIncreasing(tr.points.clone()));
    }
    Ok(())
}

/// The hiker's map induced by a track of `c`.
pub fn hiker_map(c: &Coloring, tr: &Track) -> Result<HikerMap> {
    check_track(c, tr)?;
    let n = tr.arity;
    let delta = tr.delta();
    let mut tuple = Vec::with_capacity(n + 1);
    let entries = colex_subsets(delta, n)
        .map(|s| {
            tuple.clear();
            tuple.extend(s.iter().map(|&g| tr.points[g]));
            tuple.push(tr.destination);
            c.color_unchecked(&tuple)
        })
        .collect();
    Ok(HikerMap { delta, arity: n, entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Injectivity {
    Injective,
    /// Two destinations with equal hiker's maps, `first < second`.
    Collision { first: usize, second: usize },
}

impl Injectivity {
    pub fn is_injective(&self) -> bool {
        matches!(self, Injectivity::Injective)
    }
}

/// Checks that `x ↦ f_x` is one-to-one over all destinations.
pub fn check_injectivity(c: &Coloring) -> Injectivity {
    let mut seen: HashMap<HikerMap, usize> = HashMap::new();
    for tr in build_all_tracks(c) {
        let map = hiker_map(c, &tr).expect("track was built from this coloring");
        match seen.entry(map) {
            Entry::Occupied(e) => {
                return Injectivity::Collision { first: *e.get(), second: tr.destination };
            }
            Entry::Vacant(e) => {
                e.insert(tr.destination);
            }
        }
    }
    Injectivity::Injective
}

/// Number of distinct hiker's maps with domain size `d`.
pub fn count_distinct_maps(c: &Coloring, d: usize) -> usize {
    build_all_tracks(c)
        .iter()
        .filter(|tr| tr.delta() == d)
        .map(|tr| hiker_map(c, tr).expect("track was built from this coloring"))
        .collect::<HashSet<_>>()
        .len()
}

/// `r^C(d, n)`: how many maps `[d]^n -> r` exist.
pub fn map_count_bound(num_colors: u32, d: usize, n: usize) -> BigUint {
    let exponent = binomial(d as u64, n as u64);
    let exponent = u32::try_from(&exponent).expect("exponent of the map-count bound is too large");
    BigUint::from(num_colors).pow(exponent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::ColoringKind;

    /// Rescans every unused point from 0 at each step.
    fn naive_track(c: &Coloring, dest: usize) -> Vec<usize> {
        let n = c.arity();
        if dest < n {
            return (0..=dest).collect();
        }
        let mut points: Vec<usize> = (0..n).collect();
        loop {
            let beta = points.len();
            let y = (0..c.ground_size())
                .filter(|y| !points.contains(y))
                .find(|&y| {
                    for_each_lex_subset(beta, n, |s| {
                        let with = |z: usize| {
                            let mut v: Vec<usize> = s.iter().map(|&g| points[g]).collect();
                            v.push(z);
                            v.sort();
                            c.color_of(&v).unwrap()
                        };
                        with(y) == with(dest)
                    })
                })
                .unwrap();
            points.push(y);
            if y == dest {
                return points;
            }
        }
    }

    fn parity(n: usize, t: usize) -> Coloring {
        Coloring::generate(&ColoringKind::Parity, n, t, 2).unwrap()
    }

    #[test]
    fn track_examples() {
        let constant = Coloring::generate(&ColoringKind::Constant(0), 6, 2, 2).unwrap();
        let tr = build_track(&constant, 4).unwrap();
        assert_eq!(tr.points(), &[0, 1, 2, 3, 4]);
        assert_eq!(tr.delta(), 4);

        let tr = build_track(&parity(4, 2), 3).unwrap();
        assert_eq!(tr.points(), &[0, 1, 3]);
        assert_eq!(tr.delta(), 2);

        let tr = build_track(&parity(4, 2), 0).unwrap();
        assert_eq!(tr.points(), &[0]);
        assert_eq!(tr.delta(), 0);

        assert!(matches!(build_track(&parity(4, 2), 4), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn destination_below_arity() {
        let c = parity(6, 4);
        assert_eq!(build_track(&c, 2).unwrap().points(), &[0, 1, 2]);
        assert_eq!(build_track(&c, 3).unwrap().points(), &[0, 1, 2, 3]);
    }

    #[test]
    fn unary_tracks_follow_color_class() {
        let c = Coloring::new(6, 1, 2, vec![1, 0, 1, 1, 0, 1]).unwrap();
        assert_eq!(build_track(&c, 5).unwrap().points(), &[0, 2, 3, 5]);
        assert_eq!(build_track(&c, 4).unwrap().points(), &[1, 4]);
    }

    #[test]
    fn map_examples() {
        let c = parity(4, 2);
        let tr = build_track(&c, 3).unwrap();
        let map = hiker_map(&c, &tr).unwrap();
        assert_eq!(map, HikerMap { delta: 2, arity: 1, entries: vec![1, 0] });

        let c3 = parity(5, 3);
        let short = build_track(&c3, 1).unwrap();
        let map = hiker_map(&c3, &short).unwrap();
        assert_eq!(map.delta, 1);
        assert!(map.entries.is_empty());

        let constant = Coloring::generate(&ColoringKind::Constant(0), 7, 3, 2).unwrap();
        for tr in build_all_tracks(&constant) {
            assert!(hiker_map(&constant, &tr).unwrap().entries.iter().all(|&e| e == 0));
        }

        assert!(matches!(hiker_map(&c3, &tr), Err(Error::ArityMismatch { .. })));
        let small = parity(3, 2);
        assert!(matches!(hiker_map(&small, &tr), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn injectivity_examples() {
        assert!(check_injectivity(&parity(5, 2)).is_injective());
        assert!(check_injectivity(&Coloring::generate(&ColoringKind::Constant(0), 5, 2, 2).unwrap()).is_injective());
    }

    #[test]
    fn distinct_map_counts() {
        let constant = Coloring::generate(&ColoringKind::Constant(0), 6, 2, 2).unwrap();
        assert_eq!(count_distinct_maps(&constant, 2), 1);
        assert_eq!(count_distinct_maps(&constant, 9), 0);
        // parity on 4 points: tracks [0],[0,1],[0,2],[0,1,3]; δ=1 for dests 1 and 2.
        let c = parity(4, 2);
        assert_eq!(count_distinct_maps(&c, 1), 2);
        assert_eq!(map_count_bound(2, 1, 1), BigUint::from(2u32));
        assert_eq!(map_count_bound(3, 4, 2), BigUint::from(729u32));
    }

    #[test]
    fn matches_naive_rescan() {
        for seed in 0..200u64 {
            let t = 1 + (seed % 3) as usize;
            let c = Coloring::generate(&ColoringKind::Random { seed }, 9, t, 2 + (seed % 2) as u32).unwrap();
            for x in 0..9 {
                assert_eq!(build_track(&c, x).unwrap().points(), &naive_track(&c, x)[..], "seed {seed} dest {x}");
            }
        }
    }
}
