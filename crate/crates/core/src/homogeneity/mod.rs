//! End-homogeneous sequences and monochromatic sets.
//!
//! A strictly increasing sequence `x_0 < x_1 < …` is end-homogeneous for a
//! coloring of `(n+1)`-sets when the color of `{x_{β_0}, …, x_{β_{n-1}}, x_{β_n}}`
//! does not depend on the last index: whenever
//! `β_0 < … < β_{n-1} < β_n < β_{n+1}`,
//!
//! ```text
//! f({x_{β_0}, …, x_{β_{n-1}}, x_{β_n}}) = f({x_{β_0}, …, x_{β_{n-1}}, x_{β_{n+1}}})
//! ```
//!
//! Every hiker's track is such a sequence. Restricting the coloring to a
//! track and dropping the last element gives a coloring of `n`-sets, which is
//! how [`extract_monochromatic`] reduces the arity one step at a time until
//! the pigeonhole principle finishes the job.

mod trie;

pub use trie::{build_track_trie, TrackTrie, TrieNode, TrieStats};

use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::combinatorics::{binom, colex_subsets, for_each_lex_subset};
use crate::track::build_all_tracks;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSequence {
    pub points: Vec<usize>,
    pub arity: usize,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonochromaticWitness {
    pub color: Color,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum EndHomogeneity {
    Homogeneous,
    /// The first index tuple `β_0 < … < β_{n+1}` (lexicographic) that breaks it.
    Violation { indices: Vec<usize> },
}

impl EndHomogeneity {
    pub fn holds(&self) -> bool {
        matches!(self, EndHomogeneity::Homogeneous)
    }
}

fn check_points(c: &Coloring, points: &[usize]) -> Result<()> {
    if points.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotIncreasing(points.to_vec()));
    }
    if let Some(&bad) = points.iter().find(|&&p| p >= c.ground_size()) {
        return Err(Error::PointOutOfRange { point: bad, ground_size: c.ground_size() });
    }
    Ok(())
}

/// Direct check of every index tuple. Vacuously true for `|w| <= n + 1`.
pub fn is_end_homogeneous(c: &Coloring, w: &[usize]) -> Result<EndHomogeneity> {
    check_points(c, w)?;
    let n = c.arity();
    let mut violation = None;
    let mut left = Vec::with_capacity(n + 1);
    let mut right = Vec::with_capacity(n + 1);
    for_each_lex_subset(w.len(), n + 2, |beta| {
        left.clear();
        left.extend(beta[..n].iter().map(|&b| w[b]));
        right.clone_from(&left);
        left.push(w[beta[n]]);
        right.push(w[beta[n + 1]]);
        if c.color_unchecked(&left) != c.color_unchecked(&right) {
            violation = Some(beta.to_vec());
            false
        } else {
            true
        }
    });
    Ok(match violation {
        Some(indices) => EndHomogeneity::Violation { indices },
        None => EndHomogeneity::Homogeneous,
    })
}

/// The track of greatest length (smallest destination on ties).
pub fn longest_track_sequence(c: &Coloring) -> WitnessSequence {
    let best = build_all_tracks(c)
        .into_iter()
        .reduce(|best, tr| if tr.delta() > best.delta() { tr } else { best })
        .expect("a coloring has at least one point");
    let points = best.into_points();
    let verified = is_end_homogeneous(c, &points).map(|h| h.holds()).unwrap_or(false);
    WitnessSequence { points, arity: c.arity(), verified }
}

/// Reusable depth-first search for end-homogeneous sequences of one length.
///
/// Candidates are tried in increasing order, so the first sequence found is
/// the lexicographically least one. When a point is appended at position
/// `m`, every `n`-set `s` of positions whose successor position `max(s)+1`
/// (or `0` for `n = 0`) is below `m` fixes a required color
/// `f(w_s ∪ {w_{max(s)+1}})`; later points must reproduce it.
pub(crate) struct WitnessSearch {
    target: usize,
    seq: Vec<usize>,
    /// `(partial colex rank of w_s, required color)`.
    constraints: Vec<(usize, Color)>,
}

impl WitnessSearch {
    pub(crate) fn new(target: usize) -> Self {
        WitnessSearch { target, seq: Vec::with_capacity(target), constraints: Vec::new() }
    }

    pub(crate) fn run(&mut self, c: &Coloring) -> bool {
        self.seq.clear();
        self.constraints.clear();
        if self.target > c.ground_size() {
            return false;
        }
        self.descend(c)
    }

    pub(crate) fn found(&self) -> &[usize] {
        &self.seq
    }

    fn descend(&mut self, c: &Coloring) -> bool {
        let m = self.seq.len();
        if m == self.target {
            return true;
        }
        let t = c.tuple_size();
        let n = t - 1;
        let lo = self.seq.last().map_or(0, |&p| p + 1);
        let hi = c.ground_size() - (self.target - m);
        for y in lo..=hi {
            let y_rank = binom(y, t);
            if !self.constraints.iter().all(|&(p, col)| c.color_at_rank(p + y_rank) == col) {
                continue;
            }
            self.seq.push(y);
            let mark = self.constraints.len();
            if n == 0 {
                if m == 0 {
                    self.constraints.push((0, c.color_at_rank(y_rank)));
                }
            } else if m >= n {
                // New n-sets end at position m-1; their successor is y.
                let top = binom(self.seq[m - 1], n);
                let seq = &self.seq;
                let constraints = &mut self.constraints;
                for_each_lex_subset(m - 1, n - 1, |u| {
                    let partial = u.iter().enumerate().map(|(i, &g)| binom(seq[g], i + 1)).sum::<usize>() + top;
                    constraints.push((partial, c.color_at_rank(partial + y_rank)));
                    true
                });
            }
            if self.descend(c) {
                return true;
            }
            self.constraints.truncate(mark);
            self.seq.pop();
        }
        false
    }
}

/// Lexicographically least end-homogeneous sequence of length exactly `k`.
pub fn find_end_homogeneous(c: &Coloring, k: usize) -> Option<WitnessSequence> {
    let mut search = WitnessSearch::new(k);
    if !search.run(c) {
        return None;
    }
    let points = search.found().to_vec();
    let verified = is_end_homogeneous(c, &points).map(|h| h.holds()).unwrap_or(false);
    debug_assert!(verified);
    Some(WitnessSequence { points, arity: c.arity(), verified })
}

/// Largest color class (smallest color on ties), as increasing indices.
pub fn pigeonhole_extract(values: &[Color], num_colors: u32) -> Result<(Color, Vec<usize>)> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut counts = vec![0usize; num_colors as usize];
    for &v in values {
        if v >= num_colors {
            return Err(Error::ColorOutOfRange { color: v as u64, num_colors });
        }
        counts[v as usize] += 1;
    }
    let mut best = 0;
    for (color, &count) in counts.iter().enumerate() {
        if count > counts[best] {
            best = color;
        }
    }
    let best = best as Color;
    let members = values.iter().enumerate().filter(|&(_, &v)| v == best).map(|(i, _)| i).collect();
    Ok((best, members))
}

/// Monochromatic set found by reducing arity along longest tracks.
///
/// At arity `n >= 1` the longest track `a_0, …, a_δ` induces the coloring
/// `F(s) = f({a_ζ : ζ ∈ s} ∪ {a_{max(s)+1}})` of the `n`-subsets of
/// `{0, …, δ-1}`. A monochromatic set `S` for `F` maps to `{a_β : β ∈ S}`.
/// When `S` is all of `{0, …, δ-1}` the endpoint `a_δ` joins as well, so
/// fully homogeneous tracks come back whole.
pub fn extract_monochromatic(c: &Coloring) -> Result<MonochromaticWitness> {
    if c.ground_size() < c.tuple_size() {
        return Err(Error::InvalidParameters(format!(
            "ground size {} is smaller than tuple size {}",
            c.ground_size(),
            c.tuple_size()
        )));
    }
    let (color, members) = reduce(c)?;
    Ok(MonochromaticWitness { color, members })
}

fn reduce(c: &Coloring) -> Result<(Color, Vec<usize>)> {
    if c.tuple_size() == 1 {
        return pigeonhole_extract(c.colors(), c.num_colors());
    }
    let n = c.arity();
    let track = longest_track_sequence(c).points;
    let delta = track.len() - 1;
    let mut tuple = Vec::with_capacity(n + 1);
    let induced = colex_subsets(delta, n)
        .map(|s| {
            tuple.clear();
            tuple.extend(s.iter().map(|&b| track[b]));
            tuple.push(track[s[n - 1] + 1]);
            c.color_unchecked(&tuple)
        })
        .collect();
    let induced = Coloring::new(delta, n, c.num_colors(), induced)?;
    let (color, indices) = reduce(&induced)?;
    let whole = indices.len() == delta;
    let mut members: Vec<usize> = indices.into_iter().map(|b| track[b]).collect();
    if whole {
        members.push(track[delta]);
    }
    Ok((color, members))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Monochromatic {
    /// Every `(n+1)`-subset has this color.
    Color(Color),
    /// Fewer than `n + 1` members: nothing to color.
    Vacuous,
    NotMonochromatic,
}

pub fn is_monochromatic(c: &Coloring, members: &[usize]) -> Result<Monochromatic> {
    let mut z = members.to_vec();
    z.sort_unstable();
    z.dedup();
    check_points(c, &z)?;
    let t = c.tuple_size();
    if z.len() < t {
        return Ok(Monochromatic::Vacuous);
    }
    let mut tuple = Vec::with_capacity(t);
    let mut common = None;
    let uniform = for_each_lex_subset(z.len(), t, |s| {
        tuple.clear();
        tuple.extend(s.iter().map(|&i| z[i]));
        let color = c.color_unchecked(&tuple);
        *common.get_or_insert(color) == color
    });
    Ok(match (uniform, common) {
        (true, Some(color)) => Monochromatic::Color(color),
        _ => Monochromatic::NotMonochromatic,
    })
}
