//! Finite colorings `f: [N]^t -> {0, …, r-1}` stored densely in colex order.

mod krt;

pub use krt::{parse_krt, write_krt};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{binomial_u64, colex_rank_unchecked, colex_subsets, SubsetIndex};
use crate::{Error, Result};

pub type Color = u32;

/// A total coloring of the `t`-subsets of `{0, …, N-1}`.
///
/// `colors[i]` is the color of the subset with colex rank `i`. Because colex
/// rank is independent of the ground size, the first `C(M, t)` entries are
/// the restriction of the coloring to `{0, …, M-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    ground_size: usize,
    tuple_size: usize,
    num_colors: u32,
    colors: Vec<Color>,
}

/// How to fill a generated coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringKind {
    Constant(Color),
    /// Color of a subset is the sum of its members modulo 2.
    Parity,
    /// Colors listed in colex order.
    Explicit(Vec<Color>),
    /// Colors drawn in colex order from ChaCha8 seeded with
    /// `seed_from_u64(seed)`, each one `gen_range(0..r)`.
    Random { seed: u64 },
}

pub(crate) fn subset_count(ground_size: usize, tuple_size: usize) -> Result<usize> {
    binomial_u64(ground_size, tuple_size)
        .and_then(|c| usize::try_from(c).ok())
        .ok_or_else(|| {
            Error::InvalidParameters(format!("C({ground_size},{tuple_size}) subsets do not fit in memory"))
        })
}

fn check_shape(ground_size: usize, tuple_size: usize, num_colors: u32) -> Result<()> {
    if tuple_size == 0 {
        return Err(Error::InvalidParameters("tuple size must be positive".into()));
    }
    if tuple_size > ground_size {
        return Err(Error::InvalidParameters(format!(
            "tuple size {tuple_size} exceeds ground size {ground_size}"
        )));
    }
    if num_colors == 0 {
        return Err(Error::InvalidParameters("number of colors must be positive".into()));
    }
    Ok(())
}

impl Coloring {
    pub fn new(ground_size: usize, tuple_size: usize, num_colors: u32, colors: Vec<Color>) -> Result<Self> {
        check_shape(ground_size, tuple_size, num_colors)?;
        let expected = subset_count(ground_size, tuple_size)?;
        if colors.len() != expected {
            return Err(Error::InvalidParameters(format!(
                "expected {expected} colors, found {}",
                colors.len()
            )));
        }
        if let Some(&bad) = colors.iter().find(|&&c| c >= num_colors) {
            return Err(Error::ColorOutOfRange { color: bad as u64, num_colors });
        }
        Ok(Coloring { ground_size, tuple_size, num_colors, colors })
    }

    /// Builds a coloring of `[ground_size]^tuple_size` with `num_colors` colors.
    pub fn generate(kind: &ColoringKind, ground_size: usize, tuple_size: usize, num_colors: u32) -> Result<Self> {
        check_shape(ground_size, tuple_size, num_colors)?;
        let count = subset_count(ground_size, tuple_size)?;
        let colors = match kind {
            ColoringKind::Constant(c) => {
                if *c >= num_colors {
                    return Err(Error::ColorOutOfRange { color: *c as u64, num_colors });
                }
                vec![*c; count]
            }
            ColoringKind::Parity => {
                if num_colors < 2 {
                    return Err(Error::InvalidParameters("parity coloring needs at least 2 colors".into()));
                }
                colex_subsets(ground_size, tuple_size)
                    .map(|s| (s.iter().sum::<usize>() % 2) as Color)
                    .collect()
            }
            ColoringKind::Explicit(colors) => colors.clone(),
            ColoringKind::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..count).map(|_| rng.gen_range(0..num_colors)).collect()
            }
        };
        Coloring::new(ground_size, tuple_size, num_colors, colors)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn tuple_size(&self) -> usize {
        self.tuple_size
    }

    /// `tuple_size - 1`: the size of the index subsets a hiker's map colors.
    pub fn arity(&self) -> usize {
        self.tuple_size - 1
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub(crate) fn colors_mut(&mut self) -> &mut [Color] {
        &mut self.colors
    }

    /// Color of a `t`-subset given as a strictly increasing slice.
    pub fn color_of(&self, subset: &[usize]) -> Result<Color> {
        if subset.len() != self.tuple_size {
            return Err(Error::ArityMismatch { expected: self.tuple_size, found: subset.len() });
        }
        if subset.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(subset.to_vec()));
        }
        if let Some(&last) = subset.last() {
            if last >= self.ground_size {
                return Err(Error::PointOutOfRange { point: last, ground_size: self.ground_size });
            }
        }
        Ok(self.colors[colex_rank_unchecked(subset)])
    }

    pub fn color_of_subset(&self, subset: &SubsetIndex) -> Result<Color> {
        self.color_of(subset.members())
    }

    /// Caller guarantees `subset` is a valid increasing `t`-subset in range.
    #[inline]
    pub(crate) fn color_unchecked(&self, subset: &[usize]) -> Color {
        self.colors[colex_rank_unchecked(subset)]
    }

    #[inline]
    pub(crate) fn color_at_rank(&self, rank: usize) -> Color {
        self.colors[rank]
    }

    /// Restriction to the first `ground_size` points (a colex prefix).
    pub fn restrict(&self, ground_size: usize) -> Result<Coloring> {
        if ground_size > self.ground_size {
            return Err(Error::InvalidParameters(format!(
                "cannot restrict ground size {} to larger size {ground_size}",
                self.ground_size
            )));
        }
        check_shape(ground_size, self.tuple_size, self.num_colors)?;
        let count = subset_count(ground_size, self.tuple_size)?;
        Ok(Coloring {
            ground_size,
            tuple_size: self.tuple_size,
            num_colors: self.num_colors,
            colors: self.colors[..count].to_vec(),
        })
    }
}

/// A coloring of the `t`-subsets of all naturals, queried on demand.
///
/// Implementations must return the same color every time the same subset is
/// queried, and must tolerate concurrent queries.
pub trait ColoringOracle: Sync {
    fn tuple_size(&self) -> usize;
    fn num_colors(&self) -> u32;
    /// `subset` is strictly increasing with `tuple_size` members.
    fn color(&self, subset: &[usize]) -> Result<Color>;
}

#[derive(Debug, Clone, Copy)]
pub struct ConstantOracle {
    pub tuple_size: usize,
    pub num_colors: u32,
    pub color: Color,
}

impl ColoringOracle for ConstantOracle {
    fn tuple_size(&self) -> usize {
        self.tuple_size
    }
    fn num_colors(&self) -> u32 {
        self.num_colors
    }
    fn color(&self, _subset: &[usize]) -> Result<Color> {
        Ok(self.color)
    }
}

/// Sum of members modulo 2, with two colors.
#[derive(Debug, Clone, Copy)]
pub struct ParityOracle {
    pub tuple_size: usize,
}

impl ColoringOracle for ParityOracle {
    fn tuple_size(&self) -> usize {
        self.tuple_size
    }
    fn num_colors(&self) -> u32 {
        2
    }
    fn color(&self, subset: &[usize]) -> Result<Color> {
        Ok((subset.iter().sum::<usize>() % 2) as Color)
    }
}

/// Pseudo-random oracle: the color of a subset is the first
/// `gen_range(0..r)` draw of ChaCha8 seeded with `seed_from_u64(seed)` on the
/// stream numbered by the subset's colex rank.
#[derive(Debug, Clone, Copy)]
pub struct RandomOracle {
    pub tuple_size: usize,
    pub num_colors: u32,
    pub seed: u64,
}

impl ColoringOracle for RandomOracle {
    fn tuple_size(&self) -> usize {
        self.tuple_size
    }
    fn num_colors(&self) -> u32 {
        self.num_colors
    }
    fn color(&self, subset: &[usize]) -> Result<Color> {
        let mut rank: u64 = 0;
        for (i, &m) in subset.iter().enumerate() {
            let term = binomial_u64(m, i + 1)
                .ok_or_else(|| Error::Oracle(format!("colex rank of {subset:?} overflows")))?;
            rank = rank
                .checked_add(term)
                .ok_or_else(|| Error::Oracle(format!("colex rank of {subset:?} overflows")))?;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(rank);
        Ok(rng.gen_range(0..self.num_colors))
    }
}

/// Any `Fn(&[usize]) -> Color` closure as an oracle.
pub struct FnOracle<F> {
    pub tuple_size: usize,
    pub num_colors: u32,
    pub f: F,
}

impl<F: Fn(&[usize]) -> Color + Sync> ColoringOracle for FnOracle<F> {
    fn tuple_size(&self) -> usize {
        self.tuple_size
    }
    fn num_colors(&self) -> u32 {
        self.num_colors
    }
    fn color(&self, subset: &[usize]) -> Result<Color> {
        Ok((self.f)(subset))
    }
}

/// Materializes the oracle on `{0, …, ground_size-1}`.
pub fn truncate(oracle: &dyn ColoringOracle, ground_size: usize) -> Result<Coloring> {
    let t = oracle.tuple_size();
    let r = oracle.num_colors();
    check_shape(ground_size, t, r)?;
    let colors = colex_subsets(ground_size, t)
        .map(|s| {
            let c = oracle.color(&s)?;
            if c >= r {
                return Err(Error::Oracle(format!("color {c} for {s:?} is out of range")));
            }
            Ok(c)
        })
        .collect::<Result<Vec<_>>>()?;
    Coloring::new(ground_size, t, r, colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parity4() -> Coloring {
        Coloring::generate(&ColoringKind::Parity, 4, 2, 2).unwrap()
    }

    #[test]
    fn color_of_examples() {
        let parity = Coloring::generate(&ColoringKind::Parity, 5, 2, 2).unwrap();
        assert_eq!(parity.color_of(&[0, 3]).unwrap(), 1);
        let constant = Coloring::generate(&ColoringKind::Constant(0), 5, 2, 2).unwrap();
        for s in colex_subsets(5, 2) {
            assert_eq!(constant.color_of(&s).unwrap(), 0);
        }
        assert_eq!(
            parity.color_of(&[0, 1, 2]),
            Err(Error::ArityMismatch { expected: 2, found: 3 })
        );
        assert!(parity.to_owned().color_of(&[0, 5]).is_err());
        assert!(parity.color_of(&[3, 1]).is_err());
        let idx = SubsetIndex::new(vec![1, 4]).unwrap();
        assert_eq!(parity.color_of_subset(&idx).unwrap(), 1);
    }

    #[test]
    fn generator_examples() {
        let c = Coloring::generate(&ColoringKind::Constant(0), 4, 2, 2).unwrap();
        assert_eq!(c.colors(), &[0, 0, 0, 0, 0, 0]);
        assert_eq!(parity4().colors(), &[1, 0, 1, 1, 0, 1]);
        let a = Coloring::generate(&ColoringKind::Random { seed: 42 }, 8, 3, 3).unwrap();
        let b = Coloring::generate(&ColoringKind::Random { seed: 42 }, 8, 3, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.colors().iter().all(|&c| c < 3));
        let other = Coloring::generate(&ColoringKind::Random { seed: 43 }, 8, 3, 3).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn generator_rejects_bad_parameters() {
        assert!(Coloring::generate(&ColoringKind::Constant(2), 4, 2, 2).is_err());
        assert!(Coloring::generate(&ColoringKind::Parity, 4, 5, 2).is_err());
        assert!(Coloring::generate(&ColoringKind::Parity, 4, 0, 2).is_err());
        assert!(Coloring::generate(&ColoringKind::Parity, 4, 2, 1).is_err());
        assert!(Coloring::generate(&ColoringKind::Explicit(vec![0, 1]), 3, 2, 2).is_err());
        assert!(Coloring::generate(&ColoringKind::Explicit(vec![0, 1, 2]), 3, 2, 2).is_err());
        assert!(Coloring::new(3, 2, 0, vec![0, 0, 0]).is_err());
    }

    #[test]
    fn truncation() {
        let oracle = ParityOracle { tuple_size: 2 };
        assert_eq!(truncate(&oracle, 4).unwrap(), parity4());
        let single = truncate(&oracle, 2).unwrap();
        assert_eq!(single.colors().len(), 1);
        let random = RandomOracle { tuple_size: 3, num_colors: 3, seed: 7 };
        let five = truncate(&random, 5).unwrap();
        assert_eq!(five.restrict(4).unwrap(), truncate(&random, 4).unwrap());
        assert!(truncate(&oracle, 1).is_err());
    }

    #[test]
    fn failing_oracle_propagates() {
        struct Broken;
        impl ColoringOracle for Broken {
            fn tuple_size(&self) -> usize {
                2
            }
            fn num_colors(&self) -> u32 {
                2
            }
            fn color(&self, s: &[usize]) -> Result<Color> {
                if s == [1, 2] {
                    Err(Error::Oracle("unavailable".into()))
                } else {
                    Ok(0)
                }
            }
        }
        assert!(truncate(&Broken, 2).is_ok());
        assert_eq!(truncate(&Broken, 3), Err(Error::Oracle("unavailable".into())));
        let out_of_range = FnOracle { tuple_size: 2, num_colors: 2, f: |_: &[usize]| 5 };
        assert!(matches!(truncate(&out_of_range, 3), Err(Error::Oracle(_))));
    }

    #[test]
    fn colex_prefix_is_restriction() {
        for seed in 0..20 {
            let big = Coloring::generate(&ColoringKind::Random { seed }, 9, 3, 2).unwrap();
            let small = big.restrict(8).unwrap();
            assert_eq!(small.colors(), &big.colors()[..subset_count(8, 3).unwrap()]);
            for s in colex_subsets(8, 3) {
                assert_eq!(small.color_of(&s).unwrap(), big.color_of(&s).unwrap());
            }
        }
    }
}
