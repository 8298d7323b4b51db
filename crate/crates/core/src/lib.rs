//! Hiker's tracks and end-homogeneous sequences for finite colorings.
//!
//! A coloring assigns one of `r` colors to every `t`-element subset of the
//! ground set `{0, …, N-1}`. For such a coloring this crate builds the greedy
//! hiker's track toward any destination point, derives the induced hiker's
//! map, searches for end-homogeneous sequences and monochromatic sets, and
//! computes the exact partition numbers `p(k, r, n)` by exhaustive
//! enumeration of every coloring of a ground set.
//!
//! Module map:
//!
//! * [`combinatorics`]: exact binomials and colex ranking of subsets.
//! * [`coloring`]: dense colorings, generators, oracles and the KRT text format.
//! * [`track`]: hiker's tracks, hiker's maps, injectivity and map counting.
//! * [`homogeneity`]: witness checking and extraction, and the track trie.
//! * [`pnumbers`]: statement checking, exact `p(k, r, n)` and the counting bound.
//! * [`cli`]: the JSON command-line surface used by the `hiker` binary.

pub mod cli;
pub mod coloring;
pub mod combinatorics;
mod error;
pub mod homogeneity;
pub mod pnumbers;
pub mod track;

pub use coloring::{Color, Coloring, ColoringKind, ColoringOracle};
pub use combinatorics::SubsetIndex;
pub use error::{Error, Result};
pub use homogeneity::{MonochromaticWitness, WitnessSequence};
pub use pnumbers::{PNumberReport, SearchOptions, StatementSpec, Variant};
pub use track::{HikerMap, Track};
