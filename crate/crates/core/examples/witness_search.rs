//! Compare the greedy track with exhaustive search for end-homogeneous
//! sequences.
//!
//! cargo run --example witness_search

use hiker::homogeneity::{find_end_homogeneous, is_end_homogeneous, longest_track_sequence, EndHomogeneity};
use hiker::{Coloring, ColoringKind};

fn main() -> hiker::Result<()> {
    let c = Coloring::generate(&ColoringKind::Random { seed: 2024 }, 10, 2, 2)?;
    let track = longest_track_sequence(&c);
    println!("longest track: {:?}", track.points);

    let mut k = 1;
    while let Some(w) = find_end_homogeneous(&c, k) {
        println!("length {k}: {:?}", w.points);
        k += 1;
    }
    println!("no end-homogeneous sequence of length {k}");

    let parity = Coloring::generate(&ColoringKind::Parity, 5, 2, 2)?;
    match is_end_homogeneous(&parity, &[0, 1, 2])? {
        EndHomogeneity::Homogeneous => println!("[0,1,2] is end-homogeneous"),
        EndHomogeneity::Violation { indices } => println!("[0,1,2] fails at index tuple {indices:?}"),
    }
    Ok(())
}
