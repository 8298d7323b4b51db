//! Build the hiker's track toward every point of a parity coloring and print
//! the induced hiker's maps.
//!
//! cargo run --example track_and_map

use hiker::track::{build_track, hiker_map};
use hiker::{Coloring, ColoringKind};

fn main() -> hiker::Result<()> {
    // color of {a, b} is (a + b) mod 2
    let c = Coloring::generate(&ColoringKind::Parity, 8, 2, 2)?;
    println!("parity coloring of pairs on 8 points");
    for x in 0..c.ground_size() {
        let tr = build_track(&c, x)?;
        let map = hiker_map(&c, &tr)?;
        println!("  x={x}  track={:?}  δ={}  f_x={:?}", tr.points(), tr.delta(), map.entries);
    }

    let triples = Coloring::generate(&ColoringKind::Random { seed: 11 }, 9, 3, 2)?;
    let tr = build_track(&triples, 8)?;
    println!("random coloring of triples, track to 8: {:?}", tr.points());
    println!("hiker's map on pairs of track indices: {:?}", hiker_map(&triples, &tr)?.entries);
    Ok(())
}
