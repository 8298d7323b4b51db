//! Extract monochromatic sets by reducing arity along longest tracks, down to
//! the pigeonhole principle.
//!
//! cargo run --example ramsey_extraction

use hiker::homogeneity::{extract_monochromatic, is_monochromatic, pigeonhole_extract};
use hiker::{Coloring, ColoringKind};

fn main() -> hiker::Result<()> {
    let (color, members) = pigeonhole_extract(&[2, 0, 1, 2, 2, 0], 3)?;
    println!("pigeonhole: color {color} at {members:?}");

    let parity = Coloring::generate(&ColoringKind::Parity, 6, 2, 2)?;
    let w = extract_monochromatic(&parity)?;
    println!("parity pairs on 6 points: color {} on {:?}", w.color, w.members);

    for (ground, t) in [(12, 2), (12, 3), (10, 4)] {
        let c = Coloring::generate(&ColoringKind::Random { seed: 99 }, ground, t, 2)?;
        let w = extract_monochromatic(&c)?;
        println!(
            "random {t}-sets on {ground} points: color {} on {:?} ({:?})",
            w.color,
            w.members,
            is_monochromatic(&c, &w.members)?
        );
    }
    Ok(())
}
