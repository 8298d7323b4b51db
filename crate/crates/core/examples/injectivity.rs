//! Distinct destinations always produce distinct hiker's maps, and for every
//! domain size d there are at most r^C(d, n) of them. Check both on a batch of
//! random colorings.
//!
//! cargo run --example injectivity

use hiker::track::{check_injectivity, count_distinct_maps, map_count_bound, Injectivity};
use hiker::{Coloring, ColoringKind};
use num_bigint::BigUint;

fn main() -> hiker::Result<()> {
    let mut checked = 0;
    for seed in 0..500 {
        let t = 2 + (seed % 2) as usize;
        let c = Coloring::generate(&ColoringKind::Random { seed }, 10, t, 2)?;
        if let Injectivity::Collision { first, second } = check_injectivity(&c) {
            println!("seed {seed}: destinations {first} and {second} share a hiker's map");
            std::process::exit(1);
        }
        for d in 0..=c.ground_size() {
            assert!(BigUint::from(count_distinct_maps(&c, d)) <= map_count_bound(2, d, t - 1));
        }
        checked += 1;
    }
    println!("{checked} colorings: hiker's maps pairwise distinct, counts within r^C(d,n)");

    let c = Coloring::generate(&ColoringKind::Random { seed: 5 }, 10, 2, 2)?;
    for d in 0..6 {
        println!("  δ={d}: {} distinct maps (at most {})", count_distinct_maps(&c, d), map_count_bound(2, d, 1));
    }
    Ok(())
}
