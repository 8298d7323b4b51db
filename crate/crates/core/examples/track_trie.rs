//! Grow the prefix trie of hiker's tracks for an infinite coloring truncated
//! at larger and larger ground sets. The depth never decreases.
//!
//! cargo run --example track_trie

use hiker::coloring::{truncate, ParityOracle, RandomOracle};
use hiker::homogeneity::build_track_trie;

fn main() -> hiker::Result<()> {
    let parity = ParityOracle { tuple_size: 2 };
    let random = RandomOracle { tuple_size: 2, num_colors: 2, seed: 7 };
    for ground in (4..=20).step_by(4) {
        let p = build_track_trie(&truncate(&parity, ground)?).stats();
        let r = build_track_trie(&truncate(&random, ground)?).stats();
        println!(
            "N={ground:2}  parity depth {:2} ({} nodes)   random depth {:2}  maps per level {:?}",
            p.depth, p.node_count, r.depth, r.distinct_maps_per_level
        );
    }

    let trie = build_track_trie(&truncate(&parity, 6)?);
    for node in trie.nodes() {
        println!("  point {} at depth {} (parent {:?})", node.point, node.depth, node.parent.map(|i| trie.nodes()[i].point));
    }
    Ok(())
}
