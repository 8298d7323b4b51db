//! Exact p(k, r, n) for small cells, next to the counting bound.
//!
//! cargo run --release --example p_numbers

use hiker::coloring::write_krt;
use hiker::pnumbers::{exact_p, theorem9_bound, verify_bound_grid, SearchOptions, Variant};

fn main() -> hiker::Result<()> {
    let opts = SearchOptions::default();
    let report = exact_p(3, 1, 3, Variant::Sequence, &opts)?;
    println!(
        "p(3,1,3) = {} (bound {}), {} colorings at N={}",
        report.value,
        theorem9_bound(3, 1, 3)?,
        report.colorings_checked,
        report.value
    );
    if let Some(cx) = &report.counterexample {
        print!("witness-free coloring at N={}:\n{}", cx.ground_size(), write_krt(cx));
    }

    let cells = [(3, 1, 2), (3, 1, 3), (4, 2, 2), (2, 0, 3), (4, 0, 3), (4, 1, 2)];
    for variant in [Variant::Track, Variant::Sequence] {
        for row in verify_bound_grid(&cells, variant, &opts) {
            println!("{}", row.to_json(true));
        }
    }
    Ok(())
}
