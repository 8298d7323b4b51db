//! Write colorings in the KRT text format and read them back.
//!
//! cargo run --example krt_files

use hiker::coloring::{parse_krt, write_krt};
use hiker::{Coloring, ColoringKind};

fn main() -> hiker::Result<()> {
    let c = Coloring::generate(&ColoringKind::Parity, 5, 2, 2)?;
    let text = write_krt(&c);
    print!("{text}");
    assert_eq!(parse_krt(&text)?, c);

    let commented = "# hand-written\nkrt 1 N=3 t=2 r=2\n0 1 0\n";
    let c = parse_krt(commented)?;
    println!("color of {{0,2}}: {}", c.color_of(&[0, 2])?);

    match parse_krt("krt 1 N=3 t=2 r=2\n0 1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
