//! Write a lattice in `.lat` form, read it back, and show a positioned
//! parse error.
//!
//!     cargo run --example latfile_roundtrip

use latkit::builders::{chain, divisor_quantale, ChainKind};
use latkit::enumerate::is_isomorphic;
use latkit::latfile::{parse_latfile, serialize_latfile, LatFile};
use latkit::{classify, ElementClass};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = divisor_quantale(12);
    let file = LatFile::from_lattice(&l).with_sigma("maximal", classify(&l, &ElementClass::Max));
    let text = serialize_latfile(&file);
    print!("{text}");

    let back = parse_latfile(&text)?;
    assert_eq!(back, file);
    assert!(is_isomorphic(&back.to_lattice()?, &l));
    println!("# round trip ok");

    let c3 = serialize_latfile(&LatFile::from_lattice(&chain(3, ChainKind::Meet)));
    let damaged = c3.replacen("MUL", "MUL\n0 0", 1);
    match parse_latfile(&damaged) {
        Ok(_) => println!("# damaged file accepted?"),
        Err(e) => println!("# damaged file rejected at {:?}: {e}", e.position()),
    }
    Ok(())
}
