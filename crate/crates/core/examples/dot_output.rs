//! Graphviz output for a Hasse diagram and for the prime spectrum.
//!
//!     cargo run --example dot_output | dot -Tsvg > d12.svg

use latkit::builders::divisor_quantale;
use latkit::dot::{lattice_dot, space_dot};
use latkit::{ElementClass, LowerSpace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = divisor_quantale(12);
    print!("{}", lattice_dot(&l));
    print!("{}", space_dot(&LowerSpace::for_class(&l, &ElementClass::Irr))?);
    Ok(())
}
