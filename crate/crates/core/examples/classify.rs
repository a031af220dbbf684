//! Element classes and radicals of the ideal lattice of Z/12.
//!
//!     cargo run --example classify [-- n]

use latkit::builders::divisor_quantale;
use latkit::classes::{classify, jacobson, p_radical, radical_of, s_radical, ElementClass};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(12), |s| s.parse())?;
    let l = divisor_quantale(n);
    println!("ideals of Z/{n}: {}", l.format_set(l.carrier()));

    use ElementClass::*;
    for class in [Prop, Spec, MinPrime, Max, Irr, IrrStrong, IrrComplete, Rad, Prim, Nil, Idem] {
        println!("{:>10}: {}", class.token(), l.format_set(classify(&l, &class)));
    }

    println!("jacobson   = ({})", l.name(jacobson(&l)));
    println!("p-radical  = ({})", l.name(p_radical(&l)));
    println!("s-radical  = ({})", l.name(s_radical(&l)));
    for x in 0..l.len() {
        println!("sqrt(({})) = ({})", l.name(x), l.name(radical_of(&l, x)?));
    }
    Ok(())
}
