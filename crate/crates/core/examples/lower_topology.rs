//! Lower spaces on a lattice: closed sets, separation, sobriety and
//! spectrality for every standard class.
//!
//!     cargo run --example lower_topology [-- n]

use latkit::builders::divisor_quantale;
use latkit::classes::SWEEP_CLASSES;
use latkit::{ElementSet, LowerSpace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(12), |s| s.parse())?;
    let l = divisor_quantale(n);

    for class in &SWEEP_CLASSES {
        let s = LowerSpace::for_class(&l, class);
        let closed = s.closed_sets()?;
        println!("== {class}: points {}", l.format_set(s.sigma()));
        let shown: Vec<String> = closed.iter().map(|c| l.format_set(*c)).collect();
        println!("   closed sets ({}): {}", closed.len(), shown.join(" "));
        for x in s.sigma().iter() {
            println!("   cl(({})) = {}", l.name(x), l.format_set(s.closure(ElementSet::singleton(x))?));
        }
        println!("   topology: {}", s.forms_closed_topology().status);
        println!("   T0 {}  T1 {}", s.is_t0()?.status, s.is_t1()?.status);
        println!("   sober {}  spectral {}", s.is_sober()?.status, s.is_spectral()?.status);
        println!("   compact {}  connected {}", s.is_compact_space().status, s.is_connected()?.status);
    }
    Ok(())
}
