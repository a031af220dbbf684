//! The projection Z/12 → Z/4 on ideals, `(d) ↦ (gcd(d, 4))`: kernel,
//! contraction and the induced map between prime spectra.
//!
//!     cargo run --example homomorphism

use latkit::builders::divisor_quantale;
use latkit::hom::divisor_projection;
use latkit::ElementClass;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (d12, d4) = (divisor_quantale(12), divisor_quantale(4));
    let h = divisor_projection(&d12, &d4)?;

    for x in 0..d12.len() {
        println!("({}) -> ({})", d12.name(x), d4.name(h.apply(x)));
    }
    for y in 0..d4.len() {
        println!("contraction(({})) = ({})", d4.name(y), d12.name(h.contraction(y)));
    }
    println!("kernel fiber {}  kernel element ({})", d12.format_set(h.kernel_set()), d12.name(h.kernel_element()));

    let spec = ElementClass::Spec;
    println!("contraction property: {}", h.has_contraction_property(&spec));
    for (y, x) in h.induced_map(&spec)? {
        println!("induced: ({}) -> ({})", d4.name(y), d12.name(x));
    }
    println!("continuity: {}", h.check_continuity(&spec)?);
    println!("embedding:  {}", h.check_embedding(&spec)?);
    println!("density:    {}", h.check_density(&spec)?);

    // a table that is not a homomorphism
    let broken = vec![d4.top(); d12.len()];
    match latkit::LatticeHom::validate(&d12, &d4, broken) {
        Ok(_) => println!("constant map accepted?"),
        Err(e) => println!("constant top map rejected: {e}"),
    }
    Ok(())
}
