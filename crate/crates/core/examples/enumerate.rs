//! Count every commutative unital quantale up to isomorphism by size.
//!
//!     cargo run --release --example enumerate [-- max_size]

use latkit::enumerate::enumerate_lattices;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let all = enumerate_lattices(max)?;
    for n in 1..=max {
        let of_size: Vec<_> = all.iter().filter(|l| l.len() == n).collect();
        let frames = of_size.iter().filter(|l| (0..n).all(|x| (0..n).all(|y| l.mul(x, y) == l.meet(x, y)))).count();
        println!("size {n}: {} quantales, {frames} with product = meet", of_size.len());
    }
    println!("total {}", all.len());
    Ok(())
}
