//! Sweep every theorem over a corpus and print the tallies.
//!
//!     cargo run --release --example theorem_sweep -- [corpus] [THEOREM [reading]]
//!
//! With a theorem (and optionally a reading name) every counterexample in
//! the corpus is listed, not just the few kept in the report.

use latkit::classes::{ElementClass, SWEEP_CLASSES};
use latkit::harness::{check, check_hom, run_corpus, CorpusItem, CorpusSpec, TheoremId};
use latkit::LatticeHom;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let spec: CorpusSpec = args.first().map_or("default", String::as_str).parse()?;
    let report = run_corpus(&spec, &TheoremId::ALL)?;
    for line in report.serialize().lines().take_while(|l| !l.is_empty()) {
        println!("{line}");
    }

    let Some(id) = args.get(1) else { return Ok(()) };
    let id: TheoremId = id.parse()?;
    let reading = args.get(2).map(String::as_str);
    println!("\ncounterexamples for {id} {}", reading.unwrap_or("main"));
    for item in spec.items()? {
        let classes: Vec<ElementClass> = if id.uses_sigma() {
            SWEEP_CLASSES.to_vec()
        } else {
            vec![ElementClass::Prop]
        };
        for class in &classes {
            let out = match &item {
                CorpusItem::Lattice { lattice, .. } if !id.is_hom() => check(lattice, class, id)?,
                CorpusItem::Lattice { lattice, .. } => check_hom(&LatticeHom::identity(lattice), class, id)?,
                CorpusItem::Hom { source, target, map, .. } if id.is_hom() => {
                    check_hom(&LatticeHom::validate(source, target, map.clone())?, class, id)?
                }
                CorpusItem::Hom { .. } => continue,
            };
            let v = match reading {
                None => out.verdict,
                Some(r) => match out.readings.into_iter().find(|x| x.name == r) {
                    Some(x) => x.verdict,
                    None => continue,
                },
            };
            if v.is_counterexample() {
                println!("  {} sigma={class}: {v}", item.label());
            }
        }
    }
    Ok(())
}
