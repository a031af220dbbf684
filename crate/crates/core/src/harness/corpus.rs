use std::fmt;
use std::str::FromStr;

use crate::builders::{chain, divisor_quantale, powerset_frame, product, ChainKind};
use crate::classes::{ElementClass, SWEEP_CLASSES};
use crate::enumerate::{enumerate_lattices, DEFAULT_MAX_SIZE};
use crate::error::{HarnessError, LatticeError};
use crate::lattice::MultLattice;

// every n up to this bound has at most 128 divisors
const MAX_DIVISOR: u64 = 50_000;
const MAX_POWERSET: u32 = 7;
const MAX_CHAIN: usize = 128;

/// One unit of work: a lattice with the classes to sweep, or a
/// homomorphism given by its table.
#[derive(Clone, Debug)]
pub enum CorpusItem {
    Lattice { label: String, lattice: MultLattice, classes: Vec<ElementClass> },
    Hom { label: String, source: MultLattice, target: MultLattice, map: Vec<usize> },
}

impl CorpusItem {
    pub fn lattice(label: impl Into<String>, lattice: MultLattice) -> Self {
        CorpusItem::Lattice { label: label.into(), lattice, classes: SWEEP_CLASSES.to_vec() }
    }

    pub fn label(&self) -> &str {
        match self {
            CorpusItem::Lattice { label, .. } | CorpusItem::Hom { label, .. } => label,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    Divisor(u64, u64),
    Powerset(u32, u32),
    Chain(Option<ChainKind>, usize, usize),
    Products,
    Enumerate(usize),
    Homs(u64),
}

/// A corpus description: `default`, `empty`, or a comma-separated list of
///
/// * `divisor:A..B` (or `divisor:N`): divisor quantales of `Z/n`;
/// * `powerset:A..B`: Boolean frames on `k` generators;
/// * `chain:A..B`, `chain-meet:A..B`, `chain-luk:A..B`: chains with `·` the
///   meet, the Łukasiewicz product, or both;
/// * `products`: pairwise products of seven small lattices;
/// * `enumerate:N`: every quantale with at most `N` elements;
/// * `homs:M`: the surjections `D_m → D_n`, `(d) ↦ (gcd(d, n))`, for
///   `n | m ≤ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    descriptor: String,
    parts: Vec<Part>,
}

pub const DEFAULT_CORPUS: &str = "divisor:1..60,powerset:0..3,chain:1..8,products,enumerate:5,homs:60";

impl CorpusSpec {
    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Builds every item, in a fixed order.
    pub fn items(&self) -> Result<Vec<CorpusItem>, HarnessError> {
        let mut out = Vec::new();
        for part in &self.parts {
            match *part {
                Part::Divisor(a, b) => {
                    for n in a..=b {
                        out.push(CorpusItem::lattice(format!("divisor({n})"), divisor_quantale(n)));
                    }
                }
                Part::Powerset(a, b) => {
                    for k in a..=b {
                        out.push(CorpusItem::lattice(format!("powerset({k})"), powerset_frame(k)));
                    }
                }
                Part::Chain(kind, a, b) => {
                    for n in a..=b {
                        for k in [ChainKind::Meet, ChainKind::Lukasiewicz] {
                            if kind.is_none() || kind == Some(k) {
                                out.push(CorpusItem::lattice(format!("{}({n})", chain_name(k)), chain(n, k)));
                            }
                        }
                    }
                }
                Part::Products => {
                    let small = small_lattices();
                    for i in 0..small.len() {
                        for j in i..small.len() {
                            let label = format!("product({},{})", small[i].0, small[j].0);
                            out.push(CorpusItem::lattice(label, product(&small[i].1, &small[j].1)));
                        }
                    }
                }
                Part::Enumerate(max) => {
                    for (k, l) in enumerate_lattices(max)?.into_iter().enumerate() {
                        out.push(CorpusItem::lattice(format!("enumerate({max})#{k}"), l));
                    }
                }
                Part::Homs(max) => {
                    for m in 1..=max {
                        let source = divisor_quantale(m);
                        for n in (1..=m).filter(|n| m % n == 0) {
                            let target = divisor_quantale(n);
                            let map = crate::hom::divisor_projection(&source, &target)?.map().to_vec();
                            out.push(CorpusItem::Hom {
                                label: format!("gcd({m}->{n})"),
                                source: source.clone(),
                                target,
                                map,
                            });
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

fn chain_name(k: ChainKind) -> &'static str {
    match k {
        ChainKind::Meet => "chain-meet",
        ChainKind::Lukasiewicz => "chain-luk",
    }
}

/// The factors used by `products`.
pub fn small_lattices() -> Vec<(&'static str, MultLattice)> {
    vec![
        ("D2", divisor_quantale(2)),
        ("D4", divisor_quantale(4)),
        ("D6", divisor_quantale(6)),
        ("C2", chain(2, ChainKind::Meet)),
        ("C3m", chain(3, ChainKind::Meet)),
        ("C3l", chain(3, ChainKind::Lukasiewicz)),
        ("B2", powerset_frame(2)),
    ]
}

fn bad(s: &str) -> HarnessError {
    HarnessError::BadCorpus(s.to_string())
}

fn exceeded(requested: u64, limit: u64) -> HarnessError {
    HarnessError::Lattice(LatticeError::BoundExceeded { requested: requested as usize, limit: limit as usize })
}

fn range(arg: &str, item: &str) -> Result<(u64, u64), HarnessError> {
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad(item));
    let (a, b) = match arg.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let v = num(arg)?;
            (v, v)
        }
    };
    if a > b {
        return Err(bad(item));
    }
    Ok((a, b))
}

impl FromStr for CorpusSpec {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        let s = s.trim();
        let expanded = match s {
            "default" => DEFAULT_CORPUS,
            "empty" | "" => "",
            other => other,
        };
        let mut parts = Vec::new();
        for item in expanded.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (name, arg) = item.split_once(':').unwrap_or((item, ""));
            let part = match name {
                "divisor" => {
                    let (a, b) = range(arg, item)?;
                    if a == 0 {
                        return Err(bad(item));
                    }
                    if b > MAX_DIVISOR {
                        return Err(exceeded(b, MAX_DIVISOR));
                    }
                    Part::Divisor(a, b)
                }
                "powerset" => {
                    let (a, b) = range(arg, item)?;
                    if b > MAX_POWERSET as u64 {
                        return Err(exceeded(b, MAX_POWERSET as u64));
                    }
                    Part::Powerset(a as u32, b as u32)
                }
                "chain" | "chain-meet" | "chain-luk" => {
                    let (a, b) = range(arg, item)?;
                    if a == 0 {
                        return Err(bad(item));
                    }
                    if b > MAX_CHAIN as u64 {
                        return Err(exceeded(b, MAX_CHAIN as u64));
                    }
                    let kind = match name {
                        "chain-meet" => Some(ChainKind::Meet),
                        "chain-luk" => Some(ChainKind::Lukasiewicz),
                        _ => None,
                    };
                    Part::Chain(kind, a as usize, b as usize)
                }
                "products" if arg.is_empty() => Part::Products,
                "enumerate" => {
                    let (a, b) = range(arg, item)?;
                    if a != b {
                        return Err(bad(item));
                    }
                    if b > DEFAULT_MAX_SIZE as u64 {
                        return Err(exceeded(b, DEFAULT_MAX_SIZE as u64));
                    }
                    Part::Enumerate(b as usize)
                }
                "homs" => {
                    let (a, b) = range(arg, item)?;
                    if a != b {
                        return Err(bad(item));
                    }
                    if b > MAX_DIVISOR {
                        return Err(exceeded(b, MAX_DIVISOR));
                    }
                    Part::Homs(b)
                }
                _ => return Err(bad(item)),
            };
            parts.push(part);
        }
        Ok(CorpusSpec { descriptor: s.to_string(), parts })
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor)
    }
}
