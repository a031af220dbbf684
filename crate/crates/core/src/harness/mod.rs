//! Every result as an executable predicate, and sweeps over a corpus.
//!
//! [`check`] evaluates one theorem on one lattice and class. Hypotheses are
//! decided first (including those that are automatic for finite lattices);
//! when they fail the verdict is `HypothesisNotMet`. Some theorems carry
//! alternative readings, reported next to the main verdict but never
//! affecting exit status.

mod corpus;
mod report;

use std::fmt;
use std::str::FromStr;

use crate::classes::{classify, jacobson, ElementClass};
use crate::element_set::ElementSet;
use crate::error::HarnessError;
use crate::hom::{LatticeHom, SubspaceDensity};
use crate::lattice::MultLattice;
use crate::topology::LowerSpace;
use crate::verdict::{Status, Verdict, Witness};

pub use corpus::{CorpusItem, CorpusSpec};
pub use report::{run_corpus, run_items, Payload, Report, Subject, Tally, PAYLOAD_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Bip1,
    Bip2,
    Bip3,
    Bip4,
    Hkt,
    Hrrad,
    Hrx1,
    Hrx2,
    Hrx3,
    Hrx4,
    Hrx5,
    Lfc,
    Csb,
    Cqc,
    T0a,
    Irrc,
    Spiir,
    ZariskiT1,
    Sob,
    Qss,
    Tsqs,
    Pr1,
    Conn,
    Conmap1,
    Conmap2,
    Conmap3,
    DensityMax,
    DensitySpec,
}

impl TheoremId {
    pub const ALL: [TheoremId; 28] = [
        TheoremId::Bip1,
        TheoremId::Bip2,
        TheoremId::Bip3,
        TheoremId::Bip4,
        TheoremId::Hkt,
        TheoremId::Hrrad,
        TheoremId::Hrx1,
        TheoremId::Hrx2,
        TheoremId::Hrx3,
        TheoremId::Hrx4,
        TheoremId::Hrx5,
        TheoremId::Lfc,
        TheoremId::Csb,
        TheoremId::Cqc,
        TheoremId::T0a,
        TheoremId::Irrc,
        TheoremId::Spiir,
        TheoremId::ZariskiT1,
        TheoremId::Sob,
        TheoremId::Qss,
        TheoremId::Tsqs,
        TheoremId::Pr1,
        TheoremId::Conn,
        TheoremId::Conmap1,
        TheoremId::Conmap2,
        TheoremId::Conmap3,
        TheoremId::DensityMax,
        TheoremId::DensitySpec,
    ];

    pub fn tag(self) -> &'static str {
        use TheoremId::*;
        match self {
            Bip1 => "BIP1",
            Bip2 => "BIP2",
            Bip3 => "BIP3",
            Bip4 => "BIP4",
            Hkt => "HKT",
            Hrrad => "HRRAD",
            Hrx1 => "HRX1",
            Hrx2 => "HRX2",
            Hrx3 => "HRX3",
            Hrx4 => "HRX4",
            Hrx5 => "HRX5",
            Lfc => "LFC",
            Csb => "CSB",
            Cqc => "CQC",
            T0a => "T0A",
            Irrc => "IRRC",
            Spiir => "SPIIR",
            ZariskiT1 => "ZARISKI_T1",
            Sob => "SOB",
            Qss => "QSS",
            Tsqs => "TSQS",
            Pr1 => "PR1",
            Conn => "CONN",
            Conmap1 => "CONMAP1",
            Conmap2 => "CONMAP2",
            Conmap3 => "CONMAP3",
            DensityMax => "DENSITY_MAX",
            DensitySpec => "DENSITY_SPEC",
        }
    }

    /// Theorems whose main verdict is one of several readings; their
    /// counterexamples are reported but do not fail a run.
    pub fn is_tracked(self) -> bool {
        matches!(self, TheoremId::ZariskiT1 | TheoremId::Hrrad | TheoremId::DensityMax | TheoremId::DensitySpec)
    }

    /// Whether the class argument matters; the others fix their own spaces.
    pub fn uses_sigma(self) -> bool {
        use TheoremId::*;
        !matches!(self, Bip1 | Bip2 | Bip3 | Bip4 | Spiir | Qss | Tsqs | DensityMax | DensitySpec)
    }

    /// Statements about a homomorphism rather than a single lattice.
    pub fn is_hom(self) -> bool {
        matches!(self, TheoremId::Conmap1 | TheoremId::Conmap2 | TheoremId::Conmap3)
    }

    /// Parses `all` or a comma-separated list of tags.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>, HarnessError> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(TheoremId::ALL.to_vec());
        }
        let mut ids: Vec<TheoremId> = s.split(',').map(|t| t.trim().parse()).collect::<Result<_, _>>()?;
        ids.sort();
        ids.dedup();
        Ok(ids)
    }
}

impl FromStr for TheoremId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| HarnessError::UnknownTheorem(s.to_string()))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A named alternative reading of a theorem and its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reading {
    pub name: &'static str,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub readings: Vec<Reading>,
}

impl Outcome {
    fn main(verdict: Verdict) -> Self {
        Outcome { verdict, readings: Vec::new() }
    }

    fn with(mut self, name: &'static str, verdict: Verdict) -> Self {
        self.readings.push(Reading { name, verdict });
        self
    }

    /// Name of the main reading, for theorems that have alternatives.
    pub fn main_reading(id: TheoremId) -> Option<&'static str> {
        match id {
            TheoremId::Hrrad => Some("subset"),
            TheoremId::Hrx5 => Some("spec-in-sigma"),
            TheoremId::Lfc => Some("proper-sigma"),
            TheoremId::ZariskiT1 => Some("subset-max"),
            TheoremId::DensityMax | TheoremId::DensitySpec => Some("paired-by-proof"),
            _ => None,
        }
    }
}

/// Verdict for "`a` iff `b`" with both truth values in the note.
fn biconditional(a: (&str, bool), b: (&str, bool)) -> Verdict {
    let w = Witness::note(format!("{}={} {}={}", a.0, a.1, b.0, b.1));
    if a.1 == b.1 {
        Verdict::holds_with(w)
    } else {
        Verdict::counterexample(w)
    }
}

fn first_violation<I>(cases: I, note: &str) -> Verdict
where
    I: IntoIterator<Item = (bool, Vec<usize>)>,
{
    for (ok, w) in cases {
        if !ok {
            return Verdict::counterexample(Witness::elements(w, note));
        }
    }
    Verdict::holds()
}

/// Compact generation, compactness of the top and max-boundedness, each
/// decided from the definitions. Returns the first that fails.
fn finiteness_hypotheses(l: &MultLattice, need_max_bounded: bool) -> Option<&'static str> {
    if !l.is_compactly_generated() {
        return Some("not compactly generated");
    }
    if !classify(l, &ElementClass::CompactElems).contains(l.top()) {
        return Some("top is not compact");
    }
    if need_max_bounded && !l.is_max_bounded() {
        return Some("not max-bounded");
    }
    None
}

/// Evaluates theorem `id` on `l` with `Σ` given by `class`. Homomorphism
/// statements are evaluated on the identity of `l`.
pub fn check(l: &MultLattice, class: &ElementClass, id: TheoremId) -> Result<Outcome, HarnessError> {
    use TheoremId::*;
    if id.is_hom() {
        return check_hom(&LatticeHom::identity(l), class, id);
    }
    let n = l.len();
    let s = LowerSpace::for_class(l, class);
    let sigma = s.sigma();
    let max = classify(l, &ElementClass::Max);
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));

    let out = match id {
        Bip1 => Outcome::main(first_violation(
            pairs().map(|(x, y)| (l.leq(l.mul(x, y), l.meet(x, y)), vec![x, y])),
            "x·y is not below x ∧ y",
        )),
        Bip2 => Outcome::main(first_violation((0..n).map(|x| (l.mul(x, l.bot()) == l.bot(), vec![x])), "x·0 ≠ 0")),
        Bip3 => Outcome::main(first_violation(
            pairs().flat_map(|(x, y)| (0..n).map(move |z| (x, y, z))).map(|(x, y, z)| {
                (!l.leq(x, y) || l.leq(l.mul(x, z), l.mul(y, z)), vec![x, y, z])
            }),
            "x ≤ y but x·z is not below y·z",
        )),
        Bip4 => Outcome::main(first_violation(
            pairs()
                .filter(|&(x, y)| l.leq(x, y))
                .flat_map(|(x, y)| pairs().map(move |(u, v)| (x, y, u, v)))
                .map(|(x, y, u, v)| (!l.leq(u, v) || l.leq(l.mul(x, u), l.mul(y, v)), vec![x, y, u, v])),
            "x ≤ y and u ≤ v but x·u is not below y·v",
        )),
        Hkt => {
            let top = s.forms_closed_topology();
            let hkp = s.hkp_property();
            let mut v = biconditional(("topology", top.is_holds()), ("hkp", hkp.is_holds()));
            if v.is_counterexample() {
                let inner = if top.is_counterexample() { top } else { hkp };
                let w = v.witness.as_mut().unwrap();
                if let Some(iw) = inner.witness {
                    w.elements = iw.elements;
                    w.sets = iw.sets;
                }
            }
            Outcome::main(v)
        }
        Hrrad => Outcome::main(s.check_v_radical()).with("equality", s.check_v_radical_equality()),
        Hrx1 => Outcome::main(s.check_hrx(1)),
        Hrx2 => Outcome::main(s.check_hrx(2)),
        Hrx3 => Outcome::main(s.check_hrx(3)),
        Hrx4 => Outcome::main(s.check_hrx(4)),
        Hrx5 => {
            let literal = s.check_hrx(5);
            let main = if literal.status == Status::HypothesisNotMet {
                literal.clone()
            } else if !classify(l, &ElementClass::Spec).is_subset(sigma) {
                Verdict::hypothesis_not_met("some prime lies outside sigma")
            } else {
                literal.clone()
            };
            Outcome::main(main).with("literal", literal)
        }
        Lfc => {
            let literal = s.check_lfc();
            let main = if sigma.contains(l.top()) {
                Verdict::hypothesis_not_met("sigma contains the top")
            } else {
                literal.clone()
            };
            Outcome::main(main).with("literal", literal)
        }
        Csb => Outcome::main(if let Some(why) = finiteness_hypotheses(l, true) {
            Verdict::hypothesis_not_met(why)
        } else if !max.is_subset(sigma) {
            Verdict::hypothesis_not_met("a maximal element lies outside sigma")
        } else {
            s.is_compact_space()
        }),
        Cqc => Outcome::main(if let Some(why) = finiteness_hypotheses(l, false) {
            Verdict::hypothesis_not_met(why)
        } else {
            let tops: ElementSet = sigma.iter().filter(|&x| !sigma.iter().any(|y| l.lt(x, y))).collect();
            let bounded = sigma.iter().all(|x| tops.iter().any(|m| l.leq(x, m)));
            let tops_compact = LowerSpace::new(l, tops).is_compact_space().is_holds();
            let mut v = biconditional(
                ("compact", s.is_compact_space().is_holds()),
                ("bounded-by-maximal-and-maximal-compact", bounded && tops_compact),
            );
            v.witness.as_mut().unwrap().sets = vec![tops];
            v
        }),
        T0a => Outcome::main(s.is_t0()?),
        Irrc => {
            let mut v = Verdict::holds();
            for x in sigma.iter() {
                let vx = s.v_set(x);
                let cl = s.closure(ElementSet::singleton(x))?;
                if !s.is_irreducible(vx)? || cl != vx {
                    v = Verdict::counterexample(
                        Witness::elements(vec![x], "v(x) is reducible or differs from the closure of x")
                            .with_sets(vec![vx, cl]),
                    );
                    break;
                }
            }
            Outcome::main(v)
        }
        Spiir => {
            let p = LowerSpace::for_class(l, &ElementClass::Prop);
            let mut v = Verdict::holds();
            for m in p.subbasis() {
                if !m.points.is_empty() && !p.is_irreducible(m.points)? {
                    v = Verdict::counterexample(
                        Witness::elements(vec![m.generators.first().unwrap()], "reducible subbasic set")
                            .with_sets(vec![m.points]),
                    );
                    break;
                }
            }
            Outcome::main(v)
        }
        ZariskiT1 => {
            if let Some(why) = finiteness_hypotheses(l, false) {
                let v = Verdict::hypothesis_not_met(why);
                Outcome::main(v.clone())
                    .with("literal", v.clone())
                    .with("literal-if", v.clone())
                    .with("conditioned", v.clone())
                    .with("antichain", v)
            } else {
                let t1 = s.is_t1()?;
                let is_t1 = t1.is_holds();
                let within = sigma.is_subset(max);
                let contains = max.is_subset(sigma);
                let attach = |mut v: Verdict| {
                    if let Some(w) = v.witness.as_mut() {
                        w.sets = vec![sigma, max];
                        if let Some(tw) = &t1.witness {
                            w.elements = tw.elements.clone();
                        }
                    }
                    v
                };
                let main = attach(biconditional(("t1", is_t1), ("sigma-in-max", within)));
                let literal = attach(biconditional(("t1", is_t1), ("max-in-sigma", contains)));
                let literal_if = attach(if contains && !is_t1 {
                    Verdict::counterexample(Witness::note("t1=false max-in-sigma=true"))
                } else {
                    Verdict::holds_with(Witness::note(format!("t1={is_t1} max-in-sigma={contains}")))
                });
                // the argument works with proper elements only
                let conditioned = if !contains {
                    Verdict::hypothesis_not_met("a maximal element lies outside sigma")
                } else if sigma.contains(l.top()) {
                    Verdict::hypothesis_not_met("sigma contains the top")
                } else {
                    attach(biconditional(("t1", is_t1), ("sigma-in-max", within)))
                };
                let antichain = !sigma.iter().any(|x| sigma.iter().any(|y| l.lt(x, y)));
                let by_order = attach(biconditional(("t1", is_t1), ("antichain", antichain)));
                Outcome::main(main)
                    .with("literal", literal)
                    .with("literal-if", literal_if)
                    .with("conditioned", conditioned)
                    .with("antichain", by_order)
            }
        }
        Sob => {
            let a = s.is_sober()?;
            let b = s.sober_criterion()?;
            let mut v = biconditional(("sober", a.is_holds()), ("criterion", b.is_holds()));
            if v.is_counterexample() {
                let inner = if a.is_counterexample() { a } else { b };
                if let Some(iw) = inner.witness {
                    let w = v.witness.as_mut().unwrap();
                    w.elements = iw.elements;
                    w.sets = iw.sets;
                }
            }
            Outcome::main(v)
        }
        Qss => {
            let mut v = Verdict::holds();
            for c in [ElementClass::Prop, ElementClass::Spec, ElementClass::IrrStrong] {
                let r = LowerSpace::for_class(l, &c).is_sober()?;
                if r.is_counterexample() {
                    let mut w = r.witness.unwrap_or_default();
                    w.note = format!("{c} is not sober: {}", w.note);
                    v = Verdict::counterexample(w);
                    break;
                }
            }
            Outcome::main(v)
        }
        Tsqs => Outcome::main(match finiteness_hypotheses(l, true) {
            Some(why) => Verdict::hypothesis_not_met(why),
            None => LowerSpace::for_class(l, &ElementClass::Prop).is_spectral()?,
        }),
        Pr1 => Outcome::main(if jacobson(l) != l.bot() {
            Verdict::hypothesis_not_met("Jacobson radical is not the bottom")
        } else if !max.is_subset(sigma) {
            Verdict::hypothesis_not_met("a maximal element lies outside sigma")
        } else {
            let split = s.strongly_disconnects();
            if !split.is_holds() {
                Verdict::hypothesis_not_met("the subbasis does not strongly disconnect sigma")
            } else {
                let w = split.witness.unwrap();
                let idem = (0..n).find(|&e| e != l.bot() && e != l.top() && l.mul(e, e) == e);
                match idem {
                    Some(e) => Verdict::holds_with(Witness {
                        elements: vec![w.elements[0], w.elements[1], e],
                        sets: w.sets,
                        note: "split by v(x), v(y); nontrivial idempotent".into(),
                    }),
                    None => Verdict::counterexample(Witness {
                        elements: w.elements,
                        sets: w.sets,
                        note: "split by v(x), v(y) but no nontrivial idempotent".into(),
                    }),
                }
            }
        }),
        Conn => Outcome::main(if sigma.contains(l.bot()) {
            s.is_connected()?
        } else {
            Verdict::hypothesis_not_met("bottom is not in sigma")
        }),
        DensityMax | DensitySpec => {
            let d = SubspaceDensity::compute(l)?;
            let note = Witness::note(d.describe());
            let (main, swapped) = if id == DensityMax {
                (d.max_pairing_holds(), d.swapped_max_pairing_holds())
            } else {
                (d.spec_pairing_holds(), d.swapped_spec_pairing_holds())
            };
            let mk = |ok: bool| {
                if ok {
                    Verdict::holds_with(note.clone())
                } else {
                    Verdict::counterexample(note.clone())
                }
            };
            Outcome::main(mk(main)).with("swapped", mk(swapped))
        }
        Conmap1 | Conmap2 | Conmap3 => unreachable!(),
    };
    Ok(out)
}

/// Evaluates one of the homomorphism statements on `h` with the class
/// `class` on both sides.
pub fn check_hom(h: &LatticeHom, class: &ElementClass, id: TheoremId) -> Result<Outcome, HarnessError> {
    if !id.is_hom() {
        return Err(HarnessError::UnknownTheorem(format!("{id} is not a homomorphism statement")));
    }
    let contraction = h.has_contraction_property(class);
    if !contraction.is_holds() {
        let why = format!("contraction property fails: {}", contraction.witness.unwrap_or_default());
        return Ok(Outcome::main(Verdict::hypothesis_not_met(why)));
    }
    let v = match id {
        TheoremId::Conmap1 => h.check_continuity(class)?,
        TheoremId::Conmap2 => {
            if !h.is_surjective() {
                Verdict::hypothesis_not_met("not surjective")
            } else {
                h.check_embedding(class)?
            }
        }
        _ => h.check_density(class)?,
    };
    Ok(Outcome::main(v))
}
