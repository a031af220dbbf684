use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;

use super::corpus::{CorpusItem, CorpusSpec};
use super::{check, check_hom, Outcome, TheoremId};
use crate::classes::{ElementClass, SWEEP_CLASSES};
use crate::error::HarnessError;
use crate::hom::LatticeHom;
use crate::latfile::{parse_latfile, serialize_latfile, LatFile};
use crate::lattice::MultLattice;
use crate::verdict::{Status, Verdict};

/// Counterexamples kept per theorem and reading; the smallest in payload
/// order survive a merge.
pub const PAYLOAD_LIMIT: usize = 3;

/// Sigma column for theorems that fix their own space.
const NO_SIGMA: &str = "-";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub holds: usize,
    pub hyp_fail: usize,
    pub cex: usize,
}

impl Tally {
    fn add(&mut self, s: Status) {
        match s {
            Status::Holds => self.holds += 1,
            Status::HypothesisNotMet => self.hyp_fail += 1,
            Status::Counterexample => self.cex += 1,
        }
    }

    fn merge(&mut self, o: Tally) {
        self.holds += o.holds;
        self.hyp_fail += o.hyp_fail;
        self.cex += o.cex;
    }

    pub fn total(&self) -> usize {
        self.holds + self.hyp_fail + self.cex
    }
}

/// What a counterexample was found on, serialized so it can be rebuilt.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Subject {
    Lattice(String),
    Hom { source: String, target: String, map: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Payload {
    pub instance: String,
    pub sigma: String,
    pub verdict: String,
    pub subject: Subject,
}

/// Reading name under which main verdicts are filed.
const MAIN: &str = "main";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub corpus: String,
    pub instances: usize,
    pub theorems: Vec<TheoremId>,
    pub tallies: BTreeMap<TheoremId, Tally>,
    pub readings: BTreeMap<(TheoremId, String), Tally>,
    /// keyed by theorem and reading (`main` for the main verdict)
    pub payloads: BTreeMap<(TheoremId, String), BTreeSet<Payload>>,
}

impl Report {
    pub fn new(corpus: impl Into<String>, theorems: &[TheoremId]) -> Self {
        let mut theorems = theorems.to_vec();
        theorems.sort();
        theorems.dedup();
        Report {
            corpus: corpus.into(),
            instances: 0,
            tallies: theorems.iter().map(|&id| (id, Tally::default())).collect(),
            theorems,
            readings: BTreeMap::new(),
            payloads: BTreeMap::new(),
        }
    }

    fn record(&mut self, id: TheoremId, out: &Outcome, payload: impl Fn(&Verdict) -> Payload) {
        self.tallies.entry(id).or_default().add(out.verdict.status);
        if out.verdict.is_counterexample() {
            self.keep((id, MAIN.to_string()), payload(&out.verdict));
        }
        for r in &out.readings {
            self.readings.entry((id, r.name.to_string())).or_default().add(r.verdict.status);
            if r.verdict.is_counterexample() {
                self.keep((id, r.name.to_string()), payload(&r.verdict));
            }
        }
    }

    fn keep(&mut self, key: (TheoremId, String), p: Payload) {
        let set = self.payloads.entry(key).or_default();
        set.insert(p);
        while set.len() > PAYLOAD_LIMIT {
            set.pop_last();
        }
    }

    /// Associative, commutative combination of two partial reports over the
    /// same corpus descriptor.
    pub fn merge(mut self, other: Report) -> Report {
        self.instances += other.instances;
        for id in other.theorems {
            if !self.theorems.contains(&id) {
                self.theorems.push(id);
            }
        }
        self.theorems.sort();
        for (id, t) in other.tallies {
            self.tallies.entry(id).or_default().merge(t);
        }
        for (k, t) in other.readings {
            self.readings.entry(k).or_default().merge(t);
        }
        for (k, ps) in other.payloads {
            for p in ps {
                self.keep(k.clone(), p);
            }
        }
        self
    }

    pub fn tally(&self, id: TheoremId) -> Tally {
        self.tallies.get(&id).copied().unwrap_or_default()
    }

    pub fn reading(&self, id: TheoremId, name: &str) -> Tally {
        self.readings.get(&(id, name.to_string())).copied().unwrap_or_default()
    }

    /// Stored counterexamples for a theorem's main verdict or one reading.
    pub fn counterexamples(&self, id: TheoremId, reading: Option<&str>) -> Vec<&Payload> {
        let key = (id, reading.unwrap_or(MAIN).to_string());
        self.payloads.get(&key).map(|s| s.iter().collect()).unwrap_or_default()
    }

    /// Theorems with main-verdict counterexamples that are not tracked.
    pub fn failing(&self) -> Vec<TheoremId> {
        self.tallies.iter().filter(|(id, t)| t.cex > 0 && !id.is_tracked()).map(|(&id, _)| id).collect()
    }

    /// 0 when no untracked theorem has a counterexample, else 1.
    pub fn exit_code(&self) -> i32 {
        if self.failing().is_empty() {
            0
        } else {
            1
        }
    }

    /// The line-oriented text form. Identical inputs give identical bytes.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "CORPUS {}", self.corpus).unwrap();
        writeln!(out, "INSTANCES {}", self.instances).unwrap();
        for &id in &self.theorems {
            let t = self.tally(id);
            writeln!(out, "THEOREM {id} holds={} hyp_fail={} cex={}", t.holds, t.hyp_fail, t.cex).unwrap();
        }
        for ((id, name), t) in &self.readings {
            writeln!(out, "READING {id} {name} holds={} hyp_fail={} cex={}", t.holds, t.hyp_fail, t.cex).unwrap();
        }
        let tracked: Vec<&str> = self.theorems.iter().filter(|id| id.is_tracked()).map(|id| id.tag()).collect();
        if !tracked.is_empty() {
            writeln!(out, "TRACKED {}", tracked.join(" ")).unwrap();
        }
        writeln!(out, "EXIT {}", self.exit_code()).unwrap();
        for ((id, name), ps) in &self.payloads {
            for p in ps {
                out.push('\n');
                writeln!(out, "COUNTEREXAMPLE {id} {name}").unwrap();
                writeln!(out, "INSTANCE {}", p.instance).unwrap();
                writeln!(out, "SIGMA {}", p.sigma).unwrap();
                writeln!(out, "VERDICT {}", p.verdict).unwrap();
                match &p.subject {
                    Subject::Lattice(text) => block(&mut out, "LATTICE", text),
                    Subject::Hom { source, target, map } => {
                        block(&mut out, "SOURCE", source);
                        block(&mut out, "TARGET", target);
                        let m: Vec<String> = map.iter().map(|i| i.to_string()).collect();
                        writeln!(out, "MAP {}", m.join(" ")).unwrap();
                    }
                }
            }
        }
        out
    }

    /// Re-checks every stored counterexample in isolation and confirms the
    /// same verdict comes back. Returns how many were replayed.
    pub fn replay(&self) -> Result<usize, String> {
        let mut count = 0;
        for ((id, name), ps) in &self.payloads {
            for p in ps {
                let out = replay_one(*id, p).map_err(|e| format!("{id} on {}: {e}", p.instance))?;
                let v = if name == MAIN {
                    out.verdict
                } else {
                    out.readings
                        .into_iter()
                        .find(|r| r.name == name)
                        .map(|r| r.verdict)
                        .ok_or_else(|| format!("{id} on {}: reading {name} missing", p.instance))?
                };
                if v.to_string() != p.verdict {
                    return Err(format!("{id} {name} on {}: replay gave `{v}`, stored `{}`", p.instance, p.verdict));
                }
                count += 1;
            }
        }
        Ok(count)
    }
}

fn block(out: &mut String, name: &str, text: &str) {
    writeln!(out, "BEGIN {name}").unwrap();
    out.push_str(text);
    writeln!(out, "END {name}").unwrap();
}

fn load(text: &str) -> Result<(MultLattice, Vec<(String, crate::element_set::ElementSet)>), HarnessError> {
    let f = parse_latfile(text).map_err(|e| HarnessError::BadCorpus(e.to_string()))?;
    Ok((f.to_lattice()?, f.custom_classes()))
}

fn replay_one(id: TheoremId, p: &Payload) -> Result<Outcome, HarnessError> {
    match &p.subject {
        Subject::Lattice(text) => {
            let (l, customs) = load(text)?;
            let class = if p.sigma == NO_SIGMA {
                ElementClass::Prop
            } else {
                ElementClass::parse_with(&p.sigma, &customs)?
            };
            check(&l, &class, id)
        }
        Subject::Hom { source, target, map } => {
            let (s, _) = load(source)?;
            let (t, _) = load(target)?;
            let h = LatticeHom::validate(&s, &t, map.clone())?;
            check_hom(&h, &p.sigma.parse()?, id)
        }
    }
}

fn lattice_text(l: &MultLattice, classes: &[ElementClass]) -> String {
    let mut f = LatFile::from_lattice(l);
    for c in classes {
        if let ElementClass::Custom(name, set) = c {
            f = f.with_sigma(name.clone(), *set);
        }
    }
    serialize_latfile(&f)
}

fn run_item(descriptor: &str, item: &CorpusItem, ids: &[TheoremId]) -> Result<Report, HarnessError> {
    let mut report = Report::new(descriptor, ids);
    report.instances = 1;
    match item {
        CorpusItem::Lattice { label, lattice, classes } => {
            let text = lattice_text(lattice, classes);
            for &id in ids {
                let sweep: Vec<(String, ElementClass)> = if id.uses_sigma() {
                    classes.iter().map(|c| (c.token(), c.clone())).collect()
                } else {
                    vec![(NO_SIGMA.to_string(), ElementClass::Prop)]
                };
                for (token, class) in sweep {
                    let out = check(lattice, &class, id)?;
                    report.record(id, &out, |v| Payload {
                        instance: label.clone(),
                        sigma: token.clone(),
                        verdict: v.to_string(),
                        subject: Subject::Lattice(text.clone()),
                    });
                }
            }
        }
        CorpusItem::Hom { label, source, target, map } => {
            let h = LatticeHom::validate(source, target, map.clone())?;
            let (s_text, t_text) = (lattice_text(source, &[]), lattice_text(target, &[]));
            for &id in ids.iter().filter(|id| id.is_hom()) {
                for class in SWEEP_CLASSES.iter() {
                    let out = check_hom(&h, class, id)?;
                    report.record(id, &out, |v| Payload {
                        instance: label.clone(),
                        sigma: class.token(),
                        verdict: v.to_string(),
                        subject: Subject::Hom { source: s_text.clone(), target: t_text.clone(), map: map.clone() },
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Sweeps `ids` over `items` in parallel; the result does not depend on
/// scheduling.
pub fn run_items(descriptor: &str, items: &[CorpusItem], ids: &[TheoremId]) -> Result<Report, HarnessError> {
    items
        .par_iter()
        .map(|item| run_item(descriptor, item, ids))
        .try_reduce(|| Report::new(descriptor, ids), |a, b| Ok(a.merge(b)))
}

pub fn run_corpus(spec: &CorpusSpec, ids: &[TheoremId]) -> Result<Report, HarnessError> {
    run_items(spec.descriptor(), &spec.items()?, ids)
}
