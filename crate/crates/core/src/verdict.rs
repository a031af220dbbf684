use std::fmt;

use crate::element_set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Holds,
    HypothesisNotMet,
    Counterexample,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::HypothesisNotMet => "hypothesis-not-met",
            Status::Counterexample => "counterexample",
        })
    }
}

/// Structured evidence attached to a verdict: element indices, point sets
/// and a short description of what they show.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    pub elements: Vec<usize>,
    pub sets: Vec<ElementSet>,
    pub note: String,
}

impl Witness {
    pub fn elements(elements: impl Into<Vec<usize>>, note: impl Into<String>) -> Self {
        Witness { elements: elements.into(), sets: Vec::new(), note: note.into() }
    }

    pub fn sets(sets: impl Into<Vec<ElementSet>>, note: impl Into<String>) -> Self {
        Witness { elements: Vec::new(), sets: sets.into(), note: note.into() }
    }

    pub fn note(note: impl Into<String>) -> Self {
        Witness { note: note.into(), ..Witness::default() }
    }

    pub fn with_sets(mut self, sets: impl Into<Vec<ElementSet>>) -> Self {
        self.sets = sets.into();
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.elements.is_empty() {
            let e: Vec<String> = self.elements.iter().map(|x| x.to_string()).collect();
            parts.push(format!("elements=[{}]", e.join(",")));
        }
        if !self.sets.is_empty() {
            let s: Vec<String> = self.sets.iter().map(|s| s.to_string()).collect();
            parts.push(format!("sets=[{}]", s.join(",")));
        }
        if !self.note.is_empty() {
            parts.push(self.note.clone());
        }
        f.write_str(&parts.join(" "))
    }
}

/// Outcome of one property or theorem check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds() -> Self {
        Verdict { status: Status::Holds, witness: None }
    }

    pub fn holds_with(w: Witness) -> Self {
        Verdict { status: Status::Holds, witness: Some(w) }
    }

    pub fn counterexample(w: Witness) -> Self {
        Verdict { status: Status::Counterexample, witness: Some(w) }
    }

    pub fn hypothesis_not_met(why: impl Into<String>) -> Self {
        Verdict { status: Status::HypothesisNotMet, witness: Some(Witness::note(why)) }
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_counterexample(&self) -> bool {
        self.status == Status::Counterexample
    }

    /// `Holds` when `ok`, otherwise a counterexample carrying `w`.
    pub fn from_check(ok: bool, w: Witness) -> Self {
        if ok {
            Verdict::holds()
        } else {
            Verdict::counterexample(w)
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if let Some(w) = &self.witness {
            let s = w.to_string();
            if !s.is_empty() {
                write!(f, " {s}")?;
            }
        }
        Ok(())
    }
}
