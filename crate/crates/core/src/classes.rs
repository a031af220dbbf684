//! Distinguished classes of elements and the radicals built from them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::element_set::ElementSet;
use crate::error::ClassError;
use crate::lattice::MultLattice;

/// Which elements a lower space is built on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementClass {
    /// proper elements, `x ≠ 1`
    Prop,
    /// primes
    Spec,
    MinPrime,
    Max,
    /// irreducible: `x ∧ y = s ⇒ x = s or y = s`
    Irr,
    /// strongly irreducible: `x ∧ y ≤ s ⇒ x ≤ s or y ≤ s`
    IrrStrong,
    /// completely irreducible: not the meet of any family avoiding it
    IrrComplete,
    /// radical elements, `x = √x`
    Rad,
    /// primary elements
    Prim,
    Nil,
    Idem,
    CompactElems,
    Custom(String, ElementSet),
}

/// The classes every sweep visits, in report order.
pub const SWEEP_CLASSES: [ElementClass; 9] = [
    ElementClass::Prop,
    ElementClass::Spec,
    ElementClass::MinPrime,
    ElementClass::Max,
    ElementClass::Irr,
    ElementClass::IrrStrong,
    ElementClass::IrrComplete,
    ElementClass::Rad,
    ElementClass::Prim,
];

impl ElementClass {
    /// Command-line token.
    pub fn token(&self) -> String {
        match self {
            ElementClass::Prop => "prop".into(),
            ElementClass::Spec => "spec".into(),
            ElementClass::MinPrime => "min-prime".into(),
            ElementClass::Max => "max".into(),
            ElementClass::Irr => "irr".into(),
            ElementClass::IrrStrong => "irr+".into(),
            ElementClass::IrrComplete => "irr++".into(),
            ElementClass::Rad => "rad".into(),
            ElementClass::Prim => "prim".into(),
            ElementClass::Nil => "nil".into(),
            ElementClass::Idem => "idem".into(),
            ElementClass::CompactElems => "compact".into(),
            ElementClass::Custom(name, _) => format!("custom:{name}"),
        }
    }

    /// Resolves a token; `custom:<name>` is looked up in `customs`.
    pub fn parse_with(token: &str, customs: &[(String, ElementSet)]) -> Result<Self, ClassError> {
        if let Some(name) = token.strip_prefix("custom:") {
            return customs
                .iter()
                .find(|(n, _)| n == name)
                .map(|(n, s)| ElementClass::Custom(n.clone(), *s))
                .ok_or_else(|| ClassError::UnknownClass(token.to_string()));
        }
        token.parse()
    }
}

impl FromStr for ElementClass {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, ClassError> {
        Ok(match s {
            "prop" => ElementClass::Prop,
            "spec" => ElementClass::Spec,
            "min-prime" => ElementClass::MinPrime,
            "max" => ElementClass::Max,
            "irr" => ElementClass::Irr,
            "irr+" => ElementClass::IrrStrong,
            "irr++" => ElementClass::IrrComplete,
            "rad" => ElementClass::Rad,
            "prim" => ElementClass::Prim,
            "nil" => ElementClass::Nil,
            "idem" => ElementClass::Idem,
            "compact" => ElementClass::CompactElems,
            _ => return Err(ClassError::UnknownClass(s.to_string())),
        })
    }
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// Per-lattice memo of computed classes. Custom classes are not cached.
#[derive(Default)]
pub(crate) struct ClassCache(Mutex<HashMap<ElementClass, ElementSet>>);

impl ClassCache {
    fn get(&self, class: &ElementClass) -> Option<ElementSet> {
        self.0.lock().unwrap().get(class).copied()
    }

    fn put(&self, class: ElementClass, set: ElementSet) {
        self.0.lock().unwrap().insert(class, set);
    }
}

/// The elements of `l` in `class`, by exhaustive check of the defining
/// condition.
pub fn classify(l: &MultLattice, class: &ElementClass) -> ElementSet {
    if let ElementClass::Custom(_, s) = class {
        return s.intersection(l.carrier());
    }
    if let Some(s) = l.cache.get(class) {
        return s;
    }
    let set = compute(l, class);
    l.cache.put(class.clone(), set);
    set
}

fn compute(l: &MultLattice, class: &ElementClass) -> ElementSet {
    let n = l.len();
    let all = 0..n;
    let proper = |x: usize| x != l.top();
    match class {
        ElementClass::Prop => all.filter(|&x| proper(x)).collect(),
        ElementClass::Spec => all.filter(|&p| is_prime(l, p)).collect(),
        ElementClass::MinPrime => {
            let spec = classify(l, &ElementClass::Spec);
            spec.iter()
                .filter(|&p| !spec.iter().any(|q| l.lt(q, p)))
                .collect()
        }
        ElementClass::Max => l.coatoms(),
        ElementClass::Irr => all.filter(|&s| is_irreducible(l, s)).collect(),
        ElementClass::IrrStrong => all.filter(|&s| is_strongly_irreducible(l, s)).collect(),
        ElementClass::IrrComplete => all.filter(|&s| is_completely_irreducible(l, s)).collect(),
        ElementClass::Rad => all.filter(|&x| radical_by_primes(l, x) == x).collect(),
        ElementClass::Prim => all.filter(|&q| is_primary(l, q)).collect(),
        ElementClass::Nil => all.filter(|&x| l.stable_power(x) == l.bot()).collect(),
        ElementClass::Idem => all.filter(|&x| l.mul(x, x) == x).collect(),
        ElementClass::CompactElems => all.filter(|&c| l.is_compact_element(c)).collect(),
        ElementClass::Custom(..) => unreachable!(),
    }
}

fn is_prime(l: &MultLattice, p: usize) -> bool {
    p != l.top()
        && (0..l.len()).all(|x| {
            (0..l.len()).all(|y| !l.leq(l.mul(x, y), p) || l.leq(x, p) || l.leq(y, p))
        })
}

fn is_strongly_irreducible(l: &MultLattice, s: usize) -> bool {
    s != l.top()
        && (0..l.len()).all(|x| {
            (0..l.len()).all(|y| !l.leq(l.meet(x, y), s) || l.leq(x, s) || l.leq(y, s))
        })
}

fn is_irreducible(l: &MultLattice, s: usize) -> bool {
    s != l.top()
        && (0..l.len()).all(|x| (0..l.len()).all(|y| l.meet(x, y) != s || x == s || y == s))
}

/// `s` is completely irreducible iff it is proper and differs from the meet
/// of its strict upper bounds: any family meeting to `s` either contains `s`
/// or consists of strict upper bounds, whose meet is then `s`.
fn is_completely_irreducible(l: &MultLattice, s: usize) -> bool {
    let mut strict_ups = l.up_set(s);
    strict_ups.remove(s);
    s != l.top() && l.meet_of(strict_ups) != s
}

fn is_primary(l: &MultLattice, q: usize) -> bool {
    if q == l.top() {
        return false;
    }
    let rq = radical_by_primes(l, q);
    (0..l.len()).all(|x| {
        (0..l.len()).all(|y| !l.leq(l.mul(x, y), q) || l.leq(x, q) || l.leq(y, rq))
    })
}

/// `⋀{p ∈ Spec : x ≤ p}`
fn radical_by_primes(l: &MultLattice, x: usize) -> usize {
    let spec = classify(l, &ElementClass::Spec);
    l.meet_of(spec.intersection(l.up_set(x)))
}

/// `⋁{y compact : yᵏ ≤ x for some k ≥ 1}`
fn radical_by_powers(l: &MultLattice, x: usize) -> usize {
    let compact = classify(l, &ElementClass::CompactElems);
    let ys: ElementSet = compact
        .iter()
        .filter(|&y| l.leq(l.stable_power(y), x))
        .collect();
    l.join_of(ys)
}

/// `√x`, computed both as the meet of the primes above `x` and as the join
/// of the compact elements with a power below `x`.
pub fn radical_of(l: &MultLattice, x: usize) -> Result<usize, ClassError> {
    let by_primes = radical_by_primes(l, x);
    let by_powers = radical_by_powers(l, x);
    if by_primes != by_powers {
        return Err(ClassError::DefinitionMismatch { x, by_primes, by_powers });
    }
    Ok(by_primes)
}

/// Meet of the maximal elements.
pub fn jacobson(l: &MultLattice) -> usize {
    l.meet_of(classify(l, &ElementClass::Max))
}

/// Meet of the primes.
pub fn p_radical(l: &MultLattice) -> usize {
    l.meet_of(classify(l, &ElementClass::Spec))
}

/// Meet of the strongly irreducible elements.
pub fn s_radical(l: &MultLattice) -> usize {
    l.meet_of(classify(l, &ElementClass::IrrStrong))
}

/// `⋀{s ∈ sigma : x ≤ s}`, the top when nothing in `sigma` lies above `x`.
pub fn inf_v(l: &MultLattice, sigma: ElementSet, x: usize) -> usize {
    l.meet_of(sigma.intersection(l.up_set(x)))
}
