//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's topology or class code; only the raw order and product.
#![allow(dead_code)]

use std::collections::HashSet;

use latkit::harness::{CorpusItem, CorpusSpec};
use latkit::{ElementSet, MultLattice};

pub fn default_lattices() -> Vec<(String, MultLattice)> {
    let spec: CorpusSpec = "default".parse().unwrap();
    spec.items()
        .unwrap()
        .into_iter()
        .filter_map(|item| match item {
            CorpusItem::Lattice { label, lattice, .. } => Some((label, lattice)),
            CorpusItem::Hom { .. } => None,
        })
        .collect()
}

pub fn default_homs() -> Vec<(String, MultLattice, MultLattice, Vec<usize>)> {
    let spec: CorpusSpec = "default".parse().unwrap();
    spec.items()
        .unwrap()
        .into_iter()
        .filter_map(|item| match item {
            CorpusItem::Hom { label, source, target, map } => Some((label, source, target, map)),
            CorpusItem::Lattice { .. } => None,
        })
        .collect()
}

fn set(it: impl IntoIterator<Item = usize>) -> ElementSet {
    let mut s = ElementSet::empty();
    for i in it {
        s.insert(i);
    }
    s
}

pub fn bot(l: &MultLattice) -> usize {
    (0..l.len()).find(|&b| (0..l.len()).all(|x| l.leq(b, x))).unwrap()
}

pub fn top(l: &MultLattice) -> usize {
    (0..l.len()).find(|&t| (0..l.len()).all(|x| l.leq(x, t))).unwrap()
}

/// Greatest lower bound found by scanning, not by the meet table.
pub fn glb(l: &MultLattice, s: ElementSet) -> usize {
    let lower: Vec<usize> = (0..l.len()).filter(|&x| s.iter().all(|y| l.leq(x, y))).collect();
    *lower.iter().find(|&&g| lower.iter().all(|&x| l.leq(x, g))).unwrap()
}

pub fn lub(l: &MultLattice, s: ElementSet) -> usize {
    let upper: Vec<usize> = (0..l.len()).filter(|&x| s.iter().all(|y| l.leq(y, x))).collect();
    *upper.iter().find(|&&g| upper.iter().all(|&x| l.leq(g, x))).unwrap()
}

pub fn primes(l: &MultLattice) -> ElementSet {
    let n = l.len();
    let t = top(l);
    set((0..n).filter(|&p| {
        p != t && (0..n).all(|a| (0..n).all(|b| !l.leq(l.mul(a, b), p) || l.leq(a, p) || l.leq(b, p)))
    }))
}

pub fn maximal(l: &MultLattice) -> ElementSet {
    let n = l.len();
    let t = top(l);
    set((0..n).filter(|&m| m != t && (0..n).all(|x| x == t || x == m || !l.leq(m, x))))
}

pub fn strongly_irreducible(l: &MultLattice) -> ElementSet {
    let n = l.len();
    let t = top(l);
    set((0..n).filter(|&p| {
        p != t && (0..n).all(|a| (0..n).all(|b| !l.leq(glb(l, set([a, b])), p) || l.leq(a, p) || l.leq(b, p)))
    }))
}

pub fn up(l: &MultLattice, sigma: ElementSet, x: usize) -> ElementSet {
    set(sigma.iter().filter(|&s| l.leq(x, s)))
}

/// A finite lower space rebuilt from its definition: closed sets are
/// arbitrary unions of finite intersections of `v(x)`.
pub struct Space {
    pub sigma: ElementSet,
    pub closed: HashSet<ElementSet>,
}

impl Space {
    pub fn new(l: &MultLattice, sigma: ElementSet) -> Self {
        let mut meets: HashSet<ElementSet> = HashSet::new();
        let mut todo: Vec<ElementSet> = (0..l.len()).map(|x| up(l, sigma, x)).collect();
        todo.push(sigma);
        while let Some(s) = todo.pop() {
            if meets.insert(s) {
                let more: Vec<ElementSet> = meets.iter().map(|m| m.intersection(s)).collect();
                todo.extend(more.into_iter().filter(|m| !meets.contains(m)));
            }
        }
        let mut closed: HashSet<ElementSet> = HashSet::new();
        let mut todo: Vec<ElementSet> = meets.into_iter().collect();
        todo.push(ElementSet::empty());
        while let Some(s) = todo.pop() {
            if closed.insert(s) {
                let more: Vec<ElementSet> = closed.iter().map(|m| m.union(s)).collect();
                todo.extend(more.into_iter().filter(|m| !closed.contains(m)));
            }
        }
        Space { sigma, closed }
    }

    pub fn closure(&self, a: ElementSet) -> ElementSet {
        self.closed.iter().filter(|c| a.is_subset(**c)).fold(self.sigma, |acc, c| acc.intersection(*c))
    }

    pub fn point_closure(&self, x: usize) -> ElementSet {
        self.closure(ElementSet::singleton(x))
    }

    pub fn is_irreducible(&self, c: ElementSet) -> bool {
        let proper: Vec<ElementSet> = self.closed.iter().copied().filter(|a| a.is_subset(c) && *a != c).collect();
        !c.is_empty() && proper.iter().all(|a| proper.iter().all(|b| a.union(*b) != c))
    }

    pub fn is_t0(&self) -> bool {
        let pts: Vec<usize> = self.sigma.iter().collect();
        pts.iter().all(|&x| pts.iter().all(|&y| x == y || self.point_closure(x) != self.point_closure(y)))
    }

    pub fn is_t1(&self) -> bool {
        self.sigma.iter().all(|x| self.point_closure(x) == ElementSet::singleton(x))
    }

    pub fn is_sober(&self) -> bool {
        self.closed.iter().filter(|c| self.is_irreducible(**c)).all(|c| {
            self.sigma.iter().filter(|&x| self.point_closure(x) == *c).count() == 1
        })
    }

    pub fn is_connected(&self) -> bool {
        !self.closed.iter().any(|c| {
            !c.is_empty() && *c != self.sigma && self.closed.contains(&self.sigma.difference(*c))
        })
    }
}
