//! Lower spaces: a class of elements with the coarse lower topology.
//!
//! Closed sets are generated by the subbasis `v(x) = {s ∈ Σ : x ≤ s}`. The
//! family is materialized eagerly on first use: the subbasis plus `Σ` is
//! closed under binary intersection, then the result plus `∅` under binary
//! union. By distributivity of `∪` over `∩` that is the whole lattice of
//! sets the subbasis generates, i.e. all intersections of finite unions.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::classes::{classify, radical_of, ElementClass};
use crate::element_set::ElementSet;
use crate::error::TopologyError;
use crate::lattice::MultLattice;
use crate::verdict::{Verdict, Witness};

/// Default bound on the number of closed sets.
pub const DEFAULT_MAX_CLOSED_SETS: usize = 1 << 20;

/// Environment variable overriding [`DEFAULT_MAX_CLOSED_SETS`].
pub const MAX_CLOSED_SETS_ENV: &str = "LATKIT_MAX_CLOSED_SETS";

/// The closed-set bound in effect: the environment override if it parses,
/// else the default.
pub fn closed_set_limit() -> usize {
    std::env::var(MAX_CLOSED_SETS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_CLOSED_SETS)
}

/// One distinct subbasic closed set with every `x` that generates it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubbasisMember {
    pub points: ElementSet,
    pub generators: ElementSet,
}

#[derive(Debug)]
struct ClosedFamily {
    /// sorted by (size, bits)
    sets: Vec<ElementSet>,
    index: HashSet<ElementSet>,
    /// closure of each point, indexed by element
    point_closures: Vec<ElementSet>,
}

pub struct LowerSpace<'a> {
    lattice: &'a MultLattice,
    sigma: ElementSet,
    subbasis: Vec<SubbasisMember>,
    limit: usize,
    closed: OnceLock<Result<ClosedFamily, TopologyError>>,
}

impl<'a> LowerSpace<'a> {
    /// The lower space on `sigma ∩ carrier`.
    pub fn new(lattice: &'a MultLattice, sigma: ElementSet) -> Self {
        let sigma = sigma.intersection(lattice.carrier());
        let mut subbasis: Vec<SubbasisMember> = Vec::new();
        for x in 0..lattice.len() {
            let points = sigma.intersection(lattice.up_set(x));
            match subbasis.iter_mut().find(|m| m.points == points) {
                Some(m) => m.generators.insert(x),
                None => subbasis.push(SubbasisMember { points, generators: ElementSet::singleton(x) }),
            }
        }
        LowerSpace { lattice, sigma, subbasis, limit: closed_set_limit(), closed: OnceLock::new() }
    }

    pub fn for_class(lattice: &'a MultLattice, class: &ElementClass) -> Self {
        Self::new(lattice, classify(lattice, class))
    }

    /// Overrides the closed-set bound. Has no effect once the family exists.
    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn lattice(&self) -> &'a MultLattice {
        self.lattice
    }

    pub fn sigma(&self) -> ElementSet {
        self.sigma
    }

    pub fn subbasis(&self) -> &[SubbasisMember] {
        &self.subbasis
    }

    /// `{s ∈ Σ : x ≤ s}`
    pub fn v_set(&self, x: usize) -> ElementSet {
        self.sigma.intersection(self.lattice.up_set(x))
    }

    fn family(&self) -> Result<&ClosedFamily, TopologyError> {
        self.closed
            .get_or_init(|| self.generate())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn generate(&self) -> Result<ClosedFamily, TopologyError> {
        let limit = self.limit;
        let too_large = || TopologyError::FamilyTooLarge { limit };
        let gens: Vec<ElementSet> = self.subbasis.iter().map(|m| m.points).collect();

        // intersections of subbasis members; Σ is the empty intersection
        let mut meets: HashSet<ElementSet> = HashSet::new();
        let mut queue = vec![self.sigma];
        meets.insert(self.sigma);
        for &g in &gens {
            if meets.insert(g) {
                queue.push(g);
            }
        }
        while let Some(s) = queue.pop() {
            for &g in &gens {
                let t = s.intersection(g);
                if meets.insert(t) {
                    if meets.len() > limit {
                        return Err(too_large());
                    }
                    queue.push(t);
                }
            }
        }

        // finite unions of those; ∅ is the empty union
        let meet_list: Vec<ElementSet> = meets.iter().copied().collect();
        let mut index = meets;
        index.insert(ElementSet::EMPTY);
        let mut queue: Vec<ElementSet> = index.iter().copied().collect();
        while let Some(s) = queue.pop() {
            for &g in &meet_list {
                let u = s.union(g);
                if index.insert(u) {
                    if index.len() > limit {
                        return Err(too_large());
                    }
                    queue.push(u);
                }
            }
        }
        if index.len() > limit {
            return Err(too_large());
        }

        let mut sets: Vec<ElementSet> = index.iter().copied().collect();
        sets.sort_by_key(|s| (s.len(), s.bits()));
        let point_closures = (0..self.lattice.len())
            .map(|p| {
                if self.sigma.contains(p) {
                    smallest_containing(&sets, ElementSet::singleton(p), self.sigma)
                } else {
                    ElementSet::EMPTY
                }
            })
            .collect();
        Ok(ClosedFamily { sets, index, point_closures })
    }

    /// Every closed set, ordered by size and then bit pattern.
    pub fn closed_sets(&self) -> Result<&[ElementSet], TopologyError> {
        Ok(&self.family()?.sets)
    }

    pub fn is_closed(&self, set: ElementSet) -> Result<bool, TopologyError> {
        Ok(self.family()?.index.contains(&set))
    }

    /// Smallest closed set containing `subset` (restricted to `Σ`).
    pub fn closure(&self, subset: ElementSet) -> Result<ElementSet, TopologyError> {
        let fam = self.family()?;
        let subset = subset.intersection(self.sigma);
        if subset.len() == 1 {
            return Ok(fam.point_closures[subset.first().unwrap()]);
        }
        Ok(smallest_containing(&fam.sets, subset, self.sigma))
    }

    fn point_closure(&self, p: usize) -> Result<ElementSet, TopologyError> {
        Ok(self.family()?.point_closures[p])
    }

    /// Decides whether `{v(x)}` together with `∅` (the empty union) is
    /// already a closed-set topology: it contains `Σ` and is closed under
    /// binary unions and under intersections (finite families suffice on a
    /// finite carrier).
    pub fn forms_closed_topology(&self) -> Verdict {
        let mut family: HashSet<ElementSet> = self.subbasis.iter().map(|m| m.points).collect();
        family.insert(ElementSet::EMPTY);
        if !family.contains(&self.sigma) {
            return Verdict::counterexample(Witness::sets(vec![self.sigma], "sigma is not a v-set"));
        }
        for a in &self.subbasis {
            for b in &self.subbasis {
                let (x, y) = (a.generators.first().unwrap(), b.generators.first().unwrap());
                let u = a.points.union(b.points);
                if !family.contains(&u) {
                    return Verdict::counterexample(
                        Witness::elements(vec![x, y], "v(x) ∪ v(y) is not a v-set")
                            .with_sets(vec![a.points, b.points, u]),
                    );
                }
                let i = a.points.intersection(b.points);
                if !family.contains(&i) {
                    return Verdict::counterexample(
                        Witness::elements(vec![x, y], "v(x) ∩ v(y) is not a v-set")
                            .with_sets(vec![a.points, b.points, i]),
                    );
                }
            }
        }
        Verdict::holds()
    }

    /// `x ∧ y ≤ s ⇒ x ≤ s or y ≤ s` for all `x, y ∈ L` and `s ∈ Σ`.
    pub fn hkp_property(&self) -> Verdict {
        let l = self.lattice;
        for s in self.sigma.iter() {
            for x in 0..l.len() {
                for y in x..l.len() {
                    if l.leq(l.meet(x, y), s) && !l.leq(x, s) && !l.leq(y, s) {
                        return Verdict::counterexample(Witness::elements(
                            vec![x, y, s],
                            "x ∧ y ≤ s but neither x ≤ s nor y ≤ s",
                        ));
                    }
                }
            }
        }
        Verdict::holds()
    }

    /// Distinct points have distinct closures.
    pub fn is_t0(&self) -> Result<Verdict, TopologyError> {
        let pts: Vec<usize> = self.sigma.iter().collect();
        for (i, &p) in pts.iter().enumerate() {
            for &q in &pts[i + 1..] {
                if self.point_closure(p)? == self.point_closure(q)? {
                    return Ok(Verdict::counterexample(Witness::elements(
                        vec![p, q],
                        "points with equal closures",
                    )));
                }
            }
        }
        Ok(Verdict::holds())
    }

    /// Every singleton is closed.
    pub fn is_t1(&self) -> Result<Verdict, TopologyError> {
        for p in self.sigma.iter() {
            let c = self.point_closure(p)?;
            if c != ElementSet::singleton(p) {
                return Ok(Verdict::counterexample(
                    Witness::elements(vec![p], "closure of the point is larger").with_sets(vec![c]),
                ));
            }
        }
        Ok(Verdict::holds())
    }

    /// Irreducibility of a closed set: nonempty, and not covered by two
    /// closed sets without lying in one of them. Because closed sets are
    /// closed under union, `C` is reducible exactly when the union of its
    /// proper closed subsets is `C` itself.
    pub fn is_irreducible(&self, c: ElementSet) -> Result<bool, TopologyError> {
        let fam = self.family()?;
        if !fam.index.contains(&c) {
            return Err(TopologyError::NotClosed(c.to_string()));
        }
        if c.is_empty() {
            return Ok(false);
        }
        let below = fam
            .sets
            .iter()
            .filter(|&&s| s != c && s.is_subset(c))
            .fold(ElementSet::EMPTY, |acc, &s| acc.union(s));
        Ok(below != c)
    }

    pub fn irreducible_closed_sets(&self) -> Result<Vec<ElementSet>, TopologyError> {
        let sets = self.closed_sets()?.to_vec();
        let mut out = Vec::new();
        for c in sets {
            if self.is_irreducible(c)? {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// Points of the closed set `c` whose closure is `c`.
    pub fn generic_points(&self, c: ElementSet) -> Result<ElementSet, TopologyError> {
        if !self.is_closed(c)? {
            return Err(TopologyError::NotClosed(c.to_string()));
        }
        let mut out = ElementSet::EMPTY;
        for p in c.iter() {
            if self.point_closure(p)? == c {
                out.insert(p);
            }
        }
        Ok(out)
    }

    /// Every irreducible closed set has exactly one generic point.
    pub fn is_sober(&self) -> Result<Verdict, TopologyError> {
        for c in self.irreducible_closed_sets()? {
            let g = self.generic_points(c)?;
            if g.len() != 1 {
                return Ok(Verdict::counterexample(
                    Witness::sets(vec![c, g], "irreducible closed set without a unique generic point"),
                ));
            }
        }
        Ok(Verdict::holds())
    }

    /// For every `x ∈ L` whose `v(x)` is nonempty and irreducible, the meet
    /// of `v(x)` lies in `Σ`.
    pub fn sober_criterion(&self) -> Result<Verdict, TopologyError> {
        for m in &self.subbasis {
            if m.points.is_empty() || !self.is_irreducible(m.points)? {
                continue;
            }
            let inf = self.lattice.meet_of(m.points);
            if !self.sigma.contains(inf) {
                let x = m.generators.first().unwrap();
                return Ok(Verdict::counterexample(
                    Witness::elements(vec![x, inf], "meet of an irreducible v(x) is outside sigma")
                        .with_sets(vec![m.points]),
                ));
            }
        }
        Ok(Verdict::holds())
    }

    /// Finite-intersection check over the subbasis: if the subbasic closed
    /// sets have empty intersection, some finite subfamily already does.
    /// The whole subbasis is finite here, so the search below extracts an
    /// irredundant finite subfamily and confirms it.
    pub fn is_compact_space(&self) -> Verdict {
        let members: Vec<ElementSet> = self.subbasis.iter().map(|m| m.points).collect();
        let total = members.iter().fold(self.sigma, |acc, &m| acc.intersection(m));
        if !total.is_empty() {
            return Verdict::holds();
        }
        let mut keep = vec![true; members.len()];
        for i in 0..members.len() {
            keep[i] = false;
            let meet = members
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .fold(self.sigma, |acc, (&m, _)| acc.intersection(m));
            if !meet.is_empty() {
                keep[i] = true;
            }
        }
        let finite: Vec<ElementSet> =
            members.iter().zip(&keep).filter(|(_, &k)| k).map(|(&m, _)| m).collect();
        let meet = finite.iter().fold(self.sigma, |acc, &m| acc.intersection(m));
        if meet.is_empty() {
            Verdict::holds_with(Witness::sets(finite, "finite subfamily with empty intersection"))
        } else {
            Verdict::counterexample(Witness::note("no finite subfamily with empty intersection"))
        }
    }

    /// No proper nonempty closed set has a closed complement.
    pub fn is_connected(&self) -> Result<Verdict, TopologyError> {
        for &c in self.closed_sets()? {
            if c.is_empty() || c == self.sigma {
                continue;
            }
            let rest = self.sigma.difference(c);
            if self.is_closed(rest)? {
                return Ok(Verdict::counterexample(Witness::sets(
                    vec![c, rest],
                    "complementary closed sets",
                )));
            }
        }
        Ok(Verdict::holds())
    }

    /// Elements `x, y ∈ L` whose subbasic sets are nonempty, disjoint and
    /// cover `Σ`. `Holds` carries the first such pair; otherwise the
    /// counterexample records that every pair was examined.
    pub fn strongly_disconnects(&self) -> Verdict {
        for (i, a) in self.subbasis.iter().enumerate() {
            for b in &self.subbasis[i + 1..] {
                if !a.points.is_empty()
                    && !b.points.is_empty()
                    && a.points.intersection(b.points).is_empty()
                    && a.points.union(b.points) == self.sigma
                {
                    let (x, y) = (a.generators.first().unwrap(), b.generators.first().unwrap());
                    return Verdict::holds_with(
                        Witness::elements(vec![x, y], "v(x), v(y) split sigma")
                            .with_sets(vec![a.points, b.points]),
                    );
                }
            }
        }
        Verdict::counterexample(Witness::note(format!(
            "no splitting pair among {} subbasic sets",
            self.subbasis.len()
        )))
    }

    /// Variant of [`strongly_disconnects`](Self::strongly_disconnects) where
    /// each side is a finite union of subbasic sets.
    pub fn strongly_disconnects_by_unions(&self) -> Verdict {
        let gens: Vec<ElementSet> = self.subbasis.iter().map(|m| m.points).collect();
        let mut unions: HashSet<ElementSet> = gens.iter().copied().collect();
        let mut queue: Vec<ElementSet> = unions.iter().copied().collect();
        while let Some(s) = queue.pop() {
            for &g in &gens {
                let u = s.union(g);
                if unions.insert(u) {
                    queue.push(u);
                }
            }
        }
        let mut sorted: Vec<ElementSet> = unions.into_iter().collect();
        sorted.sort_by_key(|s| (s.len(), s.bits()));
        let set: HashSet<ElementSet> = sorted.iter().copied().collect();
        for &a in &sorted {
            let b = self.sigma.difference(a);
            if !a.is_empty() && !b.is_empty() && a.is_subset(self.sigma) && set.contains(&b) {
                return Verdict::holds_with(Witness::sets(vec![a, b], "unions of subbasic sets split sigma"));
            }
        }
        Verdict::counterexample(Witness::note("no splitting pair of subbasic unions"))
    }

    /// Spectral: T0, sober, compact, with the compact opens forming a basis
    /// closed under finite intersections. On a finite space every open set
    /// is compact, so the basis condition reduces to the opens being closed
    /// under binary intersection, i.e. closed sets under binary union, which
    /// is checked literally.
    pub fn is_spectral(&self) -> Result<Verdict, TopologyError> {
        for (what, v) in [
            ("T0", self.is_t0()?),
            ("sober", self.is_sober()?),
            ("compact", self.is_compact_space()),
        ] {
            if v.is_counterexample() {
                let mut w = v.witness.unwrap_or_default();
                w.note = format!("not {what}: {}", w.note);
                return Ok(Verdict::counterexample(w));
            }
        }
        let sets = self.closed_sets()?;
        for (i, &a) in sets.iter().enumerate() {
            for &b in &sets[i..] {
                if !self.is_closed(a.union(b))? {
                    let opens = vec![self.sigma.difference(a), self.sigma.difference(b)];
                    return Ok(Verdict::counterexample(Witness::sets(
                        opens,
                        "compact opens not closed under intersection",
                    )));
                }
            }
        }
        Ok(Verdict::holds())
    }

    /// `[∀x∈L: v(x)=v(√x)] ⇔ [∀x∈Σ: v(x)=v(√x)] ⇔ [Σ ⊆ Rad(L)]`; holds
    /// when the three statements agree.
    pub fn check_v_radical(&self) -> Verdict {
        let (all, on_sigma, subset, _) = self.v_radical_statements();
        let w = Witness::note(format!("all={all} sigma={on_sigma} subset-rad={subset}"));
        if all == on_sigma && on_sigma == subset {
            Verdict::holds_with(w)
        } else {
            Verdict::counterexample(w)
        }
    }

    /// The equality reading: `[∀x∈L: v(x)=v(√x)] ⇔ [Σ = Rad(L)]`.
    pub fn check_v_radical_equality(&self) -> Verdict {
        let (all, _, _, equal) = self.v_radical_statements();
        let w = Witness::note(format!("all={all} equal-rad={equal}"));
        if all == equal {
            Verdict::holds_with(w)
        } else {
            Verdict::counterexample(w)
        }
    }

    fn v_radical_statements(&self) -> (bool, bool, bool, bool) {
        let l = self.lattice;
        let rad = |x: usize| radical_of(l, x).expect("radical formulas agree on finite lattices");
        let same = |x: usize| self.v_set(x) == self.v_set(rad(x));
        let all = (0..l.len()).all(same);
        let on_sigma = self.sigma.iter().all(same);
        let rads = classify(l, &ElementClass::Rad);
        (all, on_sigma, self.sigma.is_subset(rads), self.sigma == rads)
    }

    /// One of the five statements about `⋀v(x)`:
    ///
    /// 1. `x ≤ ⋀v(x)`;
    /// 2. `x ∈ Σ ⇒ x = ⋀v(x)`;
    /// 3. `v(x) = v(⋀v(x))`;
    /// 4. `v(x) ⊆ v(y) ⇔ ⋀v(y) ≤ ⋀v(x)`;
    /// 5. when every element is radical, `v(x) ⊆ v(y) ⇔ y ≤ x`.
    pub fn check_hrx(&self, part: u8) -> Verdict {
        let l = self.lattice;
        let n = l.len();
        let inf = |x: usize| l.meet_of(self.v_set(x));
        match part {
            1 => first_failure((0..n).map(|x| (l.leq(x, inf(x)), vec![x]))),
            2 => first_failure(self.sigma.iter().map(|x| (inf(x) == x, vec![x]))),
            3 => first_failure((0..n).map(|x| (self.v_set(x) == self.v_set(inf(x)), vec![x]))),
            4 => first_failure((0..n).flat_map(|x| {
                (0..n).map(move |y| {
                    let lhs = self.v_set(x).is_subset(self.v_set(y));
                    (lhs == l.leq(inf(y), inf(x)), vec![x, y])
                })
            })),
            5 => {
                if classify(l, &ElementClass::Rad) != l.carrier() {
                    return Verdict::hypothesis_not_met("some element is not radical");
                }
                first_failure((0..n).flat_map(|x| {
                    (0..n).map(move |y| {
                        let lhs = self.v_set(x).is_subset(self.v_set(y));
                        (lhs == l.leq(y, x), vec![x, y])
                    })
                }))
            }
            _ => panic!("statement {part} does not exist"),
        }
    }

    /// `[∀x: v(x)=∅ ⇔ x=1] ⇔ [Max(L) ⊆ Σ]`, under compact generation and
    /// max-boundedness.
    pub fn check_lfc(&self) -> Verdict {
        let l = self.lattice;
        if !l.is_compactly_generated() || !l.is_max_bounded() {
            return Verdict::hypothesis_not_met("not compactly generated and max-bounded");
        }
        let empty_iff_top = (0..l.len()).all(|x| self.v_set(x).is_empty() == (x == l.top()));
        let has_max = classify(l, &ElementClass::Max).is_subset(self.sigma);
        let w = Witness::note(format!("empty-iff-top={empty_iff_top} max-in-sigma={has_max}"));
        if empty_iff_top == has_max {
            Verdict::holds_with(w)
        } else {
            Verdict::counterexample(w)
        }
    }
}

fn smallest_containing(sets: &[ElementSet], subset: ElementSet, sigma: ElementSet) -> ElementSet {
    sets.iter()
        .filter(|s| subset.is_subset(**s))
        .fold(sigma, |acc, &s| acc.intersection(s))
}

fn first_failure(checks: impl Iterator<Item = (bool, Vec<usize>)>) -> Verdict {
    for (ok, elems) in checks {
        if !ok {
            return Verdict::counterexample(Witness::elements(elems, "statement fails"));
        }
    }
    Verdict::holds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{chain, divisor_quantale, powerset_frame, ChainKind};
    use crate::enumerate::enumerate_lattices;
    use crate::verdict::Status;

    fn set(l: &MultLattice, labels: &[&str]) -> ElementSet {
        labels.iter().map(|d| l.element_by_label(d).unwrap()).collect()
    }

    /// Intersections of finite unions of subbasic sets, built directly.
    fn closed_sets_by_definition(s: &LowerSpace) -> HashSet<ElementSet> {
        let gens: Vec<ElementSet> = s.subbasis().iter().map(|m| m.points).collect();
        let mut unions = HashSet::new();
        for bits in 0u64..(1 << gens.len()) {
            let u = (0..gens.len())
                .filter(|i| bits & (1 << i) != 0)
                .fold(ElementSet::EMPTY, |acc, i| acc.union(gens[i]));
            unions.insert(u);
        }
        // intersections of every subfamily of unions, one union at a time
        let mut out: HashSet<ElementSet> = HashSet::from([s.sigma()]);
        for u in unions {
            let with_u: Vec<ElementSet> = out.iter().map(|x| x.intersection(u)).collect();
            out.extend(with_u);
        }
        out
    }

    /// Naive fixpoint: close under every pairwise ∪ and ∩ until stable.
    fn closed_sets_by_pairwise_fixpoint(s: &LowerSpace) -> HashSet<ElementSet> {
        let mut fam: HashSet<ElementSet> = s.subbasis().iter().map(|m| m.points).collect();
        fam.insert(ElementSet::EMPTY);
        fam.insert(s.sigma());
        loop {
            let cur: Vec<ElementSet> = fam.iter().copied().collect();
            let before = fam.len();
            for &a in &cur {
                for &b in &cur {
                    fam.insert(a.union(b));
                    fam.insert(a.intersection(b));
                }
            }
            if fam.len() == before {
                return fam;
            }
        }
    }

    #[test]
    fn v_sets() {
        let d12 = divisor_quantale(12);
        let s = LowerSpace::for_class(&d12, &ElementClass::Spec);
        assert_eq!(s.v_set(d12.element_by_label("4").unwrap()), set(&d12, &["2"]));
        assert_eq!(s.v_set(d12.bot()), s.sigma());
        assert!(s.v_set(d12.top()).is_empty());
    }

    #[test]
    fn closed_sets_of_small_spaces() {
        let d12 = divisor_quantale(12);
        let s = LowerSpace::for_class(&d12, &ElementClass::Spec);
        let pts: Vec<ElementSet> = s.subbasis().iter().map(|m| m.points).collect();
        assert_eq!(pts.len(), 4);
        assert_eq!(s.closed_sets().unwrap().len(), 4);

        let single = LowerSpace::new(&d12, ElementSet::singleton(0));
        assert_eq!(single.closed_sets().unwrap(), &[ElementSet::EMPTY, ElementSet::singleton(0)]);

        let c3 = chain(3, ChainKind::Meet);
        let p = LowerSpace::for_class(&c3, &ElementClass::Prop);
        let expect = vec![ElementSet::EMPTY, ElementSet::singleton(1), [0, 1].into_iter().collect()];
        assert_eq!(p.closed_sets().unwrap(), expect.as_slice());
    }

    #[test]
    fn generation_matches_definitions() {
        for l in enumerate_lattices(5).unwrap() {
            for class in crate::classes::SWEEP_CLASSES.iter() {
                let s = LowerSpace::for_class(&l, class);
                if s.sigma().len() > 8 {
                    continue;
                }
                let got: HashSet<ElementSet> = s.closed_sets().unwrap().iter().copied().collect();
                assert_eq!(got, closed_sets_by_definition(&s));
                assert_eq!(got, closed_sets_by_pairwise_fixpoint(&s));
                for &a in &got {
                    for &b in &got {
                        assert!(got.contains(&a.union(b)) && got.contains(&a.intersection(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn family_guard() {
        let b3 = powerset_frame(3);
        let s = LowerSpace::for_class(&b3, &ElementClass::Prop).with_limit(4);
        assert_eq!(s.closed_sets().unwrap_err(), TopologyError::FamilyTooLarge { limit: 4 });
    }

    #[test]
    fn closures() {
        let d12 = divisor_quantale(12);
        let s = LowerSpace::for_class(&d12, &ElementClass::Spec);
        assert_eq!(s.closure(ElementSet::EMPTY).unwrap(), ElementSet::EMPTY);
        assert_eq!(s.closure(s.sigma()).unwrap(), s.sigma());
        for p in s.sigma().iter() {
            assert_eq!(s.closure(ElementSet::singleton(p)).unwrap(), s.v_set(p));
        }
    }

    #[test]
    fn closure_is_kuratowski() {
        let d60 = divisor_quantale(60);
        let s = LowerSpace::for_class(&d60, &ElementClass::Prop);
        let sig = s.sigma();
        for bits in (0u128..(1 << d60.len())).step_by(7) {
            let a = ElementSet::from_bits(bits).intersection(sig);
            let ca = s.closure(a).unwrap();
            assert!(a.is_subset(ca));
            assert_eq!(s.closure(ca).unwrap(), ca);
            let b = ElementSet::from_bits(bits.rotate_left(3)).intersection(sig);
            assert_eq!(s.closure(a.union(b)).unwrap(), ca.union(s.closure(b).unwrap()));
            assert!(s.closure(a.intersection(b)).unwrap().is_subset(ca));
        }
    }

    #[test]
    fn topology_and_hkp() {
        let d12 = divisor_quantale(12);
        let irr = LowerSpace::for_class(&d12, &ElementClass::IrrStrong);
        assert!(irr.forms_closed_topology().is_holds());
        assert!(irr.hkp_property().is_holds());
        let prop = LowerSpace::for_class(&d12, &ElementClass::Prop);
        assert!(prop.forms_closed_topology().is_counterexample());
        let hkp = prop.hkp_property();
        assert!(hkp.is_counterexample());
        let w = hkp.witness.unwrap().elements;
        assert!(d12.leq(d12.meet(w[0], w[1]), w[2]));
        let empty = LowerSpace::new(&d12, ElementSet::EMPTY);
        assert!(empty.forms_closed_topology().is_holds());
        assert!(empty.hkp_property().is_holds());
    }

    #[test]
    fn separation() {
        let d12 = divisor_quantale(12);
        let spec = LowerSpace::for_class(&d12, &ElementClass::Spec);
        assert!(spec.is_t0().unwrap().is_holds());
        assert!(spec.is_t1().unwrap().is_holds());
        let c3 = chain(3, ChainKind::Meet);
        let prop = LowerSpace::for_class(&c3, &ElementClass::Prop);
        let t1 = prop.is_t1().unwrap();
        assert!(t1.is_counterexample());
        assert_eq!(t1.witness.unwrap().sets, vec![prop.sigma()]);
    }

    #[test]
    fn irreducibility_and_generic_points() {
        let d12 = divisor_quantale(12);
        let spec = LowerSpace::for_class(&d12, &ElementClass::Spec);
        assert!(!spec.is_irreducible(spec.sigma()).unwrap());
        for p in spec.sigma().iter() {
            let v = spec.v_set(p);
            assert!(spec.is_irreducible(v).unwrap());
            assert!(spec.generic_points(v).unwrap().contains(p));
        }
        let not_closed = set(&d12, &["2", "4"]);
        assert!(spec.generic_points(not_closed).is_err());
    }

    #[test]
    fn irreducibility_matches_pairwise_definition() {
        for l in enumerate_lattices(5).unwrap() {
            let s = LowerSpace::for_class(&l, &ElementClass::Prop);
            let sets = s.closed_sets().unwrap().to_vec();
            for &c in &sets {
                let by_def = !c.is_empty()
                    && sets.iter().all(|&a| {
                        sets.iter().all(|&b| !c.is_subset(a.union(b)) || c.is_subset(a) || c.is_subset(b))
                    });
                assert_eq!(s.is_irreducible(c).unwrap(), by_def);
            }
        }
    }

    #[test]
    fn sobriety_and_spectrality() {
        let d12 = divisor_quantale(12);
        for class in [ElementClass::Spec, ElementClass::Prop, ElementClass::IrrStrong] {
            let s = LowerSpace::for_class(&d12, &class);
            assert!(s.is_sober().unwrap().is_holds());
            assert!(s.sober_criterion().unwrap().is_holds());
        }
        let prop = LowerSpace::for_class(&d12, &ElementClass::Prop);
        assert!(prop.is_spectral().unwrap().is_holds());
        // {(2),(3),(6)}: v((6)) = {(6)} and the space is still sober
        let custom = LowerSpace::new(&d12, set(&d12, &["2", "3", "6"]));
        assert_eq!(custom.is_sober().unwrap().status, Status::Holds);
        assert_eq!(custom.sober_criterion().unwrap().status, Status::Holds);
        assert_eq!(custom.is_spectral().unwrap().status, Status::Holds);
    }

    #[test]
    fn compactness() {
        let d12 = divisor_quantale(12);
        assert!(LowerSpace::new(&d12, ElementSet::EMPTY).is_compact_space().is_holds());
        let spec = LowerSpace::for_class(&d12, &ElementClass::Spec);
        let v = spec.is_compact_space();
        assert!(v.is_holds());
        let fam = v.witness.unwrap().sets;
        assert!(fam.iter().fold(spec.sigma(), |a, &b| a.intersection(b)).is_empty());
    }

    #[test]
    fn connectedness() {
        let b2 = powerset_frame(2);
        let spec = LowerSpace::for_class(&b2, &ElementClass::Spec);
        let sd = spec.strongly_disconnects();
        assert!(sd.is_holds());
        let w = sd.witness.unwrap();
        assert_eq!(w.sets, vec![ElementSet::singleton(1), ElementSet::singleton(2)]);
        assert!(spec.is_connected().unwrap().is_counterexample());
        assert!(spec.strongly_disconnects_by_unions().is_holds());

        let single = LowerSpace::new(&b2, ElementSet::singleton(0));
        assert!(single.is_connected().unwrap().is_holds());
        assert!(single.strongly_disconnects().is_counterexample());

        let prop = LowerSpace::for_class(&b2, &ElementClass::Prop);
        assert!(prop.is_connected().unwrap().is_holds());
    }

    #[test]
    fn radical_statements() {
        let d12 = divisor_quantale(12);
        let spec = LowerSpace::for_class(&d12, &ElementClass::Spec);
        assert_eq!(spec.check_v_radical().witness.unwrap().note, "all=true sigma=true subset-rad=true");
        let prim = LowerSpace::for_class(&d12, &ElementClass::Prim);
        let v = prim.check_v_radical();
        assert!(v.is_holds());
        assert_eq!(v.witness.unwrap().note, "all=false sigma=false subset-rad=false");
        for part in 1..=4 {
            assert!(spec.check_hrx(part).is_holds(), "part {part}");
            assert!(prim.check_hrx(part).is_holds(), "part {part}");
        }
        assert_eq!(spec.check_hrx(5).status, Status::HypothesisNotMet);
        for x in spec.sigma().iter() {
            assert_eq!(spec.v_set(x), spec.v_set(crate::classes::inf_v(&d12, spec.sigma(), x)));
        }
    }

    #[test]
    fn lfc_on_d12() {
        let d12 = divisor_quantale(12);
        assert!(LowerSpace::for_class(&d12, &ElementClass::Spec).check_lfc().is_holds());
        let nil = LowerSpace::for_class(&d12, &ElementClass::Nil);
        let v = nil.check_lfc();
        assert!(v.is_holds());
        assert_eq!(v.witness.unwrap().note, "empty-iff-top=false max-in-sigma=false");
    }
}
