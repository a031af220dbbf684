//! Homomorphisms between multiplicative lattices and the maps they induce
//! on lower spaces.
//!
//! The contraction of `y` along `φ` is read as the element
//! `⋁{x : φ(x) ≤ y}`, the right adjoint of `φ`. Where a statement quantifies
//! over the members of a kernel, [`LatticeHom::kernel_set`] supplies the
//! fiber `{x : φ(x) = 0}` instead.

use crate::classes::{classify, jacobson, p_radical, s_radical, ElementClass};
use crate::element_set::ElementSet;
use crate::error::{HomError, TopologyError};
use crate::lattice::MultLattice;
use crate::topology::LowerSpace;
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Debug)]
pub struct LatticeHom<'a> {
    source: &'a MultLattice,
    target: &'a MultLattice,
    map: Vec<usize>,
    adjoint: Vec<usize>,
}

impl<'a> LatticeHom<'a> {
    /// Checks monotonicity, preservation of binary joins and meets, of the
    /// product, of the top, and of the bottom (the empty join), then
    /// computes the contraction table.
    pub fn validate(
        source: &'a MultLattice,
        target: &'a MultLattice,
        map: Vec<usize>,
    ) -> Result<Self, HomError> {
        let n = source.len();
        if map.len() != n {
            return Err(HomError::WrongLength { expected: n, found: map.len() });
        }
        if let Some(x) = (0..n).find(|&x| map[x] >= target.len()) {
            return Err(HomError::OutOfRange { x, y: map[x] });
        }
        let f = |x: usize| map[x];
        let violation = |law, witness: Vec<usize>| HomError::HomViolation { law, witness };
        for x in 0..n {
            for y in 0..n {
                if source.leq(x, y) && !target.leq(f(x), f(y)) {
                    return Err(violation("monotone", vec![x, y]));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if f(source.join(x, y)) != target.join(f(x), f(y)) {
                    return Err(violation("join", vec![x, y]));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if f(source.meet(x, y)) != target.meet(f(x), f(y)) {
                    return Err(violation("meet", vec![x, y]));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if f(source.mul(x, y)) != target.mul(f(x), f(y)) {
                    return Err(violation("mul", vec![x, y]));
                }
            }
        }
        if f(source.top()) != target.top() {
            return Err(violation("unit", vec![source.top()]));
        }
        if f(source.bot()) != target.bot() {
            return Err(violation("bottom", vec![source.bot()]));
        }
        let adjoint = (0..target.len())
            .map(|y| {
                let below: ElementSet = (0..n).filter(|&x| target.leq(f(x), y)).collect();
                source.join_of(below)
            })
            .collect();
        Ok(LatticeHom { source, target, map, adjoint })
    }

    pub fn identity(l: &'a MultLattice) -> Self {
        Self::validate(l, l, (0..l.len()).collect()).expect("identity is a homomorphism")
    }

    pub fn source(&self) -> &'a MultLattice {
        self.source
    }

    pub fn target(&self) -> &'a MultLattice {
        self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `⋁{x : φ(x) ≤ y}`
    pub fn contraction(&self, y: usize) -> usize {
        self.adjoint[y]
    }

    /// `{x : φ(x) = 0}`
    pub fn kernel_set(&self) -> ElementSet {
        (0..self.source.len()).filter(|&x| self.map[x] == self.target.bot()).collect()
    }

    /// Contraction of the bottom, the join of the kernel.
    pub fn kernel_element(&self) -> usize {
        self.contraction(self.target.bot())
    }

    /// Every target element has a preimage.
    pub fn surjectivity_gap(&self) -> Option<usize> {
        (0..self.target.len()).find(|y| !self.map.contains(y))
    }

    pub fn is_surjective(&self) -> bool {
        self.surjectivity_gap().is_none()
    }

    /// `next ∘ self`
    pub fn then(&self, next: &LatticeHom<'a>) -> Result<LatticeHom<'a>, HomError> {
        let map = self.map.iter().map(|&y| next.apply(y)).collect();
        LatticeHom::validate(self.source, next.target, map)
    }

    /// Contractions of `class`-elements of the target stay in `class`.
    pub fn has_contraction_property(&self, class: &ElementClass) -> Verdict {
        let in_source = classify(self.source, class);
        for y in classify(self.target, class).iter() {
            let c = self.contraction(y);
            if !in_source.contains(c) {
                return Verdict::counterexample(Witness::elements(
                    vec![y, c],
                    "contraction leaves the class",
                ));
            }
        }
        Verdict::holds()
    }

    fn require_contraction(&self, class: &ElementClass) -> Result<(), HomError> {
        let v = self.has_contraction_property(class);
        if v.is_counterexample() {
            let y = v.witness.unwrap().elements[0];
            return Err(HomError::ContractionPropertyFails { y });
        }
        Ok(())
    }

    /// `φ_*: Σ_target → Σ_source`, as `(y, φ_*(y))` pairs in index order.
    pub fn induced_map(&self, class: &ElementClass) -> Result<Vec<(usize, usize)>, HomError> {
        self.require_contraction(class)?;
        Ok(classify(self.target, class).iter().map(|y| (y, self.contraction(y))).collect())
    }

    fn preimage(&self, class: &ElementClass, set: ElementSet) -> ElementSet {
        classify(self.target, class)
            .iter()
            .filter(|&y| set.contains(self.contraction(y)))
            .collect()
    }

    fn image(&self, set: ElementSet) -> ElementSet {
        set.iter().map(|y| self.contraction(y)).collect()
    }

    /// Preimages of closed sets under `φ_*` are closed, and
    /// `φ_*⁻¹(v(x)) = v(φ(x))` for every source element `x`.
    pub fn check_continuity(&self, class: &ElementClass) -> Result<Verdict, HomError> {
        self.require_contraction(class)?;
        let src = LowerSpace::for_class(self.source, class);
        let tgt = LowerSpace::for_class(self.target, class);
        for x in 0..self.source.len() {
            let pre = self.preimage(class, src.v_set(x));
            let expect = tgt.v_set(self.apply(x));
            if pre != expect {
                return Ok(Verdict::counterexample(
                    Witness::elements(vec![x], "preimage of v(x) differs from v(φ(x))")
                        .with_sets(vec![pre, expect]),
                ));
            }
        }
        for &c in src.closed_sets()? {
            let pre = self.preimage(class, c);
            if !tgt.is_closed(pre)? {
                return Ok(Verdict::counterexample(Witness::sets(
                    vec![c, pre],
                    "preimage of a closed set is not closed",
                )));
            }
        }
        Ok(Verdict::holds())
    }

    /// For surjective `φ`: `φ_*` is a homeomorphism of the target space onto
    /// the closed subspace `{x ∈ Σ_source : Ker φ ≤ x}`.
    pub fn check_embedding(&self, class: &ElementClass) -> Result<Verdict, HomError> {
        if let Some(y) = self.surjectivity_gap() {
            return Err(HomError::NotSurjective { y });
        }
        self.require_contraction(class)?;
        let src = LowerSpace::for_class(self.source, class);
        let tgt = LowerSpace::for_class(self.target, class);
        let sigma_t = tgt.sigma();

        let image = self.image(sigma_t);
        if image.len() != sigma_t.len() {
            return Ok(Verdict::counterexample(Witness::sets(vec![sigma_t, image], "not injective")));
        }
        let k = self.kernel_element();
        let kernel_up = src.v_set(k);
        let kernel_up_by_members: ElementSet = src
            .sigma()
            .iter()
            .filter(|&x| self.kernel_set().iter().all(|kk| self.source.leq(kk, x)))
            .collect();
        if kernel_up != kernel_up_by_members {
            return Ok(Verdict::counterexample(Witness::sets(
                vec![kernel_up, kernel_up_by_members],
                "kernel element and kernel members give different up-sets",
            )));
        }
        if image != kernel_up {
            return Ok(Verdict::counterexample(
                Witness::elements(vec![k], "image differs from the up-set of the kernel")
                    .with_sets(vec![image, kernel_up]),
            ));
        }
        let continuity = self.check_continuity(class)?;
        if continuity.is_counterexample() {
            return Ok(continuity);
        }
        for &d in tgt.closed_sets()? {
            let img = self.image(d);
            if !src.is_closed(img)? {
                return Ok(Verdict::counterexample(Witness::sets(vec![d, img], "image of a closed set is not closed")));
            }
        }
        // the subspace topology on the image is exactly the image topology
        let mut from_target: Vec<ElementSet> = tgt.closed_sets()?.iter().map(|&d| self.image(d)).collect();
        let mut from_source: Vec<ElementSet> =
            src.closed_sets()?.iter().map(|c| c.intersection(image)).collect();
        for v in [&mut from_target, &mut from_source] {
            v.sort();
            v.dedup();
        }
        if from_target != from_source {
            return Ok(Verdict::counterexample(Witness::note("subspace topology differs from the image topology")));
        }
        Ok(Verdict::holds_with(Witness::sets(vec![image], "image = Ker φ↑")))
    }

    /// `φ_*(Σ_target)` is dense in `Σ_source` iff every kernel member lies
    /// below `⋀Σ_source`; holds when the two sides agree.
    pub fn check_density(&self, class: &ElementClass) -> Result<Verdict, HomError> {
        self.require_contraction(class)?;
        let src = LowerSpace::for_class(self.source, class);
        let sigma_t = classify(self.target, class);
        let closure = src.closure(self.image(sigma_t))?;
        let dense = closure == src.sigma();
        let floor = self.source.meet_of(src.sigma());
        let condition = self.kernel_set().iter().all(|k| self.source.leq(k, floor));
        let w = Witness::note(format!("dense={dense} kernel-below-meet={condition}")).with_sets(vec![closure]);
        Ok(if dense == condition { Verdict::holds_with(w) } else { Verdict::counterexample(w) })
    }
}

/// Density of `Max(L)` and `Spec(L)` inside the lower space `Irr⁺(L)`,
/// together with the radical equalities they are paired with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspaceDensity {
    pub max_dense: bool,
    pub spec_dense: bool,
    pub jacobson_is_s_radical: bool,
    pub p_radical_is_s_radical: bool,
}

impl SubspaceDensity {
    pub fn compute(l: &MultLattice) -> Result<Self, TopologyError> {
        let irr = LowerSpace::for_class(l, &ElementClass::IrrStrong);
        let max = classify(l, &ElementClass::Max);
        let spec = classify(l, &ElementClass::Spec);
        let s_rad = s_radical(l);
        Ok(SubspaceDensity {
            max_dense: irr.closure(max)? == irr.sigma(),
            spec_dense: irr.closure(spec)? == irr.sigma(),
            jacobson_is_s_radical: jacobson(l) == s_rad,
            p_radical_is_s_radical: p_radical(l) == s_rad,
        })
    }

    /// Max dense ⇔ Jac = s-radical.
    pub fn max_pairing_holds(&self) -> bool {
        self.max_dense == self.jacobson_is_s_radical
    }

    /// Spec dense ⇔ p-radical = s-radical.
    pub fn spec_pairing_holds(&self) -> bool {
        self.spec_dense == self.p_radical_is_s_radical
    }

    /// The swapped pairing: Max dense ⇔ p-radical = s-radical.
    pub fn swapped_max_pairing_holds(&self) -> bool {
        self.max_dense == self.p_radical_is_s_radical
    }

    /// The swapped pairing: Spec dense ⇔ Jac = s-radical.
    pub fn swapped_spec_pairing_holds(&self) -> bool {
        self.spec_dense == self.jacobson_is_s_radical
    }

    pub fn describe(&self) -> String {
        format!(
            "max-dense={} spec-dense={} jac=s-rad={} p-rad=s-rad={}",
            self.max_dense, self.spec_dense, self.jacobson_is_s_radical, self.p_radical_is_s_radical
        )
    }
}

/// Both density pairings (Max with the Jacobson radical, Spec with the
/// p-radical) over the `Irr⁺` lower space. The swapped pairing is reported
/// in the witness.
pub fn check_subspace_density(l: &MultLattice) -> Result<Verdict, TopologyError> {
    let d = SubspaceDensity::compute(l)?;
    let w = Witness::note(format!(
        "{} swapped-max={} swapped-spec={}",
        d.describe(),
        d.swapped_max_pairing_holds(),
        d.swapped_spec_pairing_holds()
    ));
    Ok(if d.max_pairing_holds() && d.spec_pairing_holds() {
        Verdict::holds_with(w)
    } else {
        Verdict::counterexample(w)
    })
}

/// `(d) ↦ (gcd(d, n))` from the divisor quantale of `m` to that of `n`,
/// for `n | m`. Both lattices must list their divisors in increasing order,
/// as [`divisor_quantale`](crate::builders::divisor_quantale) does.
pub fn divisor_projection<'a>(
    source: &'a MultLattice,
    target: &'a MultLattice,
) -> Result<LatticeHom<'a>, HomError> {
    let value = |l: &MultLattice, i: usize| -> u64 { l.name(i).parse().expect("divisor labels") };
    let map = (0..source.len())
        .map(|i| {
            let d = value(source, i);
            let n = value(target, target.bot());
            let g = gcd(d, n);
            (0..target.len()).find(|&j| value(target, j) == g).expect("gcd divides n")
        })
        .collect();
    LatticeHom::validate(source, target, map)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{chain, divisor_quantale, powerset_frame, ChainKind};
    use crate::classes::SWEEP_CLASSES;

    #[test]
    fn identity_and_projection_validate() {
        let d12 = divisor_quantale(12);
        let d4 = divisor_quantale(4);
        let id = LatticeHom::identity(&d12);
        assert!((0..6).all(|y| id.contraction(y) == y));
        assert_eq!(id.kernel_set(), ElementSet::singleton(d12.bot()));
        assert_eq!(id.kernel_element(), d12.bot());
        let h = divisor_projection(&d12, &d4).unwrap();
        let s = |l: &MultLattice, d: &str| l.element_by_label(d).unwrap();
        assert_eq!(h.contraction(s(&d4, "2")), s(&d12, "2"));
        assert_eq!(h.contraction(d4.top()), d12.top());
        let kernel: ElementSet = [s(&d12, "4"), s(&d12, "12")].into_iter().collect();
        assert_eq!(h.kernel_set(), kernel);
        assert_eq!(h.kernel_element(), s(&d12, "4"));
    }

    #[test]
    fn broken_maps_are_rejected() {
        let d12 = divisor_quantale(12);
        let d4 = divisor_quantale(4);
        let mut map = divisor_projection(&d12, &d4).unwrap().map().to_vec();
        map[d12.element_by_label("3").unwrap()] = d4.element_by_label("2").unwrap();
        let err = LatticeHom::validate(&d12, &d4, map).unwrap_err();
        assert!(matches!(err, HomError::HomViolation { .. }), "{err}");

        let constant_top = vec![d4.top(); d12.len()];
        let err = LatticeHom::validate(&d12, &d4, constant_top).unwrap_err();
        assert!(matches!(err, HomError::HomViolation { law: "bottom", .. }), "{err}");

        assert!(matches!(
            LatticeHom::validate(&d12, &d4, vec![0; 3]),
            Err(HomError::WrongLength { .. })
        ));
    }

    #[test]
    fn adjunction_and_galois_laws() {
        for m in [12u64, 30, 36, 60] {
            let dm = divisor_quantale(m);
            for n in (1..=m).filter(|n| m % n == 0) {
                let dn = divisor_quantale(n);
                let h = divisor_projection(&dm, &dn).unwrap();
                assert!(h.is_surjective());
                for x in 0..dm.len() {
                    assert!(dm.leq(x, h.contraction(h.apply(x))));
                    for y in 0..dn.len() {
                        assert_eq!(dn.leq(h.apply(x), y), dm.leq(x, h.contraction(y)));
                    }
                }
                for y in 0..dn.len() {
                    assert!(dn.leq(h.apply(h.contraction(y)), y));
                    assert_eq!(h.apply(h.contraction(y)), y);
                }
            }
        }
    }

    #[test]
    fn composition_is_contravariant_on_spaces() {
        let d60 = divisor_quantale(60);
        let d12 = divisor_quantale(12);
        let d4 = divisor_quantale(4);
        let f = divisor_projection(&d60, &d12).unwrap();
        let g = divisor_projection(&d12, &d4).unwrap();
        let gf = f.then(&g).unwrap();
        assert_eq!(gf.map(), divisor_projection(&d60, &d4).unwrap().map());
        let class = ElementClass::Spec;
        for (y, x) in gf.induced_map(&class).unwrap() {
            assert_eq!(x, f.contraction(g.contraction(y)));
        }
    }

    #[test]
    fn induced_maps_d12_to_d4() {
        let d12 = divisor_quantale(12);
        let d4 = divisor_quantale(4);
        let h = divisor_projection(&d12, &d4).unwrap();
        let spec = ElementClass::Spec;
        assert!(h.has_contraction_property(&spec).is_holds());
        let two = |l: &MultLattice| l.element_by_label("2").unwrap();
        assert_eq!(h.induced_map(&spec).unwrap(), vec![(two(&d4), two(&d12))]);
        assert!(h.check_continuity(&spec).unwrap().is_holds());
        let emb = h.check_embedding(&spec).unwrap();
        assert!(emb.is_holds());
        assert_eq!(emb.witness.unwrap().sets, vec![ElementSet::singleton(two(&d12))]);
        let den = h.check_density(&spec).unwrap();
        assert!(den.is_holds());
        assert!(den.witness.unwrap().note.starts_with("dense=false kernel-below-meet=false"));

        let src = LowerSpace::for_class(&d12, &spec);
        let four = d12.element_by_label("4").unwrap();
        let pre = h.preimage(&spec, src.v_set(four));
        assert_eq!(pre, classify(&d4, &spec));

        // Max coincides with Spec in both lattices
        assert!(h.has_contraction_property(&ElementClass::Max).is_holds());
    }

    #[test]
    fn identity_checks() {
        let b2 = powerset_frame(2);
        let id = LatticeHom::identity(&b2);
        for class in SWEEP_CLASSES.iter() {
            assert!(id.has_contraction_property(class).is_holds());
            let pairs = id.induced_map(class).unwrap();
            assert!(pairs.iter().all(|(y, x)| x == y));
            assert!(id.check_continuity(class).unwrap().is_holds());
            assert!(id.check_embedding(class).unwrap().is_holds());
            let d = id.check_density(class).unwrap();
            assert!(d.is_holds());
            assert!(d.witness.unwrap().note.starts_with("dense=true kernel-below-meet=true"));
        }
    }

    #[test]
    fn embedding_needs_surjectivity() {
        // the inclusion of the 2-chain as {0, 1} in the Boolean square is
        // a homomorphism that misses the atoms
        let c2 = chain(2, ChainKind::Meet);
        let b2 = powerset_frame(2);
        let h = LatticeHom::validate(&c2, &b2, vec![0, 3]).unwrap();
        assert!(matches!(h.check_embedding(&ElementClass::Prop), Err(HomError::NotSurjective { .. })));
    }

    #[test]
    fn subspace_density() {
        let d12 = divisor_quantale(12);
        let d = SubspaceDensity::compute(&d12).unwrap();
        assert!(!d.max_dense && !d.spec_dense);
        assert!(!d.jacobson_is_s_radical && !d.p_radical_is_s_radical);
        assert!(check_subspace_density(&d12).unwrap().is_holds());
        assert!(check_subspace_density(&chain(1, ChainKind::Meet)).unwrap().is_holds());
        let b2 = SubspaceDensity::compute(&powerset_frame(2)).unwrap();
        assert!(b2.max_dense && b2.spec_dense && b2.jacobson_is_s_radical);
    }
}
