//! Structural invariants as property tests over enumerated and built
//! quantales, arbitrary point sets and gcd homomorphisms.

mod common;

use std::sync::OnceLock;

use latkit::builders::{divisor_quantale, product};
use latkit::enumerate::{enumerate_lattices, is_isomorphic};
use latkit::harness::{run_items, CorpusItem, TheoremId};
use latkit::hom::divisor_projection;
use latkit::latfile::{parse_latfile, serialize_latfile, LatFile};
use latkit::{classify, ElementClass, ElementSet, LowerSpace, MultLattice};
use proptest::prelude::*;

fn pool() -> &'static [MultLattice] {
    static POOL: OnceLock<Vec<MultLattice>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v = enumerate_lattices(5).unwrap();
        let small: Vec<MultLattice> = v.iter().filter(|l| (2..=4).contains(&l.len())).cloned().collect();
        for a in &small {
            for b in &small {
                v.push(product(a, b));
            }
        }
        v.extend([12, 30, 36, 60, 64].map(divisor_quantale));
        v
    })
}

fn lattice() -> impl Strategy<Value = &'static MultLattice> {
    (0..pool().len()).prop_map(|i| &pool()[i])
}

fn lattice_and_sigma() -> impl Strategy<Value = (&'static MultLattice, ElementSet)> {
    (lattice(), any::<u128>()).prop_map(|(l, bits)| (l, ElementSet::from_bits(bits).intersection(l.carrier())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lattice_operations_are_bounds(l in lattice(), x in 0usize..128, y in 0usize..128) {
        let (x, y) = (x % l.len(), y % l.len());
        let pair = ElementSet::from_bits((1 << x) | (1 << y));
        prop_assert_eq!(l.join(x, y), common::lub(l, pair));
        prop_assert_eq!(l.meet(x, y), common::glb(l, pair));
        prop_assert_eq!(l.bot(), common::bot(l));
        prop_assert_eq!(l.top(), common::top(l));
    }

    #[test]
    fn product_is_a_commutative_unital_quantale(l in lattice(), x in 0usize..128, y in 0usize..128, z in 0usize..128) {
        let (x, y, z) = (x % l.len(), y % l.len(), z % l.len());
        prop_assert_eq!(l.mul(x, y), l.mul(y, x));
        prop_assert_eq!(l.mul(l.mul(x, y), z), l.mul(x, l.mul(y, z)));
        prop_assert_eq!(l.mul(x, l.top()), x);
        prop_assert_eq!(l.mul(x, l.join(y, z)), l.join(l.mul(x, y), l.mul(x, z)));
        prop_assert!(l.leq(l.mul(x, y), l.meet(x, y)));
    }

    #[test]
    fn class_inclusions(l in lattice()) {
        let c = |k: ElementClass| classify(l, &k);
        prop_assert!(c(ElementClass::Max).is_subset(c(ElementClass::Spec)));
        prop_assert!(c(ElementClass::Spec).is_subset(c(ElementClass::IrrStrong)));
        prop_assert!(c(ElementClass::IrrStrong).is_subset(c(ElementClass::Irr)));
        prop_assert!(c(ElementClass::IrrComplete).is_subset(c(ElementClass::Irr)));
        prop_assert!(c(ElementClass::MinPrime).is_subset(c(ElementClass::Spec)));
        prop_assert!(c(ElementClass::Spec).is_subset(c(ElementClass::Prim)));
        prop_assert_eq!(c(ElementClass::Spec), common::primes(l));
        prop_assert_eq!(c(ElementClass::Max), common::maximal(l));
        prop_assert_eq!(c(ElementClass::IrrStrong), common::strongly_irreducible(l));
    }

    #[test]
    fn closure_is_a_closure_operator((l, sigma) in lattice_and_sigma(), a in any::<u128>(), b in any::<u128>()) {
        let s = LowerSpace::new(l, sigma);
        let a = ElementSet::from_bits(a).intersection(sigma);
        let b = ElementSet::from_bits(b).intersection(sigma);
        let ca = s.closure(a).unwrap();
        prop_assert!(a.is_subset(ca));
        prop_assert_eq!(s.closure(ca).unwrap(), ca);
        prop_assert!(s.closure(a.intersection(b)).unwrap().is_subset(ca));
        prop_assert_eq!(s.closure(a.union(b)).unwrap(), ca.union(s.closure(b).unwrap()));
        prop_assert!(s.is_closed(ca).unwrap());
    }

    #[test]
    fn closed_family_matches_definition((l, sigma) in lattice_and_sigma()) {
        let s = LowerSpace::new(l, sigma);
        let ours = s.closed_sets().unwrap();
        let oracle = common::Space::new(l, sigma);
        prop_assert_eq!(ours.len(), oracle.closed.len());
        prop_assert!(ours.iter().all(|c| oracle.closed.contains(c)));
        prop_assert!(s.is_t0().unwrap().is_holds());
        prop_assert_eq!(s.is_sober().unwrap().is_holds(), oracle.is_sober());
        prop_assert_eq!(s.is_connected().unwrap().is_holds(), oracle.is_connected());
    }

    #[test]
    fn latfile_round_trip((l, sigma) in lattice_and_sigma()) {
        let f = LatFile::from_lattice(l).with_sigma("s", sigma);
        let text = serialize_latfile(&f);
        let back = parse_latfile(&text).unwrap();
        prop_assert_eq!(serialize_latfile(&back), text);
        prop_assert!(is_isomorphic(&back.to_lattice().unwrap(), l));
        prop_assert_eq!(back.custom_classes(), vec![("s".to_string(), sigma)]);
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn gcd_pair() -> impl Strategy<Value = (u64, u64, u64)> {
    (1u64..=60)
        .prop_flat_map(|m| (Just(m), proptest::sample::select(divisors(m))))
        .prop_flat_map(|(m, n)| (Just(m), Just(n), proptest::sample::select(divisors(n))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn galois_connection((m, n, k) in gcd_pair()) {
        let (a, b, c) = (divisor_quantale(m), divisor_quantale(n), divisor_quantale(k));
        let f = divisor_projection(&a, &b).unwrap();
        for x in 0..a.len() {
            prop_assert!(a.leq(x, f.contraction(f.apply(x))));
            for y in 0..b.len() {
                prop_assert_eq!(b.leq(f.apply(x), y), a.leq(x, f.contraction(y)));
            }
        }
        for y in 0..b.len() {
            prop_assert_eq!(f.apply(f.contraction(y)), y);
        }
        let g = divisor_projection(&b, &c).unwrap();
        let gf = f.then(&g).unwrap();
        let direct = divisor_projection(&a, &c).unwrap();
        prop_assert_eq!(gf.map(), direct.map());
        for z in 0..c.len() {
            prop_assert_eq!(gf.contraction(z), f.contraction(g.contraction(z)));
        }
        let spec = ElementClass::Spec;
        if f.has_contraction_property(&spec).is_holds() {
            prop_assert!(f.check_continuity(&spec).unwrap().is_holds());
            prop_assert!(f.check_embedding(&spec).unwrap().is_holds());
            prop_assert!(f.check_density(&spec).unwrap().is_holds());
        }
    }

    #[test]
    fn report_is_order_independent(picks in proptest::collection::vec(0usize..60, 1..8), seed in any::<u64>()) {
        let items: Vec<CorpusItem> = picks
            .iter()
            .map(|&i| CorpusItem::lattice(format!("p{i}"), pool()[i % pool().len()].clone()))
            .collect();
        let mut shuffled = items.clone();
        let len = shuffled.len();
        for i in 0..len {
            shuffled.swap(i, (seed as usize).wrapping_add(i * 7) % len);
        }
        let ids = TheoremId::ALL;
        let a = run_items("prop", &items, &ids).unwrap();
        let b = run_items("prop", &shuffled, &ids).unwrap();
        prop_assert_eq!(a.serialize(), b.serialize());
        prop_assert!(a.replay().is_ok());
    }
}
