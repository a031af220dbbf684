//! Standard model quantales.

use crate::element_set::MAX_ELEMENTS;
use crate::lattice::{MultLattice, RawLattice};

fn build(raw: RawLattice) -> MultLattice {
    MultLattice::validate(raw).expect("builder produced an invalid quantale")
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Ideal lattice of `Z/nZ`.
///
/// Elements are the divisors `d` of `n`, standing for the ideals `(d)`,
/// listed in increasing order and named by `d`. `(d) ≤ (e)` iff `e | d`, the
/// product is `(gcd(d·e, n))`, the bottom is `(n)` and the top is `(1)`.
///
/// Panics if `n` is zero or has more than 128 divisors.
pub fn divisor_quantale(n: u64) -> MultLattice {
    assert!(n >= 1, "divisor quantale needs n >= 1");
    let divs: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    assert!(divs.len() <= MAX_ELEMENTS, "too many divisors");
    let index = |d: u64| divs.iter().position(|&x| x == d).unwrap();
    let leq = divs
        .iter()
        .map(|&d| divs.iter().map(|&e| d % e == 0).collect())
        .collect();
    let mul = divs
        .iter()
        .map(|&d| divs.iter().map(|&e| index(gcd(d * e, n))).collect())
        .collect();
    let names = Some(divs.iter().map(|d| d.to_string()).collect());
    build(RawLattice { leq, mul, names })
}

/// The frame of subsets of a `k`-set, with intersection as product.
///
/// Element `i` is the subset whose bit mask is `i`. Panics for `k > 7`.
pub fn powerset_frame(k: u32) -> MultLattice {
    assert!(k <= 7, "powerset frame limited to k <= 7");
    let n = 1usize << k;
    let leq = (0..n).map(|a| (0..n).map(|b| a & !b == 0).collect()).collect();
    let mul = (0..n).map(|a| (0..n).map(|b| a & b).collect()).collect();
    let names = Some(
        (0..n)
            .map(|a| {
                let members: Vec<String> =
                    (0..k).filter(|i| a & (1 << i) != 0).map(|i| i.to_string()).collect();
                format!("{{{}}}", members.join(","))
            })
            .collect(),
    );
    build(RawLattice { leq, mul, names })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainKind {
    /// product is the minimum
    Meet,
    /// product is truncated addition `max(0, i + j - (n-1))`
    Lukasiewicz,
}

/// The chain `0 < 1 < … < n-1` with the given product.
pub fn chain(n: usize, kind: ChainKind) -> MultLattice {
    assert!((1..=MAX_ELEMENTS).contains(&n), "chain length out of range");
    let leq = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
    let mul = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match kind {
                    ChainKind::Meet => i.min(j),
                    ChainKind::Lukasiewicz => (i + j).saturating_sub(n - 1),
                })
                .collect()
        })
        .collect();
    let names = Some((0..n).map(|i| i.to_string()).collect());
    build(RawLattice { leq, mul, names })
}

/// Componentwise product; the pair `(i, j)` has index `i * b.len() + j`.
pub fn product(a: &MultLattice, b: &MultLattice) -> MultLattice {
    let (na, nb) = (a.len(), b.len());
    assert!(na * nb <= MAX_ELEMENTS, "product too large");
    let split = |p: usize| (p / nb, p % nb);
    let n = na * nb;
    let leq = (0..n)
        .map(|p| {
            let (i, j) = split(p);
            (0..n)
                .map(|q| {
                    let (k, l) = split(q);
                    a.leq(i, k) && b.leq(j, l)
                })
                .collect()
        })
        .collect();
    let mul = (0..n)
        .map(|p| {
            let (i, j) = split(p);
            (0..n)
                .map(|q| {
                    let (k, l) = split(q);
                    a.mul(i, k) * nb + b.mul(j, l)
                })
                .collect()
        })
        .collect();
    let names = Some(
        (0..n)
            .map(|p| {
                let (i, j) = split(p);
                format!("({},{})", a.name(i), b.name(j))
            })
            .collect(),
    );
    build(RawLattice { leq, mul, names })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::is_isomorphic;

    #[test]
    fn divisor_quantales() {
        assert_eq!(divisor_quantale(1).len(), 1);
        let d12 = divisor_quantale(12);
        assert_eq!(d12.len(), 6);
        let idx = |d: &str| d12.element_by_label(d).unwrap();
        assert_eq!(d12.bot(), idx("12"));
        assert_eq!(d12.top(), idx("1"));
        assert_eq!(d12.mul(idx("2"), idx("6")), d12.bot());
        assert_eq!(d12.mul(idx("3"), idx("3")), idx("3"));
        for n in 1..=60 {
            MultLattice::validate(divisor_quantale(n).to_raw()).unwrap();
        }
    }

    #[test]
    fn powerset_frames() {
        assert_eq!(powerset_frame(0).len(), 1);
        assert!(is_isomorphic(&powerset_frame(1), &chain(2, ChainKind::Meet)));
        let b2 = powerset_frame(2);
        assert_eq!(b2.len(), 4);
        assert!((0..4).all(|x| b2.mul(x, x) == x));
    }

    #[test]
    fn chains() {
        let c = chain(3, ChainKind::Meet);
        assert_eq!(c.mul(1, 2), 1);
        let l = chain(3, ChainKind::Lukasiewicz);
        assert_eq!(l.mul(1, 1), 0);
        assert_eq!(l.mul(1, 2), 1);
        for n in 1..=8 {
            for kind in [ChainKind::Meet, ChainKind::Lukasiewicz] {
                MultLattice::validate(chain(n, kind).to_raw()).unwrap();
            }
        }
    }

    #[test]
    fn products() {
        let d12 = divisor_quantale(12);
        let one = chain(1, ChainKind::Meet);
        assert!(is_isomorphic(&product(&d12, &one), &d12));
        let c2 = chain(2, ChainKind::Meet);
        assert!(is_isomorphic(&product(&c2, &c2), &powerset_frame(2)));
        let p = product(&d12, &chain(3, ChainKind::Lukasiewicz));
        assert_eq!(p.len(), 18);
        MultLattice::validate(p.to_raw()).unwrap();
    }
}
