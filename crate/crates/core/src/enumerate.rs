//! Exhaustive enumeration of small quantales, up to isomorphism.
//!
//! Lattice orders are generated as posets on the inner elements (everything
//! except bottom and top), closed off with a bottom and a top, filtered for
//! the lattice property and deduplicated by canonical form. For each order,
//! every multiplication table is found by backtracking over the entries
//! strictly between bottom and top, then deduplicated under the lattice's
//! automorphisms.

use std::collections::BTreeSet;

use crate::error::LatticeError;
use crate::lattice::{MultLattice, RawLattice};

/// Largest carrier [`enumerate_lattices`] accepts by default.
pub const DEFAULT_MAX_SIZE: usize = 6;

/// Hard ceiling for [`enumerate_lattices_with_limit`].
pub const ABSOLUTE_MAX_SIZE: usize = 7;

/// Every quantale on at most `max_n` elements, up to isomorphism, in a
/// deterministic order (by size, then canonical encoding).
pub fn enumerate_lattices(max_n: usize) -> Result<Vec<MultLattice>, LatticeError> {
    enumerate_lattices_with_limit(max_n, DEFAULT_MAX_SIZE)
}

/// As [`enumerate_lattices`], with the size bound overridden (at most
/// [`ABSOLUTE_MAX_SIZE`]).
pub fn enumerate_lattices_with_limit(
    max_n: usize,
    limit: usize,
) -> Result<Vec<MultLattice>, LatticeError> {
    let limit = limit.min(ABSOLUTE_MAX_SIZE);
    if max_n > limit {
        return Err(LatticeError::BoundExceeded { requested: max_n, limit });
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        for leq in lattice_orders(n) {
            for mul in quantale_tables(&leq) {
                let raw = RawLattice { leq: leq.clone(), mul, names: None };
                out.push(MultLattice::validate(raw).expect("enumerated table failed validation"));
            }
        }
    }
    Ok(out)
}

type Order = Vec<Vec<bool>>;

/// All lattice orders on `n` elements up to isomorphism, as canonical
/// relation matrices with element 0 the bottom and `n-1` the top.
pub fn lattice_orders(n: usize) -> Vec<Order> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![vec![vec![true]]];
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> =
        (0..m).flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << pairs.len()) {
        let mut inner = vec![vec![false; m]; m];
        for i in 0..m {
            inner[i][i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bits & (1 << k) != 0 {
                inner[i][j] = true;
            }
        }
        if !is_partial_order(&inner) {
            continue;
        }
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[0][i] = true;
            leq[i][n - 1] = true;
        }
        for i in 0..m {
            for j in 0..m {
                leq[i + 1][j + 1] = inner[i][j];
            }
        }
        if !is_lattice(&leq) {
            continue;
        }
        let (code, perm) = canonical_order(&leq);
        if seen.insert(code) {
            out.push(permute_order(&leq, &perm));
        }
    }
    out.sort_by_key(|leq| encode_order(leq));
    out
}

fn is_partial_order(r: &Order) -> bool {
    let m = r.len();
    for i in 0..m {
        for j in 0..m {
            if i != j && r[i][j] && r[j][i] {
                return false;
            }
            if r[i][j] {
                for k in 0..m {
                    if r[j][k] && !r[i][k] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn is_lattice(leq: &Order) -> bool {
    let n = leq.len();
    for i in 0..n {
        for j in 0..n {
            let ubs: Vec<usize> = (0..n).filter(|&u| leq[i][u] && leq[j][u]).collect();
            if !ubs.iter().any(|&u| ubs.iter().all(|&w| leq[u][w])) {
                return false;
            }
            let lbs: Vec<usize> = (0..n).filter(|&l| leq[l][i] && leq[l][j]).collect();
            if !lbs.iter().any(|&l| lbs.iter().all(|&w| leq[w][l])) {
                return false;
            }
        }
    }
    true
}

fn encode_order(leq: &Order) -> Vec<u8> {
    leq.iter().flatten().map(|&b| b as u8).collect()
}

/// `perm[old] = new`
fn permute_order(leq: &Order, perm: &[usize]) -> Order {
    let n = leq.len();
    let mut out = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[perm[i]][perm[j]] = leq[i][j];
        }
    }
    out
}

fn permute_mul(mul: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
    let n = mul.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[perm[i]][perm[j]] = perm[mul[i][j]];
        }
    }
    out
}

/// Permutations of `0..n` that fix `fixed_lo` and `fixed_hi`.
fn inner_permutations(n: usize, fixed_lo: usize, fixed_hi: usize) -> Vec<Vec<usize>> {
    let inner: Vec<usize> = (0..n).filter(|&i| i != fixed_lo && i != fixed_hi).collect();
    let mut out = Vec::new();
    let mut images = inner.clone();
    permute_rec(&mut images, 0, &mut |imgs| {
        let mut perm: Vec<usize> = (0..n).collect();
        for (k, &old) in inner.iter().enumerate() {
            perm[old] = imgs[k];
        }
        out.push(perm);
    });
    out
}

fn permute_rec(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute_rec(v, k + 1, f);
        v.swap(k, i);
    }
}

fn canonical_order(leq: &Order) -> (Vec<u8>, Vec<usize>) {
    let n = leq.len();
    inner_permutations(n, 0, n - 1)
        .into_iter()
        .map(|p| (encode_order(&permute_order(leq, &p)), p))
        .min()
        .expect("at least the identity permutation")
}

/// Canonical encoding of a quantale: the lexicographically least
/// `(order, product)` encoding over all relabelings that fix bottom and top.
///
/// Cost is factorial in the number of inner elements; meant for the
/// enumeration range (`n ≤ 8`).
pub fn canonical_form(l: &MultLattice) -> Vec<u8> {
    let raw = l.to_raw();
    let n = l.len();
    inner_permutations(n, l.bot(), l.top())
        .into_iter()
        .map(|mut p| {
            // send bottom to 0 and top to n-1 so equal structures line up
            if n > 1 {
                p[l.bot()] = 0;
                p[l.top()] = n - 1;
                let mut next = 1;
                let inner: Vec<usize> = (0..n).filter(|&i| i != l.bot() && i != l.top()).collect();
                let mut order: Vec<usize> = inner.clone();
                order.sort_by_key(|&i| p[i]);
                for i in order {
                    p[i] = next;
                    next += 1;
                }
            }
            let mut code = encode_order(&permute_order(&raw.leq, &p));
            code.extend(permute_mul(&raw.mul, &p).iter().flatten().map(|&v| v as u8));
            code
        })
        .min()
        .unwrap()
}

/// Every valid multiplication on the lattice order `leq` (bottom 0, top
/// `n-1`), one per isomorphism class under order automorphisms.
pub fn quantale_tables(leq: &Order) -> Vec<Vec<Vec<usize>>> {
    let n = leq.len();
    if n == 1 {
        return vec![vec![vec![0]]];
    }
    let (bot, top) = (0, n - 1);
    let join = |i: usize, j: usize| {
        (0..n)
            .filter(|&u| leq[i][u] && leq[j][u])
            .find(|&u| (0..n).all(|w| !(leq[i][w] && leq[j][w]) || leq[u][w]))
            .unwrap()
    };
    let meet = |i: usize, j: usize| {
        (0..n)
            .filter(|&l| leq[l][i] && leq[l][j])
            .find(|&l| (0..n).all(|w| !(leq[w][i] && leq[w][j]) || leq[w][l]))
            .unwrap()
    };
    let join_tab: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| join(i, j)).collect()).collect();

    let mut table = vec![vec![None; n]; n];
    for x in 0..n {
        table[x][bot] = Some(bot);
        table[bot][x] = Some(bot);
        table[x][top] = Some(x);
        table[top][x] = Some(x);
    }
    let free: Vec<(usize, usize)> = (1..n - 1).flat_map(|i| (i..n - 1).map(move |j| (i, j))).collect();
    let domains: Vec<Vec<usize>> = free
        .iter()
        .map(|&(i, j)| {
            let bound = meet(i, j);
            (0..n).filter(|&z| leq[z][bound]).collect()
        })
        .collect();

    let mut found = Vec::new();
    search(&mut table, &free, &domains, 0, &join_tab, &mut found);

    let automorphisms: Vec<Vec<usize>> = inner_permutations(n, bot, top)
        .into_iter()
        .filter(|p| permute_order(leq, p) == *leq)
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mul in found {
        let code = automorphisms
            .iter()
            .map(|p| permute_mul(&mul, p))
            .min()
            .unwrap();
        if seen.insert(code.clone()) {
            out.push(code);
        }
    }
    out.sort();
    out
}

fn search(
    table: &mut Vec<Vec<Option<usize>>>,
    free: &[(usize, usize)],
    domains: &[Vec<usize>],
    k: usize,
    join: &[Vec<usize>],
    found: &mut Vec<Vec<Vec<usize>>>,
) {
    if k == free.len() {
        found.push(table.iter().map(|r| r.iter().map(|v| v.unwrap()).collect()).collect());
        return;
    }
    let (i, j) = free[k];
    for &z in &domains[k] {
        table[i][j] = Some(z);
        table[j][i] = Some(z);
        if consistent(table, join) {
            search(table, free, domains, k + 1, join, found);
        }
    }
    table[i][j] = None;
    table[j][i] = None;
}

/// Distributivity and associativity on every fully assigned instance.
fn consistent(t: &[Vec<Option<usize>>], join: &[Vec<usize>]) -> bool {
    let n = t.len();
    for x in 0..n {
        for y in 0..n {
            let Some(xy) = t[x][y] else { continue };
            for z in 0..n {
                if let (Some(xz), Some(xyz)) = (t[x][z], t[x][join[y][z]]) {
                    if join[xy][xz] != xyz {
                        return false;
                    }
                }
                if let (Some(yz), Some(l)) = (t[y][z], t[xy][z]) {
                    if let Some(r) = t[x][yz] {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Structure-preserving bijection search between two quantales.
pub fn is_isomorphic(a: &MultLattice, b: &MultLattice) -> bool {
    find_isomorphism(a, b).is_some()
}

/// A bijection `f` with `x ≤ y ⇔ f(x) ≤ f(y)` and `f(x·y) = f(x)·f(y)`.
pub fn find_isomorphism(a: &MultLattice, b: &MultLattice) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let sig = |l: &MultLattice, i: usize| {
        (l.up_set(i).len(), l.down_set(i).len(), l.mul(i, i) == i)
    };
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // bottom and top are forced
    f[a.bot()] = b.bot();
    used[b.bot()] = true;
    if n > 1 {
        f[a.top()] = b.top();
        used[b.top()] = true;
    }
    let order: Vec<usize> = (0..n).filter(|&i| f[i] == usize::MAX).collect();
    fn rec(
        a: &MultLattice,
        b: &MultLattice,
        order: &[usize],
        k: usize,
        f: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sig: &dyn Fn(&MultLattice, usize) -> (usize, usize, bool),
    ) -> bool {
        if k == order.len() {
            let n = a.len();
            return (0..n).all(|x| (0..n).all(|y| f[a.mul(x, y)] == b.mul(f[x], f[y])));
        }
        let x = order[k];
        for y in 0..b.len() {
            if used[y] || sig(a, x) != sig(b, y) {
                continue;
            }
            let ok = (0..a.len()).filter(|&z| f[z] != usize::MAX).all(|z| {
                a.leq(x, z) == b.leq(y, f[z]) && a.leq(z, x) == b.leq(f[z], y)
            });
            if !ok {
                continue;
            }
            f[x] = y;
            used[y] = true;
            if rec(a, b, order, k + 1, f, used, sig) {
                return true;
            }
            f[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    if rec(a, b, &order, 0, &mut f, &mut used, &sig) {
        Some(f)
    } else {
        None
    }
}
