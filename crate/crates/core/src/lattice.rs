//! Finite multiplicative lattices (commutative unital quantales).
//!
//! A [`MultLattice`] is only ever produced by [`MultLattice::validate`], so
//! every value in circulation satisfies the lattice and quantale axioms.
//! Joins over arbitrary families reduce to binary joins plus the empty join
//! on a finite carrier. Distributivity of the product over arbitrary joins is
//! therefore checked as binary distributivity together with `x·0 = 0` (the
//! empty-join case); every other family is a finite iterate of the binary one.

use std::fmt;

use crate::classes::ClassCache;
use crate::element_set::{ElementSet, MAX_ELEMENTS};
use crate::error::{Axiom, LatticeError};

/// Unvalidated tables, as read from a file or produced by a builder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawLattice {
    /// `leq[i][j]` is true iff element `i` lies below element `j`.
    pub leq: Vec<Vec<bool>>,
    pub mul: Vec<Vec<usize>>,
    pub names: Option<Vec<String>>,
}

pub struct MultLattice {
    n: usize,
    leq: Vec<bool>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    join_tab: Vec<usize>,
    meet_tab: Vec<usize>,
    mul_tab: Vec<usize>,
    bot: usize,
    top: usize,
    names: Option<Vec<String>>,
    pub(crate) cache: ClassCache,
}

impl MultLattice {
    /// Checks that `raw` describes a complete lattice with a commutative,
    /// associative, join-distributive product having the top as unit.
    pub fn validate(raw: RawLattice) -> Result<MultLattice, LatticeError> {
        let n = raw.leq.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(LatticeError::TooLarge { n, max: MAX_ELEMENTS });
        }
        for (row, r) in raw.leq.iter().enumerate() {
            if r.len() != n {
                return Err(LatticeError::DimensionMismatch {
                    table: "order",
                    row,
                    expected: n,
                    found: r.len(),
                });
            }
        }
        if raw.mul.len() != n {
            return Err(LatticeError::DimensionMismatch {
                table: "mul",
                row: raw.mul.len(),
                expected: n,
                found: raw.mul.len(),
            });
        }
        for (row, r) in raw.mul.iter().enumerate() {
            if r.len() != n {
                return Err(LatticeError::DimensionMismatch {
                    table: "mul",
                    row,
                    expected: n,
                    found: r.len(),
                });
            }
            if let Some(col) = r.iter().position(|&v| v >= n) {
                return Err(LatticeError::IndexOutOfRange { row, col, value: r[col], n });
            }
        }
        if let Some(names) = &raw.names {
            if names.len() != n {
                return Err(LatticeError::DimensionMismatch {
                    table: "names",
                    row: 0,
                    expected: n,
                    found: names.len(),
                });
            }
        }

        let leq: Vec<bool> = raw.leq.iter().flatten().copied().collect();
        let le = |i: usize, j: usize| leq[i * n + j];
        for i in 0..n {
            if !le(i, i) {
                return Err(LatticeError::NotAPartialOrder {
                    property: "reflexivity",
                    witness: vec![i],
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && le(i, j) && le(j, i) {
                    return Err(LatticeError::NotAPartialOrder {
                        property: "antisymmetry",
                        witness: vec![i, j],
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !le(i, j) {
                    continue;
                }
                for k in 0..n {
                    if le(j, k) && !le(i, k) {
                        return Err(LatticeError::NotAPartialOrder {
                            property: "transitivity",
                            witness: vec![i, j, k],
                        });
                    }
                }
            }
        }

        let mut up = vec![ElementSet::EMPTY; n];
        let mut down = vec![ElementSet::EMPTY; n];
        for i in 0..n {
            for j in 0..n {
                if le(i, j) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }

        // least element of a set of bounds, if the set has one
        let least = |cands: ElementSet| cands.iter().find(|&c| cands.is_subset(up[c]));
        let greatest = |cands: ElementSet| cands.iter().find(|&c| cands.is_subset(down[c]));

        let mut join_tab = vec![0; n * n];
        let mut meet_tab = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                join_tab[i * n + j] = least(up[i].intersection(up[j]))
                    .ok_or(LatticeError::NotALattice { x: i, y: j, missing: "join" })?;
                meet_tab[i * n + j] = greatest(down[i].intersection(down[j]))
                    .ok_or(LatticeError::NotALattice { x: i, y: j, missing: "meet" })?;
            }
        }
        let all = ElementSet::full(n);
        let bot = least(all).ok_or(LatticeError::NotALattice { x: 0, y: 0, missing: "bottom" })?;
        let top = greatest(all).ok_or(LatticeError::NotALattice { x: 0, y: 0, missing: "top" })?;

        let mul_tab: Vec<usize> = raw.mul.iter().flatten().copied().collect();
        let m = |i: usize, j: usize| mul_tab[i * n + j];
        let join = |i: usize, j: usize| join_tab[i * n + j];
        let violation = |axiom, witness: [usize; 3]| LatticeError::AxiomViolation { axiom, witness };

        for x in 0..n {
            for y in 0..n {
                if m(x, y) != m(y, x) {
                    return Err(violation(Axiom::Commutativity, [x, y, y]));
                }
            }
        }
        for x in 0..n {
            if m(x, top) != x {
                return Err(violation(Axiom::Unit, [x, top, top]));
            }
        }
        for x in 0..n {
            if m(x, bot) != bot {
                return Err(violation(Axiom::EmptyJoin, [x, bot, bot]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m(x, m(y, z)) != m(m(x, y), z) {
                        return Err(violation(Axiom::Associativity, [x, y, z]));
                    }
                    if m(x, join(y, z)) != join(m(x, y), m(x, z)) {
                        return Err(violation(Axiom::Distributivity, [x, y, z]));
                    }
                }
            }
        }

        Ok(MultLattice {
            n,
            leq,
            up,
            down,
            join_tab,
            meet_tab,
            mul_tab,
            bot,
            top,
            names: raw.names,
            cache: ClassCache::default(),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// A validated lattice always has at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// `{j : i ≤ j}`
    pub fn up_set(&self, i: usize) -> ElementSet {
        self.up[i]
    }

    /// `{j : j ≤ i}`
    pub fn down_set(&self, i: usize) -> ElementSet {
        self.down[i]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join_tab[i * self.n + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet_tab[i * self.n + j]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul_tab[i * self.n + j]
    }

    /// Least upper bound of `s`; the empty join is the bottom.
    pub fn join_of(&self, s: ElementSet) -> usize {
        s.iter().fold(self.bot, |acc, x| self.join(acc, x))
    }

    /// Greatest lower bound of `s`; the empty meet is the top.
    pub fn meet_of(&self, s: ElementSet) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `x^k` for `k ≥ 1`.
    pub fn power(&self, x: usize, k: u32) -> Result<usize, LatticeError> {
        if k == 0 {
            return Err(LatticeError::ZeroExponent);
        }
        Ok((1..k).fold(x, |acc, _| self.mul(acc, x)))
    }

    /// The limit of the descending sequence `x ≥ x² ≥ x³ ≥ …`.
    ///
    /// Powers decrease because `x·y ≤ x`, so the sequence stabilizes within
    /// `n` steps.
    pub fn stable_power(&self, x: usize) -> usize {
        let mut p = x;
        loop {
            let next = self.mul(p, x);
            if next == p {
                return p;
            }
            p = next;
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of element `i`: its name if present, else its index.
    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => i.to_string(),
        }
    }

    /// Looks an element up by name or by decimal index.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|s| s == label) {
                return Some(i);
            }
        }
        label.parse::<usize>().ok().filter(|&i| i < self.n)
    }

    pub fn format_set(&self, s: ElementSet) -> String {
        let labels: Vec<String> = s.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", labels.join(","))
    }

    /// Rebuilds the unvalidated tables.
    pub fn to_raw(&self) -> RawLattice {
        let n = self.n;
        RawLattice {
            leq: (0..n).map(|i| (0..n).map(|j| self.leq(i, j)).collect()).collect(),
            mul: (0..n).map(|i| (0..n).map(|j| self.mul(i, j)).collect()).collect(),
            names: self.names.clone(),
        }
    }

    /// Same lattice with different display labels.
    pub fn with_names(&self, names: Option<Vec<String>>) -> Result<MultLattice, LatticeError> {
        let mut raw = self.to_raw();
        raw.names = names;
        MultLattice::validate(raw)
    }

    /// Pairs `(lo, hi)` where `hi` covers `lo`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for lo in 0..self.n {
            for hi in 0..self.n {
                if self.lt(lo, hi) {
                    let between = self.up[lo].intersection(self.down[hi]);
                    if between.len() == 2 {
                        out.push((lo, hi));
                    }
                }
            }
        }
        out
    }

    /// Length of the longest chain from the bottom to `i`.
    pub fn rank(&self, i: usize) -> usize {
        let mut rank = vec![usize::MAX; self.n];
        self.rank_rec(i, &mut rank)
    }

    fn rank_rec(&self, i: usize, memo: &mut [usize]) -> usize {
        if memo[i] != usize::MAX {
            return memo[i];
        }
        let mut best = 0;
        for j in self.down[i].iter() {
            if j != i {
                best = best.max(self.rank_rec(j, memo) + 1);
            }
        }
        memo[i] = best;
        best
    }

    /// Definitional compactness: whenever `c ≤ ⋁S`, some finite `F ⊆ S` has
    /// `c ≤ ⋁F`.
    ///
    /// Subsets are scanned exhaustively for carriers of at most
    /// [`COMPACT_SCAN_LIMIT`] elements. For each covering subset an
    /// irredundant finite subfamily is extracted greedily and re-checked.
    /// Larger carriers are decided by the same argument without the scan:
    /// every subset of a finite carrier is itself a finite subfamily.
    pub fn is_compact_element(&self, c: usize) -> bool {
        if self.n > COMPACT_SCAN_LIMIT {
            return true;
        }
        for bits in 0u128..(1u128 << self.n) {
            let s = ElementSet::from_bits(bits);
            if !self.leq(c, self.join_of(s)) {
                continue;
            }
            let mut f = s;
            for x in s.iter() {
                let mut smaller = f;
                smaller.remove(x);
                if self.leq(c, self.join_of(smaller)) {
                    f = smaller;
                }
            }
            if !self.leq(c, self.join_of(f)) {
                return false;
            }
        }
        true
    }

    /// Every element is the join of the compact elements below it.
    pub fn is_compactly_generated(&self) -> bool {
        let compact = crate::classes::classify(self, &crate::classes::ElementClass::CompactElems);
        (0..self.n).all(|x| self.join_of(compact.intersection(self.down[x])) == x)
    }

    /// Maximal proper elements.
    pub fn coatoms(&self) -> ElementSet {
        (0..self.n)
            .filter(|&m| m != self.top && self.up[m].len() == 2)
            .collect()
    }

    /// Every proper element lies below a maximal element.
    pub fn is_max_bounded(&self) -> bool {
        let max = self.coatoms();
        (0..self.n)
            .filter(|&x| x != self.top)
            .all(|x| !self.up[x].intersection(max).is_empty())
    }
}

/// Largest carrier for which [`MultLattice::is_compact_element`] scans all subsets.
pub const COMPACT_SCAN_LIMIT: usize = 16;

impl Clone for MultLattice {
    fn clone(&self) -> Self {
        MultLattice {
            n: self.n,
            leq: self.leq.clone(),
            up: self.up.clone(),
            down: self.down.clone(),
            join_tab: self.join_tab.clone(),
            meet_tab: self.meet_tab.clone(),
            mul_tab: self.mul_tab.clone(),
            bot: self.bot,
            top: self.top,
            names: self.names.clone(),
            cache: ClassCache::default(),
        }
    }
}

impl PartialEq for MultLattice {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.leq == other.leq
            && self.mul_tab == other.mul_tab
            && self.names == other.names
    }
}

impl Eq for MultLattice {}

impl fmt::Debug for MultLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultLattice")
            .field("n", &self.n)
            .field("bot", &self.bot)
            .field("top", &self.top)
            .field("names", &self.names)
            .field("mul", &self.mul_tab)
            .finish()
    }
}
