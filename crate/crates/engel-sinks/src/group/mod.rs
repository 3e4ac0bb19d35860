//! Concrete finite-group arithmetic over explicit multiplication tables.
//!
//! A [`GroupTable`] stores the full `order x order` product table with
//! element indices `0..order`, identity fixed at index `0`. Construction
//! goes through [`GroupTable::from_generators`] (breadth-first closure of
//! a permutation generating set) or [`GroupTable::from_cayley_table`]
//! (validation of a raw table). Every constructed table passes the Latin
//! square, identity, inverse, and associativity checks; associativity is
//! exhaustive up to order 256 and randomly sampled above that unless
//! exhaustive checking is forced.

mod quotient;
mod series;
mod subgroup;
mod sylow;

pub use quotient::Quotient;
pub use series::{Series, SeriesKind};
pub use subgroup::SubgroupHandle;

use std::collections::HashMap;
use std::collections::VecDeque;

use crate::error::GroupError;
use crate::perm::{Perm, PermGenSet};

/// Exhaustive associativity checking is `O(order^3)`; above this order a
/// random sample of `10 * order^2` triples is used instead.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;

/// Default cap on the order of a constructed group.
pub const DEFAULT_SIZE_CAP: usize = 20_000;

/// Construction knobs. `size_cap` bounds closure; `exhaustive_validation`
/// forces the full `O(n^3)` associativity scan regardless of order.
#[derive(Clone, Debug)]
pub struct BuildOptions {
    pub size_cap: usize,
    pub exhaustive_validation: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            size_cap: DEFAULT_SIZE_CAP,
            exhaustive_validation: false,
        }
    }
}

/// A finite group as an index-based multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    /// Flat row-major table: `mul[x * order + y]` is the index of `x * y`.
    mul: Vec<u32>,
    inv: Vec<u32>,
    /// Optional human-readable element names.
    labels: Option<Vec<String>>,
}

impl GroupTable {
    /// Closes a permutation generating set into a full table.
    ///
    /// Element 0 is the identity; the remaining elements are numbered in
    /// breadth-first discovery order, applying generators in input order.
    pub fn from_generators(gens: &PermGenSet, opts: &BuildOptions) -> Result<Self, GroupError> {
        let identity = Perm::identity(gens.degree);
        let mut perms: Vec<Perm> = vec![identity.clone()];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(identity, 0);
        // parent[i] = (earlier element, generator) with i = parent * gen
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
        let mut queue: VecDeque<usize> = VecDeque::new();
        queue.push_back(0);

        while let Some(x) = queue.pop_front() {
            for (gi, g) in gens.generators.iter().enumerate() {
                let product = perms[x].then(g);
                if !index.contains_key(&product) {
                    if perms.len() >= opts.size_cap {
                        return Err(GroupError::SizeCapExceeded { cap: opts.size_cap });
                    }
                    let id = perms.len();
                    index.insert(product.clone(), id);
                    perms.push(product);
                    parent.push((x, gi));
                    queue.push_back(id);
                }
            }
        }

        let order = perms.len();
        let mut mul = vec![0u32; order * order];
        // Generator columns by direct composition, the rest via BFS
        // parents: x * (p * g) = (x * p) * g.
        let mut gen_cols: Vec<Vec<u32>> = Vec::with_capacity(gens.generators.len());
        for g in &gens.generators {
            let mut col = vec![0u32; order];
            for (x, perm) in perms.iter().enumerate() {
                col[x] = index[&perm.then(g)] as u32;
            }
            gen_cols.push(col);
        }
        for x in 0..order {
            mul[x * order] = x as u32;
        }
        for y in 1..order {
            let (p, gi) = parent[y];
            let col = &gen_cols[gi];
            for x in 0..order {
                let xp = mul[x * order + p] as usize;
                mul[x * order + y] = col[xp];
            }
        }

        let labels = perms.iter().map(|p| p.cycle_string()).collect();
        let table = GroupTable::assemble(order, mul, Some(labels), opts)?;
        Ok(table)
    }

    /// Validates a raw Cayley table. Index 0 must be the identity.
    pub fn from_cayley_table(rows: &[Vec<usize>], opts: &BuildOptions) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::NotSquare {
                row: 0,
                len: 0,
                order: 0,
            });
        }
        if order > opts.size_cap {
            return Err(GroupError::SizeCapExceeded { cap: opts.size_cap });
        }
        let mut mul = vec![0u32; order * order];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotSquare {
                    row: r,
                    len: row.len(),
                    order,
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        order,
                    });
                }
                mul[r * order + c] = v as u32;
            }
        }
        GroupTable::assemble(order, mul, None, opts)
    }

    /// Shared tail of both constructors: derive inverses and validate.
    fn assemble(
        order: usize,
        mul: Vec<u32>,
        labels: Option<Vec<String>>,
        opts: &BuildOptions,
    ) -> Result<Self, GroupError> {
        let mut table = GroupTable {
            order,
            mul,
            inv: vec![0u32; order],
            labels,
        };
        table.validate_shape()?;
        table.derive_inverses()?;
        table.validate_associativity(opts.exhaustive_validation)?;
        Ok(table)
    }

    fn validate_shape(&self) -> Result<(), GroupError> {
        let n = self.order;
        // identity row and column
        for x in 0..n {
            if self.mul[x] as usize != x || self.mul[x * n] as usize != x {
                return Err(GroupError::IdentityViolation { x });
            }
        }
        // Latin square: rows and columns are permutations
        let mut seen = vec![usize::MAX; n];
        for r in 0..n {
            for c in 0..n {
                let v = self.mul[r * n + c] as usize;
                if seen[v] == r {
                    return Err(GroupError::NotLatin {
                        axis: "row",
                        index: r,
                        value: v,
                    });
                }
                seen[v] = r;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for c in 0..n {
            for r in 0..n {
                let v = self.mul[r * n + c] as usize;
                if seen[v] == c {
                    return Err(GroupError::NotLatin {
                        axis: "column",
                        index: c,
                        value: v,
                    });
                }
                seen[v] = c;
            }
        }
        Ok(())
    }

    fn derive_inverses(&mut self) -> Result<(), GroupError> {
        let n = self.order;
        for x in 0..n {
            let mut found = None;
            for y in 0..n {
                if self.mul[x * n + y] == 0 && self.mul[y * n + x] == 0 {
                    found = Some(y as u32);
                    break;
                }
            }
            self.inv[x] = found.ok_or(GroupError::MissingInverse { x })?;
        }
        Ok(())
    }

    fn validate_associativity(&self, force_exhaustive: bool) -> Result<(), GroupError> {
        let n = self.order;
        if force_exhaustive || n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(GroupError::AssociativityViolation { a, b, c });
                        }
                    }
                }
            }
        } else {
            // Deterministic sample of at least 10 * n^2 triples.
            let mut state = 0x9e37_79b9_97f4_a7c5u64 ^ (n as u64);
            let samples = 10usize.saturating_mul(n).saturating_mul(n);
            for _ in 0..samples {
                let a = (splitmix64(&mut state) % n as u64) as usize;
                let b = (splitmix64(&mut state) % n as u64) as usize;
                let c = (splitmix64(&mut state) % n as u64) as usize;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(GroupError::AssociativityViolation { a, b, c });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Index of `x * y`.
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn label(&self, x: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[x].as_str())
    }

    pub(crate) fn set_labels(&mut self, labels: Option<Vec<String>>) {
        self.labels = labels;
    }

    pub fn check_element(&self, x: usize) -> Result<(), GroupError> {
        if x >= self.order {
            return Err(GroupError::ElementOutOfRange {
                index: x,
                order: self.order,
            });
        }
        Ok(())
    }

    /// `x^-1 y^-1 x y`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    /// Conjugation `x^y = y^-1 x y`, consistent with
    /// `[x, y] = x^-1 * x^y`.
    #[inline]
    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// Left-normed iterated commutator `[x, g, g, ..., g]` with `n >= 1`
    /// copies of `g`.
    pub fn iterated_commutator(&self, x: usize, g: usize, n: usize) -> usize {
        assert!(n >= 1, "iterated commutator needs at least one step");
        let mut c = self.commutator(x, g);
        for _ in 1..n {
            c = self.commutator(c, g);
        }
        c
    }

    /// `x^e` by repeated squaring.
    pub fn power(&self, x: usize, e: usize) -> usize {
        let mut base = x;
        let mut exp = e;
        let mut acc = 0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative order of `x`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        for x in 0..self.order {
            for y in (x + 1)..self.order {
                if self.mul(x, y) != self.mul(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Exponent of the group: lcm of all element orders.
    pub fn exponent(&self) -> usize {
        let mut e = 1usize;
        for x in 0..self.order {
            e = lcm(e, self.element_order(x));
        }
        e
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorisation by trial division; fine at table scale.
pub fn prime_factors(n: usize) -> Vec<(usize, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The `p`-part `p^a` of `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut n = n;
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}
