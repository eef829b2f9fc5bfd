//! Finite groups stored as validated multiplication tables.
//!
//! Elements are indices `0..order` and the identity is always index 0.
//! Products are looked up in a flat row-major table, so `mul(a, b)` is a
//! single array access.

use std::collections::HashMap;
use std::collections::VecDeque;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::subgroup::Subgroup;

/// Default cap on the order of any constructed group.
pub const DEFAULT_MAX_ORDER: usize = 512;

/// Orders up to this bound get the full `n^3` associativity check.
const FULL_ASSOCIATIVITY_LIMIT: usize = 256;

const RANDOM_ASSOCIATIVITY_SAMPLES: usize = 4096;

/// Construction limits shared by every group constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl Limits {
    pub fn with_max_order(max_order: usize) -> Self {
        Limits { max_order }
    }

    fn check(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            Err(Error::OrderLimitExceeded {
                limit: self.max_order,
            })
        } else {
            Ok(())
        }
    }
}

/// A finite group given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    elem_order: Vec<u32>,
    gens: Vec<u32>,
    label: Option<String>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// Permutation generators on `0..degree`, each given as an image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGenSet {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl PermGenSet {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Self {
        PermGenSet { degree, generators }
    }

    fn validate(&self) -> Result<()> {
        if self.degree == 0 {
            return Err(Error::BadPermutation {
                index: 0,
                reason: "degree must be positive".into(),
            });
        }
        for (index, g) in self.generators.iter().enumerate() {
            if g.len() != self.degree {
                return Err(Error::BadPermutation {
                    index,
                    reason: format!("has {} images, expected {}", g.len(), self.degree),
                });
            }
            let mut seen = vec![false; self.degree];
            for &x in g {
                if x >= self.degree || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::BadPermutation {
                        index,
                        reason: format!("image {x} is out of range or repeated"),
                    });
                }
            }
        }
        Ok(())
    }
}

/// A quotient group together with the surjection from the parent.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Group,
    /// `coset_of[g]` is the quotient element containing `g`.
    pub coset_of: Vec<usize>,
}

impl Group {
    /// Validates a square Cayley table whose identity is element 0.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotSquare {
                row: 0,
                len: 0,
                order: 0,
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: entries.len(),
                    order: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::NotClosed {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
                flat.push(value as u32);
            }
        }
        Group::from_flat(n, flat)
    }

    /// Builds and validates a group on `0..order` from a product function.
    pub fn from_fn(order: usize, mut mul: impl FnMut(usize, usize) -> usize) -> Result<Group> {
        let mut flat = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let value = mul(a, b);
                if value >= order {
                    return Err(Error::NotClosed {
                        row: a,
                        col: b,
                        value,
                        order,
                    });
                }
                flat.push(value as u32);
            }
        }
        Group::from_flat(order, flat)
    }

    fn from_flat(n: usize, table: Vec<u32>) -> Result<Group> {
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for i in 0..n {
            if at(0, i) != i || at(i, 0) != i {
                return Err(Error::NoIdentity { index: i });
            }
        }
        let mut inverse = vec![0u32; n];
        for (i, slot) in inverse.iter_mut().enumerate() {
            let mut found = None;
            for x in 0..n {
                if at(i, x) == 0 {
                    if found.is_some() {
                        return Err(Error::NoInverse { element: i });
                    }
                    found = Some(x);
                }
            }
            match found {
                Some(x) if at(x, i) == 0 => *slot = x as u32,
                _ => return Err(Error::NoInverse { element: i }),
            }
        }
        let gens = magma_generators(n, &table);
        check_associative(n, &table, &gens)?;

        let mut elem_order = vec![1u32; n];
        for (i, slot) in elem_order.iter_mut().enumerate() {
            let mut x = i;
            let mut k: usize = 1;
            while x != 0 {
                x = at(x, i);
                k += 1;
                if k > n + 1 {
                    // Unreachable for an associative table with inverses.
                    return Err(Error::NoInverse { element: i });
                }
            }
            *slot = k as u32;
        }

        Ok(Group {
            order: n,
            table,
            inverse,
            elem_order,
            gens,
            label: None,
        })
    }

    /// Closure of permutation generators under composition.
    ///
    /// Elements are numbered in breadth-first discovery order from the
    /// identity, applying generators in the listed order. The product
    /// `x * y` means "apply `x`, then `y`".
    pub fn from_permutation_generators(gens: &PermGenSet, limits: Limits) -> Result<Group> {
        gens.validate()?;
        let degree = gens.degree;
        let identity: Vec<u32> = (0..degree as u32).collect();
        let generators: Vec<Vec<u32>> = gens
            .generators
            .iter()
            .map(|g| g.iter().map(|&x| x as u32).collect())
            .collect();

        let compose = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().map(|&i| y[i as usize]).collect() };

        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elements.len() {
            for g in &generators {
                let next = compose(&elements[head], g);
                if !index.contains_key(&next) {
                    limits.check(elements.len() + 1)?;
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
            head += 1;
        }

        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&compose(a, b)]);
            }
        }
        Group::from_flat(n, table)
    }

    /// Direct product with pairs `(a, b)` stored at index `a * |other| + b`.
    pub fn direct_product(&self, other: &Group, limits: Limits) -> Result<Group> {
        let m = other.order;
        let n = self
            .order
            .checked_mul(m)
            .ok_or(Error::OrderLimitExceeded {
                limit: limits.max_order,
            })?;
        limits.check(n)?;
        let g = Group::from_fn(n, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })?;
        let label = match (&self.label, &other.label) {
            (Some(a), Some(b)) => Some(format!("product({a},{b})")),
            _ => None,
        };
        Ok(g.with_label_opt(label))
    }

    /// Quotient by a normal subgroup, on left cosets numbered by their
    /// smallest element.
    pub fn quotient(&self, normal: &Subgroup) -> Result<Quotient> {
        for &s in normal.gens() {
            for &g in &self.gens {
                let c = self.conjugate(s as usize, g as usize);
                if !normal.contains(c) {
                    return Err(Error::NotNormal {
                        element: s as usize,
                        by: g as usize,
                    });
                }
            }
        }
        let members: Vec<usize> = normal.mask().iter().collect();
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &h in &members {
                coset_of[self.mul(g, h)] = id;
            }
        }
        let k = reps.len();
        let group = Group::from_fn(k, |a, b| coset_of[self.mul(reps[a], reps[b])])?;
        let label = self.label.as_ref().map(|l| format!("{l}/N"));
        Ok(Quotient {
            group: group.with_label_opt(label),
            coset_of,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    fn with_label_opt(mut self, label: Option<String>) -> Self {
        self.label = label;
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn display_label(&self) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| format!("group{}", self.order))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g^-1 * x * g`
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a^-1 * b^-1 * a * b`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn elem_order(&self, a: usize) -> usize {
        self.elem_order[a] as usize
    }

    pub fn elem_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.elem_order.iter().map(|&k| k as usize)
    }

    /// A small generating set, found greedily in index order.
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, &a)| {
            self.gens[i + 1..]
                .iter()
                .all(|&b| self.commutes(a as usize, b as usize))
        })
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.elem_orders().fold(1, lcm)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.table.chunks(self.order)
    }

    pub fn full_mask(&self) -> Mask {
        Mask::full(self.order)
    }

    /// Powers of `a`, starting from the identity.
    pub fn powers(&self, a: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = a;
        while x != 0 {
            out.push(x);
            x = self.mul(x, a);
        }
        out
    }
}

/// Greedy generating set: each new generator is the smallest element not
/// yet reachable by right multiplication from the identity.
fn magma_generators(n: usize, table: &[u32]) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut count = 1;
    while count < n {
        let g = reached.iter().position(|&r| !r).unwrap();
        gens.push(g as u32);
        // Re-run the search from every reached element with all generators.
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| reached[i]).collect();
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = table[x * n + s as usize] as usize;
                if !reached[y] {
                    reached[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
    }
    gens
}

/// Full triple loop for small tables. Larger tables get a random sample
/// and then Light's test, which only needs `(x*s)*y == x*(s*y)` for `s`
/// in a generating set.
fn check_associative(n: usize, table: &[u32], gens: &[u32]) -> Result<()> {
    let at = |a: usize, b: usize| table[a * n + b] as usize;
    let fail = |a, b, c| Err(Error::NotAssociative { a, b, c });
    if n <= FULL_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return fail(a, b, c);
                    }
                }
            }
        }
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_ASSOCIATIVITY_SAMPLES {
        let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        if at(at(a, b), c) != at(a, at(b, c)) {
            return fail(a, b, c);
        }
    }
    for &s in gens {
        let s = s as usize;
        for x in 0..n {
            let xs = at(x, s);
            for y in 0..n {
                if at(xs, y) != at(x, at(s, y)) {
                    return fail(x, s, y);
                }
            }
        }
    }
    Ok(())
}
