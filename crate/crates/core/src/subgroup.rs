//! Subgroups as membership masks, and the operations that build them.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::mask::Mask;

/// Default cap on the number of subgroups `all_subgroups` may produce.
pub const DEFAULT_SUBGROUP_BUDGET: usize = 100_000;

/// A subgroup of some parent group: its members plus a generating set.
///
/// Equality and hashing only look at the members.
#[derive(Clone)]
pub struct Subgroup {
    mask: Mask,
    order: usize,
    gens: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mask.hash(state)
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order={}, {:?})", self.order, self.mask)
    }
}

/// Sort key used everywhere subgroups are listed: order first, then the
/// sorted element lists lexicographically.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.mask.cmp(&other.mask))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    pub fn trivial(group: &Group) -> Subgroup {
        Subgroup {
            mask: Mask::from_indices(group.order(), [0]),
            order: 1,
            gens: Vec::new(),
        }
    }

    pub fn full(group: &Group) -> Subgroup {
        Subgroup {
            mask: group.full_mask(),
            order: group.order(),
            gens: group.generators().to_vec(),
        }
    }

    /// Recovers a generating set for a mask already known to be a subgroup.
    pub fn from_mask(group: &Group, mask: Mask) -> Subgroup {
        let mut h = Subgroup::trivial(group);
        for x in mask.iter() {
            if !h.contains(x) {
                h = h.extend(group, x);
            }
            if h.order == mask.count() {
                break;
            }
        }
        debug_assert_eq!(h.mask, mask, "mask is not closed");
        h
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mask(&self) -> &Mask {
        &self.mask
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn elements(&self) -> Vec<usize> {
        self.mask.to_vec()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn is_abelian(&self, group: &Group) -> bool {
        self.gens.iter().enumerate().all(|(i, &a)| {
            self.gens[i + 1..]
                .iter()
                .all(|&b| group.commutes(a as usize, b as usize))
        })
    }

    /// The subgroup generated by `self` and `x`.
    ///
    /// Grows `self` one right coset `H*t` at a time: the union of cosets is
    /// closed under right multiplication by every generator once each coset
    /// representative has been multiplied by every generator.
    pub fn extend(&self, group: &Group, x: usize) -> Subgroup {
        if self.contains(x) {
            return self.clone();
        }
        let base: Vec<usize> = self.mask.iter().collect();
        let mut gens = self.gens.clone();
        gens.push(x as u32);
        let mut mask = self.mask.clone();
        let mut order = self.order;
        let mut reps = vec![0usize];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &s in &gens {
                let t = group.mul(r, s as usize);
                if !mask.contains(t) {
                    reps.push(t);
                    for &h in &base {
                        mask.insert(group.mul(h, t));
                    }
                    order += base.len();
                }
            }
            i += 1;
        }
        Subgroup { mask, order, gens }
    }

    /// `<self, other>`
    pub fn join(&self, group: &Group, other: &Subgroup) -> Subgroup {
        let (mut acc, add) = if self.order >= other.order {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for &g in &add.gens {
            acc = acc.extend(group, g as usize);
        }
        acc
    }

    pub fn meet(&self, group: &Group, other: &Subgroup) -> Subgroup {
        Subgroup::from_mask(group, self.mask.intersection(&other.mask))
    }

    /// The element set `{h*k}`; a subgroup only when the factors permute.
    pub fn set_product(&self, group: &Group, other: &Subgroup) -> Mask {
        let mut out = Mask::empty(group.order());
        let ks = other.elements();
        for h in self.mask.iter() {
            for &k in &ks {
                out.insert(group.mul(h, k));
            }
        }
        out
    }

    /// `g^-1 * H * g`
    pub fn conjugate_by(&self, group: &Group, g: usize) -> Subgroup {
        let mask = Mask::from_indices(group.order(), self.mask.iter().map(|h| group.conjugate(h, g)));
        Subgroup {
            mask,
            order: self.order,
            gens: self
                .gens
                .iter()
                .map(|&h| group.conjugate(h as usize, g) as u32)
                .collect(),
        }
    }
}

/// A deduplicated list of subgroups of one parent, sorted by `(order, mask)`.
#[derive(Debug, Clone)]
pub struct SubgroupSet {
    parent_label: String,
    parent_order: usize,
    subgroups: Vec<Subgroup>,
    index: HashMap<Mask, usize>,
}

impl SubgroupSet {
    pub fn new(group: &Group, mut subgroups: Vec<Subgroup>) -> SubgroupSet {
        subgroups.sort();
        subgroups.dedup();
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.mask.clone(), i))
            .collect();
        SubgroupSet {
            parent_label: group.display_label(),
            parent_order: group.order(),
            subgroups,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subgroup> {
        self.subgroups.iter()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn as_slice(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn position(&self, mask: &Mask) -> Option<usize> {
        self.index.get(mask).copied()
    }

    pub fn contains(&self, mask: &Mask) -> bool {
        self.index.contains_key(mask)
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// Each subgroup as a sorted element list.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.subgroups.iter().map(Subgroup::elements).collect()
    }

    pub fn to_serialized(&self) -> SerializedSubgroupSet {
        SerializedSubgroupSet {
            group: self.parent_label.clone(),
            order: self.parent_order,
            subgroups: self.to_lists(),
        }
    }
}

impl<'a> IntoIterator for &'a SubgroupSet {
    type Item = &'a Subgroup;
    type IntoIter = std::slice::Iter<'a, Subgroup>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SerializedSubgroupSet {
    pub group: String,
    pub order: usize,
    pub subgroups: Vec<Vec<usize>>,
}

/// Number of subspaces of `F_p^k`, the subgroup count of an elementary
/// abelian group of order `p^k`.
pub fn elementary_abelian_subgroup_count(p: usize, k: u32) -> u128 {
    let p = p as u128;
    (0..=k)
        .map(|j| {
            let mut num: u128 = 1;
            let mut den: u128 = 1;
            for i in 0..j {
                num *= p.pow(k - i) - 1;
                den *= p.pow(i + 1) - 1;
            }
            num / den
        })
        .sum()
}

impl Group {
    /// Least subgroup containing every element of `seed`.
    pub fn closure(&self, seed: impl IntoIterator<Item = usize>) -> Subgroup {
        seed.into_iter()
            .fold(Subgroup::trivial(self), |h, x| h.extend(self, x))
    }

    pub fn cyclic_subgroup(&self, x: usize) -> Subgroup {
        Subgroup::trivial(self).extend(self, x)
    }

    /// Every subgroup of the group.
    ///
    /// Starts from the cyclic subgroups and joins each discovered subgroup
    /// with every cyclic subgroup it does not already contain, until no new
    /// subgroup appears. Every subgroup is a join of cyclic subgroups, so
    /// the fixed point is complete.
    pub fn all_subgroups(&self, budget: usize) -> Result<SubgroupSet> {
        if let Some(projected) = self.projected_subgroup_count() {
            if projected > budget as u128 {
                return Err(Error::SubgroupBudgetExceeded {
                    count: projected.min(usize::MAX as u128) as usize,
                    cap: budget,
                });
            }
        }

        let mut found: Vec<Subgroup> = Vec::new();
        let mut seen: HashSet<Mask> = HashSet::new();
        for x in 0..self.order() {
            let c = self.cyclic_subgroup(x);
            if seen.insert(c.mask.clone()) {
                found.push(c);
            }
        }
        let cyclic: Vec<Subgroup> = found.iter().filter(|c| c.order > 1).cloned().collect();
        let mut i = 0;
        while i < found.len() {
            for c in &cyclic {
                if c.mask.is_subset(&found[i].mask) {
                    continue;
                }
                let joined = found[i].extend(self, c.gens[0] as usize);
                if seen.insert(joined.mask.clone()) {
                    if found.len() >= budget {
                        return Err(Error::SubgroupBudgetExceeded {
                            count: found.len() + 1,
                            cap: budget,
                        });
                    }
                    found.push(joined);
                }
            }
            i += 1;
        }
        Ok(SubgroupSet::new(self, found))
    }

    /// Exact subgroup count when it is known without enumeration
    /// (elementary abelian groups).
    pub fn projected_subgroup_count(&self) -> Option<u128> {
        let (p, k) = prime_power(self.order())?;
        (self.exponent() == p && self.is_abelian()).then(|| elementary_abelian_subgroup_count(p, k))
    }

    /// Elements commuting with every element of `h`.
    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let mask = Mask::from_indices(
            self.order(),
            (0..self.order()).filter(|&g| h.gens.iter().all(|&s| self.commutes(g, s as usize))),
        );
        Subgroup::from_mask(self, mask)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&Subgroup::full(self))
    }

    /// Least subgroup containing `h` and normalized by every element of
    /// `ambient` (given by generators).
    pub fn normal_closure_in(&self, ambient: &[u32], h: &Subgroup) -> Subgroup {
        let mut n = h.clone();
        loop {
            let mut changed = false;
            let mut i = 0;
            while i < n.gens.len() {
                let s = n.gens[i] as usize;
                for &g in ambient {
                    let c = self.conjugate(s, g as usize);
                    if !n.contains(c) {
                        n = n.extend(self, c);
                        changed = true;
                    }
                }
                i += 1;
            }
            if !changed {
                return n;
            }
        }
    }

    pub fn normal_closure(&self, h: &Subgroup) -> Subgroup {
        self.normal_closure_in(self.generators(), h)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        h.gens.iter().all(|&s| {
            self.generators()
                .iter()
                .all(|&g| h.contains(self.conjugate(s as usize, g as usize)))
        })
    }

    /// Follows `N_0 = G`, `N_{i+1} = normal closure of h in N_i` until it
    /// stabilizes; `h` is subnormal iff it stabilizes at `h`.
    pub fn is_subnormal(&self, h: &Subgroup) -> bool {
        let mut current = Subgroup::full(self);
        loop {
            let next = self.normal_closure_in(&current.gens, h);
            if next == current {
                return current == *h;
            }
            current = next;
        }
    }

    /// Distinct conjugates `g^-1 H g`, starting with `H` itself.
    pub fn conjugates(&self, h: &Subgroup) -> Vec<Subgroup> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in 0..self.order() {
            let k = h.conjugate_by(self, g);
            if seen.insert(k.mask.clone()) {
                out.push(k);
            }
        }
        out
    }

    /// True iff `HK = KH` as element sets for every conjugate `K` of `H`.
    pub fn permutes_with_conjugates(&self, h: &Subgroup) -> bool {
        self.conjugates(h)
            .iter()
            .all(|k| h.set_product(self, k) == k.set_product(self, h))
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class = Mask::empty(n);
            for g in 0..n {
                class.insert(self.conjugate(x, g));
            }
            for y in class.iter() {
                assigned[y] = true;
            }
            classes.push(class.to_vec());
        }
        classes
    }

    /// Every normal subgroup, as joins of normal closures of conjugacy
    /// classes. Does not need the full subgroup list.
    pub fn normal_subgroups(&self) -> SubgroupSet {
        let mut seen = HashSet::new();
        let mut found = Vec::new();
        for class in self.conjugacy_classes() {
            let n = self.normal_closure(&self.cyclic_subgroup(class[0]));
            if seen.insert(n.mask.clone()) {
                found.push(n);
            }
        }
        let generators = found.clone();
        let mut i = 0;
        while i < found.len() {
            for n in &generators {
                if n.mask.is_subset(&found[i].mask) {
                    continue;
                }
                let joined = found[i].join(self, n);
                if seen.insert(joined.mask.clone()) {
                    found.push(joined);
                }
            }
            i += 1;
        }
        SubgroupSet::new(self, found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{named, CatalogSpec};
    use crate::group::Limits;

    fn g(spec: &str) -> Group {
        named(&CatalogSpec::parse(spec).unwrap(), Limits::default()).unwrap()
    }

    fn of_order(set: &SubgroupSet, k: usize) -> Vec<&Subgroup> {
        set.iter().filter(|h| h.order() == k).collect()
    }

    #[test]
    fn closure_edge_cases() {
        let s3 = g("symmetric:3");
        assert!(s3.closure([]).is_trivial());
        assert_eq!(s3.closure(0..6).order(), 6);
        let three_cycle = (0..6).find(|&x| s3.elem_order(x) == 3).unwrap();
        let transposition = (0..6).find(|&x| s3.elem_order(x) == 2).unwrap();
        assert_eq!(s3.closure([three_cycle, transposition]).order(), 6);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(g("cyclic:6").all_subgroups(100).unwrap().len(), 4);
        assert_eq!(g("symmetric:3").all_subgroups(100).unwrap().len(), 6);
        assert_eq!(g("dihedral:4").all_subgroups(100).unwrap().len(), 10);
    }

    #[test]
    fn set_is_sorted_and_bounded() {
        let set = g("dihedral:4").all_subgroups(100).unwrap();
        assert!(set.get(0).is_trivial());
        assert_eq!(set.get(set.len() - 1).order(), 8);
        assert!(set.as_slice().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn budget_is_enforced() {
        let err = g("dihedral:4").all_subgroups(5).unwrap_err();
        assert!(matches!(err, Error::SubgroupBudgetExceeded { cap: 5, .. }));
        let big = named(
            &CatalogSpec::parse("elementary_abelian:2:8").unwrap(),
            Limits::default(),
        )
        .unwrap();
        match big.all_subgroups(DEFAULT_SUBGROUP_BUDGET) {
            Err(Error::SubgroupBudgetExceeded { count, .. }) => assert_eq!(count, 417_199),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn gaussian_counts() {
        assert_eq!(elementary_abelian_subgroup_count(2, 2), 5);
        assert_eq!(elementary_abelian_subgroup_count(2, 3), 16);
        assert_eq!(elementary_abelian_subgroup_count(3, 2), 6);
        assert_eq!(elementary_abelian_subgroup_count(2, 6), 2825);
    }

    #[test]
    fn centralizers_and_center() {
        let s3 = g("symmetric:3");
        let a3 = of_order(&s3.all_subgroups(100).unwrap(), 3)[0].clone();
        assert_eq!(s3.centralizer(&a3), a3);
        assert_eq!(s3.centralizer(&Subgroup::trivial(&s3)).order(), 6);
        assert!(s3.center().is_trivial());
        let q8 = g("dicyclic:2");
        let z = q8.center();
        assert_eq!(z.order(), 2);
        assert_eq!(of_order(&q8.all_subgroups(100).unwrap(), 2), vec![&z]);
        let c12 = g("cyclic:12");
        assert_eq!(c12.centralizer(&c12.cyclic_subgroup(4)).order(), 12);
    }

    #[test]
    fn normality_and_subnormality() {
        let s3 = g("symmetric:3");
        let subs = s3.all_subgroups(100).unwrap();
        let a3 = of_order(&subs, 3)[0];
        let t = of_order(&subs, 2)[0];
        assert!(s3.is_normal(a3));
        assert!(!s3.is_normal(t));
        assert!(s3.normal_closure(&Subgroup::trivial(&s3)).is_trivial());
        assert_eq!(s3.normal_closure(t).order(), 6);
        assert!(!s3.is_subnormal(t));
        assert!(s3.is_subnormal(&Subgroup::full(&s3)));
        assert!(!s3.permutes_with_conjugates(t));
        assert!(s3.permutes_with_conjugates(a3));

        let d8 = g("dihedral:4");
        let subs = d8.all_subgroups(100).unwrap();
        // Every order-2 subgroup lies in a Klein four subgroup, hence is
        // subnormal, even the non-normal reflections.
        let non_normal: Vec<_> = of_order(&subs, 2).into_iter().filter(|h| !d8.is_normal(h)).collect();
        assert_eq!(non_normal.len(), 4);
        assert!(non_normal.iter().all(|h| d8.is_subnormal(h)));
    }

    #[test]
    fn normal_subgroups_match_filtered_enumeration() {
        for spec in ["symmetric:4", "dihedral:6", "dicyclic:3", "product(symmetric:3,cyclic:2)"] {
            let grp = g(spec);
            let all = grp.all_subgroups(10_000).unwrap();
            let filtered: Vec<_> = all.iter().filter(|h| grp.is_normal(h)).cloned().collect();
            assert_eq!(grp.normal_subgroups().as_slice(), &filtered[..], "{spec}");
        }
    }

    #[test]
    fn conjugacy_class_sizes_of_s4() {
        let s4 = g("symmetric:4");
        let mut sizes: Vec<_> = s4.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }
}
