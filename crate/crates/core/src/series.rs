//! Central series, commutator subgroups and the structural subgroups
//! built from them.

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::mask::Mask;
use crate::subgroup::Subgroup;

/// Upper and lower central series of a group.
///
/// Both chains list distinct terms only and stop where the series
/// stabilizes.
#[derive(Debug, Clone)]
pub struct CentralSeries {
    /// `Z_1 = Z(G) < Z_2 < ...`
    pub ascending: Vec<Subgroup>,
    /// `G = γ_1 > γ_2 = G' > ...`
    pub descending: Vec<Subgroup>,
    /// Defined iff the lower series reaches the trivial subgroup.
    pub nilpotency_class: Option<usize>,
}

impl CentralSeries {
    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }

    pub fn center(&self) -> &Subgroup {
        &self.ascending[0]
    }

    pub fn second_center(&self) -> &Subgroup {
        self.ascending.get(1).unwrap_or(&self.ascending[0])
    }

    pub fn derived_subgroup(&self) -> &Subgroup {
        self.descending.get(1).unwrap_or(&self.descending[0])
    }

    /// Least `i` with `Z_i = G`, counting `Z_0 = 1`; `None` if the upper
    /// series stops short of the group.
    pub fn upper_length(&self, group_order: usize) -> Option<usize> {
        if group_order == 1 {
            return Some(0);
        }
        self.ascending
            .iter()
            .position(|z| z.order() == group_order)
            .map(|i| i + 1)
    }
}

impl Group {
    /// `[A, B]`, the subgroup generated by commutators `[a, b]`.
    ///
    /// Uses the generator-only form: the normal closure in `<A, B>` of the
    /// commutators of generators.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let seed = a.gens().iter().flat_map(|&x| {
            b.gens()
                .iter()
                .map(move |&y| self.commutator(x as usize, y as usize))
        });
        let generated = self.closure(seed);
        let ambient: Vec<u32> = a.gens().iter().chain(b.gens()).copied().collect();
        self.normal_closure_in(&ambient, &generated)
    }

    pub fn central_series(&self) -> CentralSeries {
        let full = Subgroup::full(self);
        let mut ascending = vec![self.center()];
        loop {
            let last = ascending.last().unwrap();
            let mask = Mask::from_indices(
                self.order(),
                (0..self.order()).filter(|&g| {
                    self.generators()
                        .iter()
                        .all(|&s| last.contains(self.commutator(g, s as usize)))
                }),
            );
            if &mask == last.mask() {
                break;
            }
            ascending.push(Subgroup::from_mask(self, mask));
        }

        let mut descending = vec![full.clone()];
        loop {
            let last = descending.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let next = self.commutator_subgroup(last, &full);
            if &next == last {
                break;
            }
            descending.push(next);
        }
        let nilpotency_class = descending
            .last()
            .unwrap()
            .is_trivial()
            .then(|| descending.len() - 1);
        CentralSeries {
            ascending,
            descending,
            nilpotency_class,
        }
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let full = Subgroup::full(self);
        self.commutator_subgroup(&full, &full)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_subgroup(&Subgroup::full(self))
    }

    /// Whether `h` is nilpotent as an abstract group. Groups of prime power
    /// order are; otherwise the lower central series of `h` is computed.
    pub fn is_nilpotent_subgroup(&self, h: &Subgroup) -> bool {
        if h.order() == 1 || prime_power(h.order()).is_some() {
            return true;
        }
        let mut term = h.clone();
        loop {
            let next = self.commutator_subgroup(&term, h);
            if next.is_trivial() {
                return true;
            }
            if next == term {
                return false;
            }
            term = next;
        }
    }

    /// Join of all normal nilpotent subgroups.
    pub fn fitting_subgroup(&self) -> Subgroup {
        self.normal_subgroups()
            .iter()
            .filter(|n| self.is_nilpotent_subgroup(n))
            .fold(Subgroup::trivial(self), |acc, n| acc.join(self, n))
    }

    /// True iff the group is nontrivial and every non-identity element has
    /// the whole group as its normal closure.
    pub fn is_simple(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        self.conjugacy_classes()
            .iter()
            .skip(1)
            .all(|class| self.normal_closure(&self.cyclic_subgroup(class[0])).order() == self.order())
    }

    /// `|Z| = p`, `Z = G'`, and `G/Z` elementary abelian.
    pub fn is_extraspecial(&self) -> Result<bool> {
        let (p, _) = prime_power(self.order()).ok_or(Error::NotPGroup { order: self.order() })?;
        let z = self.center();
        if z.order() != p || self.derived_subgroup() != z {
            return Ok(false);
        }
        let q = self.quotient(&z)?.group;
        Ok(q.is_abelian() && q.exponent() == p)
    }
}
