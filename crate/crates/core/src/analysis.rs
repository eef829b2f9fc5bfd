//! Per-group cache of everything the lattice and theorem checks share:
//! the subgroup list, each subgroup's centralizer, and the measures.

use std::sync::OnceLock;

use crate::error::Result;
use crate::group::{Group, Quotient};
use crate::lattice::CdMeasure;
use crate::mask::Mask;
use crate::subgroup::{Subgroup, SubgroupSet};

pub struct Analysis<'g> {
    group: &'g Group,
    subgroups: SubgroupSet,
    center: usize,
    centralizer: Vec<usize>,
    measure: Vec<CdMeasure>,
    normal: Vec<bool>,
    abelian: Vec<bool>,
    mu: u64,
    nilpotent: OnceLock<Vec<bool>>,
    center_quotient: OnceLock<Quotient>,
}

impl<'g> Analysis<'g> {
    /// Enumerates all subgroups (within `budget`) and their centralizers.
    pub fn new(group: &'g Group, budget: usize) -> Result<Analysis<'g>> {
        let subgroups = group.all_subgroups(budget)?;
        let n = group.order();
        let full_index = subgroups.len() - 1;
        let abelian_group = group.is_abelian();

        let centralizer: Vec<usize> = subgroups
            .iter()
            .map(|h| {
                if abelian_group {
                    return full_index;
                }
                let mask = Mask::from_indices(
                    n,
                    (0..n).filter(|&g| h.gens().iter().all(|&s| group.commutes(g, s as usize))),
                );
                subgroups
                    .position(&mask)
                    .expect("centralizer is a subgroup")
            })
            .collect();
        let measure: Vec<CdMeasure> = subgroups
            .iter()
            .zip(&centralizer)
            .map(|(h, &c)| CdMeasure::new(n, h.order(), subgroups.get(c).order()))
            .collect();
        let mu = measure.iter().map(|m| m.value).min().unwrap_or(1);
        let normal = subgroups.iter().map(|h| group.is_normal(h)).collect();
        let abelian = subgroups
            .iter()
            .zip(&centralizer)
            .map(|(h, &c)| h.is_subgroup_of(subgroups.get(c)))
            .collect();
        let center = centralizer[full_index];

        Ok(Analysis {
            group,
            subgroups,
            center,
            centralizer,
            measure,
            normal,
            abelian,
            mu,
            nilpotent: OnceLock::new(),
            center_quotient: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn subgroups(&self) -> &SubgroupSet {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        self.subgroups.get(i)
    }

    pub fn index_of(&self, mask: &Mask) -> Option<usize> {
        self.subgroups.position(mask)
    }

    pub fn full_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn center_index(&self) -> usize {
        self.center
    }

    pub fn center(&self) -> &Subgroup {
        self.subgroups.get(self.center)
    }

    pub fn centralizer_index(&self, i: usize) -> usize {
        self.centralizer[i]
    }

    pub fn centralizer(&self, i: usize) -> &Subgroup {
        self.subgroups.get(self.centralizer[i])
    }

    pub fn measure(&self, i: usize) -> CdMeasure {
        self.measure[i]
    }

    pub fn mu(&self) -> u64 {
        self.mu
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn is_abelian(&self, i: usize) -> bool {
        self.abelian[i]
    }

    pub fn is_nilpotent(&self, i: usize) -> bool {
        self.nilpotent.get_or_init(|| {
            self.subgroups
                .iter()
                .map(|h| self.group.is_nilpotent_subgroup(h))
                .collect()
        })[i]
    }

    /// `G/Z(G)` with its coset map.
    pub fn center_quotient(&self) -> &Quotient {
        self.center_quotient.get_or_init(|| {
            self.group
                .quotient(self.center())
                .expect("the center is normal")
        })
    }

    /// Indices of the CD-subgroups, in `(order, mask)` order.
    pub fn cd_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.measure[i].value == self.mu)
            .collect()
    }
}
