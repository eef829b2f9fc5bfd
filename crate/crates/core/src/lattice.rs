//! The Chermak-Delgado measure `m(G,H) = |G:H| * |G:C_G(H)|`, its minimum
//! `mu(G)`, and the lattice of subgroups attaining it.

use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::{Subgroup, SubgroupSet};

/// Index form of the measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CdMeasure {
    pub subgroup_index: u64,
    pub centralizer_index: u64,
    pub value: u64,
}

impl CdMeasure {
    pub fn new(group_order: usize, subgroup_order: usize, centralizer_order: usize) -> CdMeasure {
        let subgroup_index = (group_order / subgroup_order) as u64;
        let centralizer_index = (group_order / centralizer_order) as u64;
        CdMeasure {
            subgroup_index,
            centralizer_index,
            value: subgroup_index * centralizer_index,
        }
    }
}

pub fn cd_measure(group: &Group, h: &Subgroup) -> CdMeasure {
    CdMeasure::new(group.order(), h.order(), group.centralizer(h).order())
}

pub fn mu(analysis: &Analysis) -> u64 {
    analysis.mu()
}

pub fn cd_subgroups(analysis: &Analysis) -> SubgroupSet {
    SubgroupSet::new(
        analysis.group(),
        analysis
            .cd_indices()
            .into_iter()
            .map(|i| analysis.subgroup(i).clone())
            .collect(),
    )
}

/// The CD-subgroups with their extremal members and the centralizer
/// duality between them.
#[derive(Debug, Clone)]
pub struct CdLattice {
    pub mu: u64,
    pub members: SubgroupSet,
    /// Position of `M(G)` in `members`.
    pub top: usize,
    /// Position of `m(G)` in `members`.
    pub bottom: usize,
    /// `duality[i]` is the position of `C_G(members[i])`.
    pub duality: Vec<usize>,
    pub group_order: usize,
    pub label: String,
}

fn violation(reason: &str, a: &Subgroup, b: &Subgroup) -> Error {
    Error::LatticeViolation {
        reason: reason.to_string(),
        first: a.elements(),
        second: b.elements(),
    }
}

/// Maximal (or minimal) elements of a family of subgroups under inclusion.
pub(crate) fn extremal(members: &[Subgroup], maximal: bool) -> Vec<usize> {
    (0..members.len())
        .filter(|&i| {
            !members.iter().enumerate().any(|(j, k)| {
                j != i
                    && if maximal {
                        members[i].is_subgroup_of(k)
                    } else {
                        k.is_subgroup_of(&members[i])
                    }
            })
        })
        .collect()
}

impl CdLattice {
    /// Fails with `LatticeViolation` if the CD-subgroups do not have a
    /// unique top and bottom, or some centralizer falls outside the set.
    pub fn build(analysis: &Analysis) -> Result<CdLattice> {
        let group = analysis.group();
        let members = cd_subgroups(analysis);
        let list = members.as_slice();

        let tops = extremal(list, true);
        if tops.len() != 1 {
            return Err(violation("no unique maximal CD-subgroup", &list[tops[0]], &list[tops[1]]));
        }
        let bottoms = extremal(list, false);
        if bottoms.len() != 1 {
            return Err(violation(
                "no unique minimal CD-subgroup",
                &list[bottoms[0]],
                &list[bottoms[1]],
            ));
        }

        let mut duality = Vec::with_capacity(list.len());
        for h in list {
            let i = analysis.index_of(h.mask()).expect("member is a subgroup");
            let c = analysis.centralizer(i);
            match members.position(c.mask()) {
                Some(j) => duality.push(j),
                None => return Err(violation("centralizer is not a CD-subgroup", h, c)),
            }
        }

        Ok(CdLattice {
            mu: analysis.mu(),
            top: tops[0],
            bottom: bottoms[0],
            duality,
            group_order: group.order(),
            label: group.display_label(),
            members,
        })
    }

    pub fn top(&self) -> &Subgroup {
        self.members.get(self.top)
    }

    pub fn bottom(&self) -> &Subgroup {
        self.members.get(self.bottom)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Pairs `(lower, upper)` with `lower < upper` and nothing in between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let list = self.members.as_slice();
        let mut out = Vec::new();
        for (i, a) in list.iter().enumerate() {
            for (j, b) in list.iter().enumerate() {
                if i == j || !a.is_subgroup_of(b) {
                    continue;
                }
                let between = list.iter().enumerate().any(|(k, c)| {
                    k != i && k != j && a.is_subgroup_of(c) && c.is_subgroup_of(b)
                });
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Graphviz rendering: one node per member in `(order, mask)` order,
    /// edges along covering relations pointing upward.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph cd_lattice {{");
        let _ = writeln!(out, "  label=\"{} (mu={})\";", self.label.replace('"', "'"), self.mu);
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box];");
        for (i, h) in self.members.iter().enumerate() {
            let mut attrs = format!(
                "label=\"order={}, index={}\"",
                h.order(),
                self.group_order / h.order()
            );
            let marks: Vec<&str> = [(i == self.top, "top"), (i == self.bottom, "bottom")]
                .into_iter()
                .filter_map(|(on, name)| on.then_some(name))
                .collect();
            if !marks.is_empty() {
                let _ = write!(
                    attrs,
                    ", xlabel=\"{}\", style=bold, peripheries=2",
                    marks.join("/")
                );
            }
            let _ = writeln!(out, "  n{i} [{attrs}];");
        }
        for (a, b) in self.covering_pairs() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}
