//! Subgroup enumeration, `L(G)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::LatticeError;
use crate::group::{FiniteGroup, GroupElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: ElementSet,
}

impl Subgroup {
    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        self.members.contains(x.index())
    }

    /// Checks identity membership and closure under products and inverses.
    pub fn is_subgroup_of(&self, g: &FiniteGroup) -> bool {
        self.members.width() == g.order()
            && self.contains(g.identity())
            && self.members.iter().all(|x| {
                let x = GroupElement(x);
                self.contains(g.inv(x)) && self.members.iter().all(|y| self.contains(g.mul(x, GroupElement(y))))
            })
    }
}

/// Smallest subgroup containing every element of `generators`.
///
/// In a finite group, closing `{e} ∪ S` under right multiplication by `S`
/// already yields inverses, so no separate inverse pass is needed.
pub fn closure(g: &FiniteGroup, generators: &[GroupElement]) -> Subgroup {
    let mut members = ElementSet::empty(g.order());
    let mut queue = vec![g.identity()];
    members.insert(g.identity().index());
    while let Some(x) = queue.pop() {
        for &s in generators {
            let y = g.mul(x, s);
            if members.insert(y.index()) {
                queue.push(y);
            }
        }
    }
    Subgroup { members }
}

pub fn generated_subgroup(g: &FiniteGroup, a: GroupElement, b: GroupElement) -> Subgroup {
    closure(g, &[a, b])
}

/// All subgroups of a group in canonical order: by order, then by
/// lexicographic member list.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    index: HashMap<ElementSet, usize>,
}

impl SubgroupLattice {
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, position: usize) -> &Subgroup {
        &self.subgroups[position]
    }

    pub fn position(&self, s: &Subgroup) -> Result<usize, LatticeError> {
        self.position_of_members(&s.members)
    }

    pub fn position_of_members(&self, members: &ElementSet) -> Result<usize, LatticeError> {
        self.index.get(members).copied().ok_or(LatticeError::NotInLattice)
    }

    pub fn orders(&self) -> Vec<usize> {
        self.subgroups.iter().map(Subgroup::order).collect()
    }

    pub fn summary(&self) -> LatticeSummary {
        let mut counts = std::collections::BTreeMap::new();
        for s in &self.subgroups {
            *counts.entry(s.order()).or_insert(0usize) += 1;
        }
        LatticeSummary { subgroup_count: self.len(), subgroups_by_order: counts }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeSummary {
    pub subgroup_count: usize,
    pub subgroups_by_order: std::collections::BTreeMap<usize, usize>,
}

/// Enumerates `L(G)` by join closure.
///
/// Seeds with every cyclic subgroup, then repeatedly joins each newly found
/// subgroup with a single extra element. Every subgroup is reached because
/// `H = <x_1> ∨ ... ∨ <x_k>` for its own elements.
pub fn enumerate_subgroups(g: &FiniteGroup) -> SubgroupLattice {
    struct Found {
        members: ElementSet,
        generators: Vec<GroupElement>,
    }

    let mut seen: HashMap<ElementSet, ()> = HashMap::new();
    let mut found: Vec<Found> = Vec::new();
    for x in g.elements() {
        let sub = closure(g, &[x]);
        if seen.insert(sub.members.clone(), ()).is_none() {
            found.push(Found { members: sub.members, generators: vec![x] });
        }
    }

    let mut cursor = 0;
    while cursor < found.len() {
        for x in g.elements() {
            if found[cursor].members.contains(x.index()) {
                continue;
            }
            let mut gens = found[cursor].generators.clone();
            gens.push(x);
            let sub = closure(g, &gens);
            if seen.insert(sub.members.clone(), ()).is_none() {
                found.push(Found { members: sub.members, generators: gens });
            }
        }
        cursor += 1;
    }

    let mut subgroups: Vec<Subgroup> = found.into_iter().map(|f| Subgroup { members: f.members }).collect();
    subgroups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    let index = subgroups.iter().enumerate().map(|(i, s)| (s.members.clone(), i)).collect();
    SubgroupLattice { subgroups, index }
}
