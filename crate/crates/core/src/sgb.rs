//! The subgroup-generating bipartite graph `B(G)`.
//!
//! Vertices are the ordered pairs `(a, b) ∈ G × G` and the subgroups of `G`;
//! `(a, b)` is joined to `<a, b>`. Every pair vertex therefore has degree one
//! and the graph is a disjoint union of stars centred on subgroup vertices.
//!
//! Vertex numbering used by matrix builders: pair `(a, b)` is vertex
//! `a * |G| + b`, subgroup `s` is vertex `|G|^2 + s`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::group::{FiniteGroup, GroupElement};
use crate::lattice::{generated_subgroup, SubgroupLattice};
use crate::par::{map_range, Execution};

#[derive(Debug, Clone)]
pub struct SgbGraph {
    group_order: usize,
    subgroup_orders: Vec<usize>,
    neighbor_of_pair: Vec<usize>,
    leaves_of_subgroup: Vec<Vec<usize>>,
}

impl SgbGraph {
    pub fn pair_vertex_count(&self) -> usize {
        self.neighbor_of_pair.len()
    }

    pub fn subgroup_vertex_count(&self) -> usize {
        self.leaves_of_subgroup.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.pair_vertex_count() + self.subgroup_vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.leaves_of_subgroup.iter().map(Vec::len).sum()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn subgroup_order(&self, s: usize) -> usize {
        self.subgroup_orders[s]
    }

    /// Lattice position of `<a, b>` for pair vertex `pair = a*|G| + b`.
    pub fn neighbor_of_pair(&self, pair: usize) -> usize {
        self.neighbor_of_pair[pair]
    }

    pub fn leaves_of_subgroup(&self, s: usize) -> &[usize] {
        &self.leaves_of_subgroup[s]
    }

    pub fn subgroup_vertex(&self, s: usize) -> usize {
        self.pair_vertex_count() + s
    }

    /// Edge list `(pair vertex, subgroup vertex)` in pair order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let base = self.pair_vertex_count();
        self.neighbor_of_pair.iter().enumerate().map(move |(p, &s)| (p, base + s))
    }

    pub fn degree(&self, vertex: usize) -> usize {
        if vertex < self.pair_vertex_count() {
            1
        } else {
            self.leaves_of_subgroup[vertex - self.pair_vertex_count()].len()
        }
    }

    /// Adjacency lists derived from the edge list.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Connected components by union-find over the edge list, each sorted
    /// ascending, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (u, v) in self.edges() {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Subgroups not generated by any pair.
    pub fn isolated_subgroups(&self) -> Vec<usize> {
        (0..self.subgroup_vertex_count()).filter(|&s| self.leaves_of_subgroup[s].is_empty()).collect()
    }
}

/// Builds `B(G)`; the per-pair closures run under `exec`.
pub fn build_sgb(g: &FiniteGroup, lat: &SubgroupLattice, exec: Execution) -> SgbGraph {
    let n = g.order();
    let neighbor_of_pair = map_range(exec, n * n, |pair| {
        let h = generated_subgroup(g, GroupElement(pair / n), GroupElement(pair % n));
        lat.position(&h).expect("lattice enumerated from the same group contains every 2-generated subgroup")
    });
    let mut leaves_of_subgroup = vec![Vec::new(); lat.len()];
    for (pair, &s) in neighbor_of_pair.iter().enumerate() {
        leaves_of_subgroup[s].push(pair);
    }
    SgbGraph {
        group_order: n,
        subgroup_orders: lat.orders(),
        neighbor_of_pair,
        leaves_of_subgroup,
    }
}

/// Star-decomposition signature: leaf count `ℓ` to multiplicity.
///
/// `ℓ = 0` marks an isolated subgroup vertex; `ℓ = 1` is a `K_2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ComponentSummary {
    stars: BTreeMap<u64, u64>,
}

impl ComponentSummary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut summary = Self::new();
        for (leaves, mult) in pairs {
            summary.add(leaves, mult);
        }
        summary
    }

    /// Adds `mult` stars with `leaves` leaves; zero multiplicities are ignored.
    pub fn add(&mut self, leaves: u64, mult: u64) {
        if mult > 0 {
            *self.stars.entry(leaves).or_insert(0) += mult;
        }
    }

    pub fn stars(&self) -> &BTreeMap<u64, u64> {
        &self.stars
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.stars.iter().map(|(&l, &m)| (l, m))
    }

    pub fn component_count(&self) -> u64 {
        self.stars.values().sum()
    }

    pub fn vertex_count(&self) -> u64 {
        self.iter().map(|(l, m)| m * (l + 1)).sum()
    }

    pub fn edge_count(&self) -> u64 {
        self.iter().map(|(l, m)| m * l).sum()
    }

    pub fn has_isolated(&self) -> bool {
        self.stars.contains_key(&0)
    }

    pub fn largest_component(&self) -> u64 {
        self.stars.keys().next_back().map_or(0, |l| l + 1)
    }
}

pub fn decompose_components(graph: &SgbGraph) -> ComponentSummary {
    let mut summary = ComponentSummary::new();
    for s in 0..graph.subgroup_vertex_count() {
        summary.add(graph.leaves_of_subgroup(s).len() as u64, 1);
    }
    summary
}

pub fn signature_equal(x: &ComponentSummary, y: &ComponentSummary) -> bool {
    x == y
}
