//! Brute-force pipeline for a single group: lattice, `B(G)`, exact and
//! numeric spectra, energies and classification.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::eigen::{numeric_eigenvalues, JacobiOptions};
use crate::energy::{classify, ClassificationFlags, EnergyReport};
use crate::error::{Result, SpectrumError};
use crate::group::FiniteGroup;
use crate::lattice::{enumerate_subgroups, LatticeSummary};
use crate::matrix::{component_adjacencies, matrix_of_kind};
use crate::par::{map_slice, Execution};
use crate::sgb::{build_sgb, decompose_components, ComponentSummary, SgbGraph};
use crate::spectrum::{exact_spectrum, match_spectra, MatrixKind, SpectrumMatch, SpectrumMultiset};

/// Default tolerance for exact-versus-numeric spectrum agreement.
pub const DEFAULT_MATCH_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub exec: Execution,
    pub kinds: Vec<MatrixKind>,
    /// Run the Jacobi oracle on every component.
    pub numeric: bool,
    pub match_tol: f64,
    pub jacobi: JacobiOptions,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            exec: Execution::default(),
            kinds: MatrixKind::ALL.to_vec(),
            numeric: true,
            match_tol: DEFAULT_MATCH_TOL,
            jacobi: JacobiOptions::default(),
        }
    }
}

/// Numeric eigenvalues of every requested matrix of `B(G)`, diagonalizing
/// each connected component separately. Each list is sorted descending.
pub fn numeric_spectra(
    graph: &SgbGraph,
    kinds: &[MatrixKind],
    jacobi: JacobiOptions,
    exec: Execution,
) -> Result<BTreeMap<MatrixKind, Vec<f64>>, SpectrumError> {
    let components = component_adjacencies(graph);
    let mut tasks: Vec<(MatrixKind, usize)> =
        kinds.iter().flat_map(|&k| (0..components.len()).map(move |c| (k, c))).collect();
    // big blocks first so they do not end up as stragglers
    tasks.sort_by_key(|&(k, c)| (std::cmp::Reverse(components[c].dimension()), k, c));
    let results = map_slice(exec, &tasks, |&(kind, c)| {
        let m = matrix_of_kind(&components[c], kind)?;
        numeric_eigenvalues(&m, jacobi)
    });

    let mut out: BTreeMap<MatrixKind, Vec<f64>> = kinds.iter().map(|&k| (k, Vec::new())).collect();
    for ((kind, _), eigs) in tasks.iter().zip(results) {
        out.get_mut(kind).expect("requested kind").extend(eigs?);
    }
    for eigs in out.values_mut() {
        eigs.sort_by(|a, b| b.total_cmp(a));
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphStats {
    pub pair_vertices: usize,
    pub subgroup_vertices: usize,
    pub vertices: usize,
    pub edges: usize,
    pub components: u64,
    pub largest_component: u64,
    pub isolated_subgroups: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct KindResult {
    pub exact: SpectrumMultiset,
    pub integral: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_match: Option<SpectrumMatch>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupAnalysis {
    pub order: usize,
    pub lattice: LatticeSummary,
    pub graph: GraphStats,
    pub signature: ComponentSummary,
    pub spectra: BTreeMap<MatrixKind, KindResult>,
    pub energies: EnergyReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_energies: Option<EnergyReport>,
    pub classification: ClassificationFlags,
    pub notes: Vec<String>,
}

impl GroupAnalysis {
    /// Every numeric spectrum matched its exact counterpart.
    pub fn numeric_ok(&self) -> bool {
        self.spectra.values().all(|k| k.numeric_match.is_none_or(|m| m.matches))
    }

    pub fn max_deviation(&self) -> f64 {
        self.spectra.values().filter_map(|k| k.numeric_match).map(|m| m.max_deviation).fold(0.0, f64::max)
    }
}

/// Built graph together with the pieces later stages need.
pub struct BuiltGraph {
    pub graph: SgbGraph,
    pub lattice: LatticeSummary,
    pub signature: ComponentSummary,
}

pub fn build(g: &FiniteGroup, exec: Execution) -> BuiltGraph {
    let lat = enumerate_subgroups(g);
    let graph = build_sgb(g, &lat, exec);
    let signature = decompose_components(&graph);
    BuiltGraph { graph, lattice: lat.summary(), signature }
}

pub fn analyze(g: &FiniteGroup, opts: &PipelineOptions) -> Result<GroupAnalysis> {
    let built = build(g, opts.exec);
    analyze_built(&built, opts)
}

pub fn analyze_built(built: &BuiltGraph, opts: &PipelineOptions) -> Result<GroupAnalysis> {
    let graph = &built.graph;
    let signature = &built.signature;
    let exact: BTreeMap<MatrixKind, SpectrumMultiset> =
        MatrixKind::ALL.iter().map(|&k| (k, exact_spectrum(signature, k))).collect();
    let n = graph.vertex_count() as u64;
    let m = graph.edge_count() as u64;
    let energies = EnergyReport::from_spectra(
        n,
        m,
        &exact[&MatrixKind::Adjacency],
        &exact[&MatrixKind::Laplacian],
        &exact[&MatrixKind::SignlessLaplacian],
        &exact[&MatrixKind::CommonNeighborhood],
    )?;
    let classification = classify(&energies)?;

    let (numeric, numeric_energies) = if opts.numeric {
        let all = numeric_spectra(graph, &MatrixKind::ALL, opts.jacobi, opts.exec)?;
        let report = EnergyReport::from_numeric(
            n,
            m,
            &all[&MatrixKind::Adjacency],
            &all[&MatrixKind::Laplacian],
            &all[&MatrixKind::SignlessLaplacian],
            &all[&MatrixKind::CommonNeighborhood],
        )?;
        (Some(all), Some(report))
    } else {
        (None, None)
    };

    let mut spectra = BTreeMap::new();
    for &kind in &opts.kinds {
        let ex = exact[&kind].clone();
        let num = numeric.as_ref().map(|all| all[&kind].clone());
        let numeric_match = num.as_ref().map(|v| match_spectra(&ex, v, opts.match_tol)).transpose()?;
        spectra.insert(kind, KindResult { integral: ex.is_integral(), exact: ex, numeric: num, numeric_match });
    }

    let isolated = graph.isolated_subgroups();
    let mut notes = Vec::new();
    if !isolated.is_empty() {
        notes.push(format!(
            "{} subgroup(s) are not generated by any pair and appear as isolated vertices (outside the scope of the family results)",
            isolated.len()
        ));
    }

    Ok(GroupAnalysis {
        order: graph.group_order(),
        lattice: built.lattice.clone(),
        graph: GraphStats {
            pair_vertices: graph.pair_vertex_count(),
            subgroup_vertices: graph.subgroup_vertex_count(),
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            components: signature.component_count(),
            largest_component: signature.largest_component(),
            isolated_subgroups: isolated.len(),
        },
        signature: signature.clone(),
        spectra,
        energies,
        numeric_energies,
        classification,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{build_matrix, DEFAULT_DENSE_LIMIT};

    #[test]
    fn q8_laplacian_whole_matrix_matches() {
        let g = FiniteGroup::dicyclic(2).unwrap();
        let built = build(&g, Execution::Sequential);
        let m = build_matrix(&built.graph, MatrixKind::Laplacian, DEFAULT_DENSE_LIMIT).unwrap();
        assert_eq!(m.dimension(), 70);
        let eigs = numeric_eigenvalues(&m, JacobiOptions::default()).unwrap();
        let exact = exact_spectrum(&built.signature, MatrixKind::Laplacian);
        assert!(match_spectra(&exact, &eigs, 1e-8).unwrap().matches);
    }

    #[test]
    fn dense_limit_is_enforced() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let built = build(&g, Execution::Sequential);
        assert_eq!(
            build_matrix(&built.graph, MatrixKind::Adjacency, 10),
            Err(SpectrumError::DimensionLimit { dimension: 42, limit: 10 })
        );
    }

    #[test]
    fn analyze_d6() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let a = analyze(&g, &PipelineOptions::default()).unwrap();
        assert_eq!(a.graph.vertices, 42);
        assert_eq!(a.energies.cn_energy.as_rational(), Some(crate::radical::integer(60)));
        assert!(a.classification.hypoenergetic);
        assert!(a.numeric_ok());
        assert!(a.notes.is_empty());
    }

    #[test]
    fn per_component_and_whole_graph_agree() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let built = build(&g, Execution::Sequential);
        let per = numeric_spectra(&built.graph, &MatrixKind::ALL, JacobiOptions::default(), Execution::Parallel).unwrap();
        for kind in MatrixKind::ALL {
            let whole = build_matrix(&built.graph, kind, DEFAULT_DENSE_LIMIT).unwrap();
            let eigs = numeric_eigenvalues(&whole, JacobiOptions::default()).unwrap();
            for (a, b) in eigs.iter().zip(&per[&kind]) {
                assert!((a - b).abs() < 1e-8, "{kind}");
            }
        }
    }
}
