//! Dense symmetric matrices of graphs: adjacency, Laplacian, signless
//! Laplacian and common-neighborhood.

use std::collections::HashMap;

use crate::bitset::ElementSet;
use crate::error::SpectrumError;
use crate::sgb::SgbGraph;
use crate::spectrum::MatrixKind;

/// Vertex count above which whole-graph dense matrices are refused.
pub const DEFAULT_DENSE_LIMIT: usize = 2000;

/// Row-major symmetric matrix; every constructor writes both triangles.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymMatrix {
    dimension: usize,
    entries: Vec<f64>,
}

impl DenseSymMatrix {
    pub fn zeros(dimension: usize) -> Self {
        Self { dimension, entries: vec![0.0; dimension * dimension] }
    }

    /// Builds from `f(i, j)` evaluated on the upper triangle only.
    pub fn from_fn(dimension: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(dimension);
        for i in 0..dimension {
            for j in i..dimension {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// `None` unless `rows` is square and exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        if (0..n).any(|i| (0..i).any(|j| rows[i][j] != rows[j][i])) {
            return None;
        }
        Some(Self::from_fn(n, |i, j| rows[i][j]))
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dimension + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.dimension + j] = value;
        self.entries[j * self.dimension + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.dimension..(i + 1) * self.dimension]
    }

    pub(crate) fn data_mut(&mut self) -> &mut [f64] {
        &mut self.entries
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dimension).map(|i| self.get(i, i)).sum()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.dimension.max(1)).map(<[f64]>::to_vec).take(self.dimension).collect()
    }

    /// Adjacency matrix of a simple graph given by an edge list.
    pub fn adjacency_from_edges(dimension: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut m = Self::zeros(dimension);
        for (u, v) in edges {
            assert_ne!(u, v, "simple graphs have no loops");
            m.set(u, v, 1.0);
        }
        m
    }
}

fn check_binary(adjacency: &DenseSymMatrix) -> Result<(), SpectrumError> {
    let n = adjacency.dimension();
    for i in 0..n {
        for j in i..n {
            let value = adjacency.get(i, j);
            let ok = if i == j { value == 0.0 } else { value == 0.0 || value == 1.0 };
            if !ok {
                return Err(SpectrumError::NonBinary { row: i, col: j, value });
            }
        }
    }
    Ok(())
}

/// `CN[i][j]` = number of vertices other than `i`, `j` adjacent to both.
pub fn cn_matrix(adjacency: &DenseSymMatrix) -> Result<DenseSymMatrix, SpectrumError> {
    check_binary(adjacency)?;
    let n = adjacency.dimension();
    let rows: Vec<ElementSet> = (0..n)
        .map(|i| ElementSet::from_indices(n, (0..n).filter(|&k| adjacency.get(i, k) == 1.0)))
        .collect();
    // With a zero diagonal, neither i nor j lies in N(i) ∩ N(j).
    Ok(DenseSymMatrix::from_fn(n, |i, j| if i == j { 0.0 } else { rows[i].intersection_len(&rows[j]) as f64 }))
}

/// Adjacency of `con(G)`: edge iff the two vertices share a neighbor.
pub fn common_neighborhood_graph(adjacency: &DenseSymMatrix) -> Result<DenseSymMatrix, SpectrumError> {
    let cn = cn_matrix(adjacency)?;
    Ok(DenseSymMatrix::from_fn(cn.dimension(), |i, j| if i != j && cn.get(i, j) >= 1.0 { 1.0 } else { 0.0 }))
}

/// The requested matrix of a simple graph given by its adjacency.
pub fn matrix_of_kind(adjacency: &DenseSymMatrix, kind: MatrixKind) -> Result<DenseSymMatrix, SpectrumError> {
    let n = adjacency.dimension();
    let degree = |i: usize| adjacency.row(i).iter().sum::<f64>();
    Ok(match kind {
        MatrixKind::Adjacency => adjacency.clone(),
        MatrixKind::Laplacian => {
            DenseSymMatrix::from_fn(n, |i, j| if i == j { degree(i) } else { -adjacency.get(i, j) })
        }
        MatrixKind::SignlessLaplacian => {
            DenseSymMatrix::from_fn(n, |i, j| if i == j { degree(i) } else { adjacency.get(i, j) })
        }
        MatrixKind::CommonNeighborhood => cn_matrix(adjacency)?,
    })
}

/// Whole-graph matrix of `B(G)`.
pub fn build_matrix(graph: &SgbGraph, kind: MatrixKind, dense_limit: usize) -> Result<DenseSymMatrix, SpectrumError> {
    let n = graph.vertex_count();
    if n > dense_limit {
        return Err(SpectrumError::DimensionLimit { dimension: n, limit: dense_limit });
    }
    matrix_of_kind(&DenseSymMatrix::adjacency_from_edges(n, graph.edges()), kind)
}

/// Adjacency matrices of the connected components of `B(G)`, found by
/// union-find over the edge list and induced from it.
pub fn component_adjacencies(graph: &SgbGraph) -> Vec<DenseSymMatrix> {
    let components = graph.connected_components();
    let mut local: HashMap<usize, (usize, usize)> = HashMap::with_capacity(graph.vertex_count());
    for (c, vertices) in components.iter().enumerate() {
        for (i, &v) in vertices.iter().enumerate() {
            local.insert(v, (c, i));
        }
    }
    let mut out: Vec<DenseSymMatrix> = components.iter().map(|vs| DenseSymMatrix::zeros(vs.len())).collect();
    for (u, v) in graph.edges() {
        let (cu, iu) = local[&u];
        let (cv, iv) = local[&v];
        debug_assert_eq!(cu, cv);
        out[cu].set(iu, iv, 1.0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> DenseSymMatrix {
        DenseSymMatrix::adjacency_from_edges(leaves + 1, (1..=leaves).map(|l| (0, l)))
    }

    fn complete(n: usize) -> DenseSymMatrix {
        DenseSymMatrix::from_fn(n, |i, j| if i == j { 0.0 } else { 1.0 })
    }

    #[test]
    fn k2_and_star_matrices() {
        let k2 = star(1);
        assert_eq!(k2.to_rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);

        let l = matrix_of_kind(&star(3), MatrixKind::Laplacian).unwrap();
        assert_eq!((0..4).map(|i| l.get(i, i)).collect::<Vec<_>>(), vec![3.0, 1.0, 1.0, 1.0]);
        for i in 0..4 {
            assert_eq!(l.row(i).iter().sum::<f64>(), 0.0);
        }
        let q = matrix_of_kind(&star(3), MatrixKind::SignlessLaplacian).unwrap();
        assert_eq!(q.get(0, 1), 1.0);

        let cn = matrix_of_kind(&star(3), MatrixKind::CommonNeighborhood).unwrap();
        assert_eq!(cn.row(0), &[0.0, 0.0, 0.0, 0.0]);
        assert_eq!(cn.row(1), &[0.0, 0.0, 1.0, 1.0]);
    }

    #[test]
    fn cn_matrix_examples() {
        assert_eq!(cn_matrix(&star(1)).unwrap(), DenseSymMatrix::zeros(2));
        assert_eq!(cn_matrix(&complete(3)).unwrap(), complete(3));
        let path = DenseSymMatrix::adjacency_from_edges(3, [(0, 1), (1, 2)]);
        let cn = cn_matrix(&path).unwrap();
        assert_eq!(cn.get(0, 2), 1.0);
        assert_eq!(cn.get(0, 1), 0.0);
        assert_eq!(cn.get(1, 2), 0.0);

        let mut weighted = star(2);
        weighted.set(0, 1, 2.0);
        assert!(matches!(cn_matrix(&weighted), Err(SpectrumError::NonBinary { row: 0, col: 1, .. })));
        let mut looped = star(2);
        looped.set(1, 1, 1.0);
        assert!(matches!(cn_matrix(&looped), Err(SpectrumError::NonBinary { row: 1, col: 1, .. })));
    }

    #[test]
    fn con_examples() {
        let con = common_neighborhood_graph(&star(4)).unwrap();
        assert_eq!(con.row(0), &[0.0; 5]);
        for i in 1..5 {
            for j in 1..5 {
                assert_eq!(con.get(i, j), if i == j { 0.0 } else { 1.0 });
            }
        }
        assert_eq!(common_neighborhood_graph(&star(1)).unwrap(), DenseSymMatrix::zeros(2));
        assert_eq!(common_neighborhood_graph(&complete(3)).unwrap(), complete(3));
    }

    #[test]
    fn from_rows_rejects_asymmetric() {
        assert!(DenseSymMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_none());
        assert!(DenseSymMatrix::from_rows(&[vec![0.0, 1.0]]).is_none());
        assert!(DenseSymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).is_some());
    }
}
