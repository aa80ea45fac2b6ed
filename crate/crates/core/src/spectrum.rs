//! Exact spectra of star forests and comparison against numeric eigenvalues.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::SpectrumError;
use crate::radical::RadicalScalar;
use crate::sgb::ComponentSummary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    CommonNeighborhood,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 4] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
        MatrixKind::CommonNeighborhood,
    ];

    pub fn code(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "a",
            MatrixKind::Laplacian => "l",
            MatrixKind::SignlessLaplacian => "q",
            MatrixKind::CommonNeighborhood => "cn",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless_laplacian",
            MatrixKind::CommonNeighborhood => "common_neighborhood",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MatrixKind::ALL
            .into_iter()
            .find(|k| k.code() == s || k.name() == s)
            .ok_or_else(|| format!("unknown matrix kind `{s}` (expected a, l, q or cn)"))
    }
}

/// Eigenvalue multiset, distinct values sorted descending.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SpectrumMultiset {
    entries: Vec<(RadicalScalar, u64)>,
}

#[derive(Serialize)]
struct SpectrumEntry<'a> {
    value: &'a RadicalScalar,
    multiplicity: u64,
}

impl Serialize for SpectrumMultiset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter().map(|(value, multiplicity)| SpectrumEntry {
            value,
            multiplicity: *multiplicity,
        }))
    }
}

impl SpectrumMultiset {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Merges equal values and drops zero multiplicities.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (RadicalScalar, u64)>) -> Self {
        let mut merged: BTreeMap<RadicalScalar, u64> = BTreeMap::new();
        for (value, mult) in pairs {
            if mult > 0 {
                *merged.entry(value).or_insert(0) += mult;
            }
        }
        Self { entries: merged.into_iter().rev().collect() }
    }

    pub fn entries(&self) -> &[(RadicalScalar, u64)] {
        &self.entries
    }

    pub fn dimension(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, value: &RadicalScalar) -> u64 {
        self.entries.iter().find(|(v, _)| v == value).map_or(0, |(_, m)| *m)
    }

    /// Values repeated by multiplicity, descending.
    pub fn expand(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v.to_f64(), *m as usize))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.is_integer())
    }

    /// `{(x)^m, ...}` notation, descending.
    pub fn notation(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|(v, m)| format!("({v})^{m}")).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for SpectrumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

/// Spectrum of the star `K_{1,ℓ}` (or of an isolated vertex when `ℓ = 0`).
pub fn star_spectrum(kind: MatrixKind, leaves: u64) -> SpectrumMultiset {
    let int = |n: i128| RadicalScalar::from_integer(n);
    if leaves == 0 {
        return SpectrumMultiset::from_pairs([(int(0), 1)]);
    }
    let l = leaves as i128;
    match kind {
        MatrixKind::Adjacency => SpectrumMultiset::from_pairs([
            (int(0), leaves - 1),
            (RadicalScalar::sqrt(leaves), 1),
            (-RadicalScalar::sqrt(leaves), 1),
        ]),
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            SpectrumMultiset::from_pairs([(int(0), 1), (int(1), leaves - 1), (int(l + 1), 1)])
        }
        MatrixKind::CommonNeighborhood => {
            SpectrumMultiset::from_pairs([(int(0), 1), (int(-1), leaves - 1), (int(l - 1), 1)])
        }
    }
}

pub fn union_spectrum<'a>(parts: impl IntoIterator<Item = &'a SpectrumMultiset>) -> SpectrumMultiset {
    SpectrumMultiset::from_pairs(parts.into_iter().flat_map(|s| s.entries.iter().cloned()))
}

/// Spectrum of a star forest, multiplying each star's spectrum by the
/// number of copies.
pub fn exact_spectrum(summary: &ComponentSummary, kind: MatrixKind) -> SpectrumMultiset {
    SpectrumMultiset::from_pairs(
        summary
            .iter()
            .flat_map(|(leaves, copies)| star_spectrum(kind, leaves).entries.into_iter().map(move |(v, m)| (v, m * copies))),
    )
}

pub fn is_integral(s: &SpectrumMultiset) -> bool {
    s.is_integral()
}

/// Outcome of comparing an exact spectrum with numeric eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumMatch {
    pub matches: bool,
    pub max_deviation: f64,
}

/// Compares the expanded exact spectrum with `numeric` elementwise after
/// sorting both descending.
pub fn match_spectra(exact: &SpectrumMultiset, numeric: &[f64], tol: f64) -> Result<SpectrumMatch, SpectrumError> {
    let expected = exact.expand();
    if expected.len() != numeric.len() {
        return Err(SpectrumError::LengthMismatch { exact: expected.len(), numeric: numeric.len() });
    }
    let mut got = numeric.to_vec();
    got.sort_by(|a, b| b.total_cmp(a));
    let max_deviation = expected.iter().zip(&got).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    Ok(SpectrumMatch { matches: max_deviation <= tol, max_deviation })
}
