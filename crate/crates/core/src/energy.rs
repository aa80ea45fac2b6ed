//! Graph energies and the energy-based classifications.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::EnergyError;
use crate::radical::{integer, rational, RadicalScalar, RadicalSum, Rational};
use crate::spectrum::SpectrumMultiset;

/// Float comparisons closer than this are reported as indeterminate.
pub const GUARD_BAND: f64 = 1e-9;

/// Σ multiplicity·|λ| over the adjacency spectrum.
pub fn adjacency_energy(s: &SpectrumMultiset) -> RadicalSum {
    absolute_sum(s, None)
}

/// Σ multiplicity·|λ| over the common-neighborhood spectrum.
pub fn cn_energy(s: &SpectrumMultiset) -> RadicalSum {
    absolute_sum(s, None)
}

/// Σ multiplicity·|μ − 2m/n|, shared by the Laplacian and signless
/// Laplacian energies.
pub fn laplacian_style_energy(s: &SpectrumMultiset, edges: u64, vertices: u64) -> Result<RadicalSum, EnergyError> {
    if vertices == 0 {
        return Err(EnergyError::NoVertices);
    }
    let shift = rational(2 * edges as i128, vertices as i128);
    Ok(absolute_sum(s, Some(shift)))
}

fn absolute_sum(s: &SpectrumMultiset, shift: Option<Rational>) -> RadicalSum {
    let mut total = RadicalSum::zero();
    for (value, mult) in s.entries() {
        let mult = *mult as i128;
        match shift {
            None => total.add_scalar(&value.abs(), mult),
            Some(c) => {
                let mut term = RadicalSum::from_scalar(value);
                term.add_scalar(&RadicalScalar::rational(c), -1);
                total = &total + &(&term.abs() * mult);
            }
        }
    }
    total
}

/// The four energies of `K_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CompleteGraphEnergies {
    pub energy: i128,
    pub laplacian_energy: i128,
    pub signless_laplacian_energy: i128,
    pub cn_energy: i128,
}

pub fn complete_graph_reference(n: u64) -> CompleteGraphEnergies {
    let n = n as i128;
    let base = 2 * (n - 1).max(0);
    CompleteGraphEnergies {
        energy: base,
        laplacian_energy: base,
        signless_laplacian_energy: base,
        cn_energy: if n >= 2 { 2 * (n - 1) * (n - 2) } else { 0 },
    }
}

/// An energy value, exact when it came from an exact spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyValue {
    pub exact: Option<RadicalSum>,
    pub value: f64,
}

impl EnergyValue {
    pub fn exact(x: RadicalSum) -> Self {
        let value = x.to_f64();
        Self { exact: Some(x), value }
    }

    pub fn approximate(value: f64) -> Self {
        Self { exact: None, value }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.exact.as_ref().and_then(RadicalSum::as_rational)
    }

    /// Compares against another energy or reference value. Exact when both
    /// sides are exact; otherwise a float comparison that refuses to decide
    /// inside [`GUARD_BAND`].
    pub fn compare(&self, other: &EnergyValue, what: &'static str) -> Result<Ordering, EnergyError> {
        if let (Some(a), Some(b)) = (&self.exact, &other.exact) {
            return Ok(a.cmp(b));
        }
        let difference = self.value - other.value;
        if difference.abs() < GUARD_BAND {
            return Err(EnergyError::Indeterminate { what, difference });
        }
        Ok(difference.partial_cmp(&0.0).unwrap_or(Ordering::Equal))
    }
}

impl From<i128> for EnergyValue {
    fn from(n: i128) -> Self {
        EnergyValue::exact(RadicalSum::from_integer(n))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyReport {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub energy: EnergyValue,
    pub laplacian_energy: EnergyValue,
    pub signless_laplacian_energy: EnergyValue,
    pub cn_energy: EnergyValue,
}

impl EnergyReport {
    pub fn from_spectra(
        vertex_count: u64,
        edge_count: u64,
        adjacency: &SpectrumMultiset,
        laplacian: &SpectrumMultiset,
        signless: &SpectrumMultiset,
        common_neighborhood: &SpectrumMultiset,
    ) -> Result<Self, EnergyError> {
        Ok(Self {
            vertex_count,
            edge_count,
            energy: EnergyValue::exact(adjacency_energy(adjacency)),
            laplacian_energy: EnergyValue::exact(laplacian_style_energy(laplacian, edge_count, vertex_count)?),
            signless_laplacian_energy: EnergyValue::exact(laplacian_style_energy(signless, edge_count, vertex_count)?),
            cn_energy: EnergyValue::exact(cn_energy(common_neighborhood)),
        })
    }

    /// Float energies from numeric eigenvalue lists.
    pub fn from_numeric(
        vertex_count: u64,
        edge_count: u64,
        adjacency: &[f64],
        laplacian: &[f64],
        signless: &[f64],
        common_neighborhood: &[f64],
    ) -> Result<Self, EnergyError> {
        if vertex_count == 0 {
            return Err(EnergyError::NoVertices);
        }
        let shift = 2.0 * edge_count as f64 / vertex_count as f64;
        let abs_sum = |xs: &[f64], c: f64| xs.iter().map(|x| (x - c).abs()).sum::<f64>();
        Ok(Self {
            vertex_count,
            edge_count,
            energy: EnergyValue::approximate(abs_sum(adjacency, 0.0)),
            laplacian_energy: EnergyValue::approximate(abs_sum(laplacian, shift)),
            signless_laplacian_energy: EnergyValue::approximate(abs_sum(signless, shift)),
            cn_energy: EnergyValue::approximate(abs_sum(common_neighborhood, 0.0)),
        })
    }

    pub fn values(&self) -> [(&'static str, &EnergyValue); 4] {
        [
            ("energy", &self.energy),
            ("laplacian_energy", &self.laplacian_energy),
            ("signless_laplacian_energy", &self.signless_laplacian_energy),
            ("cn_energy", &self.cn_energy),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub hypoenergetic: bool,
    pub hyperenergetic: bool,
    pub l_hyperenergetic: bool,
    pub q_hyperenergetic: bool,
    pub cn_hyperenergetic: bool,
    /// `E ≤ LE`.
    pub ele_holds: bool,
}

/// All "hyper" comparisons are strict; equality classifies as `false`.
pub fn classify(report: &EnergyReport) -> Result<ClassificationFlags, EnergyError> {
    let n = report.vertex_count;
    let k = complete_graph_reference(n);
    let gt = |x: &EnergyValue, r: i128, what| x.compare(&EnergyValue::from(r), what).map(|o| o == Ordering::Greater);
    Ok(ClassificationFlags {
        hypoenergetic: report.energy.compare(&EnergyValue::from(n as i128), "E vs n")? == Ordering::Less,
        hyperenergetic: gt(&report.energy, k.energy, "E vs E(K_n)")?,
        l_hyperenergetic: gt(&report.laplacian_energy, k.laplacian_energy, "LE vs LE(K_n)")?,
        q_hyperenergetic: gt(&report.signless_laplacian_energy, k.signless_laplacian_energy, "LE+ vs LE+(K_n)")?,
        cn_hyperenergetic: gt(&report.cn_energy, k.cn_energy, "E_CN vs E_CN(K_n)")?,
        ele_holds: report.energy.compare(&report.laplacian_energy, "E vs LE")? != Ordering::Greater,
    })
}

/// `E < n < LE`.
pub fn energy_chain_holds(report: &EnergyReport) -> Result<bool, EnergyError> {
    let n = EnergyValue::from(report.vertex_count as i128);
    Ok(report.energy.compare(&n, "E vs n")? == Ordering::Less
        && n.compare(&report.laplacian_energy, "n vs LE")? == Ordering::Less)
}

/// Energies of the star `K_{1,ℓ}`: `2√ℓ`, `(2ℓ²+2)/(ℓ+1)` twice, `2ℓ−2`.
pub fn star_energies(leaves: u64) -> (RadicalSum, Rational, Rational) {
    let l = leaves as i128;
    let mut e = RadicalSum::zero();
    e.add_scalar(&RadicalScalar::sqrt(leaves), 2);
    let le = if leaves == 0 { integer(0) } else { rational(2 * l * l + 2, l + 1) };
    let ecn = integer((2 * l - 2).max(0));
    (e, le, ecn)
}
