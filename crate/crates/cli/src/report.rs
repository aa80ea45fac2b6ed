//! Report documents and their JSON, CSV and Markdown renderings.
//!
//! JSON goes through `serde_json::Value`, whose maps keep keys sorted, so
//! identical inputs give byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use sgb_core::energy::{complete_graph_reference, EnergyValue, GUARD_BAND};
use sgb_core::pipeline::{GroupAnalysis, PipelineOptions};
use sgb_core::verify::VerificationReport;
use sgb_core::MatrixKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

pub trait Report {
    fn json(&self) -> Value;
    fn csv(&self) -> csv::Result<String>;
    fn markdown(&self) -> String;

    fn render(&self, format: Format) -> csv::Result<String> {
        Ok(match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("Value always serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.csv()?,
            Format::Markdown => self.markdown(),
        })
    }
}

fn tool() -> Value {
    json!({ "name": "sgb", "version": env!("CARGO_PKG_VERSION") })
}

fn tolerances(opts: &PipelineOptions) -> Value {
    json!({
        "spectrum_match": opts.match_tol,
        "jacobi_off_diagonal": opts.jacobi.tol,
        "jacobi_max_sweeps": opts.jacobi.max_sweeps,
        "comparison_guard_band": GUARD_BAND,
        "numeric_oracle": opts.numeric,
    })
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn csv_string(rows: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    rows(&mut w)?;
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn exact_text(v: &EnergyValue) -> String {
    v.exact.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

pub struct AnalyzeReport {
    pub spec: String,
    pub abelian: bool,
    pub analysis: GroupAnalysis,
    pub options: PipelineOptions,
    /// `E < n < LE`, when decidable.
    pub energy_chain: Option<bool>,
}

impl Report for AnalyzeReport {
    fn json(&self) -> Value {
        let a = &self.analysis;
        let k = complete_graph_reference(a.graph.vertices as u64);
        json!({
            "command": "analyze",
            "tool": tool(),
            "tolerances": tolerances(&self.options),
            "group": { "spec": self.spec, "order": a.order, "abelian": self.abelian },
            "lattice": to_value(&a.lattice),
            "graph": to_value(&a.graph),
            "components": a.signature.iter().map(|(leaves, copies)| json!({ "leaves": leaves, "copies": copies })).collect::<Vec<_>>(),
            "spectra": to_value(&a.spectra),
            "energies": to_value(&a.energies),
            "numeric_energies": to_value(&a.numeric_energies),
            "complete_graph_reference": to_value(&k),
            "classification": to_value(&a.classification),
            "energy_chain": self.energy_chain,
            "notes": a.notes,
        })
    }

    fn csv(&self) -> csv::Result<String> {
        csv_string(|w| {
            w.write_record(["kind", "value_float", "coefficient", "radicand", "multiplicity"])?;
            for (kind, result) in &self.analysis.spectra {
                for (value, mult) in result.exact.entries() {
                    w.write_record([
                        kind.code().to_string(),
                        value.to_f64().to_string(),
                        sgb_core::radical::format_rational(value.coefficient()),
                        value.radicand().to_string(),
                        mult.to_string(),
                    ])?;
                }
            }
            Ok(())
        })
    }

    fn markdown(&self) -> String {
        let a = &self.analysis;
        let mut s = String::new();
        let _ = writeln!(s, "# B(G) for `{}`\n", self.spec);
        let _ = writeln!(s, "| quantity | value |\n|---|---|");
        for (k, v) in [
            ("group order", a.order.to_string()),
            ("abelian", yes_no(self.abelian).to_string()),
            ("subgroups", a.lattice.subgroup_count.to_string()),
            ("vertices", a.graph.vertices.to_string()),
            ("edges", a.graph.edges.to_string()),
            ("components", a.graph.components.to_string()),
            ("largest component", a.graph.largest_component.to_string()),
        ] {
            let _ = writeln!(s, "| {k} | {v} |");
        }
        let parts: Vec<String> = a.signature.iter().map(|(l, c)| format!("{c}·K_1,{l}")).collect();
        let _ = writeln!(s, "\n## Components\n\n{}\n", parts.join(" ⊔ "));

        let _ = writeln!(s, "## Spectra\n");
        for (kind, r) in &a.spectra {
            let _ = write!(s, "- **{kind}** {}; integral: {}", r.exact, yes_no(r.integral));
            if let Some(m) = r.numeric_match {
                let _ = write!(s, "; numeric max deviation {:.3e}", m.max_deviation);
            }
            s.push('\n');
        }

        let _ = writeln!(s, "\n## Energies\n\n| energy | exact | value | numeric |\n|---|---|---|---|");
        for (i, (name, v)) in a.energies.values().into_iter().enumerate() {
            let numeric = a.numeric_energies.as_ref().map_or_else(|| "-".to_string(), |n| n.values()[i].1.value.to_string());
            let _ = writeln!(s, "| {name} | {} | {} | {numeric} |", exact_text(v), v.value);
        }

        let c = &a.classification;
        let _ = writeln!(s, "\n## Classification\n\n| property | holds |\n|---|---|");
        for (k, v) in [
            ("hypoenergetic", c.hypoenergetic),
            ("hyperenergetic", c.hyperenergetic),
            ("L-hyperenergetic", c.l_hyperenergetic),
            ("Q-hyperenergetic", c.q_hyperenergetic),
            ("CN-hyperenergetic", c.cn_hyperenergetic),
            ("E <= LE", c.ele_holds),
        ] {
            let _ = writeln!(s, "| {k} | {} |", yes_no(v));
        }
        if let Some(chain) = self.energy_chain {
            let _ = writeln!(s, "| E < n < LE | {} |", yes_no(chain));
        }
        if !a.notes.is_empty() {
            let _ = writeln!(s, "\n## Notes\n");
            for n in &a.notes {
                let _ = writeln!(s, "- {n}");
            }
        }
        s
    }
}

pub struct VerifyEntry {
    pub p: u64,
    pub outcome: Result<VerificationReport, String>,
}

pub struct VerifyReport {
    pub family: String,
    pub entries: Vec<VerifyEntry>,
    pub options: PipelineOptions,
    pub max_order: usize,
}

impl VerifyReport {
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(|e| matches!(&e.outcome, Ok(r) if r.all_match()))
    }
}

impl Report for VerifyReport {
    fn json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| match &e.outcome {
                Ok(r) => json!({ "p": e.p, "all_match": r.all_match(), "report": to_value(r) }),
                Err(msg) => json!({ "p": e.p, "all_match": false, "error": msg }),
            })
            .collect();
        let mut tol = tolerances(&self.options);
        tol["max_order"] = json!(self.max_order);
        json!({
            "command": "verify",
            "tool": tool(),
            "tolerances": tol,
            "family": self.family,
            "all_match": self.all_match(),
            "entries": entries,
        })
    }

    fn csv(&self) -> csv::Result<String> {
        csv_string(|w| {
            w.write_record([
                "family",
                "p",
                "all_match",
                "structure",
                "spectra",
                "energies",
                "classification",
                "integrality",
                "max_deviation",
                "error",
            ])?;
            for e in &self.entries {
                let row: Vec<String> = match &e.outcome {
                    Ok(r) => vec![
                        self.family.clone(),
                        e.p.to_string(),
                        r.all_match().to_string(),
                        r.structure_match.to_string(),
                        r.spectra_match.values().all(|&b| b).to_string(),
                        r.energy_match.values().all(|&b| b).to_string(),
                        r.classification_match.to_string(),
                        r.integrality_match.to_string(),
                        r.max_deviation.to_string(),
                        String::new(),
                    ],
                    Err(msg) => {
                        let mut row = vec![self.family.clone(), e.p.to_string(), "false".into()];
                        row.extend(std::iter::repeat_n(String::new(), 6));
                        row.push(msg.clone());
                        row
                    }
                };
                w.write_record(&row)?;
            }
            Ok(())
        })
    }

    fn markdown(&self) -> String {
        let mut s = format!("# Verification of {}\n\n", self.family);
        s.push_str("| p | all match | structure | spectra | energies | classification | integrality | max deviation |\n");
        s.push_str("|---|---|---|---|---|---|---|---|\n");
        let mut notes = Vec::new();
        for e in &self.entries {
            match &e.outcome {
                Ok(r) => {
                    let _ = writeln!(
                        s,
                        "| {} | {} | {} | {} | {} | {} | {} | {:.3e} |",
                        e.p,
                        yes_no(r.all_match()),
                        yes_no(r.structure_match),
                        yes_no(r.spectra_match.values().all(|&b| b)),
                        yes_no(r.energy_match.values().all(|&b| b)),
                        yes_no(r.classification_match),
                        yes_no(r.integrality_match),
                        r.max_deviation
                    );
                    notes.extend(r.notes.iter().cloned());
                }
                Err(msg) => {
                    let _ = writeln!(s, "| {} | error: {msg} | | | | | | |", e.p);
                }
            }
        }
        if !notes.is_empty() {
            s.push_str("\n## Notes\n\n");
            for n in notes {
                let _ = writeln!(s, "- {n}");
            }
        }
        s
    }
}

pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
    pub abelian: bool,
    pub element_orders: BTreeMap<usize, usize>,
    pub subgroup_count: usize,
    pub subgroups_by_order: BTreeMap<usize, usize>,
}

impl GroupInfo {
    pub fn involutions(&self) -> usize {
        self.element_orders.get(&2).copied().unwrap_or(0)
    }
}

impl Report for GroupInfo {
    fn json(&self) -> Value {
        json!({
            "command": "group-info",
            "tool": tool(),
            "group": { "spec": self.spec, "order": self.order, "abelian": self.abelian },
            "element_orders": to_value(&self.element_orders),
            "involutions": self.involutions(),
            "subgroup_count": self.subgroup_count,
            "subgroups_by_order": to_value(&self.subgroups_by_order),
        })
    }

    fn csv(&self) -> csv::Result<String> {
        csv_string(|w| {
            w.write_record(["section", "key", "value"])?;
            w.write_record(["group", "order", &self.order.to_string()])?;
            w.write_record(["group", "abelian", &self.abelian.to_string()])?;
            w.write_record(["group", "subgroup_count", &self.subgroup_count.to_string()])?;
            for (k, v) in &self.element_orders {
                w.write_record(["element_order", &k.to_string(), &v.to_string()])?;
            }
            for (k, v) in &self.subgroups_by_order {
                w.write_record(["subgroup_order", &k.to_string(), &v.to_string()])?;
            }
            Ok(())
        })
    }

    fn markdown(&self) -> String {
        let mut s = format!("# Group `{}`\n\n", self.spec);
        let _ = writeln!(
            s,
            "order {}, {}, {} subgroups, {} involution(s)\n",
            self.order,
            if self.abelian { "abelian" } else { "non-abelian" },
            self.subgroup_count,
            self.involutions()
        );
        s.push_str("| element order | elements |\n|---|---|\n");
        for (k, v) in &self.element_orders {
            let _ = writeln!(s, "| {k} | {v} |");
        }
        s.push_str("\n| subgroup order | subgroups |\n|---|---|\n");
        for (k, v) in &self.subgroups_by_order {
            let _ = writeln!(s, "| {k} | {v} |");
        }
        s
    }
}

/// Parses `a,l,q,cn` into kinds, deduplicated, in canonical order.
pub fn parse_kinds(list: &str) -> Result<Vec<MatrixKind>, String> {
    let mut kinds = list.split(',').map(|s| s.trim().parse::<MatrixKind>()).collect::<Result<Vec<_>, _>>()?;
    kinds.sort();
    kinds.dedup();
    Ok(kinds)
}
