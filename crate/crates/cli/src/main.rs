//! `sgb`: analyze subgroup-generating bipartite graphs and verify the
//! dihedral and dicyclic closed forms.

mod exit;
mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sgb_core::closed_form::{Family, FamilyId};
use sgb_core::eigen::JacobiOptions;
use sgb_core::energy::energy_chain_holds;
use sgb_core::error::FamilyError;
use sgb_core::pipeline::{analyze, PipelineOptions, DEFAULT_MATCH_TOL};
use sgb_core::verify::{verify_family, VerifyOptions, DEFAULT_MAX_ORDER};
use sgb_core::{enumerate_subgroups, Execution, FiniteGroup, GroupSpec};

use exit::{status_of, Status};
use report::{parse_kinds, AnalyzeReport, Format, GroupInfo, Report, VerifyEntry, VerifyReport};

#[derive(Parser)]
#[command(name = "sgb", version, about = "Spectra and energies of subgroup-generating bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on one group.
    Analyze {
        /// cyclic:N, dihedral:N (order 2N), dicyclic:M (order 4M) or cayley:PATH
        spec: String,
        /// Matrix kinds to report: any of a, l, q, cn
        #[arg(long, default_value = "a,l,q,cn")]
        matrix: String,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        numeric: Numeric,
    },
    /// Check the closed forms of a family against the brute-force pipeline.
    Verify {
        /// D2p, D2p2, Q4p or Q4p2
        family: String,
        /// Comma-separated primes
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        numeric: Numeric,
    },
    /// Order, element orders and subgroup counts of a group.
    GroupInfo {
        spec: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest group order accepted
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
}

#[derive(Args)]
struct Numeric {
    /// Tolerance for exact-versus-numeric eigenvalue agreement
    #[arg(long, default_value_t = DEFAULT_MATCH_TOL)]
    tol: f64,
    /// Skip the numeric eigenvalue oracle
    #[arg(long)]
    exact_only: bool,
    /// Run on a single thread
    #[arg(long)]
    sequential: bool,
}

impl Numeric {
    fn pipeline(&self) -> PipelineOptions {
        PipelineOptions {
            exec: if self.sequential { Execution::Sequential } else { Execution::Parallel },
            numeric: !self.exact_only,
            match_tol: self.tol,
            jacobi: JacobiOptions::default(),
            ..PipelineOptions::default()
        }
    }
}

struct Failure {
    status: Status,
    message: String,
}

impl From<sgb_core::Error> for Failure {
    fn from(e: sgb_core::Error) -> Self {
        Failure { status: status_of(&e), message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { status: Status::Usage, message: message.into() }
}

fn emit(report: &impl Report, common: &Common) -> Result<(), Failure> {
    let text = report.render(common.format).map_err(|e| usage(format!("rendering csv: {e}")))?;
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_group(spec: &str, max_order: usize) -> Result<(GroupSpec, FiniteGroup), Failure> {
    let parsed: GroupSpec = spec.parse().map_err(sgb_core::Error::from)?;
    let too_big = |order| Failure::from(sgb_core::Error::from(FamilyError::OrderLimit { order, limit: max_order }));
    if let Some(order) = parsed.nominal_order().filter(|&n| n > max_order) {
        return Err(too_big(order));
    }
    let g = parsed.build().map_err(sgb_core::Error::from)?;
    if g.order() > max_order {
        return Err(too_big(g.order()));
    }
    Ok((parsed, g))
}

fn cmd_analyze(spec: &str, matrix: &str, common: &Common, numeric: &Numeric) -> Result<Status, Failure> {
    let kinds = parse_kinds(matrix).map_err(usage)?;
    let (parsed, g) = load_group(spec, common.max_order)?;
    let options = PipelineOptions { kinds, ..numeric.pipeline() };
    let analysis = analyze(&g, &options)?;
    let energy_chain = energy_chain_holds(&analysis.energies).ok();
    let numeric_ok = analysis.numeric_ok();
    let report = AnalyzeReport { spec: parsed.to_string(), abelian: g.is_abelian(), analysis, options, energy_chain };
    emit(&report, common)?;
    Ok(if numeric_ok { Status::Success } else { Status::Numeric })
}

fn cmd_verify(family: &str, primes: &[u64], common: &Common, numeric: &Numeric) -> Result<Status, Failure> {
    let fam: Family = family.parse().map_err(sgb_core::Error::from)?;
    let opts = VerifyOptions { max_order: common.max_order, pipeline: numeric.pipeline() };
    let mut status = Status::Success;
    let mut entries = Vec::new();
    for &p in primes {
        let result = FamilyId::new(fam, p)
            .map_err(sgb_core::Error::from)
            .and_then(|id| verify_family(id, &opts));
        let entry = match result {
            Ok(r) => {
                if !r.all_match() {
                    status = status.max(Status::Mismatch);
                }
                VerifyEntry { p, outcome: Ok(r) }
            }
            Err(e) => {
                status = status.max(status_of(&e));
                VerifyEntry { p, outcome: Err(e.to_string()) }
            }
        };
        entries.push(entry);
    }
    let report = VerifyReport { family: fam.to_string(), entries, options: opts.pipeline, max_order: common.max_order };
    emit(&report, common)?;
    Ok(status)
}

fn cmd_group_info(spec: &str, common: &Common) -> Result<Status, Failure> {
    let (parsed, g) = load_group(spec, common.max_order)?;
    let mut element_orders = BTreeMap::new();
    for x in g.elements() {
        *element_orders.entry(g.element_order(x)).or_insert(0) += 1;
    }
    let lattice = enumerate_subgroups(&g).summary();
    let info = GroupInfo {
        spec: parsed.to_string(),
        order: g.order(),
        abelian: g.is_abelian(),
        element_orders,
        subgroup_count: lattice.subgroup_count,
        subgroups_by_order: lattice.subgroups_by_order,
    };
    emit(&info, common)?;
    Ok(Status::Success)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Status::Usage.code() } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Analyze { spec, matrix, common, numeric } => cmd_analyze(spec, matrix, common, numeric),
        Command::Verify { family, primes, common, numeric } => cmd_verify(family, primes, common, numeric),
        Command::GroupInfo { spec, common } => cmd_group_info(spec, common),
    };
    match result {
        Ok(status) => ExitCode::from(status.code()),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status.code())
        }
    }
}
