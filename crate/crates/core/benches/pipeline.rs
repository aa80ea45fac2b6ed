//! Sequential versus parallel timings for the pipeline stages.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sgb_core::closed_form::{build_group, Family, FamilyId};
use sgb_core::eigen::JacobiOptions;
use sgb_core::pipeline::{build, numeric_spectra};
use sgb_core::verify::{verify_all, VerifyOptions};
use sgb_core::{build_sgb, enumerate_subgroups, Execution, FiniteGroup, MatrixKind};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("D24", FiniteGroup::dihedral(12).unwrap()),
        ("Q36", build_group(FamilyId::new(Family::Q4p2, 3).unwrap()).unwrap()),
        ("D38", FiniteGroup::dihedral(19).unwrap()),
    ]
}

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_sgb");
    for (name, g) in groups() {
        let lattice = enumerate_subgroups(&g);
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &g, |b, g| b.iter(|| build_sgb(g, &lattice, exec)));
        }
    }
    group.finish();
}

fn bench_numeric(c: &mut Criterion) {
    let mut group = c.benchmark_group("numeric_spectra");
    group.sample_size(10);
    for (name, g) in groups() {
        let built = build(&g, Execution::Parallel);
        for (mode, exec) in MODES {
            group.bench_function(BenchmarkId::new(mode, name), |b| {
                b.iter(|| numeric_spectra(&built.graph, &MatrixKind::ALL, JacobiOptions::default(), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let ids: Vec<FamilyId> = [(Family::D2p, 3), (Family::D2p, 5), (Family::D2p, 7), (Family::Q4p, 2), (Family::Q4p, 3)]
        .into_iter()
        .map(|(f, p)| FamilyId::new(f, p).unwrap())
        .collect();
    let mut group = c.benchmark_group("verify_all");
    group.sample_size(10);
    for (mode, exec) in MODES {
        let opts = VerifyOptions { pipeline: sgb_core::pipeline::PipelineOptions { exec, ..Default::default() }, ..Default::default() };
        group.bench_function(mode, |b| b.iter(|| verify_all(&ids, &opts, exec)));
    }
    group.finish();
}

criterion_group!(benches, bench_build, bench_numeric, bench_verify);
criterion_main!(benches);
