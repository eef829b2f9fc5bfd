use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cdlab_bench::{bench_group, BENCH_SPECS};
use cdlab_core::{
    default_catalog, run_harness, Analysis, CdLattice, HarnessOptions, TheoremId,
    DEFAULT_SUBGROUP_BUDGET,
};

fn subgroups(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_subgroups");
    for spec in BENCH_SPECS {
        let g = bench_group(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| g.all_subgroups(DEFAULT_SUBGROUP_BUDGET).unwrap().len())
        });
    }
    group.finish();
}

fn lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("cd_lattice");
    for spec in BENCH_SPECS {
        let g = bench_group(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| {
                let a = Analysis::new(g, DEFAULT_SUBGROUP_BUDGET).unwrap();
                CdLattice::build(&a).unwrap().len()
            })
        });
    }
    group.finish();
}

fn harness(c: &mut Criterion) {
    let catalog = default_catalog(32);
    let options = HarnessOptions {
        theorems: vec![TheoremId::T1],
        ..HarnessOptions::default()
    };
    c.bench_function("theorem1_catalog_32", |b| {
        b.iter(|| run_harness(black_box(&catalog), &options).reports.len())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = subgroups, lattice, harness
}
criterion_main!(benches);
