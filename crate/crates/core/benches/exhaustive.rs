//! Sequential against data-parallel execution on the exhaustive workloads.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polycomp::claims::{run_suite, SuiteConfig};
use polycomp::composite::{BruteForce, CompositeRing, OracleLimits};
use polycomp::exec::ExecMode;
use polycomp::fieldtower::Field;
use polycomp::ideals::FractionalIdeal;
use polycomp::polyring::Poly;

fn ring() -> CompositeRing {
    CompositeRing::fields(Field::prime(2).unwrap(), Field::finite(2, 2, None).unwrap()).unwrap()
}

fn modes() -> Vec<(&'static str, ExecMode)> {
    vec![
        ("sequential", ExecMode::Sequential),
        #[cfg(feature = "parallel")]
        ("parallel", ExecMode::Parallel),
    ]
}

fn length_sets(c: &mut Criterion) {
    let r = ring();
    let mut g = c.benchmark_group("length_sets_deg4");
    g.sample_size(10);
    for (name, mode) in modes() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                let bf = BruteForce::new(&r, 4, OracleLimits::default(), mode).unwrap();
                let cands = bf.candidates().to_vec();
                black_box(mode.map(cands, |e| bf.length_set(&e).map(|s| s.len()).unwrap_or(0)))
            })
        });
    }
    g.finish();
}

fn claim_suite(c: &mut Criterion) {
    let r = ring();
    let mut g = c.benchmark_group("claim_suite");
    g.sample_size(10);
    for (name, mode) in modes() {
        let cfg = SuiteConfig { mode, ..SuiteConfig::default() };
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| black_box(run_suite(&r, &cfg).summary)));
    }
    g.finish();
}

fn quotient_check(c: &mut Criterion) {
    let r = ring();
    let l = r.big().clone();
    let ideal = FractionalIdeal::principal(&r, Poly::monomial(l.clone(), l.one(), 3)).unwrap();
    let mut g = c.benchmark_group("quotient_pir_x3");
    g.sample_size(10);
    for (name, mode) in modes() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(ideal.quotient_pir_check(mode).map(|v| v.quotient_size())))
        });
    }
    g.finish();
}

criterion_group!(benches, length_sets, claim_suite, quotient_check);
criterion_main!(benches);
