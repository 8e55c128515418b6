use std::hint::black_box;

use braidmon::fixtures::{names, run_many, run_pipeline};
use braidmon::par::Exec;
use braidmon::zvk::{count_homs_to_symmetric, presentation_projective};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn entrywise(c: &mut Criterion) {
    let hesse = run_pipeline("hesse").unwrap();
    let f = hesse.output("generic").unwrap().clone();
    let shifted = f.conjugate_all(&braidmon::BraidWord::full_twist(f.strands())).unwrap();
    let mut group = c.benchmark_group("entrywise comparison, 21 entries on 12 strands");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| black_box(f.entrywise_mismatches(&shifted, exec).unwrap()))
        });
    }
    group.finish();
}

fn homs(c: &mut Criterion) {
    let zariski = run_pipeline("zariski-sextic").unwrap();
    let p = presentation_projective(zariski.output("generic").unwrap()).unwrap();
    let mut group = c.benchmark_group("homomorphisms to S4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| black_box(count_homs_to_symmetric(&p, 4, exec).unwrap()))
        });
    }
    group.finish();
}

fn pipelines(c: &mut Criterion) {
    let all = names();
    let mut group = c.benchmark_group("all pipelines");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| black_box(run_many(&all, exec)))
        });
    }
    group.finish();
}

criterion_group!(benches, entrywise, homs, pipelines);
criterion_main!(benches);
