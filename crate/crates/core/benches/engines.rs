use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use icecount::{count, BoundarySpec, Engine, EnumConfig, Parallelism, Partition};

fn specs() -> Vec<(String, BoundarySpec)> {
    let mut out = vec![
        ("dwbc7".to_string(), BoundarySpec::domain_wall(7).unwrap()),
        ("vsasm5".to_string(), BoundarySpec::vsasm(5).unwrap()),
    ];
    for lambda in ["4,2,1,0,0", "3,3,1,1,0,0"] {
        let p: Partition = lambda.parse().unwrap();
        out.push((format!("part({lambda})"), BoundarySpec::from_partition(&p)));
    }
    out
}

fn bench_engines(c: &mut Criterion) {
    let modes = [
        ("seq", Parallelism::Sequential),
        ("par", Parallelism::Ambient),
    ];
    for (engine_name, engine) in [("backtrack", Engine::Backtrack), ("rowdp", Engine::RowDp)] {
        let mut group = c.benchmark_group(engine_name);
        group.sample_size(10);
        for (name, spec) in specs() {
            for (mode, parallelism) in modes {
                let cfg = EnumConfig::with_parallelism(parallelism);
                group.bench_with_input(BenchmarkId::new(mode, &name), &spec, |b, spec| {
                    b.iter(|| count(spec, engine, &cfg).unwrap())
                });
            }
        }
        group.finish();
    }
}

criterion_group!(benches, bench_engines);
criterion_main!(benches);
