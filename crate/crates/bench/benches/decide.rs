use criterion::{black_box, criterion_group, criterion_main, Criterion};
use perfcode::Decider;
use perfcode_bench::{with_lattice, GROUPS};

fn decide_lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("decide_lattice");
    for spec in GROUPS {
        let (b, lattice) = with_lattice(spec);
        for (name, decider) in [
            ("confirmed", Decider::new()),
            ("criteria_only", Decider::new().confirm(false)),
        ] {
            group.bench_function(format!("{spec}/{name}"), |bench| {
                bench.iter(|| {
                    lattice
                        .iter()
                        .filter(|h| decider.decide(&b.group, h).unwrap().is_yes())
                        .count()
                })
            });
        }
    }
    group.finish();
    c.bench_function("enumerate_subgroups/a(2,2,2,2,2,2)", |bench| {
        let b = perfcode_bench::build("a(2,2,2,2,2,2)");
        bench.iter(|| perfcode::enumerate_subgroups(black_box(&b.group)).unwrap().len())
    });
}

criterion_group!(benches, decide_lattice);
criterion_main!(benches);
