use criterion::{criterion_group, criterion_main, Criterion};

use diamondlab_core::diamond_figure;
use diamondlab_core::perm::{group_generators, orbit, GroupSet, DEFAULT_CAP};
use diamondlab_core::schreier::StabilizerChain;
use diamondlab_core::symmetry::verify_theorem;

fn bench_group(c: &mut Criterion) {
    let mut g = c.benchmark_group("group");
    g.sample_size(10);
    g.bench_function("closure_322560", |b| {
        b.iter(|| {
            GroupSet::generate(&group_generators(), DEFAULT_CAP)
                .unwrap()
                .len()
        })
    });
    g.bench_function("schreier_chain", |b| {
        b.iter(|| StabilizerChain::new(&group_generators()).order())
    });
    g.bench_function("orbit_840", |b| {
        b.iter(|| {
            orbit(&diamond_figure(), &group_generators(), DEFAULT_CAP)
                .unwrap()
                .len()
        })
    });
    let orb = orbit(&diamond_figure(), &group_generators(), DEFAULT_CAP).unwrap();
    g.bench_function("verify_theorem_840", |b| {
        b.iter(|| verify_theorem(&orb).failures.len())
    });
    g.finish();
}

criterion_group!(benches, bench_group);
criterion_main!(benches);
