use acmkit_core::harness::{self, enumerate_complexes, random_complex, Check, HarnessConfig};
use acmkit_core::*;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn fields() -> [FieldSpec; 2] {
    [FieldSpec::Rational, FieldSpec::gf(2).unwrap()]
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for n in [4, 5] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_complexes(n).unwrap().count())
        });
    }
    group.finish();
}

fn boundary_rank(c: &mut Criterion) {
    // 3-skeleton of the simplex on 10 vertices: 120 x 210 boundary matrix
    let skeleton = SimplicialComplex::simplex(10).pure_skeleton(3).unwrap();
    let d3 = boundary_matrix(&skeleton, 3).unwrap();
    assert_eq!((d3.nrows(), d3.ncols()), (120, 210));
    let mut group = c.benchmark_group("rank");
    for f in fields() {
        group.bench_function(f.to_string(), |b| b.iter(|| rank(black_box(&d3), f)));
    }
    group.finish();
}

fn criteria(c: &mut Criterion) {
    let samples: Vec<SimplicialComplex> = (0..64)
        .map(|seed| random_complex(9, seed, 0.4).unwrap())
        .filter(|x| !x.is_void() && !x.is_full_simplex())
        .collect();
    let mut group = c.benchmark_group("criteria");
    for f in fields() {
        group.bench_function(BenchmarkId::new("reisner", f), |b| {
            b.iter(|| {
                for x in &samples {
                    black_box(is_cohen_macaulay(x, f).unwrap());
                }
            })
        });
        group.bench_function(BenchmarkId::new("classify", f), |b| {
            b.iter(|| {
                for x in &samples {
                    black_box(classify(x, f, Route::Both).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("harness_main");
    group.sample_size(10);
    for n in [4, 5] {
        let cfg = HarnessConfig::exhaustive(n, fields().to_vec(), &[Check::Main]);
        group.bench_with_input(BenchmarkId::from_parameter(n), &cfg, |b, cfg| {
            b.iter(|| harness::run(cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, boundary_rank, criteria, sweep);
criterion_main!(benches);
