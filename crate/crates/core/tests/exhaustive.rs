use acmkit_core::harness::{self, enumerate_complexes, random_complex, Check, HarnessConfig, Mode};
use acmkit_core::*;

/// Monotone Boolean functions of `m` variables as truth tables, built from pairs
/// `g <= h` of functions in one variable fewer. Their number is the Dedekind number.
fn monotone_functions(m: usize) -> Vec<u64> {
    if m == 0 {
        return vec![0, 1];
    }
    let smaller = monotone_functions(m - 1);
    let shift = 1 << (m - 1);
    let mut out = Vec::new();
    for &g in &smaller {
        for &h in &smaller {
            if g & !h == 0 {
                out.push(g | h << shift);
            }
        }
    }
    out
}

fn dedekind(n: usize) -> u64 {
    let smaller = monotone_functions(n - 1);
    let mut count = 0u64;
    for &g in &smaller {
        count += smaller.iter().filter(|&&h| g & !h == 0).count() as u64;
    }
    count
}

#[test]
fn independent_dedekind_counter() {
    assert_eq!(
        (1..=5).map(dedekind).collect::<Vec<_>>(),
        vec![3, 6, 20, 168, 7581]
    );
}

#[test]
fn enumeration_counts_match_dedekind_numbers() {
    for n in 1..=5 {
        assert_eq!(
            enumerate_complexes(n).unwrap().count() as u64,
            dedekind(n),
            "n = {n}"
        );
    }
}

#[test]
fn six_vertices() {
    let oracle = dedekind(6);
    assert_eq!(oracle, 7_828_354);
    assert_eq!(enumerate_complexes(6).unwrap().count() as u64, oracle);
}

#[test]
fn field_independence_without_torsion() {
    let fields = [
        FieldSpec::gf(2).unwrap(),
        FieldSpec::gf(3).unwrap(),
        FieldSpec::gf(5).unwrap(),
    ];
    for n in 1..=5 {
        for c in enumerate_complexes(n).unwrap().filter(|c| !c.is_void()) {
            let rational = reduced_betti_numbers(&c, FieldSpec::Rational).unwrap();
            for f in fields {
                assert_eq!(
                    reduced_betti_numbers(&c, f).unwrap(),
                    rational,
                    "{c} over {f}"
                );
            }
        }
    }
}

#[test]
fn three_vertices_all_checks() {
    let cfg = HarnessConfig::exhaustive(3, vec![FieldSpec::gf(2).unwrap()], &Check::ALL);
    let report = harness::run(&cfg).unwrap();
    assert_eq!(report.complexes_checked, 20);
    assert_eq!(report.skipped_void, 1);
    assert!(report.is_clean(), "{:?}", report.failures);
    let h = report.histogram[&FieldSpec::gf(2).unwrap()];
    assert_eq!(h.total(), 19);
    for (check, counter) in &report.checks {
        assert_eq!(counter.failed, 0, "{check}");
        assert!(counter.passed > 0, "{check}");
    }
}

#[test]
fn report_independent_of_worker_count() {
    let base = HarnessConfig::exhaustive(
        5,
        vec![FieldSpec::Rational, FieldSpec::gf(2).unwrap()],
        &[Check::Main, Check::Involution],
    );
    let one = harness::run(&base).unwrap();
    let four = harness::run(&base.clone().with_workers(4)).unwrap();
    assert_eq!(one, four);
    assert_eq!(one.complexes_checked, 7581);

    let random = HarnessConfig {
        n: 7,
        fields: vec![FieldSpec::gf(2).unwrap()],
        mode: Mode::Random {
            seed: 11,
            count: 60,
            density: 0.3,
        },
        checks: [Check::Main, Check::Euler].into_iter().collect(),
        workers: 1,
    };
    assert_eq!(
        harness::run(&random).unwrap(),
        harness::run(&random.clone().with_workers(3)).unwrap()
    );
}

#[test]
fn invalid_configs_are_rejected() {
    let cfg = HarnessConfig::exhaustive(7, vec![FieldSpec::Rational], &[Check::Main]);
    assert!(harness::run(&cfg).is_err());
    let cfg = HarnessConfig::exhaustive(3, vec![], &[Check::Main]);
    assert!(harness::run(&cfg).is_err());
    let cfg =
        HarnessConfig::exhaustive(3, vec![FieldSpec::Rational], &[Check::Main]).with_workers(0);
    assert!(harness::run(&cfg).is_err());
}

#[test]
fn random_snapshot() {
    let c = random_complex(8, 42, 0.3).unwrap();
    let facets: Vec<Vec<usize>> = c.facets().iter().map(|f| f.to_vec()).collect();
    let expected: Vec<Vec<usize>> = vec![
        vec![2, 4, 6],
        vec![5, 6, 7],
        vec![1, 2, 3, 4],
        vec![1, 2, 3, 5],
        vec![1, 2, 5, 8],
        vec![1, 3, 5, 7],
        vec![1, 3, 5, 8],
        vec![1, 4, 6, 8],
        vec![2, 3, 5, 6],
        vec![2, 3, 5, 8],
        vec![2, 4, 5, 8],
        vec![2, 5, 7, 8],
        vec![3, 4, 5, 6],
        vec![4, 5, 6, 8],
        vec![4, 6, 7, 8],
        vec![1, 3, 4, 6, 7],
        vec![2, 3, 4, 5, 7],
        vec![1, 2, 3, 6, 7, 8],
    ];
    assert_eq!(facets, expected);
}
