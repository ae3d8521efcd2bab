//! Sequential vs parallel timings for the hot paths: pairwise distance
//! verification, certificate-free branch-and-bound, N-detection, and table
//! assembly. `cargo bench -p nfree` runs both modes of each; building with
//! `--no-default-features` collapses parallel onto the sequential path.

use criterion::{criterion_group, criterion_main, Criterion};

use nfree::codes::verify_min_distance_mode;
use nfree::construct::build_three_level;
use nfree::poset::contains_n;
use nfree::report::{bound_table, TableMethod};
use nfree::solver::{exact_max_code_no_certificate, Budget};
use nfree::subset::enumerate_level;
use nfree::{graham_sloane, ExecMode, SetFamily};

const MODES: [(&str, ExecMode); 2] = [
    ("sequential", ExecMode::Sequential),
    ("parallel", ExecMode::Parallel),
];

/// Full pairwise sweep over level (14,7): 3432 words, ~5.9M pairs. Distance
/// 2 holds for any pair of distinct equal-weight words, so the sweep never
/// exits early.
fn bench_verify(c: &mut Criterion) {
    let words = enumerate_level(14, 7).unwrap();
    let mut group = c.benchmark_group("verify/level(14,7)");
    for (label, mode) in MODES {
        group.bench_function(label, |b| {
            b.iter(|| {
                assert_eq!(verify_min_distance_mode(&words, 2, mode), None);
            })
        });
    }
    group.finish();
}

/// A(11,6,5) = 11 proved by exhausting the tree; distance 6 sidesteps the
/// Johnson certificate, so this measures the branch-and-bound itself.
fn bench_solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solver/A(11,6,5)");
    group.sample_size(10);
    for (label, mode) in MODES {
        group.bench_function(label, |b| {
            b.iter(|| {
                let outcome =
                    exact_max_code_no_certificate(11, 6, 5, Budget::UNLIMITED, mode).unwrap();
                assert_eq!(outcome.code.len(), 11);
            })
        });
    }
    group.finish();
}

/// N-detection over the 1001-member three-level family at n=12; the family
/// is N-free, so detection always pays for the full containment precompute.
fn bench_contains_n(c: &mut Criterion) {
    let code = graham_sloane(12, 6).unwrap();
    let family: SetFamily = build_three_level(12, 6, &code, 1).unwrap().family;
    let mut group = c.benchmark_group("contains_n/three-level(12,6)");
    for (label, mode) in MODES {
        group.bench_function(label, |b| {
            b.iter(|| {
                assert!(!contains_n(&family, mode));
            })
        });
    }
    group.finish();
}

/// GS-method bound table across four universes; rows are independent, so
/// parallel mode splits across n.
fn bench_table(c: &mut Criterion) {
    let ns = [12u32, 14, 16, 18];
    let mut group = c.benchmark_group("table/gs-n12-18");
    for (label, mode) in MODES {
        group.bench_function(label, |b| {
            b.iter(|| {
                let records = bound_table(&ns, TableMethod::Gs, mode).unwrap();
                assert_eq!(records.len(), 4);
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_verify,
    bench_solver,
    bench_contains_n,
    bench_table
);
criterion_main!(benches);
