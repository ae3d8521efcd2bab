//! End-to-end checks of the two-level, three-level, and naive families:
//! sizes, forbidden-pattern status, and the split-claim sweep.

use nfree::codes::graham_sloane;
use nfree::construct::{
    build_kt, build_naive_all_extensions, build_three_level, claim_report, pivot_split,
};
use nfree::poset::{contains_n, find_n_witness, find_v_witness};
use nfree::solver::{exact_max_code, Budget};
use nfree::subset::binomial;
use nfree::ExecMode;

fn exact_code(n: u32, k: u32) -> nfree::ConstantWeightCode {
    exact_max_code(n, 4, k, Budget::UNLIMITED).unwrap().code
}

#[test]
fn three_level_sizes_and_n_freeness() {
    for (n, expect) in [(4u32, 8u64), (6, 24), (8, 84)] {
        let k = n / 2;
        let code = exact_code(n, k);
        let built = build_three_level(n, k, &code, 1).unwrap();
        let family = &built.family;
        assert_eq!(family.len() as u64, expect, "n={n}");
        assert_eq!(
            family.len() as u64,
            binomial(n, k) + code.len() as u64,
            "n={n}: level size plus code size"
        );
        assert_eq!(find_n_witness(family), None, "n={n}");
        // Independent oracle on raw masks agrees (kept to the small cases).
        if n <= 6 {
            let masks: Vec<u64> = family.members().iter().map(|w| w.mask()).collect();
            assert_eq!(nfree_testkit::contains_n_quadruple(&masks), None);
        }
    }
}

#[test]
fn three_level_contains_v_but_not_n() {
    let code = exact_code(6, 3);
    let built = build_three_level(6, 3, &code, 1).unwrap();
    let v = find_v_witness(&built.family).expect("three-level family should contain a V");
    assert!(v.is_valid());
    assert!(!contains_n(&built.family, ExecMode::Sequential));
}

#[test]
fn kt_family_sizes_and_v_freeness() {
    for (n, expect) in [(4u32, 7u64), (6, 23), (8, 78)] {
        let k = n / 2;
        let code = exact_code(n, k + 1);
        let built = build_kt(n, k, &code).unwrap();
        assert_eq!(built.family.len() as u64, expect, "n={n}");
        assert_eq!(find_v_witness(&built.family), None, "n={n}");
        assert_eq!(find_n_witness(&built.family), None);
    }
}

#[test]
fn naive_family_contains_n() {
    let code = exact_code(4, 2);
    let built = build_naive_all_extensions(4, 2, &code).unwrap();
    assert_eq!(built.family.len(), 14);
    let w = find_n_witness(&built.family)
        .expect("naive all-extensions family must contain an N");
    assert!(w.is_valid());
    for member in [w.w, w.x, w.y, w.z] {
        assert!(built.family.contains(&member));
    }
    let masks: Vec<u64> = built.family.members().iter().map(|m| m.mask()).collect();
    assert!(nfree_testkit::contains_n_quadruple(&masks).is_some());
}

#[test]
fn split_claim_sweep_gs_codes() {
    for n in 4..=10u32 {
        for k in 1..n {
            let code = graham_sloane(n, k).unwrap();
            if code.len() < 2 {
                continue;
            }
            for pivot in 1..=n {
                let report = claim_report(&code, pivot).unwrap();
                assert!(report.holds(), "n={n} k={k} pivot={pivot}: {report:?}");
                let split = pivot_split(&code, pivot).unwrap();
                assert_eq!(split.c_up().len() + split.c_down().len(), code.len());
            }
        }
    }
}

#[test]
fn split_sides_keep_distance_under_oracle() {
    let code = exact_code(8, 4);
    let split = pivot_split(&code, 3).unwrap();
    for side in [split.c_up(), split.c_down()] {
        if side.len() < 2 {
            continue;
        }
        let masks: Vec<u64> = side.words().iter().map(|w| w.mask()).collect();
        assert!(nfree_testkit::min_pairwise_distance(&masks).unwrap() >= 4);
    }
}

#[test]
fn kt_beats_single_level_and_three_level_beats_kt() {
    for n in [4u32, 6, 8] {
        let k = n / 2;
        let level = binomial(n, k);
        let kt_code = exact_code(n, k + 1);
        let mid_code = exact_code(n, k);
        let kt = build_kt(n, k, &kt_code).unwrap().family.len() as u64;
        let three = build_three_level(n, k, &mid_code, 1).unwrap().family.len() as u64;
        assert!(kt > level, "n={n}");
        assert!(three > kt, "n={n}");
    }
}
