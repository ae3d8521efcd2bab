//! Property tests for the structural invariants the rest of the tool leans on.

use nfree::codes::{graham_sloane, verify_min_distance};
use nfree::construct::pivot_split;
use nfree::poset::find_n_witness;
use nfree::subset::{binomial, enumerate_level};
use nfree::textio::{family_to_string, parse_family};
use nfree::{SetFamily, SubsetWord};
use proptest::collection::btree_set;
use proptest::prelude::*;

fn word_pair(n: u32) -> impl Strategy<Value = (SubsetWord, SubsetWord)> {
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..=limit, 0..=limit).prop_map(move |(a, b)| {
        (
            SubsetWord::from_mask(n, a).unwrap(),
            SubsetWord::from_mask(n, b).unwrap(),
        )
    })
}

proptest! {
    #[test]
    fn complement_preserves_distance((a, b) in word_pair(12)) {
        prop_assert_eq!(
            a.complement().hamming_distance(&b.complement()),
            a.hamming_distance(&b)
        );
        prop_assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn distance_is_symmetric_difference((a, b) in word_pair(16)) {
        let inter = (a.mask() & b.mask()).count_ones();
        prop_assert_eq!(
            a.hamming_distance(&b),
            a.weight() + b.weight() - 2 * inter
        );
        prop_assert_eq!(a.hamming_distance(&b), b.hamming_distance(&a));
        prop_assert_eq!(a.hamming_distance(&a), 0);
    }

    #[test]
    fn level_enumeration_counts_and_complements(n in 1u32..=14, k in 0u32..=14) {
        prop_assume!(k <= n);
        let level = enumerate_level(n, k).unwrap();
        prop_assert_eq!(level.len() as u64, binomial(n, k));
        let mut comp: Vec<SubsetWord> = level.iter().map(SubsetWord::complement).collect();
        comp.sort();
        let other = enumerate_level(n, n - k).unwrap();
        prop_assert_eq!(comp, other);
        // colex order is strictly increasing
        let sorted = enumerate_level(n, k).unwrap();
        prop_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn gs_code_always_verifies(n in 2u32..=12, k in 0u32..=12) {
        prop_assume!(k <= n);
        let code = graham_sloane(n, k).unwrap();
        prop_assert_eq!(verify_min_distance(code.words(), 4), None);
        prop_assert!(code.len() as u64 >= binomial(n, k).div_ceil(n as u64));
    }

    #[test]
    fn split_partitions_any_gs_code(n in 4u32..=12, k in 1u32..=11, pivot in 1u32..=12) {
        prop_assume!(k < n && pivot <= n);
        let code = graham_sloane(n, k).unwrap();
        let split = pivot_split(&code, pivot).unwrap();
        prop_assert_eq!(split.c_up().len() + split.c_down().len(), code.len());
        for up in split.c_up().words() {
            prop_assert!(up.contains(pivot));
            for down in split.c_down().words() {
                prop_assert!(!down.is_strict_subset_of(up));
            }
        }
        for down in split.c_down().words() {
            prop_assert!(!down.contains(pivot));
        }
    }

    #[test]
    fn text_round_trip(masks in btree_set(0u64..(1 << 9), 0..40)) {
        let members: Vec<SubsetWord> = masks
            .iter()
            .map(|&m| SubsetWord::from_mask(9, m).unwrap())
            .collect();
        let family = SetFamily::new(9, members).unwrap();
        let text = family_to_string(&family, &[]);
        let parsed = parse_family(&text).unwrap();
        prop_assert_eq!(parsed, family);
    }

    #[test]
    fn adding_members_never_removes_an_n(seed in 0u64..400) {
        let n = 4 + (seed % 3) as u32;
        let masks = nfree_testkit::random_family(n, 14, seed);
        let members: Vec<SubsetWord> = masks
            .iter()
            .map(|&m| SubsetWord::from_mask(n, m).unwrap())
            .collect();
        let family = SetFamily::new(n, members.clone()).unwrap();
        let had_n = find_n_witness(&family).is_some();
        // Grow by one arbitrary absent set.
        let space = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let extra = (0..=space)
            .map(|m| SubsetWord::from_mask(n, m).unwrap())
            .find(|w| !family.contains(w));
        if let (true, Some(extra)) = (had_n, extra) {
            let mut grown = members;
            grown.push(extra);
            let grown = SetFamily::new(n, grown).unwrap();
            prop_assert!(find_n_witness(&grown).is_some());
        }
    }
}
