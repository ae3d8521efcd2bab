//! Brute-force oracles used to cross-check the main crate from tests.
//!
//! Everything here works on raw `u64` bitmasks and deliberately avoids the
//! main crate's types and algorithms: enumeration is recursive rather than
//! bit-twiddling, maximum codes come from plain exhaustive search, and poset
//! witnesses from full tuple scans. Slow on purpose; only run at oracle
//! scale (n ≤ 7 for the solver, small families for the poset checks).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// All k-element subsets of {0,…,n−1} as bitmasks, by recursive descent on
/// the highest element, returned sorted ascending.
pub fn enumerate_masks(n: u32, k: u32) -> Vec<u64> {
    fn rec(n: u32, k: u32, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(0);
            return;
        }
        if k > n {
            return;
        }
        // Subsets not using element n−1, then those using it.
        rec(n - 1, k, out);
        let before = out.len();
        rec(n - 1, k - 1, out);
        for m in &mut out[before..] {
            *m |= 1 << (n - 1);
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut out);
    out.sort_unstable();
    out
}

pub fn hamming(a: u64, b: u64) -> u32 {
    (a ^ b).count_ones()
}

/// Smallest pairwise distance, or `None` for fewer than two words.
pub fn min_pairwise_distance(masks: &[u64]) -> Option<u32> {
    let mut best = None;
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            let d = hamming(masks[i], masks[j]);
            if best.map_or(true, |b| d < b) {
                best = Some(d);
            }
        }
    }
    best
}

/// Size of the largest set of weight-k masks with pairwise distance ≥ d,
/// by exhaustive include/skip search with only the trivial count prune.
pub fn max_code_size_exhaustive(n: u32, d: u32, k: u32) -> usize {
    fn dfs(words: &[u64], start: usize, chosen: &mut Vec<u64>, d: u32, best: &mut usize) {
        if chosen.len() > *best {
            *best = chosen.len();
        }
        if chosen.len() + (words.len() - start) <= *best {
            return;
        }
        for i in start..words.len() {
            let w = words[i];
            if chosen.iter().all(|&c| hamming(c, w) >= d) {
                chosen.push(w);
                dfs(words, i + 1, chosen, d, best);
                chosen.pop();
            }
        }
    }
    let words = enumerate_masks(n, k);
    let mut best = 0;
    dfs(&words, 0, &mut Vec::new(), d, &mut best);
    best
}

fn strict_subset(a: u64, b: u64) -> bool {
    a != b && a & b == a
}

/// First ordered quadruple of distinct members (w, x, y, z) with
/// w ⊂ x ⊃ y ⊂ z — the weak N shape — or `None`.
pub fn contains_n_quadruple(masks: &[u64]) -> Option<(u64, u64, u64, u64)> {
    let m = masks.len();
    for wi in 0..m {
        for xi in 0..m {
            if !strict_subset(masks[wi], masks[xi]) {
                continue;
            }
            for yi in 0..m {
                if yi == wi || !strict_subset(masks[yi], masks[xi]) {
                    continue;
                }
                for zi in 0..m {
                    if zi == wi || zi == xi || zi == yi {
                        continue;
                    }
                    if strict_subset(masks[yi], masks[zi]) {
                        return Some((masks[wi], masks[xi], masks[yi], masks[zi]));
                    }
                }
            }
        }
    }
    None
}

/// First ordered triple of distinct members (y, x, z) with y ⊂ x and y ⊂ z
/// — the weak V shape — or `None`.
pub fn contains_v_triple(masks: &[u64]) -> Option<(u64, u64, u64)> {
    let m = masks.len();
    for yi in 0..m {
        for xi in 0..m {
            if xi == yi || !strict_subset(masks[yi], masks[xi]) {
                continue;
            }
            for zi in 0..m {
                if zi == yi || zi == xi {
                    continue;
                }
                if strict_subset(masks[yi], masks[zi]) {
                    return Some((masks[yi], masks[xi], masks[zi]));
                }
            }
        }
    }
    None
}

/// No member strictly contains another.
pub fn is_antichain_naive(masks: &[u64]) -> bool {
    for i in 0..masks.len() {
        for j in 0..masks.len() {
            if i != j && strict_subset(masks[i], masks[j]) {
                return false;
            }
        }
    }
    true
}

/// Pascal-triangle binomial, additive on purpose (the main crate multiplies).
pub fn binom_naive(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let mut row = vec![0u64; k as usize + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..row.len()).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k as usize]
}

/// Seeded random family over {0,…,n−1}: distinct masks, size ≤ max_size,
/// capped at 2^n. Same seed, same family.
pub fn random_family(n: u32, max_size: usize, seed: u64) -> Vec<u64> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let space = 1usize << n;
    let size = rng.gen_range(0..=max_size.min(space));
    let mut picked = rand::seq::index::sample(&mut rng, space, size)
        .into_iter()
        .map(|i| i as u64)
        .collect::<Vec<_>>();
    picked.sort_unstable();
    picked
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_match_pascal() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(enumerate_masks(n, k).len() as u64, binom_naive(n, k));
            }
        }
    }

    #[test]
    fn tiny_exhaustive_codes() {
        // Weight-1 words pairwise at distance 2.
        assert_eq!(max_code_size_exhaustive(5, 4, 1), 1);
        assert_eq!(max_code_size_exhaustive(5, 2, 1), 5);
        // d = 2 accepts the whole level.
        assert_eq!(max_code_size_exhaustive(6, 2, 3), 20);
    }

    #[test]
    fn n_quadruple_hand_cases() {
        // {1}, {1,2}, {2}, {2,3} as masks: 0b001, 0b011, 0b010, 0b110.
        let fam = [0b001, 0b011, 0b010, 0b110];
        let (w, x, y, z) = contains_n_quadruple(&fam).unwrap();
        assert!(strict_subset(w, x) && strict_subset(y, x) && strict_subset(y, z));
        // A 3-chain cannot host four distinct elements.
        assert_eq!(contains_n_quadruple(&[0b001, 0b011, 0b111]), None);
        // A 4-chain can: w,y,x,z mapped upward along the chain.
        assert!(contains_n_quadruple(&[0b001, 0b011, 0b111, 0b1111]).is_some());
        // A V alone is not an N.
        assert_eq!(contains_n_quadruple(&[0b001, 0b011, 0b101]), None);
    }

    #[test]
    fn v_triple_hand_cases() {
        assert!(contains_v_triple(&[0b001, 0b011, 0b101]).is_some());
        assert_eq!(contains_v_triple(&[0b001, 0b011]), None);
        assert_eq!(contains_v_triple(&[0b001, 0b010, 0b100]), None);
    }

    #[test]
    fn antichain_cases() {
        assert!(is_antichain_naive(&enumerate_masks(5, 2)));
        assert!(!is_antichain_naive(&[0b01, 0b11]));
        assert!(is_antichain_naive(&[]));
    }

    #[test]
    fn random_family_is_reproducible_and_distinct() {
        let a = random_family(6, 25, 42);
        let b = random_family(6, 25, 42);
        assert_eq!(a, b);
        let mut c = a.clone();
        c.dedup();
        assert_eq!(a, c);
        assert!(a.len() <= 25);
        assert_ne!(random_family(6, 25, 43), a);
    }
}
