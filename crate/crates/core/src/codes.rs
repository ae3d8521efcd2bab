//! Constant-weight codes: the Graham–Sloane residue construction, distance
//! verification, the recursive Johnson upper bound, and the complement map.

use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::family::SetFamily;
use crate::subset::{binomial, enumerate_level, SubsetWord};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A set of weight-`k` words over `[n]` with certified minimum pairwise
/// Hamming distance. Construction verifies every pair, so a value of this
/// type is always a valid code.
#[derive(Clone, PartialEq, Eq)]
pub struct ConstantWeightCode {
    universe: u32,
    weight: u32,
    min_distance: u32,
    words: Vec<SubsetWord>,
}

impl ConstantWeightCode {
    /// Validates and canonicalizes a word list into a code. The distance must
    /// be even and positive (distance between equal-weight words is always
    /// even). Fails with the first violating pair in colex scan order.
    pub fn new(
        universe: u32,
        weight: u32,
        min_distance: u32,
        words: Vec<SubsetWord>,
    ) -> Result<ConstantWeightCode> {
        ConstantWeightCode::with_mode(universe, weight, min_distance, words, ExecMode::default())
    }

    /// As [`ConstantWeightCode::new`] with an explicit execution mode for the
    /// pairwise distance sweep. The reported violation is the first pair in
    /// scan order in either mode.
    pub fn with_mode(
        universe: u32,
        weight: u32,
        min_distance: u32,
        words: Vec<SubsetWord>,
        mode: ExecMode,
    ) -> Result<ConstantWeightCode> {
        crate::subset::check_universe(universe)?;
        if weight > universe {
            return Err(Error::WeightOutOfRange { weight, universe });
        }
        if min_distance == 0 || min_distance % 2 != 0 {
            return Err(Error::InvalidDistance(min_distance));
        }
        for w in &words {
            if w.universe() != universe {
                return Err(Error::UniverseMismatch(w.universe(), universe));
            }
            if w.weight() != weight {
                return Err(Error::WeightMismatch {
                    word: *w,
                    got: w.weight(),
                    expected: weight,
                });
            }
        }
        let mut words = words;
        words.sort_unstable();
        for pair in words.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateWord(pair[0]));
            }
        }
        if let Some((a, b, got)) = verify_min_distance_mode(&words, min_distance, mode) {
            return Err(Error::DistanceViolation {
                a,
                b,
                got,
                required: min_distance,
            });
        }
        Ok(ConstantWeightCode {
            universe,
            weight,
            min_distance,
            words,
        })
    }

    /// Constructor for words already known pairwise-compatible (solver
    /// cliques, complements of valid codes). Checked only in debug builds.
    pub(crate) fn from_verified(
        universe: u32,
        weight: u32,
        min_distance: u32,
        mut words: Vec<SubsetWord>,
    ) -> ConstantWeightCode {
        words.sort_unstable();
        debug_assert!(verify_min_distance(&words, min_distance).is_none());
        ConstantWeightCode {
            universe,
            weight,
            min_distance,
            words,
        }
    }

    #[inline]
    pub fn universe(&self) -> u32 {
        self.universe
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.weight
    }

    #[inline]
    pub fn min_distance(&self) -> u32 {
        self.min_distance
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Words in canonical colex order.
    #[inline]
    pub fn words(&self) -> &[SubsetWord] {
        &self.words
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SubsetWord> {
        self.words.iter()
    }

    /// The code viewed as a plain set family (weight information dropped).
    pub fn to_family(&self) -> SetFamily {
        SetFamily::new(self.universe, self.words.clone())
            .expect("a valid code is duplicate-free")
    }
}

impl std::fmt::Debug for ConstantWeightCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ConstantWeightCode(n={}, k={}, d={}, {} words)",
            self.universe,
            self.weight,
            self.min_distance,
            self.words.len()
        )
    }
}

/// Scans all pairs and returns the first (in colex scan order) at distance
/// below `required`, with the achieved distance. `None` means the word list
/// meets the minimum distance.
pub fn verify_min_distance(
    words: &[SubsetWord],
    required: u32,
) -> Option<(SubsetWord, SubsetWord, u32)> {
    verify_min_distance_mode(words, required, ExecMode::Sequential)
}

/// Mode-aware pair sweep. The parallel path uses an order-preserving search,
/// so the reported witness matches the sequential one.
pub fn verify_min_distance_mode(
    words: &[SubsetWord],
    required: u32,
    mode: ExecMode,
) -> Option<(SubsetWord, SubsetWord, u32)> {
    let scan_row = |i: usize| -> Option<(SubsetWord, SubsetWord, u32)> {
        let a = words[i];
        for &b in &words[i + 1..] {
            let d = a.hamming_distance(&b);
            if d < required {
                return Some((a, b, d));
            }
        }
        None
    };
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return (0..words.len()).into_par_iter().find_map_first(scan_row);
    }
    let _ = mode;
    (0..words.len()).find_map(scan_row)
}

/// Graham–Sloane construction: bucket the weight-`k` subsets of `[n]` by
/// element-sum mod `n` and return the largest bucket (smallest residue on
/// ties). Every bucket has minimum distance 4 — a distance-2 pair differs by
/// one swap, which shifts the element sum by a nonzero residue — and the
/// largest has at least ⌈C(n,k)/n⌉ words.
pub fn graham_sloane(n: u32, k: u32) -> Result<ConstantWeightCode> {
    let level = enumerate_level(n, k)?;
    let mut buckets: Vec<Vec<SubsetWord>> = vec![Vec::new(); n as usize];
    for w in level {
        buckets[(w.element_sum() % n as u64) as usize].push(w);
    }
    let best = buckets
        .iter()
        .enumerate()
        .max_by(|(ra, a), (rb, b)| a.len().cmp(&b.len()).then(rb.cmp(ra)))
        .map(|(_, b)| b.clone())
        .unwrap_or_default();
    ConstantWeightCode::new(n, k, 4, best)
}

/// Per-residue bucket sizes of the Graham–Sloane partition, for the
/// pigeonhole accounting (sizes sum to C(n,k)).
pub fn graham_sloane_bucket_sizes(n: u32, k: u32) -> Result<Vec<u64>> {
    let level = enumerate_level(n, k)?;
    let mut sizes = vec![0u64; n as usize];
    for w in level {
        sizes[(w.element_sum() % n as u64) as usize] += 1;
    }
    Ok(sizes)
}

/// Recursive Johnson bound for distance 4:
/// `U(n,k) = ⌊(n/k)·U(n−1,k−1)⌋`, `U(m,0) = U(m,1) = 1`.
/// Guarantees `A(n,4,k) ≤ U(n,k)`.
pub fn johnson_upper(n: u32, k: u32) -> Result<u64> {
    crate::subset::check_universe(n)?;
    if k > n {
        return Err(Error::WeightOutOfRange {
            weight: k,
            universe: n,
        });
    }
    let mut u: u128 = 1;
    // Unroll the recursion bottom-up: U(n−k+j, j) for j = 2..=k.
    for j in 2..=k as u128 {
        let m = (n - k) as u128 + j;
        u = m * u / j;
    }
    Ok(u as u64)
}

/// Complements every word: weight `k` becomes `n−k`, pairwise distances are
/// unchanged, so the result is a valid code of the same size and distance.
pub fn complement_code(code: &ConstantWeightCode) -> ConstantWeightCode {
    let words: Vec<SubsetWord> = code.words().iter().map(|w| w.complement()).collect();
    ConstantWeightCode::from_verified(
        code.universe(),
        code.universe() - code.weight(),
        code.min_distance(),
        words,
    )
}

/// ⌈C(n,k)/n⌉, the pigeonhole floor on the Graham–Sloane bucket size.
pub fn gs_lower_bound(n: u32, k: u32) -> u64 {
    assert!(n >= 1, "universe must be nonempty");
    binomial(n, k).div_ceil(n as u64)
}
