//! Subsets of `[n] = {1,..,n}` as single-word bitmasks, plus the set and
//! distance arithmetic the rest of the crate builds on.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported universe; one `u64` holds a subset.
pub const MAX_UNIVERSE: u32 = 64;

/// A subset of `[n]`, doubling as a constant-weight binary codeword.
///
/// Element `e` (1-based) is present iff bit `e-1` of the mask is set. The
/// derived ordering is colexicographic within a fixed universe: words compare
/// by universe first, then by raw mask value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetWord {
    universe: u32,
    mask: u64,
}

impl SubsetWord {
    /// Builds a word from explicit 1-based elements.
    pub fn new(universe: u32, elements: &[u32]) -> Result<Self> {
        check_universe(universe)?;
        let mut mask = 0u64;
        for &e in elements {
            if e < 1 || e > universe {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    universe,
                });
            }
            mask |= 1 << (e - 1);
        }
        Ok(SubsetWord { universe, mask })
    }

    /// Builds a word directly from a bitmask.
    pub fn from_mask(universe: u32, mask: u64) -> Result<Self> {
        check_universe(universe)?;
        if universe < MAX_UNIVERSE && mask >> universe != 0 {
            return Err(Error::ElementOutOfRange {
                element: 64 - mask.leading_zeros(),
                universe,
            });
        }
        Ok(SubsetWord { universe, mask })
    }

    pub fn empty(universe: u32) -> Result<Self> {
        Self::from_mask(universe, 0)
    }

    pub fn full(universe: u32) -> Result<Self> {
        check_universe(universe)?;
        Ok(SubsetWord {
            universe,
            mask: universe_mask(universe),
        })
    }

    #[inline]
    pub fn universe(&self) -> u32 {
        self.universe
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.mask.count_ones()
    }

    #[inline]
    pub fn contains(&self, element: u32) -> bool {
        element >= 1 && element <= self.universe && self.mask & (1 << (element - 1)) != 0
    }

    /// Elements in ascending order, 1-based.
    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        let mask = self.mask;
        (0..self.universe).filter_map(move |b| (mask >> b & 1 == 1).then_some(b + 1))
    }

    /// Hamming distance `|a ^ b|` between two words over the same universe.
    ///
    /// Panics if the universes differ; that is a caller bug, not an input
    /// condition.
    #[inline]
    pub fn hamming_distance(&self, other: &SubsetWord) -> u32 {
        assert_eq!(
            self.universe, other.universe,
            "universe mismatch: {} vs {}",
            self.universe, other.universe
        );
        (self.mask ^ other.mask).count_ones()
    }

    /// True iff `self` is a subset of `other` and the two differ.
    #[inline]
    pub fn is_strict_subset_of(&self, other: &SubsetWord) -> bool {
        assert_eq!(
            self.universe, other.universe,
            "universe mismatch: {} vs {}",
            self.universe, other.universe
        );
        self.mask != other.mask && self.mask & !other.mask == 0
    }

    /// The complement `[n] \ self`. An involution that maps weight `k` to
    /// `n - k` and preserves pairwise Hamming distances.
    #[inline]
    pub fn complement(&self) -> SubsetWord {
        SubsetWord {
            universe: self.universe,
            mask: !self.mask & universe_mask(self.universe),
        }
    }

    /// `self` with one element added. Panics if out of range or present.
    pub fn with_element(&self, element: u32) -> SubsetWord {
        assert!(
            element >= 1 && element <= self.universe,
            "element {element} out of range for universe [{}]",
            self.universe
        );
        let bit = 1 << (element - 1);
        assert_eq!(self.mask & bit, 0, "element {element} already present");
        SubsetWord {
            universe: self.universe,
            mask: self.mask | bit,
        }
    }

    /// `self` with one element removed. Panics if out of range or absent.
    pub fn without_element(&self, element: u32) -> SubsetWord {
        assert!(
            element >= 1 && element <= self.universe,
            "element {element} out of range for universe [{}]",
            self.universe
        );
        let bit = 1 << (element - 1);
        assert_ne!(self.mask & bit, 0, "element {element} not present");
        SubsetWord {
            universe: self.universe,
            mask: self.mask & !bit,
        }
    }

    /// Sum of elements, used by the residue-class code construction.
    pub fn element_sum(&self) -> u64 {
        self.elements().map(u64::from).sum()
    }
}

/// Renders in the file syntax: ascending comma-separated elements, `-` for
/// the empty set.
impl fmt::Display for SubsetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return f.write_str("-");
        }
        let mut first = true;
        for e in self.elements() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SubsetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}/{}", self, self.universe)
    }
}

#[inline]
pub(crate) fn universe_mask(universe: u32) -> u64 {
    if universe >= 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

pub(crate) fn check_universe(universe: u32) -> Result<()> {
    if (1..=MAX_UNIVERSE).contains(&universe) {
        Ok(())
    } else {
        Err(Error::UniverseOutOfRange(universe))
    }
}

/// Binomial coefficient C(n, k) for n <= 64; exact in u64.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=u128::from(k) {
        acc = acc * (u128::from(n - k) + i) / i;
    }
    acc as u64
}

/// All weight-`k` subsets of `[n]` in colexicographic (ascending bitmask)
/// order, via Gosper's hack.
pub fn enumerate_level(n: u32, k: u32) -> Result<Vec<SubsetWord>> {
    check_universe(n)?;
    if k > n {
        return Err(Error::WeightOutOfRange {
            weight: k,
            universe: n,
        });
    }
    let count = binomial(n, k) as usize;
    let mut out = Vec::with_capacity(count);
    // Gosper's hack; the final mask (top k bits set) is pushed without
    // computing a successor, so the carry never overflows.
    let mut mask = universe_mask(k);
    while out.len() < count {
        out.push(SubsetWord { universe: n, mask });
        if out.len() == count {
            break;
        }
        let low = mask & mask.wrapping_neg();
        let carry = mask + low;
        mask = (((mask ^ carry) / low) >> 2) | carry;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: u32, elems: &[u32]) -> SubsetWord {
        SubsetWord::new(n, elems).unwrap()
    }

    #[test]
    fn distance_disjoint_pairs() {
        assert_eq!(w(4, &[1, 2]).hamming_distance(&w(4, &[3, 4])), 4);
    }

    #[test]
    fn distance_identity() {
        assert_eq!(w(4, &[1, 2, 3]).hamming_distance(&w(4, &[1, 2, 3])), 0);
    }

    #[test]
    fn distance_single_swap() {
        assert_eq!(w(4, &[1, 2, 3]).hamming_distance(&w(4, &[1, 2, 4])), 2);
    }

    #[test]
    #[should_panic(expected = "universe mismatch")]
    fn distance_universe_mismatch_panics() {
        let _ = w(4, &[1]).hamming_distance(&w(5, &[1]));
    }

    #[test]
    fn strict_subset_cases() {
        assert!(w(4, &[2]).is_strict_subset_of(&w(4, &[1, 2])));
        assert!(!w(4, &[1, 2]).is_strict_subset_of(&w(4, &[1, 2])));
        assert!(!w(4, &[1, 3]).is_strict_subset_of(&w(4, &[1, 2, 4])));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(w(4, &[1, 2]).complement(), w(4, &[3, 4]));
        assert_eq!(w(3, &[]).complement(), w(3, &[1, 2, 3]));
        let a = w(7, &[2, 5, 7]);
        assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn element_range_checked() {
        assert!(matches!(
            SubsetWord::new(4, &[5]),
            Err(Error::ElementOutOfRange { element: 5, universe: 4 })
        ));
        assert!(SubsetWord::new(0, &[]).is_err());
        assert!(SubsetWord::new(65, &[]).is_err());
        assert!(SubsetWord::from_mask(4, 1 << 4).is_err());
        assert!(SubsetWord::from_mask(64, u64::MAX).is_ok());
    }

    #[test]
    fn level_4_2_golden() {
        let level = enumerate_level(4, 2).unwrap();
        let expect: Vec<SubsetWord> = [
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
            vec![1, 4],
            vec![2, 4],
            vec![3, 4],
        ]
        .iter()
        .map(|e| w(4, e))
        .collect();
        assert_eq!(level, expect);
    }

    #[test]
    fn level_edges() {
        assert_eq!(enumerate_level(4, 0).unwrap(), vec![w(4, &[])]);
        assert_eq!(enumerate_level(4, 4).unwrap(), vec![w(4, &[1, 2, 3, 4])]);
        let l = enumerate_level(6, 3).unwrap();
        assert_eq!(l.len(), 20);
        assert!(l.iter().all(|x| x.weight() == 3));
        assert!(l.windows(2).all(|p| p[0].mask() < p[1].mask()));
        assert!(enumerate_level(4, 5).is_err());
    }

    #[test]
    fn level_full_width() {
        assert_eq!(enumerate_level(64, 1).unwrap().len(), 64);
        assert_eq!(enumerate_level(64, 63).unwrap().len(), 64);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial(5, 9), 0);
    }

    #[test]
    fn display_set_syntax() {
        assert_eq!(w(6, &[1, 4, 5]).to_string(), "1,4,5");
        assert_eq!(w(6, &[]).to_string(), "-");
    }
}
