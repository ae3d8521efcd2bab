//! Family constructions: the two-level Katona–Tarján family, the pivot-split
//! three-level family, and the all-extensions family that deliberately reads
//! the split as a union over every element.
//!
//! The three-level construction hinges on one interpretation decision: the
//! split uses a SINGLE fixed pivot i for the whole code,
//! `C_up = {c ∪ {i} : c ∈ C, i ∉ c}` and `C_down = {c − {i} : c ∈ C, i ∈ c}`.
//! Only this reading keeps both sides at distance 4 and preserves
//! `|C_up| + |C_down| = |C|`; extending every codeword by every element
//! instead produces distance-2 pairs and an N. `build_naive_all_extensions`
//! exists to demonstrate exactly that failure, and the claim checks here
//! make the distinction executable.

use crate::codes::{verify_min_distance, ConstantWeightCode};
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::subset::{binomial, SubsetWord};

/// The two halves of a fixed-pivot split of a distance-4 code.
#[derive(Clone, Debug)]
pub struct PivotSplit {
    pivot: u32,
    c_up: ConstantWeightCode,
    c_down: ConstantWeightCode,
    source_size: usize,
}

impl PivotSplit {
    #[inline]
    pub fn pivot(&self) -> u32 {
        self.pivot
    }

    /// Codewords that gained the pivot; weight k+1.
    #[inline]
    pub fn c_up(&self) -> &ConstantWeightCode {
        &self.c_up
    }

    /// Codewords that lost the pivot; weight k−1.
    #[inline]
    pub fn c_down(&self) -> &ConstantWeightCode {
        &self.c_down
    }

    #[inline]
    pub fn source_size(&self) -> usize {
        self.source_size
    }
}

/// Splits `code` along `pivot`: words without the pivot move up (gain it),
/// words with it move down (lose it). Both sides are certified at the source
/// distance on construction, and the subset-freeness between the sides is
/// checked; for a genuine distance-4 input neither can fail.
pub fn pivot_split(code: &ConstantWeightCode, pivot: u32) -> Result<PivotSplit> {
    let n = code.universe();
    let k = code.weight();
    if pivot < 1 || pivot > n {
        return Err(Error::PivotOutOfRange { pivot, universe: n });
    }
    if k == 0 || k == n {
        return Err(Error::DegenerateSplitWeight {
            weight: k,
            universe: n,
        });
    }
    if code.min_distance() < 4 {
        return Err(Error::DistanceBelowFour(code.min_distance()));
    }
    let (up_words, down_words) = split_words(code, pivot);
    let c_up = ConstantWeightCode::new(n, k + 1, code.min_distance(), up_words)?;
    let c_down = ConstantWeightCode::new(n, k - 1, code.min_distance(), down_words)?;
    for down in c_down.words() {
        for up in c_up.words() {
            if down.is_strict_subset_of(up) {
                return Err(Error::SplitSubsetViolation {
                    down: *down,
                    up: *up,
                });
            }
        }
    }
    Ok(PivotSplit {
        pivot,
        c_up,
        c_down,
        source_size: code.len(),
    })
}

fn split_words(code: &ConstantWeightCode, pivot: u32) -> (Vec<SubsetWord>, Vec<SubsetWord>) {
    let mut up = Vec::new();
    let mut down = Vec::new();
    for w in code.words() {
        if w.contains(pivot) {
            down.push(w.without_element(pivot));
        } else {
            up.push(w.with_element(pivot));
        }
    }
    (up, down)
}

/// Diagnostic form of the split-side properties for an arbitrary code and
/// pivot: side sizes, the first distance-4 violation on each side, and the
/// first down-below-up subset pair. All three are `None` exactly when the
/// split behaves as claimed — feeding in a low-distance code shows which
/// property breaks and where.
#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub pivot: u32,
    pub source_size: usize,
    pub up_size: usize,
    pub down_size: usize,
    pub up_violation: Option<(SubsetWord, SubsetWord, u32)>,
    pub down_violation: Option<(SubsetWord, SubsetWord, u32)>,
    pub subset_violation: Option<(SubsetWord, SubsetWord)>,
}

impl ClaimReport {
    pub fn holds(&self) -> bool {
        self.up_violation.is_none()
            && self.down_violation.is_none()
            && self.subset_violation.is_none()
    }
}

/// Evaluates the split-side properties without requiring them to hold.
/// Unlike [`pivot_split`] this accepts codes of any declared distance.
pub fn claim_report(code: &ConstantWeightCode, pivot: u32) -> Result<ClaimReport> {
    let n = code.universe();
    let k = code.weight();
    if pivot < 1 || pivot > n {
        return Err(Error::PivotOutOfRange { pivot, universe: n });
    }
    if k == 0 || k == n {
        return Err(Error::DegenerateSplitWeight {
            weight: k,
            universe: n,
        });
    }
    let (mut up, mut down) = split_words(code, pivot);
    up.sort_unstable();
    down.sort_unstable();
    let subset_violation = down.iter().find_map(|d| {
        up.iter()
            .find(|u| d.is_strict_subset_of(u))
            .map(|u| (*d, *u))
    });
    Ok(ClaimReport {
        pivot,
        source_size: code.len(),
        up_size: up.len(),
        down_size: down.len(),
        up_violation: verify_min_distance(&up, 4),
        down_violation: verify_min_distance(&down, 4),
        subset_violation,
    })
}

/// How a [`ConstructedFamily`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Kt,
    ThreeLevel,
    NaiveAllExt,
    Custom,
}

impl std::fmt::Display for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Construction::Kt => "KT",
            Construction::ThreeLevel => "THREE_LEVEL",
            Construction::NaiveAllExt => "NAIVE_ALL_EXT",
            Construction::Custom => "CUSTOM",
        })
    }
}

/// A family plus the recipe that produced it, for file headers and reports.
#[derive(Clone, Debug)]
pub struct ConstructedFamily {
    pub family: SetFamily,
    pub construction: Construction,
    pub n: u32,
    pub k: u32,
    pub pivot: Option<u32>,
    pub code_size: usize,
}

impl ConstructedFamily {
    /// Wraps an externally assembled family (e.g. read from a file).
    pub fn custom(family: SetFamily) -> ConstructedFamily {
        let n = family.universe();
        let k = family
            .weights()
            .first()
            .copied()
            .unwrap_or(0);
        let code_size = family.len();
        ConstructedFamily {
            family,
            construction: Construction::Custom,
            n,
            k,
            pivot: None,
            code_size,
        }
    }

    /// Comment lines recording the recipe, in the family file syntax.
    pub fn comment_lines(&self) -> Vec<String> {
        let mut lines = vec![format!("# construction={}", self.construction)];
        let mut params = format!("# n={} k={} code_size={}", self.n, self.k, self.code_size);
        if let Some(p) = self.pivot {
            params.push_str(&format!(" pivot={p}"));
        }
        lines.push(params);
        lines
    }
}

/// Middle level plus both halves of the fixed-pivot split:
/// `F = ([n] choose k) ∪ C_up ∪ C_down`, of size C(n,k) + |code|.
pub fn build_three_level(
    n: u32,
    k: u32,
    code: &ConstantWeightCode,
    pivot: u32,
) -> Result<ConstructedFamily> {
    check_code(n, k, code)?;
    let split = pivot_split(code, pivot)?;
    let mut members = crate::subset::enumerate_level(n, k)?;
    members.extend_from_slice(split.c_up().words());
    members.extend_from_slice(split.c_down().words());
    let family = SetFamily::new(n, members)?;
    debug_assert_eq!(family.len() as u64, binomial(n, k) + code.len() as u64);
    Ok(ConstructedFamily {
        family,
        construction: Construction::ThreeLevel,
        n,
        k,
        pivot: Some(pivot),
        code_size: code.len(),
    })
}

/// Katona–Tarján two-level family: full level k plus a distance-4 code one
/// level up, of size C(n,k) + |code|.
pub fn build_kt(n: u32, k: u32, code: &ConstantWeightCode) -> Result<ConstructedFamily> {
    if code.universe() != n {
        return Err(Error::UniverseMismatch(code.universe(), n));
    }
    if code.weight() != k + 1 {
        return Err(Error::CodeWeightMismatch {
            got: code.weight(),
            expected: k + 1,
        });
    }
    if code.min_distance() < 4 {
        return Err(Error::DistanceBelowFour(code.min_distance()));
    }
    let mut members = crate::subset::enumerate_level(n, k)?;
    members.extend_from_slice(code.words());
    let family = SetFamily::new(n, members)?;
    debug_assert_eq!(family.len() as u64, binomial(n, k) + code.len() as u64);
    Ok(ConstructedFamily {
        family,
        construction: Construction::Kt,
        n,
        k,
        pivot: None,
        code_size: code.len(),
    })
}

/// The misreading, kept as a refuter: level k plus EVERY one-element
/// extension and EVERY one-element removal of every codeword. Size comes to
/// C(n,k) + n·|code| and the result contains an N whenever the code has a
/// word to extend twice.
pub fn build_naive_all_extensions(
    n: u32,
    k: u32,
    code: &ConstantWeightCode,
) -> Result<ConstructedFamily> {
    check_code(n, k, code)?;
    let mut members = crate::subset::enumerate_level(n, k)?;
    for c in code.words() {
        for i in 1..=n {
            if c.contains(i) {
                members.push(c.without_element(i));
            } else {
                members.push(c.with_element(i));
            }
        }
    }
    let family = SetFamily::new(n, members)?;
    Ok(ConstructedFamily {
        family,
        construction: Construction::NaiveAllExt,
        n,
        k,
        pivot: None,
        code_size: code.len(),
    })
}

fn check_code(n: u32, k: u32, code: &ConstantWeightCode) -> Result<()> {
    if code.universe() != n {
        return Err(Error::UniverseMismatch(code.universe(), n));
    }
    if code.weight() != k {
        return Err(Error::CodeWeightMismatch {
            got: code.weight(),
            expected: k,
        });
    }
    if code.min_distance() < 4 {
        return Err(Error::DistanceBelowFour(code.min_distance()));
    }
    Ok(())
}
