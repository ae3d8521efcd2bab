//! Forbidden-subposet checks: N and V witnesses, antichains, and a generic
//! weak-embedding oracle for posets of up to five elements.
//!
//! Containment is always in the weak sense — an injection that preserves
//! stated relations, with non-relations unconstrained. A family containing N
//! therefore also contains V (drop W), but not conversely: the three-level
//! construction contains many Vs and no N.

use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::family::SetFamily;
use crate::subset::SubsetWord;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Four distinct members with w ⊂ x ⊃ y ⊂ z.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NWitness {
    pub w: SubsetWord,
    pub x: SubsetWord,
    pub y: SubsetWord,
    pub z: SubsetWord,
}

impl NWitness {
    /// Re-checks the shape; every witness the scan returns satisfies this.
    pub fn is_valid(&self) -> bool {
        let all = [self.w, self.x, self.y, self.z];
        for i in 0..4 {
            for j in i + 1..4 {
                if all[i] == all[j] {
                    return false;
                }
            }
        }
        self.w.is_strict_subset_of(&self.x)
            && self.y.is_strict_subset_of(&self.x)
            && self.y.is_strict_subset_of(&self.z)
    }
}

/// Three distinct members with y ⊂ x and y ⊂ z.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VWitness {
    pub x: SubsetWord,
    pub y: SubsetWord,
    pub z: SubsetWord,
}

impl VWitness {
    pub fn is_valid(&self) -> bool {
        self.x != self.z
            && self.y.is_strict_subset_of(&self.x)
            && self.y.is_strict_subset_of(&self.z)
    }
}

/// Strict-containment neighborhoods of every member: `up[i]` lists indices
/// of strict supersets of member i, `down[i]` of strict subsets, ascending.
fn containment_lists(family: &SetFamily, mode: ExecMode) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let members = family.members();
    let up_of = |i: usize| -> Vec<u32> {
        members
            .iter()
            .enumerate()
            .filter(|(j, m)| *j != i && members[i].is_strict_subset_of(m))
            .map(|(j, _)| j as u32)
            .collect()
    };
    #[cfg(feature = "parallel")]
    let up: Vec<Vec<u32>> = if mode.is_parallel() {
        (0..members.len()).into_par_iter().map(up_of).collect()
    } else {
        (0..members.len()).map(up_of).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let up: Vec<Vec<u32>> = (0..members.len()).map(up_of).collect();
    let _ = mode;

    let mut down: Vec<Vec<u32>> = vec![Vec::new(); members.len()];
    for (i, ups) in up.iter().enumerate() {
        for &j in ups {
            down[j as usize].push(i as u32);
        }
    }
    // `down` rows come out ascending because i runs ascending.
    (up, down)
}

/// First N in deterministic scan order, if any.
///
/// Scan: members as Y in colex order; supersets X of Y in colex order. For
/// each (Y, X) pair the candidate Zs are up(Y)\{X} and the candidate Ws are
/// down(X)\{Y}; the first of each is taken, stepping one of them when the
/// two coincide. A pair whose candidates are the same singleton admits no N
/// and the scan moves on.
pub fn find_n_witness(family: &SetFamily) -> Option<NWitness> {
    let members = family.members();
    let (up, down) = containment_lists(family, ExecMode::Sequential);
    for (yi, ups) in up.iter().enumerate() {
        for &xi in ups {
            if let Some((wi, zi)) = pick_pair(&down[xi as usize], yi as u32, ups, xi) {
                return Some(NWitness {
                    w: members[wi as usize],
                    x: members[xi as usize],
                    y: members[yi],
                    z: members[zi as usize],
                });
            }
        }
    }
    None
}

/// Chooses (W, Z) with W ∈ down\{y}, Z ∈ up\{x}, W ≠ Z; `None` if the two
/// candidate sets collapse to one shared element.
fn pick_pair(down: &[u32], y: u32, up: &[u32], x: u32) -> Option<(u32, u32)> {
    let mut ws = down.iter().copied().filter(|&w| w != y);
    let mut zs = up.iter().copied().filter(|&z| z != x);
    let w = ws.next()?;
    let z = zs.next()?;
    if w != z {
        return Some((w, z));
    }
    // Same element picked on both sides; advance whichever side can move.
    if let Some(z2) = zs.next() {
        return Some((w, z2));
    }
    if let Some(w2) = ws.next() {
        return Some((w2, z));
    }
    None
}

/// Boolean N-presence; the parallel path fans the (Y, X) scan out but
/// answers exactly as the sequential one.
pub fn contains_n(family: &SetFamily, mode: ExecMode) -> bool {
    let (up, down) = containment_lists(family, mode);
    let pair_hit = |yi: usize| -> bool {
        up[yi]
            .iter()
            .any(|&xi| pick_pair(&down[xi as usize], yi as u32, &up[yi], xi).is_some())
    };
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return (0..up.len()).into_par_iter().any(pair_hit);
    }
    (0..up.len()).any(pair_hit)
}

/// First V in deterministic scan order: the colex-first member with two
/// strict supersets, paired with its two colex-first supersets.
pub fn find_v_witness(family: &SetFamily) -> Option<VWitness> {
    let members = family.members();
    let (up, _) = containment_lists(family, ExecMode::Sequential);
    for (yi, ups) in up.iter().enumerate() {
        if ups.len() >= 2 {
            return Some(VWitness {
                x: members[ups[0] as usize],
                y: members[yi],
                z: members[ups[1] as usize],
            });
        }
    }
    None
}

/// True iff no member strictly contains another.
pub fn is_antichain(family: &SetFamily) -> bool {
    let members = family.members();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            // Colex order does not order by containment, so check both ways.
            if a.is_strict_subset_of(b) || b.is_strict_subset_of(a) {
                return false;
            }
        }
    }
    true
}

/// Cap on abstract poset size; the embedding search is exhaustive.
pub const MAX_POSET_ELEMENTS: usize = 5;

/// Default step limit for [`embeds_poset`].
pub const DEFAULT_EMBED_LIMIT: u64 = 10_000_000;

/// An abstract poset on at most [`MAX_POSET_ELEMENTS`] elements, stored
/// transitively closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetSpec {
    element_count: usize,
    less: [[bool; MAX_POSET_ELEMENTS]; MAX_POSET_ELEMENTS],
}

impl PosetSpec {
    /// Builds from cover (or any) relations `(u, v)` meaning u < v; the
    /// transitive closure is computed here and cycles are rejected.
    pub fn new(element_count: usize, relations: &[(usize, usize)]) -> Result<PosetSpec> {
        if element_count > MAX_POSET_ELEMENTS {
            return Err(Error::PosetTooLarge(element_count, MAX_POSET_ELEMENTS));
        }
        let mut less = [[false; MAX_POSET_ELEMENTS]; MAX_POSET_ELEMENTS];
        for &(u, v) in relations {
            if u >= element_count || v >= element_count || u == v {
                return Err(Error::BadRelation(u, v));
            }
            less[u][v] = true;
        }
        for mid in 0..element_count {
            for a in 0..element_count {
                for b in 0..element_count {
                    if less[a][mid] && less[mid][b] {
                        less[a][b] = true;
                    }
                }
            }
        }
        if (0..element_count).any(|i| less[i][i]) {
            return Err(Error::CyclicPoset);
        }
        Ok(PosetSpec {
            element_count,
            less,
        })
    }

    /// The N poset: elements (w, x, y, z) = (0, 1, 2, 3) with
    /// w < x, y < x, y < z.
    pub fn n_poset() -> PosetSpec {
        PosetSpec::new(4, &[(0, 1), (2, 1), (2, 3)]).expect("static spec")
    }

    /// The V poset: elements (x, y, z) = (0, 1, 2) with y < x, y < z.
    pub fn v_poset() -> PosetSpec {
        PosetSpec::new(3, &[(1, 0), (1, 2)]).expect("static spec")
    }

    /// A chain 0 < 1 < … < len−1.
    pub fn chain(len: usize) -> Result<PosetSpec> {
        let relations: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
        PosetSpec::new(len, &relations)
    }

    #[inline]
    pub fn element_count(&self) -> usize {
        self.element_count
    }

    /// True iff u < v in the closed relation.
    #[inline]
    pub fn less(&self, u: usize, v: usize) -> bool {
        self.less[u][v]
    }
}

/// Does the family contain `spec` as a weak subposet? Exhaustive
/// backtracking over injective assignments with [`DEFAULT_EMBED_LIMIT`].
pub fn embeds_poset(spec: &PosetSpec, family: &SetFamily) -> Result<bool> {
    embeds_poset_with_limit(spec, family, DEFAULT_EMBED_LIMIT)
}

/// As [`embeds_poset`] with an explicit step budget. Each attempted
/// assignment of a family member to a poset element counts one step; runs
/// past the limit fail loudly rather than answer wrongly.
pub fn embeds_poset_with_limit(
    spec: &PosetSpec,
    family: &SetFamily,
    limit: u64,
) -> Result<bool> {
    let members = family.members();
    let m = spec.element_count();
    if m == 0 {
        return Ok(true);
    }
    let mut assigned: Vec<usize> = Vec::with_capacity(m);
    let mut steps = 0u64;
    backtrack(spec, members, &mut assigned, &mut steps, limit)
}

fn backtrack(
    spec: &PosetSpec,
    members: &[SubsetWord],
    assigned: &mut Vec<usize>,
    steps: &mut u64,
    limit: u64,
) -> Result<bool> {
    let next = assigned.len();
    if next == spec.element_count() {
        return Ok(true);
    }
    'candidate: for cand in 0..members.len() {
        *steps += 1;
        if *steps > limit {
            return Err(Error::SearchLimitExceeded(limit));
        }
        for (elem, &taken) in assigned.iter().enumerate() {
            if taken == cand {
                continue 'candidate;
            }
            if spec.less(elem, next) && !members[taken].is_strict_subset_of(&members[cand]) {
                continue 'candidate;
            }
            if spec.less(next, elem) && !members[cand].is_strict_subset_of(&members[taken]) {
                continue 'candidate;
            }
        }
        assigned.push(cand);
        if backtrack(spec, members, assigned, steps, limit)? {
            return Ok(true);
        }
        assigned.pop();
    }
    Ok(false)
}
