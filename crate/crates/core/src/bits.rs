//! Subsets of a ground set of at most 64 elements, as bitmasks.

use std::cmp::Ordering;

/// Bit `i` set iff the element with index `i` belongs to the subset.
pub type ElemSet = u64;

/// Hard limit on ground-set size.
pub const MAX_ELEMENTS: usize = 64;

pub fn singleton(i: usize) -> ElemSet {
    1u64 << i
}

pub fn full(n: usize) -> ElemSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn size(s: ElemSet) -> usize {
    s.count_ones() as usize
}

pub fn contains(s: ElemSet, i: usize) -> bool {
    s >> i & 1 == 1
}

pub fn is_subset(a: ElemSet, b: ElemSet) -> bool {
    a & !b == 0
}

/// Element indices in increasing order.
pub fn elements(mut s: ElemSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> ElemSet {
    it.into_iter().fold(0, |acc, i| acc | singleton(i))
}

/// Canonical order: by size, then lexicographically on sorted indices.
pub fn canonical_cmp(a: &ElemSet, b: &ElemSet) -> Ordering {
    size(*a)
        .cmp(&size(*b))
        .then_with(|| elements(*a).cmp(elements(*b)))
}

/// All subsets of `s` (including `0` and `s`), via the standard
/// submask walk.
pub fn subsets(s: ElemSet) -> impl Iterator<Item = ElemSet> {
    let mut next = Some(s);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & s) };
        Some(cur)
    })
}
