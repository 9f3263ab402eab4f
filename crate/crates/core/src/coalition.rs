//! Coalitions as bitsets over at most 32 players.

use core::fmt;

/// A set of player indices `0..n`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(pub u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn singleton(i: usize) -> Self {
        Coalition(1 << i)
    }

    /// All players `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            Coalition(u32::MAX)
        } else {
            Coalition((1u32 << n) - 1)
        }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Self {
        members.into_iter().fold(Coalition::EMPTY, |c, i| c.with(i))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Coalition(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Coalition(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Coalition(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Coalition(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Position of player `i` among the members (its rank in ascending order).
    pub fn position(self, i: usize) -> Option<usize> {
        self.contains(i)
            .then(|| (self.0 & ((1u32 << i) - 1)).count_ones() as usize)
    }

    /// Members in ascending order.
    pub fn members(self) -> Members {
        Members(self.0)
    }

    /// Every subset of `self`, including the empty set and `self`, in increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Nonempty proper subsets `T` with the lowest member of `self` in `T`.
    ///
    /// Each unordered two-part split `{T, self \ T}` is produced exactly once.
    pub fn splits(self) -> impl Iterator<Item = (Coalition, Coalition)> {
        let low = self.0 & self.0.wrapping_neg();
        let rest = Coalition(self.0 & !low);
        rest.subsets().filter_map(move |t| {
            let part = Coalition(t.0 | low);
            (part != self).then(|| (part, self.difference(part)))
        })
    }
}

/// Ascending iterator over coalition members.
#[derive(Clone)]
pub struct Members(u32);

impl Iterator for Members {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Subset enumeration of a mask (the standard `(t - m) & m` walk).
#[derive(Clone)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Coalition;
    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Coalition(cur))
    }
}

/// All nonempty coalitions of `0..n`, ordered by cardinality and then
/// lexicographically by ascending member list.
pub fn by_size_then_lex(n: usize) -> alloc::vec::Vec<Coalition> {
    let mut all: alloc::vec::Vec<Coalition> = Coalition::full(n)
        .subsets()
        .filter(|c| !c.is_empty())
        .collect();
    all.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members().cmp(b.members()))
    });
    all
}

/// `{1,3,4}` style, with 1-based labels.
impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    #[test]
    fn members_ascend() {
        let c = Coalition::from_members([3, 0, 2]);
        assert_eq!(c.members().collect::<Vec<_>>(), [0, 2, 3]);
        assert_eq!(c.position(2), Some(1));
        assert_eq!(c.position(1), None);
        assert_eq!(alloc::format!("{c}"), "{1,3,4}");
    }

    #[test]
    fn splits_are_unordered_pairs() {
        let c = Coalition::full(4);
        let splits: Vec<_> = c.splits().collect();
        assert_eq!(splits.len(), 7);
        for (a, b) in splits {
            assert!(a.contains(0) && !a.is_empty() && !b.is_empty());
            assert_eq!(a.union(b), c);
            assert!(a.is_disjoint(b));
        }
    }

    #[test]
    fn size_then_lex_order() {
        let order: Vec<u32> = by_size_then_lex(3).into_iter().map(|c| c.0).collect();
        assert_eq!(order, [1, 2, 4, 3, 5, 6, 7]);
    }

    proptest! {
        #[test]
        fn set_semantics(a in 0u32..1 << 12, b in 0u32..1 << 12) {
            let (a, b) = (Coalition(a), Coalition(b));
            prop_assert_eq!(a.is_subset_of(b), a.members().all(|i| b.contains(i)));
            prop_assert_eq!(a.is_disjoint(b), a.members().all(|i| !b.contains(i)));
            prop_assert_eq!(a.union(b).len() + a.intersection(b).len(), a.len() + b.len());
            prop_assert_eq!(a.subsets().count(), 1usize << a.len());
            prop_assert!(a.subsets().all(|s| s.is_subset_of(a)));
        }
    }
}
