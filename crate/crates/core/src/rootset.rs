use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::rootsys::RootId;

/// A set of positive roots stored as a bit mask. Every supported type has at
/// most 120 positive roots, so a single `u128` suffices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const fn empty() -> Self {
        RootSet(0)
    }

    pub fn singleton(id: RootId) -> Self {
        RootSet(1u128 << id.index())
    }

    pub fn contains(self, id: RootId) -> bool {
        self.0 >> id.index() & 1 == 1
    }

    pub fn insert(&mut self, id: RootId) {
        self.0 |= 1u128 << id.index();
    }

    pub fn remove(&mut self, id: RootId) {
        self.0 &= !(1u128 << id.index());
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = RootId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(RootId::from_index(i))
        })
    }
}

impl FromIterator<RootId> for RootSet {
    fn from_iter<T: IntoIterator<Item = RootId>>(iter: T) -> Self {
        let mut s = RootSet::empty();
        for id in iter {
            s.insert(id);
        }
        s
    }
}

impl BitOr for RootSet {
    type Output = RootSet;
    fn bitor(self, rhs: Self) -> Self {
        RootSet(self.0 | rhs.0)
    }
}

impl BitAnd for RootSet {
    type Output = RootSet;
    fn bitand(self, rhs: Self) -> Self {
        RootSet(self.0 & rhs.0)
    }
}

impl Sub for RootSet {
    type Output = RootSet;
    fn sub(self, rhs: Self) -> Self {
        RootSet(self.0 & !rhs.0)
    }
}

impl Not for RootSet {
    type Output = RootSet;
    fn not(self) -> Self {
        RootSet(!self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn iter_matches_membership(bits in any::<u128>()) {
            let s = RootSet(bits);
            let collected: Vec<RootId> = s.iter().collect();
            prop_assert_eq!(collected.len(), s.len());
            for id in &collected {
                prop_assert!(s.contains(*id));
            }
            prop_assert_eq!(collected.into_iter().collect::<RootSet>(), s);
        }
    }

    #[test]
    fn basic_ops() {
        let a: RootSet = [RootId(1), RootId(5), RootId(119)].into_iter().collect();
        let b = RootSet::singleton(RootId(5));
        assert!(b.is_subset(a));
        assert_eq!((a - b).len(), 2);
        assert_eq!((a & b), b);
        assert!(!(a - b).contains(RootId(5)));
    }
}
