//! Bitmask subsets over at most 16 labelled points.
//!
//! A `Subset` is a mask over point *positions* of some ambient ordered point
//! list; all tables in this crate are indexed by these masks, which keeps
//! every exhaustive axiom sweep an O(1)-access loop over `0..2^n`.

use std::fmt;

/// Hard cap on ground-set size; tables hold all `2^n` subset values.
pub const MAX_POINTS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u16);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(i: usize) -> Subset {
        debug_assert!(i < MAX_POINTS);
        Subset(1 << i)
    }

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_POINTS);
        if n == MAX_POINTS {
            Subset(u16::MAX)
        } else {
            Subset((1u16 << n) - 1)
        }
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        let mut mask = 0u16;
        for i in iter {
            debug_assert!(i < MAX_POINTS);
            mask |= 1 << i;
        }
        Subset(mask)
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_POINTS && self.0 & (1 << i) != 0
    }

    pub fn insert(self, i: usize) -> Subset {
        Subset(self.0 | (1 << i))
    }

    pub fn remove(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn inter(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Positions of the members, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All `2^n` subsets of an `n`-point ground set, mask-ascending.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        debug_assert!(n <= MAX_POINTS);
        (0..(1u32 << n)).map(|m| Subset(m as u16))
    }

    /// All subsets of `self`, mask-ascending (starts with the empty set,
    /// ends with `self`).
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next: Option<u16> = Some(0);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                // Standard sub-mask increment within a fixed mask.
                Some(cur.wrapping_sub(full).wrapping_sub(1) & full & cur.wrapping_add(!full).wrapping_add(1))
            };
            Some(Subset(cur))
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let s = Subset::from_positions([0, 2, 5]);
        assert_eq!(s.card(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(Subset::full(3).0, 0b111);
        assert_eq!(Subset::full(16).0, u16::MAX);
    }

    #[test]
    fn subsets_enumerates_the_lattice() {
        let s = Subset::from_positions([1, 3]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(
            all,
            vec![
                Subset::EMPTY,
                Subset::singleton(1),
                Subset::singleton(3),
                Subset::from_positions([1, 3])
            ]
        );
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    proptest! {
        #[test]
        fn subsets_are_exactly_the_submasks(mask in 0u16..1024) {
            let s = Subset(mask);
            let listed: Vec<_> = s.subsets().collect();
            prop_assert_eq!(listed.len(), 1 << s.card());
            for sub in &listed {
                prop_assert!(sub.is_subset_of(s));
            }
            let mut sorted = listed.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), listed.len());
        }

        #[test]
        fn union_inter_laws(a in 0u16..4096, b in 0u16..4096) {
            let (a, b) = (Subset(a), Subset(b));
            prop_assert_eq!(a.union(b).card() + a.inter(b).card(), a.card() + b.card());
            prop_assert!(a.inter(b).is_subset_of(a.union(b)));
        }
    }
}
