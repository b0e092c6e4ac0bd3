//! Dense bitset vertex sets over a ground set of at most 64 labels.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard ceiling on ground-set size imposed by the `u64` bitset representation.
pub const MAX_GROUND: u32 = 64;

/// A set of vertex labels, stored as a bitmask. Iteration is always in
/// strictly increasing label order, so equality of masks is equality of sets.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn singleton(v: u32) -> Self {
        debug_assert!(v < MAX_GROUND);
        VertexSet(1u64 << v)
    }

    pub fn from_slice(vs: &[u32]) -> Self {
        let mut mask = 0u64;
        for &v in vs {
            debug_assert!(v < MAX_GROUND);
            mask |= 1u64 << v;
        }
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        v < MAX_GROUND && self.0 & (1u64 << v) != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn with(self, v: u32) -> VertexSet {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: u32) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn min_elem(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    pub fn max_elem(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros())
        }
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets of this set, the empty set first and the full set last.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full {
                None
            } else {
                Some((s.wrapping_sub(full)) & full)
            };
            Some(VertexSet(s))
        })
    }

    /// All `k`-element subsets of `{0, .., n-1}` in colexicographic order,
    /// which for fixed cardinality coincides with increasing mask value.
    pub fn k_subsets(n: u32, k: u32) -> impl Iterator<Item = VertexSet> {
        let mut cur = if k == 0 {
            Some(0u64)
        } else if k <= n {
            Some((1u64 << k) - 1)
        } else {
            None
        };
        std::iter::from_fn(move || {
            let s = cur?;
            if k == 0 {
                cur = None;
                return Some(VertexSet(0));
            }
            // Gosper's hack for the next mask with the same popcount.
            let c = s & s.wrapping_neg();
            let r = s + c;
            let next = (((r ^ s) >> 2) / c) | r;
            cur = if n >= 64 || next < (1u64 << n) {
                Some(next)
            } else {
                None
            };
            Some(VertexSet(s))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let vs = Vec::<u32>::deserialize(d)?;
        for &v in &vs {
            if v >= MAX_GROUND {
                return Err(serde::de::Error::custom(format!(
                    "vertex label {v} exceeds the ground-set ceiling of {MAX_GROUND}"
                )));
            }
        }
        Ok(VertexSet::from_slice(&vs))
    }
}

/// Binomial coefficient, exact in `u128`; desk-scale arguments only.
pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_the_boolean_lattice() {
        let s = VertexSet::from_slice(&[0, 2, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], VertexSet::EMPTY);
        assert_eq!(subs[7], s);
        assert!(subs.iter().all(|t| t.is_subset(s)));
    }

    #[test]
    fn k_subsets_colex_order() {
        let pairs: Vec<Vec<u32>> = VertexSet::k_subsets(4, 2).map(|s| s.to_vec()).collect();
        assert_eq!(
            pairs,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn binom_small_values() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(6, 0), 1);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(64, 32), 1832624140942590534);
    }
}
