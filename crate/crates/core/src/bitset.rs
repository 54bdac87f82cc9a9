//! Subsets of a ground set of at most 128 elements.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

/// Largest ground set an [`ElementSet`] can index.
pub const MAX_ELEMENTS: usize = 128;

/// A subset of `0..128` stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(pub u128);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set too large");
        if n == MAX_ELEMENTS {
            ElementSet(u128::MAX)
        } else {
            ElementSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1u128 << e)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u128 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u128 << e);
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u128 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u128 << e))
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterator over the elements of an [`ElementSet`] in increasing order.
#[derive(Clone)]
pub struct Elements(u128);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for ElementSet {
    fn bitor_assign(&mut self, rhs: ElementSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for ElementSet {
    fn bitand_assign(&mut self, rhs: ElementSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

impl Not for ElementSet {
    type Output = ElementSet;
    fn not(self) -> ElementSet {
        ElementSet(!self.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&e) = v.iter().find(|&&e| e >= MAX_ELEMENTS) {
            return Err(serde::de::Error::custom(format!("element {e} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Calls `f` on every `k`-subset of `set`, in lexicographic order of positions.
pub fn for_each_subset_of_size(set: ElementSet, k: usize, mut f: impl FnMut(ElementSet)) {
    let elems = set.to_vec();
    if k > elems.len() {
        return;
    }
    let n = elems.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(idx.iter().map(|&i| elems[i]).collect());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        let mut s = ElementSet::EMPTY;
        s.insert(3);
        s.insert(100);
        assert!(s.contains(3) && s.contains(100) && !s.contains(4));
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![3, 100]);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(100));
        assert_eq!(ElementSet::full(128).len(), 128);
        assert_eq!(ElementSet::full(5) - ElementSet::singleton(0), [1, 2, 3, 4].into_iter().collect());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(25, 13), 5_200_300);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn subset_enumeration_counts() {
        for n in 0..8 {
            for k in 0..=n + 1 {
                let mut seen = std::collections::HashSet::new();
                for_each_subset_of_size(ElementSet::full(n), k, |s| {
                    assert_eq!(s.len(), k);
                    seen.insert(s);
                });
                assert_eq!(seen.len() as u128, binomial(n, k));
            }
        }
    }

    #[test]
    fn serde_round_trip() {
        let s: ElementSet = [0, 7, 99].into_iter().collect();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, "[0,7,99]");
        assert_eq!(serde_json::from_str::<ElementSet>(&j).unwrap(), s);
        assert!(serde_json::from_str::<ElementSet>("[128]").is_err());
    }
}
