//! Index subsets of `[0, n)` as 64-bit masks.
//!
//! Internally indices are 0-based. `Display` and the JSON formats use the
//! 1-based labels hyperplanes carry in the literature (`{1,2,3,4}`).

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

pub const MAX_INDEX: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_INDEX);
        if n == MAX_INDEX {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_INDEX);
        IndexSet(1 << i)
    }

    /// From 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Self::EMPTY, |s, i| s.with(i))
    }

    /// From 1-based labels. Panics on label 0.
    pub fn from_labels<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Self::from_indices(it.into_iter().map(|l| {
            assert!(l >= 1, "labels are 1-based");
            l - 1
        }))
    }

    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_INDEX);
        IndexSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        IndexSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_INDEX && self.0 & (1 << i) != 0
    }

    pub fn union(self, o: Self) -> Self {
        IndexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        IndexSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        IndexSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    /// Ascending 0-based indices.
    pub fn iter(self) -> impl Iterator<Item = usize> + Clone {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Position of `i` within the sorted set, if present.
    pub fn rank_of(self, i: usize) -> Option<usize> {
        self.contains(i)
            .then(|| (self.0 & ((1u64 << i) - 1)).count_ones() as usize)
    }

    /// All `r`-element subsets in lexicographic order.
    pub fn subsets_of_size(self, r: usize) -> impl Iterator<Item = IndexSet> {
        self.to_vec()
            .into_iter()
            .combinations(r)
            .map(IndexSet::from_indices)
    }
}

/// Lexicographic order on the sorted index lists.
impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().iter().join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `r`-subsets of `[0, n)` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> impl Iterator<Item = IndexSet> {
    IndexSet::full(n).subsets_of_size(r)
}

pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
