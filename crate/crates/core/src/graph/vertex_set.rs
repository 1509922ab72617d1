use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

/// Index of a vertex, dense in `0..order`.
pub type VertexId = usize;

/// A set of vertices of one graph, stored as a single machine word.
///
/// Graphs are limited to [`MAX_ORDER`](super::MAX_ORDER) vertices so that
/// every set operation is a handful of bit instructions.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..order`.
    #[inline]
    pub const fn full(order: usize) -> Self {
        if order >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << order) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: VertexId) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: VertexId) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    #[must_use]
    pub const fn with(self, v: VertexId) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    #[must_use]
    pub const fn without(self, v: VertexId) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to `0..order`.
    #[inline]
    pub const fn complement(self, order: usize) -> Self {
        VertexSet(!self.0 & Self::full(order).0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member plus one, i.e. the least order the set fits in.
    #[inline]
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending member lists.
    ///
    /// The first position where the lists differ is decided by the smallest
    /// vertex in the symmetric difference: whichever set holds it is smaller,
    /// unless the other list ran out first.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let below = low - 1;
        let (mine, theirs) = (self.0 & below, other.0 & below);
        debug_assert_eq!(mine, theirs);
        if self.0 & low != 0 {
            // `self` continues with `low`; `other` continues with something larger or ends.
            if other.0 & !below == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & !below == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[VertexId; N]> for VertexSet {
    fn from(vs: [VertexId; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        Iter(self.0)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// All `k`-subsets of `0..order` in lexicographic order of their ascending
/// member lists: `{0,1}, {0,2}, ..., {0,n-1}, {1,2}, ...`.
#[derive(Clone, Debug)]
pub struct KSubsets {
    order: usize,
    picks: Vec<usize>,
    done: bool,
}

impl KSubsets {
    pub fn new(order: usize, k: usize) -> Self {
        KSubsets {
            order,
            picks: (0..k).collect(),
            done: k > order,
        }
    }
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let current: VertexSet = self.picks.iter().copied().collect();
        let k = self.picks.len();
        // advance: rightmost pick that can still move right
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.picks[i] < self.order - k + i {
                self.picks[i] += 1;
                for j in i + 1..k {
                    self.picks[j] = self.picks[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    }
}
