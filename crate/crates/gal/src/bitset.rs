//! Fixed-capacity vertex sets backed by 64-bit blocks.
//!
//! All graph algorithms in this crate run on dense 0..n-1 vertex indices, so a
//! flat bitset beats hash sets by a wide margin in the branch-and-bound hot
//! paths. Iteration order is always ascending, which keeps every search
//! deterministic.

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    blocks: Vec<u64>,
    nbits: usize,
}

impl VertexSet {
    pub fn new(nbits: usize) -> Self {
        VertexSet {
            blocks: vec![0; nbits.div_ceil(64)],
            nbits,
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = Self::new(nbits);
        for (i, b) in s.blocks.iter_mut().enumerate() {
            let lo = i * 64;
            *b = if nbits >= lo + 64 {
                u64::MAX
            } else {
                (1u64 << (nbits - lo)) - 1
            };
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.nbits);
        self.blocks[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.nbits);
        self.blocks[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.nbits);
        self.blocks[v / 64] & (1u64 << (v % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(i * 64 + b.trailing_zeros() as usize);
            }
        }
        None
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= *b;
        }
    }

    #[inline]
    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= *b;
        }
    }

    #[inline]
    pub fn subtract(&mut self, other: &VertexSet) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !*b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            block: 0,
            bits: self.blocks.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn from_iter_n(nbits: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(nbits);
        for v in it {
            s.insert(v);
        }
        s
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    block: usize,
    bits: u64,
}

impl<'a> Iterator for Iter<'a> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.block * 64 + tz);
            }
            self.block += 1;
            if self.block >= self.set.blocks.len() {
                return None;
            }
            self.bits = self.set.blocks[self.block];
        }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert!(s.contains(64));
        assert!(!s.contains(63));
        assert_eq!(s.count(), 3);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        s.remove(64);
        assert_eq!(s.count(), 2);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn full_and_setops() {
        let f = VertexSet::full(70);
        assert_eq!(f.count(), 70);
        let a = VertexSet::from_iter_n(70, [1, 3, 69]);
        let b = VertexSet::from_iter_n(70, [3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 69]);
        assert!(a.is_subset(&f));
        assert!(!a.is_disjoint(&b));
        assert!(VertexSet::new(70).is_empty());
    }
}
