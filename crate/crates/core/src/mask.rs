//! Fixed-width membership masks over the elements of one group.

use std::cmp::Ordering;
use std::fmt;

/// A set of element indices `0..len`, stored as packed 64-bit words.
///
/// All masks that are combined with each other must come from the same
/// parent group; the word count is fixed at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mask {
    words: Box<[u64]>,
}

impl Mask {
    pub fn empty(len: usize) -> Self {
        Mask {
            words: vec![0; len.div_ceil(64).max(1)].into_boxed_slice(),
        }
    }

    pub fn full(len: usize) -> Self {
        let mut m = Mask::empty(len);
        for i in 0..len {
            m.insert(i);
        }
        m
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Mask::empty(len);
        for i in indices {
            m.insert(i);
        }
        m
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] & (1 << (i & 63)) != 0
    }

    /// Inserts `i`; returns true if it was not present before.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i >> 6];
        let bit = 1 << (i & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Mask) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Mask) -> Mask {
        Mask {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &Mask) -> Mask {
        Mask {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word: 0,
            current: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterator over set bits in ascending order.
pub struct Ones<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

/// Lexicographic order on the ascending element lists.
impl Ord for Mask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Mask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
