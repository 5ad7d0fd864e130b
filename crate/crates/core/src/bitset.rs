//! Multi-word bit rows for adjacency between more than 64 items.

/// A dense square-ish bit matrix: `rows` rows of `cols` bits each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    /// Builds the intersection matrix of a family of sets: row `i` has bit `j`
    /// set iff `i != j` and `sets[i] & sets[j] != 0`.
    pub fn intersection(sets: &[u64]) -> Self {
        let mut m = BitMatrix::new(sets.len(), sets.len());
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate().skip(i + 1) {
                if a & b != 0 {
                    m.set(i, j);
                    m.set(j, i);
                }
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] |= 1u64 << (c % 64);
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    /// Mask of the valid column bits in word `w`.
    #[inline]
    pub fn valid_word(&self, w: usize) -> u64 {
        let lo = w * 64;
        if lo + 64 <= self.cols {
            u64::MAX
        } else if lo >= self.cols {
            0
        } else {
            (1u64 << (self.cols - lo)) - 1
        }
    }
}

/// Iterates the set bits of a word in ascending order.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
