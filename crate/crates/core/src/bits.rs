//! Dense square bit matrices with word-parallel row operations.

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// An `n x n` bit matrix stored row-major, one run of `u64` words per row.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    n: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            data: vec![0; n * stride],
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.n && c < self.n);
        (self.data[r * self.stride + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.n && c < self.n);
        self.data[r * self.stride + c / WORD] |= 1 << (c % WORD);
    }

    #[inline]
    pub fn clear(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.n && c < self.n);
        self.data[r * self.stride + c / WORD] &= !(1 << (c % WORD));
    }

    #[inline]
    pub fn assign(&mut self, r: usize, c: usize, value: bool) {
        if value {
            self.set(r, c)
        } else {
            self.clear(r, c)
        }
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    /// `row[dst] |= row[src]`.
    pub fn or_row_from(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        let s = self.stride;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x |= *y;
        }
    }

    pub fn or_row_with(&mut self, dst: usize, words: &[u64]) {
        for (x, y) in self.row_mut(dst).iter_mut().zip(words) {
            *x |= *y;
        }
    }

    pub fn row_intersects(&self, r: usize, words: &[u64]) -> bool {
        self.row(r).iter().zip(words).any(|(a, b)| a & b != 0)
    }

    pub fn row_ones(&self, r: usize) -> BitIter<'_> {
        BitIter::new(self.row(r))
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_disjoint(&self, other: &BitMatrix) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.data.iter().zip(&other.data).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &BitMatrix) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.data.iter().zip(&other.data).all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &BitMatrix) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a |= *b;
        }
    }

    pub fn clear_diagonal(&mut self) {
        for i in 0..self.n {
            self.clear(i, i);
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for r in 0..self.n {
            for c in self.row_ones(r) {
                t.set(c, r);
            }
        }
        t
    }

    /// Iterates all set `(row, col)` positions in row-major order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |r| self.row_ones(r).map(move |c| (r, c)))
    }

    /// Reflexive-transitive closure in place (Warshall over rows); the diagonal is cleared afterwards.
    pub fn close_transitively(&mut self) {
        for k in 0..self.n {
            for i in 0..self.n {
                if i != k && self.get(i, k) {
                    self.or_row_from(i, k);
                }
            }
        }
        self.clear_diagonal();
    }
}

/// A single bit row, used for element subsets and scratch accumulators.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(n: usize) -> Self {
        Self {
            words: vec![0; words_for(n)],
        }
    }

    pub fn from_words(words: &[u64]) -> Self {
        Self {
            words: words.to_vec(),
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn or_with(&mut self, words: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(words) {
            *a |= *b;
        }
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter::new(&self.words)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersects(&self, words: &[u64]) -> bool {
        self.words.iter().zip(words).any(|(a, b)| a & b != 0)
    }
}

pub struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        Self {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}
