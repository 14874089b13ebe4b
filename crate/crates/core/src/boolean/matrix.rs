//! Bit-packed Boolean vectors and square matrices over the Boolean semiring
//! `({0, 1}, OR, AND)`.
//!
//! Rows are stored as machine words so products and vector application are
//! word-parallel OR operations.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::BoolError;

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// Characteristic vector of a subset of `0..len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    /// Vector with exactly the given positions set. Panics if a position is
    /// out of range.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
        )
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range 0..{}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range 0..{}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersects(&self, other: &BitVector) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .any(|(a, b)| a & b != 0)
    }

    pub fn union_with(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Positions of set bits in increasing order.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// `self · m` over the Boolean semiring (row-vector convention).
    pub fn apply(&self, m: &BoolMatrix) -> Result<BitVector, BoolError> {
        if self.len != m.n {
            return Err(BoolError::DimensionMismatch {
                left: self.len,
                right: m.n,
            });
        }
        let mut out = BitVector::zeros(m.n);
        for i in self.ones_iter() {
            for (o, r) in out.words.iter_mut().zip(m.row_words(i)) {
                *o |= r;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Row-vector application `v · a`; `result(j) = OR_i v(i) AND a(i, j)`.
pub fn apply_vector(v: &BitVector, a: &BoolMatrix) -> Result<BitVector, BoolError> {
    v.apply(a)
}

/// Square `n × n` Boolean matrix, row-major, rows packed into `u64` words.
///
/// Row `i` holds the successors of state `i` under one symbol.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolMatrix {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            words: vec![0; n * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn ones(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Builds a matrix from `(row, col)` pairs.
    pub fn from_entries<I: IntoIterator<Item = (usize, usize)>>(n: usize, entries: I) -> Self {
        let mut m = Self::zeros(n);
        for (i, j) in entries {
            m.set(i, j, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values. Panics on non-square input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), n, "row {i} has length {} in a {n}x{n} matrix", row.len());
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, b != 0);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n);
        self.words[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.n && j < self.n);
        let idx = i * self.stride + j / WORD_BITS;
        let mask = 1u64 << (j % WORD_BITS);
        if value {
            self.words[idx] |= mask;
        } else {
            self.words[idx] &= !mask;
        }
    }

    #[inline]
    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row(&self, i: usize) -> BitVector {
        BitVector {
            len: self.n,
            words: self.row_words(i).to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All `(row, col)` pairs with a 1 entry, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.row(i).ones_iter().map(move |j| (i, j)).collect::<Vec<_>>())
    }

    pub fn transpose(&self) -> BoolMatrix {
        BoolMatrix::from_entries(self.n, self.entries().map(|(i, j)| (j, i)))
    }

    /// Boolean product `self ∘ other`: `(i, k) = OR_j self(i, j) AND other(j, k)`.
    pub fn multiply(&self, other: &BoolMatrix) -> Result<BoolMatrix, BoolError> {
        if self.n != other.n {
            return Err(BoolError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = BoolMatrix::zeros(self.n);
        let stride = self.stride;
        for i in 0..self.n {
            let (lo, hi) = (i * stride, (i + 1) * stride);
            for (wi, &word) in self.row_words(i).iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let j = wi * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    for (o, r) in out.words[lo..hi].iter_mut().zip(other.row_words(j)) {
                        *o |= r;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^k`, with `self^0` the identity.
    pub fn pow(&self, k: usize) -> BoolMatrix {
        let mut acc = BoolMatrix::identity(self.n);
        for _ in 0..k {
            acc = acc.multiply(self).expect("same dimension");
        }
        acc
    }

    /// Every image `v · self` for `v` ranging over all `2^n` input vectors,
    /// deduplicated and sorted. The zero vector is always included.
    pub fn range(&self, cap: usize) -> Result<Vec<BitVector>, BoolError> {
        let mut images: Vec<u64> = self.range_words(cap)?.into_iter().collect();
        images.sort_unstable();
        Ok(images
            .into_iter()
            .map(|w| BitVector {
                len: self.n,
                words: if self.n == 0 { Vec::new() } else { vec![w] },
            })
            .collect())
    }

    /// `|range(self)|` without materializing the vectors.
    pub fn range_size(&self, cap: usize) -> Result<usize, BoolError> {
        Ok(self.range_words(cap)?.len())
    }

    fn range_words(&self, cap: usize) -> Result<HashSet<u64>, BoolError> {
        let cap = cap.min(MAX_RANGE_DIM);
        if self.n > cap {
            return Err(BoolError::RangeCapExceeded { n: self.n, cap });
        }
        let rows: Vec<u64> = (0..self.n).map(|i| self.row_words(i)[0]).collect();
        let mut seen = HashSet::new();
        enumerate_images(&rows, 0, 0, &mut seen);
        Ok(seen)
    }
}

/// Hard ceiling on the dimension accepted by exhaustive range enumeration,
/// whatever cap the caller configures.
pub const MAX_RANGE_DIM: usize = 40;

/// Default dimension cap for exhaustive range enumeration.
pub const DEFAULT_RANGE_CAP: usize = 20;

// Walks the binary tree of input vectors; each leaf is one of the 2^n
// vectors and `acc` is its image.
fn enumerate_images(rows: &[u64], depth: usize, acc: u64, seen: &mut HashSet<u64>) {
    if depth == rows.len() {
        seen.insert(acc);
        return;
    }
    enumerate_images(rows, depth + 1, acc, seen);
    enumerate_images(rows, depth + 1, acc | rows[depth], seen);
}

/// Free-function form of [`BoolMatrix::multiply`].
pub fn bool_multiply(a: &BoolMatrix, b: &BoolMatrix) -> Result<BoolMatrix, BoolError> {
    a.multiply(b)
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "\n  {}", self.row(i))?;
        }
        Ok(())
    }
}
