//! Bit-packed linear algebra over GF(2).
//!
//! Vectors and matrices store 64 bits per word; XOR is the field addition.
//! Elimination pivots on the first nonzero column and swaps rows in index
//! order, so every derived quantity (rank, echelon form, nullspace basis)
//! is deterministic.

use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Dense bit vector over GF(2). Length is fixed at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// All-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Vector with ones exactly at `indices`.
    ///
    /// Panics if any index is out of range.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    /// Parses a string of `0`/`1` characters.
    pub fn from_str01(s: &str) -> Option<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return None,
            }
        }
        Some(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// XOR-assigns `other` into `self`.
    ///
    /// Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor of unequal lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Returns `self ⊕ other`.
    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    /// Iterates over set-bit indices in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// True if the two vectors share at least one set bit.
    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Dense bit matrix over GF(2), row-major with bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        Self {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks equal-length row vectors into a matrix.
    pub fn from_rows(rows: &[BitVector]) -> Self {
        let cols = rows.first().map_or(0, BitVector::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            let off = i * m.words_per_row;
            m.data[off..off + m.words_per_row].copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let w = self.data[r * self.words_per_row + c / WORD_BITS];
        (w >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.data[r * self.words_per_row + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> BitVector {
        let off = r * self.words_per_row;
        BitVector {
            len: self.cols,
            words: self.data[off..off + self.words_per_row].to_vec(),
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words_per_row;
        let (src_off, dst_off) = (src * w, dst * w);
        for k in 0..w {
            let v = self.data[src_off + k];
            self.data[dst_off + k] ^= v;
        }
    }

    /// Matrix-vector product over GF(2): `result[i] = ⊕_j m[i,j]·v[j]`.
    ///
    /// Panics if `v.len() != self.cols()`.
    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        assert_eq!(
            v.len(),
            self.cols,
            "mul_vec: vector length {} does not match {} columns",
            v.len(),
            self.cols
        );
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u64;
            for (a, b) in self.row_words(r).iter().zip(v.words()) {
                acc ^= a & b;
            }
            if acc.count_ones() & 1 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// GF(2) rank.
    pub fn rank(&self) -> usize {
        Echelon::new(self).rank()
    }

    /// True iff `v` is a GF(2) combination of the rows of `self`.
    ///
    /// Panics if `v.len() != self.cols()`.
    pub fn in_rowspan(&self, v: &BitVector) -> bool {
        Echelon::new(self).contains(v)
    }

    /// Basis of the right nullspace: `cols − rank` independent vectors, each
    /// annihilated by `mul_vec`. Ordered by ascending free column.
    pub fn nullspace_basis(&self) -> Vec<BitVector> {
        let ech = Echelon::new(self);
        // Back-substitute the reduced form: one basis vector per free column.
        let pivots = &ech.pivot_cols;
        let is_pivot = {
            let mut mark = vec![false; self.cols];
            for &c in pivots {
                mark[c] = true;
            }
            mark
        };
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut b = BitVector::zeros(self.cols);
            b.set(free, true);
            for (r, &pc) in pivots.iter().enumerate() {
                if ech.reduced.get(r, free) {
                    b.set(pc, true);
                }
            }
            basis.push(b);
        }
        basis
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of a matrix, reusable for repeated
/// membership queries against the same row space.
#[derive(Clone)]
pub struct Echelon {
    reduced: BitMatrix,
    pivot_cols: Vec<usize>,
}

impl Echelon {
    pub fn new(m: &BitMatrix) -> Self {
        let mut a = m.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0;
        for col in 0..a.cols {
            if pivot_row == a.rows {
                break;
            }
            let Some(src) = (pivot_row..a.rows).find(|&r| a.get(r, col)) else {
                continue;
            };
            a.swap_rows(pivot_row, src);
            for r in 0..a.rows {
                if r != pivot_row && a.get(r, col) {
                    a.xor_row_into(pivot_row, r);
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        Self {
            reduced: a,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    /// True iff `v` lies in the row space.
    pub fn contains(&self, v: &BitVector) -> bool {
        assert_eq!(
            v.len(),
            self.reduced.cols,
            "contains: vector length {} does not match {} columns",
            v.len(),
            self.reduced.cols
        );
        let mut residual = v.clone();
        for (r, &c) in self.pivot_cols.iter().enumerate() {
            if residual.get(c) {
                let row = self.reduced.row(r);
                residual.xor_assign(&row);
            }
        }
        residual.is_zero()
    }
}
