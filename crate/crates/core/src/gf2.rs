//! Bit-packed linear algebra over GF(2).
//!
//! Matrices are stored row-major, one `u64` word per 64 columns. Every matroid
//! computation in the crate bottoms out in the routines here: rank, the
//! leftmost-pivot standard form `[I_r | D]`, and Gray-code iteration over the
//! row space.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of rows of a [`BitMatrix`].
pub const MAX_ROWS: usize = 64;
/// Maximum number of columns of a [`BitMatrix`].
pub const MAX_COLS: usize = 256;

const WORDS: usize = MAX_COLS / 64;

/// A fixed-capacity bit vector of up to [`MAX_COLS`] bits.
///
/// Used for matrix rows, row-space codewords and sets of column indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits([u64; WORDS]);

impl Bits {
    pub const fn empty() -> Self {
        Bits([0; WORDS])
    }

    /// The set `{0, 1, .., len - 1}`.
    pub fn prefix(len: usize) -> Self {
        assert!(len <= MAX_COLS, "bit length {len} exceeds {MAX_COLS}");
        let mut b = Bits::empty();
        for w in 0..WORDS {
            let lo = w * 64;
            if len >= lo + 64 {
                b.0[w] = u64::MAX;
            } else if len > lo {
                b.0[w] = (1u64 << (len - lo)) - 1;
            }
        }
        b
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut b = Bits::empty();
        for i in iter {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.0[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.0[i >> 6] ^= 1u64 << (i & 63);
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        if value {
            self.insert(i)
        } else {
            self.remove(i)
        }
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn xor(&self, other: &Bits) -> Bits {
        let mut out = *self;
        out ^= *other;
        out
    }

    #[inline]
    pub fn and(&self, other: &Bits) -> Bits {
        let mut out = *self;
        for w in 0..WORDS {
            out.0[w] &= other.0[w];
        }
        out
    }

    #[inline]
    pub fn or(&self, other: &Bits) -> Bits {
        let mut out = *self;
        for w in 0..WORDS {
            out.0[w] |= other.0[w];
        }
        out
    }

    #[inline]
    pub fn and_not(&self, other: &Bits) -> Bits {
        let mut out = *self;
        for w in 0..WORDS {
            out.0[w] &= !other.0[w];
        }
        out
    }

    #[inline]
    pub fn is_subset(&self, other: &Bits) -> bool {
        (0..WORDS).all(|w| self.0[w] & !other.0[w] == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Bits) -> bool {
        (0..WORDS).all(|w| self.0[w] & other.0[w] == 0)
    }

    /// Parity of the intersection with `other`.
    #[inline]
    pub fn dot(&self, other: &Bits) -> bool {
        let mut acc = 0u32;
        for w in 0..WORDS {
            acc ^= (self.0[w] & other.0[w]).count_ones();
        }
        acc & 1 == 1
    }

    /// Lowest set bit, if any.
    pub fn first(&self) -> Option<usize> {
        for w in 0..WORDS {
            if self.0[w] != 0 {
                return Some(w * 64 + self.0[w].trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> BitsIter {
        BitsIter { bits: *self, word: 0 }
    }

    pub fn words(&self) -> &[u64; WORDS] {
        &self.0
    }

    /// The low 64 bits, for sets known to fit in one word.
    #[inline]
    pub fn low_word(&self) -> u64 {
        self.0[0]
    }

    pub fn from_low_word(w: u64) -> Bits {
        let mut b = Bits::empty();
        b.0[0] = w;
        b
    }
}

impl std::ops::BitXorAssign for Bits {
    #[inline]
    fn bitxor_assign(&mut self, rhs: Bits) {
        for w in 0..WORDS {
            self.0[w] ^= rhs.0[w];
        }
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Bits::from_indices(iter)
    }
}

pub struct BitsIter {
    bits: Bits,
    word: usize,
}

impl Iterator for BitsIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.bits.0[self.word];
            if w != 0 {
                let tz = w.trailing_zeros() as usize;
                self.bits.0[self.word] &= w - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
        }
        None
    }
}

/// A dense matrix over GF(2) with at most [`MAX_ROWS`] rows and
/// [`MAX_COLS`] columns. Bits beyond `cols` in each row are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Bits>,
}

/// A column permutation: entry `j` names the source column placed at `j`.
pub type Permutation = Vec<usize>;

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows > MAX_ROWS || cols > MAX_COLS {
            return Err(Error::DimensionLimit { rows, cols });
        }
        Ok(BitMatrix { rows, cols, data: vec![Bits::empty(); rows] })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = BitMatrix::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    /// Parses rows written as strings of `0`/`1` characters. All rows must
    /// have the same length.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let cols = rows.first().map(|r| r.as_ref().trim().len()).unwrap_or(0);
        let mut m = BitMatrix::zeros(rows.len(), cols)?;
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref().trim();
            if row.len() != cols {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    other => {
                        return Err(Error::Parse(format!("unexpected character {other:?} in matrix row")))
                    }
                }
            }
        }
        Ok(m)
    }

    /// Builds a `rows × columns.len()` matrix from column vectors, bit `i` of
    /// each word being the entry in row `i`.
    pub fn from_columns(rows: usize, columns: &[u64]) -> Result<Self> {
        let mut m = BitMatrix::zeros(rows, columns.len())?;
        for (j, &c) in columns.iter().enumerate() {
            if rows < 64 && c >> rows != 0 {
                return Err(Error::Parse(format!("column {j} has bits beyond row {rows}")));
            }
            let mut bits = c;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                m.data[i].insert(j);
                bits &= bits - 1;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        self.data[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &Bits {
        &self.data[i]
    }

    pub fn row_bits(&self) -> &[Bits] {
        &self.data
    }

    /// Column `j` as a word, bit `i` holding row `i`.
    pub fn column(&self, j: usize) -> u64 {
        let mut c = 0u64;
        for (i, row) in self.data.iter().enumerate() {
            if row.get(j) {
                c |= 1u64 << i;
            }
        }
        c
    }

    pub fn columns(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter() {
                out[j] |= 1u64 << i;
            }
        }
        out
    }

    pub fn transpose(&self) -> Result<BitMatrix> {
        let mut t = BitMatrix::zeros(self.cols, self.rows)?;
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter() {
                t.data[j].insert(i);
            }
        }
        Ok(t)
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row.get(col) {
                    *row ^= pivot;
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form together with the pivot columns, scanning
    /// columns left to right.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&i| m.data[i].get(col)) else {
                continue;
            };
            m.data.swap(rank, p);
            let pivot = m.data[rank];
            for i in 0..m.rows {
                if i != rank && m.data[i].get(col) {
                    m.data[i] ^= pivot;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        (m, pivots)
    }

    /// Brings a full-row-rank matrix to the form `[I_r | D]`.
    ///
    /// Row reduction uses the leftmost available pivot in every column; the
    /// returned permutation lists the pivot columns first, then the remaining
    /// columns, each group in original order.
    pub fn standardize(&self) -> Result<(BitMatrix, Permutation)> {
        let (reduced, pivots) = self.rref();
        if pivots.len() < self.rows {
            return Err(Error::RankDeficient { rank: pivots.len(), rows: self.rows });
        }
        let mut perm: Permutation = pivots.clone();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        perm.extend((0..self.cols).filter(|&j| !is_pivot[j]));
        Ok((reduced.permute_columns(&perm)?, perm))
    }

    /// True when the leading `rows × rows` block is the identity.
    pub fn is_standard(&self) -> bool {
        if self.rows > self.cols {
            return false;
        }
        (0..self.rows).all(|i| (0..self.rows).all(|j| self.get(i, j) == (i == j)))
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<BitMatrix> {
        self.submatrix_columns(perm)
    }

    /// The columns named in `cols`, in the given order.
    pub fn submatrix_columns(&self, cols: &[usize]) -> Result<BitMatrix> {
        let mut out = BitMatrix::zeros(self.rows, cols.len())?;
        for (k, &j) in cols.iter().enumerate() {
            if j >= self.cols {
                return Err(Error::IndexOutOfRange { index: j, len: self.cols });
            }
            for i in 0..self.rows {
                if self.data[i].get(j) {
                    out.data[i].insert(k);
                }
            }
        }
        Ok(out)
    }

    /// Iterates all `2^rows - 1` nonzero combinations of rows in Gray-code
    /// order, yielding the coefficient vector and the resulting codeword.
    pub fn row_space_codewords(&self) -> Codewords<'_> {
        assert!(self.rows < 64, "row space iteration supports fewer than 64 rows");
        Codewords { matrix: self, step: 0, coeff: 0, word: Bits::empty() }
    }

    /// Rows rendered as `0`/`1` strings.
    pub fn to_row_strings(&self) -> Vec<String> {
        self.data
            .iter()
            .map(|row| (0..self.cols).map(|j| if row.get(j) { '1' } else { '0' }).collect())
            .collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for row in self.to_row_strings() {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// Gray-code walk over the nonzero row-space codewords of a matrix.
pub struct Codewords<'a> {
    matrix: &'a BitMatrix,
    step: u64,
    coeff: u64,
    word: Bits,
}

impl Iterator for Codewords<'_> {
    type Item = (u64, Bits);

    fn next(&mut self) -> Option<(u64, Bits)> {
        self.step += 1;
        if self.step >> self.matrix.rows != 0 {
            return None;
        }
        let flip = self.step.trailing_zeros() as usize;
        self.coeff ^= 1u64 << flip;
        self.word ^= self.matrix.data[flip];
        Some((self.coeff, self.word))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let total = (1u64 << self.matrix.rows) - 1;
        let left = (total - self.step.min(total)) as usize;
        (left, Some(left))
    }
}

/// Rank of a set of column vectors packed in words.
pub fn rank_of_vectors<I: IntoIterator<Item = u64>>(vectors: I) -> usize {
    let mut basis = EchelonBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.len()
}

/// An incrementally built echelon basis of a subspace of `GF(2)^64`.
///
/// Each stored vector has a distinct pivot bit (its lowest set bit) which is
/// zero in every vector stored after it, so sequential reduction is exact.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    vecs: Vec<u64>,
    pivots: Vec<u64>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis::default()
    }

    pub fn len(&self) -> usize {
        self.vecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vecs.is_empty()
    }

    #[inline]
    pub fn reduce(&self, mut v: u64) -> u64 {
        for (b, &p) in self.vecs.iter().zip(&self.pivots) {
            if v & p != 0 {
                v ^= b;
            }
        }
        v
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v`; returns false when `v` was already in the span.
    #[inline]
    pub fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        self.vecs.push(r);
        self.pivots.push(r & r.wrapping_neg());
        true
    }

    pub fn truncate(&mut self, len: usize) {
        self.vecs.truncate(len);
        self.pivots.truncate(len);
    }

    /// Union of pivot bits.
    pub fn pivot_mask(&self) -> u64 {
        self.pivots.iter().fold(0, |a, p| a | p)
    }
}

/// Greedy basis and fundamental-circuit data for a list of vectors.
///
/// `basis` holds the indices selected left to right; for a non-basis index
/// `j`, `circuit[j]` is the bitmask (over positions in `basis`) of basis
/// members whose sum equals vector `j`. Basis members carry their own bit.
#[derive(Clone, Debug)]
pub struct Fundamental {
    pub basis: Vec<usize>,
    pub circuit: Vec<u64>,
    pub in_basis: Vec<bool>,
}

impl Fundamental {
    pub fn compute(vectors: &[u64]) -> Fundamental {
        let mut reduced: Vec<u64> = Vec::new();
        let mut pivots: Vec<u64> = Vec::new();
        let mut combos: Vec<u64> = Vec::new();
        let mut basis = Vec::new();
        let mut circuit = vec![0u64; vectors.len()];
        let mut in_basis = vec![false; vectors.len()];
        for (j, &v) in vectors.iter().enumerate() {
            let mut r = v;
            let mut combo = 0u64;
            for k in 0..reduced.len() {
                if r & pivots[k] != 0 {
                    r ^= reduced[k];
                    combo ^= combos[k];
                }
            }
            if r == 0 {
                circuit[j] = combo;
            } else {
                let pos = basis.len();
                assert!(pos < 64, "more than 64 independent vectors");
                basis.push(j);
                in_basis[j] = true;
                reduced.push(r);
                pivots.push(r & r.wrapping_neg());
                combos.push(combo ^ (1u64 << pos));
                circuit[j] = 1u64 << pos;
            }
        }
        Fundamental { basis, circuit, in_basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}
