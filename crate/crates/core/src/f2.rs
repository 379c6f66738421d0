//! Dense linear algebra over the two-element field.
//!
//! Vectors are packed 64 coordinates per word and matrices are stored as
//! packed rows, so elimination is word-level XOR. Every basis returned from
//! this module is canonical (reduced echelon form, ascending pivots), which
//! keeps class representatives identical across runs.

use std::fmt;

use thiserror::Error;

const WORD: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum F2Error {
    #[error("image vector {index} is not contained in the span of the kernel")]
    NotContained { index: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    Length { expected: usize, got: usize },
}

/// A vector over F2 of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &F2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn dot(&self, other: &F2Vector) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Indices of set coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + b)
                }
            })
        })
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector(")?;
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, ")")
    }
}

/// A rows x cols matrix over F2 stored as packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from 0/1 rows. All rows must have the same length.
    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| F2Vector::from_bits(r)).collect(),
        }
    }

    pub fn from_row_vectors(cols: usize, data: Vec<F2Vector>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols));
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[F2Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in c.ones() {
                m.set(i, j, true);
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
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i].flip(j);
    }

    pub fn row(&self, i: usize) -> &F2Vector {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> F2Vector {
        let mut v = F2Vector::zeros(self.rows);
        for i in 0..self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F2Vector::is_zero)
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &F2Vector) -> F2Vector {
        assert_eq!(x.len(), self.cols);
        let mut y = F2Vector::zeros(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            if row.dot(x) {
                y.set(i, true);
            }
        }
        y
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let acc = &mut out.data[i];
            for k in row.ones() {
                acc.xor_assign(&other.data[k]);
            }
        }
        out
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.xor_assign(b);
        }
        out
    }

    /// Reduced row-echelon form and the pivot column of each nonzero row.
    fn rref(&self) -> (Vec<F2Vector>, Vec<usize>) {
        let mut rows = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (rows, pivots)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

pub fn rank(m: &F2Matrix) -> usize {
    m.rref().1.len()
}

/// Basis of the null space, one vector per pivot-free column in ascending order.
pub fn kernel_basis(m: &F2Matrix) -> Vec<F2Vector> {
    let (rows, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut v = F2Vector::unit(m.cols, j);
            for (row, &p) in rows.iter().zip(&pivots) {
                if row.get(j) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

/// Canonical basis of the column space: the reduced echelon rows of the transpose.
pub fn image_basis(m: &F2Matrix) -> Vec<F2Vector> {
    m.transpose().rref().0
}

/// Some `x` with `m x = b`, free variables set to zero; `None` when inconsistent.
pub fn solve(m: &F2Matrix, b: &F2Vector) -> Option<F2Vector> {
    assert_eq!(b.len(), m.rows, "right-hand side length");
    let mut aug = F2Matrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in m.row(i).ones() {
            aug.set(i, j, true);
        }
        if b.get(i) {
            aug.set(i, m.cols, true);
        }
    }
    let (rows, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = F2Vector::zeros(m.cols);
    for (row, &p) in rows.iter().zip(&pivots) {
        if row.get(m.cols) {
            x.set(p, true);
        }
    }
    Some(x)
}

/// Incrementally built echelon basis of a subspace.
///
/// Each stored row carries a tag vector recording which inserted vectors it
/// was combined from, so `coordinates` can express a member of the span in
/// terms of the inserted generators.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    tag_len: usize,
    rows: Vec<(F2Vector, F2Vector)>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(len: usize, tag_len: usize) -> Self {
        Self {
            len,
            tag_len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows, returning the residual and the tag
    /// of the combination that was subtracted.
    pub fn reduce(&self, v: &F2Vector) -> (F2Vector, F2Vector) {
        let mut r = v.clone();
        let mut tag = F2Vector::zeros(self.tag_len);
        for ((row, rtag), &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
                tag.xor_assign(rtag);
            }
        }
        (r, tag)
    }

    /// Inserts `v` tagged with `tag`. Returns false if `v` was already in the span.
    pub fn insert(&mut self, v: &F2Vector, tag: F2Vector) -> bool {
        assert_eq!(v.len(), self.len);
        let (r, t) = self.reduce(v);
        let Some(p) = r.first_one() else {
            return false;
        };
        let mut tag = tag;
        tag.xor_assign(&t);
        // keep rows fully reduced so one pass of `reduce` suffices
        for ((row, rtag), _) in self.rows.iter_mut().zip(&self.pivots) {
            if row.get(p) {
                row.xor_assign(&r);
                rtag.xor_assign(&tag);
            }
        }
        self.rows.push((r, tag));
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Tag combination reproducing `v`, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &F2Vector) -> Option<F2Vector> {
        let (r, t) = self.reduce(v);
        r.is_zero().then_some(t)
    }
}

/// Coset representatives for span(kernel)/span(image).
///
/// Kernel vectors are visited in order and kept when they extend the echelon
/// of the image; each kept vector is returned reduced modulo the image.
pub fn subquotient_basis(
    kernel: &[F2Vector],
    image: &[F2Vector],
) -> Result<Vec<F2Vector>, F2Error> {
    let len = match kernel.first().or(image.first()) {
        Some(v) => v.len(),
        None => return Ok(Vec::new()),
    };
    for v in kernel.iter().chain(image) {
        if v.len() != len {
            return Err(F2Error::Length {
                expected: len,
                got: v.len(),
            });
        }
    }
    let mut kernel_span = Echelon::new(len, 0);
    for k in kernel {
        kernel_span.insert(k, F2Vector::zeros(0));
    }
    let mut image_span = Echelon::new(len, 0);
    for (index, v) in image.iter().enumerate() {
        if !kernel_span.contains(v) {
            return Err(F2Error::NotContained { index });
        }
        image_span.insert(v, F2Vector::zeros(0));
    }
    let mut extended = image_span.clone();
    let mut reps = Vec::new();
    for k in kernel {
        if extended.insert(k, F2Vector::zeros(0)) {
            reps.push(image_span.reduce(k).0);
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> F2Matrix {
        F2Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&F2Matrix::zeros(3, 3)), 0);
        assert_eq!(rank(&F2Matrix::identity(4)), 4);
        assert_eq!(rank(&m(&[&[1, 1], &[1, 1]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&F2Matrix::identity(3)).is_empty());
        let k = kernel_basis(&F2Matrix::zeros(2, 3));
        assert_eq!(
            k,
            vec![F2Vector::unit(3, 0), F2Vector::unit(3, 1), F2Vector::unit(3, 2)]
        );
        assert_eq!(
            kernel_basis(&m(&[&[1, 1]])),
            vec![F2Vector::from_bits(&[1, 1])]
        );
    }

    #[test]
    fn image_examples() {
        assert_eq!(
            image_basis(&F2Matrix::identity(2)),
            vec![F2Vector::unit(2, 0), F2Vector::unit(2, 1)]
        );
        assert!(image_basis(&F2Matrix::zeros(2, 2)).is_empty());
        assert_eq!(
            image_basis(&m(&[&[1, 0], &[1, 0]])),
            vec![F2Vector::from_bits(&[1, 1])]
        );
    }

    #[test]
    fn subquotient_examples() {
        let e = [F2Vector::unit(2, 0), F2Vector::unit(2, 1)];
        assert_eq!(subquotient_basis(&e, &[]).unwrap().len(), 2);
        assert!(subquotient_basis(&e, &e).unwrap().is_empty());
        let reps = subquotient_basis(&e, &[F2Vector::from_bits(&[1, 1])]).unwrap();
        assert_eq!(reps.len(), 1);
    }

    #[test]
    fn subquotient_rejects_uncontained_image() {
        let kernel = [F2Vector::unit(2, 0)];
        let image = [F2Vector::unit(2, 1)];
        assert_eq!(
            subquotient_basis(&kernel, &image),
            Err(F2Error::NotContained { index: 0 })
        );
    }

    #[test]
    fn solve_examples() {
        let b = F2Vector::from_bits(&[1, 0, 1]);
        assert_eq!(solve(&F2Matrix::identity(3), &b), Some(b.clone()));
        assert_eq!(solve(&F2Matrix::zeros(3, 3), &b), None);
        assert_eq!(
            solve(&m(&[&[1, 1]]), &F2Vector::from_bits(&[1])),
            Some(F2Vector::from_bits(&[1, 0]))
        );
    }

    #[test]
    fn echelon_coordinates() {
        let mut e = Echelon::new(3, 2);
        e.insert(&F2Vector::from_bits(&[1, 1, 0]), F2Vector::unit(2, 0));
        e.insert(&F2Vector::from_bits(&[0, 1, 1]), F2Vector::unit(2, 1));
        let c = e.coordinates(&F2Vector::from_bits(&[1, 0, 1])).unwrap();
        assert_eq!(c, F2Vector::from_bits(&[1, 1]));
        assert!(e.coordinates(&F2Vector::from_bits(&[1, 0, 0])).is_none());
    }

    #[test]
    fn vector_ones_iterates_across_words() {
        let v = F2Vector::from_indices(200, [3, 64, 199]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![3, 64, 199]);
        assert_eq!(v.first_one(), Some(3));
        assert_eq!(v.count_ones(), 3);
    }
}
