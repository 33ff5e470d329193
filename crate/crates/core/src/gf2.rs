//! Packed linear algebra over F2.
//!
//! Vectors hold 64 coordinates per word. Against a [`ColumnIndex`] the
//! coordinates are monomials sorted descending, so the lowest set index of a
//! vector is its largest monomial, and the pivot of an echelon row is the
//! leading monomial of the polynomial it encodes.

use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

const NONE: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: alloc::vec![0; words_for(len)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = BitVec::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = BitVec::zeros(len);
        for i in ones {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, bound: len });
            }
            v.flip(i);
        }
        Ok(v)
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// From packed words, low bit first. Bits past `len` must be clear.
    pub fn from_words(len: usize, words: Vec<u64>) -> Result<Self> {
        if words.len() != words_for(len) {
            return Err(Error::LengthMismatch {
                expected: words_for(len),
                got: words.len(),
            });
        }
        if !len.is_multiple_of(64) {
            if let Some(&last) = words.last() {
                if last >> (len % 64) != 0 {
                    return Err(Error::IndexOutOfRange { index: len, bound: len });
                }
            }
        }
        Ok(BitVec { len, words })
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
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        let mask = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set index.
    pub fn first_one(&self) -> Option<usize> {
        self.first_one_from(0)
    }

    /// Lowest set index `>= start`.
    #[inline]
    pub fn first_one_from(&self, start: usize) -> Option<usize> {
        if start >= self.len {
            return None;
        }
        let mut w = start / 64;
        let mut word = self.words[w] & (!0u64 << (start % 64));
        loop {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            core::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn xor_assign(&mut self, other: &BitVec) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: other.len,
            });
        }
        self.xor_from(other, 0);
        Ok(())
    }

    /// XOR of the words from the one holding `start` on; the caller knows
    /// `other` is zero below it.
    #[inline]
    pub(crate) fn xor_from(&mut self, other: &BitVec, start: usize) {
        let w = start / 64;
        for (a, b) in self.words[w..].iter_mut().zip(&other.words[w..]) {
            *a ^= *b;
        }
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Coordinates `start..end` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> BitVec {
        let mut v = BitVec::zeros(end - start);
        for i in self.ones().filter(|&i| i >= start && i < end) {
            v.set(i - start, true);
        }
        v
    }

    /// Copies into a vector of length `len`, dropping indices past it.
    pub fn resized(&self, len: usize) -> BitVec {
        let mut v = BitVec::zeros(len);
        let n = v.words.len().min(self.words.len());
        v.words[..n].copy_from_slice(&self.words[..n]);
        if !len.is_multiple_of(64) {
            if let Some(last) = v.words.last_mut() {
                *last &= (1u64 << (len % 64)) - 1;
            }
        }
        v
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BitVec[")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str("]")
    }
}

/// Monomials of one degree, sorted descending in the admissible order, with
/// lookup by monomial.
#[derive(Clone, Debug, Default)]
pub struct ColumnIndex {
    columns: Vec<Monomial>,
    position: HashMap<Monomial, usize>,
}

impl ColumnIndex {
    /// Sorts descending and removes duplicates.
    pub fn new(mut columns: Vec<Monomial>) -> Self {
        columns.sort_unstable_by(|a, b| b.cmp(a));
        columns.dedup();
        let position = columns.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        ColumnIndex { columns, position }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> Monomial {
        self.columns[i]
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.position.get(m).copied()
    }

    /// Encodes `f`; every term must be a column.
    pub fn vector_of(&self, f: &Polynomial) -> Result<BitVec> {
        let mut v = BitVec::zeros(self.len());
        for m in f.terms() {
            let i = self
                .position(m)
                .ok_or_else(|| Error::NotAdmissible(alloc::format!("{m} is not a column")))?;
            v.set(i, true);
        }
        Ok(v)
    }

    pub fn polynomial_of(&self, v: &BitVec) -> Result<Polynomial> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: v.len(),
            });
        }
        let Some(first) = self.columns.first() else {
            return Err(Error::LengthMismatch { expected: 1, got: 0 });
        };
        let terms: Vec<Monomial> = v.ones().map(|i| self.columns[i]).collect();
        Ok(Polynomial::from_distinct(first.k(), first.degree(), terms))
    }
}

/// A subspace of `F2^ncols` held as echelon rows.
///
/// Each row's lowest set index is its pivot and pivots are distinct. After
/// [`EchelonBasis::insert`] (or any public constructor) the rows are fully
/// reduced: no row has a set bit at another row's pivot, which makes the row
/// set a canonical function of the subspace.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ncols: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    row_of_pivot: Vec<u32>,
    pivot_mask: BitVec,
    reduced: bool,
}

impl PartialEq for EchelonBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ncols == other.ncols && self.canonical_rows() == other.canonical_rows()
    }
}

impl Eq for EchelonBasis {}

impl EchelonBasis {
    pub fn new(ncols: usize) -> Self {
        EchelonBasis {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of_pivot: alloc::vec![NONE; ncols],
            pivot_mask: BitVec::zeros(ncols),
            reduced: true,
        }
    }

    /// Span of `rows`, eliminated in the given order.
    pub fn from_rows<I: IntoIterator<Item = BitVec>>(ncols: usize, rows: I) -> Result<Self> {
        let mut b = EchelonBasis::new(ncols);
        for r in rows {
            b.check(&r)?;
            b.push_semi(r);
        }
        b.canonicalize();
        Ok(b)
    }

    /// Rows already in reduced echelon form, e.g. read back from storage.
    /// Fails unless pivots are distinct and each row is reduced.
    pub fn from_reduced_rows(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        let mut b = EchelonBasis::new(ncols);
        for r in rows {
            b.check(&r)?;
            let p = r.first_one().ok_or(Error::Echelon("zero row in echelon data"))?;
            if b.row_of_pivot[p] != NONE {
                return Err(Error::Echelon("repeated pivot in echelon data"));
            }
            b.add_row(p, r);
        }
        for (i, r) in b.rows.iter().enumerate() {
            let p = b.pivots[i];
            if r.words.iter().zip(&b.pivot_mask.words).enumerate().any(|(w, (a, m))| {
                let mut bits = a & m;
                if w == p / 64 {
                    bits &= !(1u64 << (p % 64));
                }
                bits != 0
            }) {
                return Err(Error::Echelon("rows are not reduced"));
            }
        }
        Ok(b)
    }

    fn check(&self, v: &BitVec) -> Result<()> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                got: v.len(),
            });
        }
        Ok(())
    }

    fn add_row(&mut self, p: usize, v: BitVec) {
        self.row_of_pivot[p] = self.rows.len() as u32;
        self.pivots.push(p);
        self.pivot_mask.set(p, true);
        self.rows.push(v);
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// Pivot of each row, parallel to [`EchelonBasis::rows`].
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.row_of_pivot[c] != NONE
    }

    pub fn row_for_pivot(&self, c: usize) -> Option<&BitVec> {
        match self.row_of_pivot[c] {
            NONE => None,
            r => Some(&self.rows[r as usize]),
        }
    }

    /// Columns that are not pivots, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Eliminates `v` against the leading entries only. Returns true and
    /// keeps the remainder as a new row when it is nonzero.
    pub(crate) fn push_semi(&mut self, mut v: BitVec) -> bool {
        let mut start = 0;
        loop {
            let Some(lead) = v.first_one_from(start) else {
                return false;
            };
            match self.row_of_pivot[lead] {
                NONE => {
                    self.add_row(lead, v);
                    self.reduced = false;
                    return true;
                }
                r => {
                    v.xor_from(&self.rows[r as usize], lead);
                    start = lead + 1;
                }
            }
        }
    }

    /// Clears every non-leading pivot bit, processing rows from the
    /// rightmost pivot leftwards so each row is reduced against rows that
    /// are already reduced.
    pub(crate) fn canonicalize(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by(|&a, &b| self.pivots[b].cmp(&self.pivots[a]));
        for r in order {
            let p = self.pivots[r];
            let mut row = core::mem::take(&mut self.rows[r]);
            let mut w = p / 64;
            while w < row.words.len() {
                let mut hits = row.words[w] & self.pivot_mask.words[w];
                if w == p / 64 {
                    hits &= !0u64 << (p % 64) << 1;
                }
                if hits == 0 {
                    w += 1;
                    continue;
                }
                let c = w * 64 + hits.trailing_zeros() as usize;
                let other = &self.rows[self.row_of_pivot[c] as usize];
                row.xor_from(other, c);
            }
            self.rows[r] = row;
        }
        self.reduced = true;
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: BitVec) -> Result<bool> {
        self.check(&v)?;
        self.canonicalize();
        let v = self.reduce_unchecked(v);
        let Some(p) = v.first_one() else {
            return Ok(false);
        };
        for r in self.rows.iter_mut() {
            if r.get(p) {
                r.xor_from(&v, p);
            }
        }
        self.add_row(p, v);
        Ok(true)
    }

    fn reduce_unchecked(&self, mut v: BitVec) -> BitVec {
        let mut w = 0;
        while w < v.words.len() {
            let hits = v.words[w] & self.pivot_mask.words[w];
            if hits == 0 {
                w += 1;
                continue;
            }
            let c = w * 64 + hits.trailing_zeros() as usize;
            v.xor_from(&self.rows[self.row_of_pivot[c] as usize], c);
        }
        v
    }

    /// The canonical remainder of `v`: the unique vector congruent to `v`
    /// modulo the span with no bit at a pivot column.
    pub fn reduce(&self, v: &BitVec) -> Result<BitVec> {
        self.check(v)?;
        Ok(self.reduce_unchecked(v.clone()))
    }

    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Rows in reduced echelon form, ordered by pivot.
    pub fn canonical_rows(&self) -> Vec<BitVec> {
        let owned;
        let b = if self.reduced {
            self
        } else {
            let mut c = self.clone();
            c.canonicalize();
            owned = c;
            &owned
        };
        let mut idx: Vec<usize> = (0..b.rows.len()).collect();
        idx.sort_unstable_by_key(|&i| b.pivots[i]);
        idx.into_iter().map(|i| b.rows[i].clone()).collect()
    }

    /// Basis of the vectors in the span supported inside `keep`.
    ///
    /// The discarded coordinates are moved in front and eliminated first;
    /// rows whose pivot then lands among the kept coordinates span the
    /// intersection.
    pub fn intersect_columns(&self, keep: &BitVec) -> Result<EchelonBasis> {
        self.check(keep)?;
        let discarded: Vec<usize> = (0..self.ncols).filter(|&c| !keep.get(c)).collect();
        let kept: Vec<usize> = keep.ones().collect();
        if let Some(&first) = kept.first() {
            if kept.len() == self.ncols - first {
                // a suffix: echelon rows with pivot inside it are supported in it
                let rows = self
                    .rows
                    .iter()
                    .zip(&self.pivots)
                    .filter(|(_, &p)| p >= first)
                    .map(|(r, _)| r.clone());
                return EchelonBasis::from_rows(self.ncols, rows);
            }
        }
        let order: Vec<usize> = discarded.iter().chain(&kept).copied().collect();
        let permute = |r: &BitVec| {
            let mut v = BitVec::zeros(self.ncols);
            for (new, &old) in order.iter().enumerate() {
                if r.get(old) {
                    v.set(new, true);
                }
            }
            v
        };
        let moved = EchelonBasis::from_rows(self.ncols, self.rows.iter().map(permute))?;
        let cut = discarded.len();
        let harvested = moved
            .rows
            .iter()
            .zip(&moved.pivots)
            .filter(|(_, &p)| p >= cut)
            .map(|(r, _)| {
                let mut v = BitVec::zeros(self.ncols);
                for i in r.ones() {
                    v.set(order[i], true);
                }
                v
            });
        EchelonBasis::from_rows(self.ncols, harvested)
    }
}

/// Null space of the linear functionals `rows` on `F2^dim`.
pub fn kernel_of(dim: usize, rows: &[BitVec]) -> Result<EchelonBasis> {
    let e = EchelonBasis::from_rows(dim, rows.iter().cloned())?;
    let mut basis = Vec::new();
    for f in e.free_columns() {
        let mut v = BitVec::unit(dim, f);
        for (r, &p) in e.rows.iter().zip(&e.pivots) {
            if r.get(f) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    EchelonBasis::from_rows(dim, basis)
}

/// A dense matrix over F2, stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        BitMatrix {
            nrows,
            ncols,
            rows: alloc::vec![BitVec::zeros(ncols); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::LengthMismatch {
                expected: ncols,
                got: r.len(),
            });
        }
        Ok(BitMatrix {
            nrows: rows.len(),
            ncols,
            rows,
        })
    }

    /// The matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(nrows: usize, columns: &[BitVec]) -> Result<Self> {
        let mut m = BitMatrix::zeros(nrows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != nrows {
                return Err(Error::LengthMismatch {
                    expected: nrows,
                    got: c.len(),
                });
            }
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b);
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> BitVec {
        let mut c = BitVec::zeros(self.nrows);
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.ncols, self.nrows);
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                got: v.len(),
            });
        }
        let mut out = BitVec::zeros(self.nrows);
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.ncols != other.nrows {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                got: other.nrows,
            });
        }
        let mut out = BitMatrix::zeros(self.nrows, other.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                out.rows[i].xor_from(&other.rows[j], 0);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::LengthMismatch {
                expected: self.nrows * self.ncols,
                got: other.nrows * other.ncols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.rows.iter_mut().zip(&other.rows) {
            a.xor_from(b, 0);
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.count_ones() == 1 && r.get(i))
    }

    pub fn rank(&self) -> usize {
        EchelonBasis::from_rows(self.ncols, self.rows.iter().cloned())
            .map(|b| b.rank())
            .unwrap_or(0)
    }

    pub fn is_invertible(&self) -> bool {
        self.nrows == self.ncols && self.rank() == self.nrows
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.nrows, self.ncols)?;
        for r in &self.rows {
            for j in 0..self.ncols {
                f.write_str(if r.get(j) { "1" } else { "." })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
