//! Bit-packed linear algebra over GF(2).

use std::fmt;

use crate::error::{Error, Result};

/// A GF(2) vector packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let m = 1u64 << (i & 63);
        if b {
            self.words[i >> 6] |= m;
        } else {
            self.words[i >> 6] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn xor_assign(&mut self, o: &BitVec) {
        debug_assert_eq!(self.len, o.len);
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the bitwise AND.
    pub fn dot(&self, o: &BitVec) -> bool {
        self.words.iter().zip(&o.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    fn first_one_from(&self, start: usize) -> Option<usize> {
        let mut wi = start >> 6;
        if wi >= self.words.len() {
            return None;
        }
        let mut w = self.words[wi] & (!0u64 << (start & 63));
        loop {
            if w != 0 {
                let i = wi * 64 + w.trailing_zeros() as usize;
                return (i < self.len).then_some(i);
            }
            wi += 1;
            if wi >= self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "[{s}]")
    }
}

/// Row-major GF(2) matrix with packed rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix { cols, rows: vec![BitVec::zeros(cols); rows] }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        BitMatrix { cols, rows }
    }

    /// Matrix whose columns are `cols` (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn from_u8(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows =
            rows.iter().map(|r| BitVec::from_bools(&r.iter().map(|&x| x & 1 == 1).collect::<Vec<_>>())).collect();
        BitMatrix { cols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b)
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols);
        let mut out = BitVec::zeros(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(x) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.set(j, i, true);
            }
        }
        t
    }
}

/// Reduced row echelon data for repeated solves of `A x = b` with fixed A.
#[derive(Clone, Debug)]
pub struct Gf2Solver {
    ncols: usize,
    nrows: usize,
    // reduced rows of A, and the row operations that produced them
    reduced: Vec<BitVec>,
    transform: Vec<BitVec>,
    pivots: Vec<usize>,
    kernel: Vec<BitVec>,
}

impl Gf2Solver {
    pub fn new(a: &BitMatrix) -> Self {
        let (m, n) = (a.nrows(), a.ncols());
        let mut reduced: Vec<BitVec> = a.rows.clone();
        let mut transform: Vec<BitVec> = (0..m).map(|i| BitVec::unit(m, i)).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut col = 0;
        while r < m && col < n {
            let Some(p) = (r..m).find(|&i| reduced[i].get(col)) else {
                // jump to the next column that has a one in an unused row
                col = (r..m).filter_map(|i| reduced[i].first_one_from(col + 1)).min().unwrap_or(n);
                continue;
            };
            reduced.swap(r, p);
            transform.swap(r, p);
            let (pr, pt) = (reduced[r].clone(), transform[r].clone());
            for i in 0..m {
                if i != r && reduced[i].get(col) {
                    reduced[i].xor_assign(&pr);
                    transform[i].xor_assign(&pt);
                }
            }
            pivots.push(col);
            r += 1;
            col += 1;
        }
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut kernel = Vec::new();
        for f in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::unit(n, f);
            for (row, &pc) in pivots.iter().enumerate() {
                if reduced[row].get(f) {
                    v.set(pc, true);
                }
            }
            kernel.push(v);
        }
        Gf2Solver { ncols: n, nrows: m, reduced, transform, pivots, kernel }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel(&self) -> &[BitVec] {
        &self.kernel
    }

    /// Some solution of `A x = b` (free variables zero), if consistent.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.nrows, "right-hand side length");
        for t in &self.transform[self.pivots.len()..] {
            if t.dot(b) {
                return None;
            }
        }
        let mut x = BitVec::zeros(self.ncols);
        for (row, &pc) in self.pivots.iter().enumerate() {
            if self.transform[row].dot(b) {
                x.set(pc, true);
            }
        }
        Some(x)
    }

    pub fn is_consistent(&self, b: &BitVec) -> bool {
        self.transform[self.pivots.len()..].iter().all(|t| !t.dot(b))
    }

    #[doc(hidden)]
    pub fn reduced_rows(&self) -> &[BitVec] {
        &self.reduced
    }
}

/// Result of [`solve_gf2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Solution {
    pub solution: Option<BitVec>,
    pub kernel: Vec<BitVec>,
}

/// Solves `A x = b` over GF(2): one solution if consistent, plus a kernel basis.
pub fn solve_gf2(a: &BitMatrix, b: &BitVec) -> Result<Gf2Solution> {
    if b.len() != a.nrows() {
        return Err(Error::DimensionMismatch(format!("{} rows but right-hand side of length {}", a.nrows(), b.len())));
    }
    let s = Gf2Solver::new(a);
    Ok(Gf2Solution { solution: s.solve(b), kernel: s.kernel.clone() })
}

/// Incrementally maintained span, used to pick complements (e.g. cohomology
/// representatives modulo coboundaries).
#[derive(Clone, Debug, Default)]
pub struct Gf2Span {
    rows: Vec<(usize, BitVec)>,
}

impl Gf2Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        for (p, r) in &self.rows {
            if v.get(*p) {
                v.xor_assign(r);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let r = self.reduce(v);
        let first = r.ones().next();
        match first {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_systems() {
        let a = BitMatrix::from_u8(&[vec![1, 1]]);
        let s = solve_gf2(&a, &BitVec::from_bools(&[true])).unwrap();
        assert_eq!(s.solution.unwrap().to_bools(), vec![true, false]);
        assert_eq!(s.kernel, vec![BitVec::from_bools(&[true, true])]);

        let z = BitMatrix::zeros(2, 3);
        let s = solve_gf2(&z, &BitVec::zeros(2)).unwrap();
        assert!(s.solution.unwrap().is_zero());
        assert_eq!(s.kernel.len(), 3);

        let a = BitMatrix::from_u8(&[vec![0]]);
        assert!(solve_gf2(&a, &BitVec::from_bools(&[true])).unwrap().solution.is_none());
        assert!(solve_gf2(&a, &BitVec::zeros(2)).is_err());
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.first_one_from(1), Some(64));
        assert_eq!(v.first_one_from(65), Some(129));
        assert_eq!(v.count_ones(), 3);
    }
}
