//! Smith normal form and the solvers built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gf2::{BitMatrix, BitVec, Gf2Solver};
use super::{IntMatrix, Qz};
use crate::error::{Error, Result};

/// `A = U·S·V` with U, V unimodular and S diagonal with s₁ | s₂ | … .
/// The inverses are kept too, since every solver needs them.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    rank: usize,
}

impl SnfDecomposition {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Diagonal entries s₁, …, s_min(m,n).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.nrows().min(self.s.ncols())).map(|i| self.s.get(i, i).clone()).collect()
    }

    /// Nonzero diagonal entries different from 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect()
    }
}

struct Work {
    m: usize,
    n: usize,
    b: Vec<Vec<BigInt>>,
    l: Vec<Vec<BigInt>>,
    linv: Vec<Vec<BigInt>>,
    r: Vec<Vec<BigInt>>,
    rinv: Vec<Vec<BigInt>>,
}

fn ident(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

fn axpy(dst: &mut [BigInt], src: &[BigInt], c: &BigInt) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

impl Work {
    // Invariant: l · A · r = b, linv = l⁻¹, rinv = r⁻¹.

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.b.swap(i, j);
        self.l.swap(i, j);
        for row in &mut self.linv {
            row.swap(i, j);
        }
    }

    /// row_i += c · row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        let (src_b, src_l) = (self.b[j].clone(), self.l[j].clone());
        axpy(&mut self.b[i], &src_b, c);
        axpy(&mut self.l[i], &src_l, c);
        for row in &mut self.linv {
            if !row[i].is_zero() {
                let d = c * &row[i];
                row[j] -= d;
            }
        }
    }

    fn neg_row(&mut self, i: usize) {
        for x in self.b[i].iter_mut().chain(self.l[i].iter_mut()) {
            *x = -std::mem::take(x);
        }
        for row in &mut self.linv {
            row[i] = -std::mem::take(&mut row[i]);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.b.iter_mut().chain(self.r.iter_mut()) {
            row.swap(i, j);
        }
        self.rinv.swap(i, j);
    }

    /// col_i += c · col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for row in self.b.iter_mut().chain(self.r.iter_mut()) {
            if !row[j].is_zero() {
                let d = c * &row[j];
                row[i] += d;
            }
        }
        let src = self.rinv[i].clone();
        let neg = -c;
        axpy(&mut self.rinv[j], &src, &neg);
    }

    fn find_min(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let e = &self.b[i][j];
                if e.is_zero() {
                    continue;
                }
                if e.magnitude().is_one() {
                    return Some((i, j));
                }
                match best {
                    Some((bi, bj)) if self.b[bi][bj].magnitude() <= e.magnitude() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

fn to_matrix(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows.len(), cols);
    for (i, r) in rows.into_iter().enumerate() {
        for (j, v) in r.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    m
}

/// Smith normal form with the smallest-magnitude pivot rule.
pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let (m, n) = (a.nrows(), a.ncols());
    let mut w = Work {
        m,
        n,
        b: (0..m).map(|i| a.row(i).to_vec()).collect(),
        l: ident(m),
        linv: ident(m),
        r: ident(n),
        rinv: ident(n),
    };
    let k = m.min(n);
    let mut t = 0;
    while t < k {
        let Some((pi, pj)) = w.find_min(t) else { break };
        if pi != t {
            w.swap_rows(t, pi);
        }
        if pj != t {
            w.swap_cols(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if w.b[i][t].is_zero() {
                    continue;
                }
                let q = &w.b[i][t] / &w.b[t][t];
                if !q.is_zero() {
                    w.add_row(i, t, &-q);
                }
                dirty |= !w.b[i][t].is_zero();
            }
            if dirty {
                let i = (t + 1..m)
                    .filter(|&i| !w.b[i][t].is_zero())
                    .min_by(|&x, &y| w.b[x][t].magnitude().cmp(w.b[y][t].magnitude()))
                    .unwrap();
                w.swap_rows(t, i);
                continue;
            }
            for j in t + 1..n {
                if w.b[t][j].is_zero() {
                    continue;
                }
                let q = &w.b[t][j] / &w.b[t][t];
                if !q.is_zero() {
                    w.add_col(j, t, &-q);
                }
                dirty |= !w.b[t][j].is_zero();
            }
            if dirty {
                let j = (t + 1..n)
                    .filter(|&j| !w.b[t][j].is_zero())
                    .min_by(|&x, &y| w.b[t][x].magnitude().cmp(w.b[t][y].magnitude()))
                    .unwrap();
                w.swap_cols(t, j);
                continue;
            }
            if !w.b[t][t].magnitude().is_one() {
                let p = w.b[t][t].clone();
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.b[i][j].is_multiple_of(&p)));
                if let Some(i) = bad {
                    w.add_row(t, i, &BigInt::one());
                    continue;
                }
            }
            break;
        }
        if w.b[t][t].is_negative() {
            w.neg_row(t);
        }
        t += 1;
    }
    let rank = t;
    SnfDecomposition {
        s: to_matrix(w.b, n),
        u: to_matrix(w.linv, m),
        u_inv: to_matrix(w.l, m),
        v: to_matrix(w.rinv, n),
        v_inv: to_matrix(w.r, n),
        rank,
    }
}

/// x with A·x ≡ b (mod n), entries in [0, n); `None` if no solution exists.
pub fn solve_mod_n(a: &IntMatrix, b: &[BigInt], n: i64) -> Option<Vec<BigInt>> {
    assert!(n >= 2, "modulus must be at least 2");
    assert_eq!(b.len(), a.nrows(), "right-hand side length");
    let snf = smith_normal_form(a);
    solve_mod_n_with(&snf, b, n)
}

pub(crate) fn solve_mod_n_with(snf: &SnfDecomposition, b: &[BigInt], n: i64) -> Option<Vec<BigInt>> {
    let nn = BigInt::from(n);
    let c = snf.u_inv.mul_vec(b);
    let cols = snf.v.nrows();
    let mut y = vec![BigInt::zero(); cols];
    for (i, ci) in c.iter().enumerate() {
        let ci = ci.mod_floor(&nn);
        if i < snf.rank {
            let s = snf.s.get(i, i).mod_floor(&nn);
            let g = s.gcd(&nn);
            if !ci.is_multiple_of(&g) {
                return None;
            }
            let m = &nn / &g;
            if m.is_one() {
                continue;
            }
            let inv = (&s / &g).extended_gcd(&m).x.mod_floor(&m);
            y[i] = ((&ci / &g) * inv).mod_floor(&m);
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v_inv.mul_vec(&y).into_iter().map(|x| x.mod_floor(&nn)).collect())
}

/// Integer solution of A·x = b, if any.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    solve_integer_with(&snf, b)
}

pub(crate) fn solve_integer_with(snf: &SnfDecomposition, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let c = snf.u_inv.mul_vec(b);
    let mut y = vec![BigInt::zero(); snf.v.nrows()];
    for (i, ci) in c.iter().enumerate() {
        if i < snf.rank {
            let (q, r) = ci.div_rem(snf.s.get(i, i));
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v_inv.mul_vec(&y))
}

/// Image of an integer matrix acting on ℚ/ℤ-vectors, with the SNF cached
/// for repeated membership queries.
#[derive(Clone, Debug)]
pub struct QzImage {
    snf: SnfDecomposition,
    rows: usize,
}

fn lift(b: &[Qz]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for x in b {
        den = den.lcm(&BigInt::from(x.den()));
    }
    let nums = b.iter().map(|x| BigInt::from(x.num()) * (&den / BigInt::from(x.den()))).collect();
    (nums, den)
}

impl QzImage {
    pub fn new(a: &IntMatrix) -> Self {
        QzImage { snf: smith_normal_form(a), rows: a.nrows() }
    }

    pub fn snf(&self) -> &SnfDecomposition {
        &self.snf
    }

    /// A preimage x with A·x ≡ b (mod 1), or `None` when b is not in the image.
    pub fn preimage(&self, b: &[Qz]) -> Result<Option<Vec<Qz>>> {
        assert_eq!(b.len(), self.rows, "vector length");
        let (bn, den) = lift(b);
        let c = self.snf.u_inv.mul_vec(&bn);
        let r = self.snf.rank;
        if c[r..].iter().any(|ci| !ci.is_multiple_of(&den)) {
            return Ok(None);
        }
        let mut e = den.clone();
        for i in 0..r {
            e = e.lcm(&(&den * self.snf.s.get(i, i)));
        }
        let n = self.snf.v.nrows();
        let scaled: Vec<BigInt> = (0..r).map(|i| &c[i] * (&e / (&den * self.snf.s.get(i, i)))).collect();
        let mut x = Vec::with_capacity(n);
        for j in 0..n {
            let mut num = BigInt::zero();
            for (i, si) in scaled.iter().enumerate() {
                let v = self.snf.v_inv.get(j, i);
                if !v.is_zero() && !si.is_zero() {
                    num += v * si;
                }
            }
            x.push(Qz::from_big(&num, &e)?);
        }
        Ok(Some(x))
    }

    pub fn contains(&self, b: &[Qz]) -> bool {
        let (bn, den) = lift(b);
        let c = self.snf.u_inv.mul_vec(&bn);
        c[self.snf.rank..].iter().all(|ci| ci.is_multiple_of(&den))
    }

    /// Decides b ∈ A·(ℚ/ℤ)ⁿ + span_ℤ(gens) where every generator satisfies 2g ≡ 0.
    ///
    /// Modulo the rational column space of A the question becomes one about
    /// the lattice ℤ^k + Σ ℤ·π(ĝ) ⊂ ½ℤ^k; after scaling by 2 that is a
    /// GF(2) span membership.
    pub fn contains_affine(&self, b: &[Qz], gens: &[Vec<Qz>]) -> Result<bool> {
        for g in gens {
            if g.len() != self.rows {
                return Err(Error::DimensionMismatch("generator length".into()));
            }
            if let Some(x) = g.iter().find(|x| !x.is_half_integral()) {
                return Err(Error::Invalid(format!("generator entry {x} is not half-integral")));
            }
        }
        let r = self.snf.rank;
        let k = self.rows - r;
        let (bn, den) = lift(b);
        let c = self.snf.u_inv.mul_vec(&bn);
        let two = BigInt::from(2);
        // π(b̂) must be half-integral
        let mut target = BitVec::zeros(k);
        for (i, ci) in c[r..].iter().enumerate() {
            let twice = ci * &two;
            if !twice.is_multiple_of(&den) {
                return Ok(false);
            }
            target.set(i, (twice / &den).is_odd());
        }
        if target.is_zero() {
            return Ok(true);
        }
        let mut cols = Vec::with_capacity(gens.len());
        for g in gens {
            let doubled: Vec<BigInt> = g.iter().map(|x| BigInt::from(if x.is_zero() { 0 } else { 1 })).collect();
            let pg = self.snf.u_inv.mul_vec(&doubled);
            let mut v = BitVec::zeros(k);
            for (i, x) in pg[r..].iter().enumerate() {
                v.set(i, x.is_odd());
            }
            cols.push(v);
        }
        let m = BitMatrix::from_columns(k, &cols);
        Ok(Gf2Solver::new(&m).is_consistent(&target))
    }
}

/// Rational preimage of b under A acting on ℚ/ℤ-vectors, if b is in the image.
pub fn image_membership_qz(a: &IntMatrix, b: &[Qz]) -> Option<Vec<Qz>> {
    QzImage::new(a).preimage(b).expect("Q/Z denominator overflow")
}

/// Decides b ∈ A·(ℚ/ℤ)ⁿ + span_ℤ(gens); every generator must satisfy 2g ≡ 0.
pub fn affine_coboundary_membership(a: &IntMatrix, b: &[Qz], gens: &[Vec<Qz>]) -> Result<bool> {
    QzImage::new(a).contains_affine(b, gens)
}
