//! ℤ/4-valued quadratic refinements of symmetric ℤ/2 forms and their ℤ/8
//! Arf–Brown invariant, computed from the exact Gauss sum Σ i^{Q(x)}.
//!
//! ```text
//! quadform hyperbolic dim 2
//! B 0 1
//! B 1 0
//! q 0 0
//! ```

use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{BitMatrix, Gf2Solver, Qz};
use crate::simplicial::io::clean;

/// Default cap on n for the 2ⁿ-term Gauss sum.
pub const MAX_DIM: usize = 24;

/// An element a₀ + a₁ζ + a₂ζ² + a₃ζ³ of ℤ[ζ₈], ζ⁴ = −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Zeta8Integer(pub [BigInt; 4]);

impl Zeta8Integer {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        let mut z = Self::zero();
        z.0[0] = n.into();
        z
    }

    /// ζᵏ for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut z = Self::zero();
        z.0[k % 4] = if k < 4 { BigInt::one() } else { -BigInt::one() };
        z
    }

    /// √2 = ζ − ζ³.
    pub fn sqrt2() -> Self {
        Zeta8Integer([BigInt::zero(), BigInt::one(), BigInt::zero(), -BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Complex conjugation ζ ↦ ζ⁻¹ = −ζ³.
    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Zeta8Integer([a.clone(), -d, -c, -b])
    }

    /// |z|² = z·z̄, an element of ℤ[√2].
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Zeta8Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let sep = if first { "" } else { " " };
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => format!("z^{k}"),
                (_, false) => format!("{mag}z^{k}"),
            };
            let space = if first || sign.is_empty() { "" } else { " " };
            write!(f, "{sep}{sign}{space}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &Zeta8Integer {
    type Output = Zeta8Integer;
    fn add(self, o: &Zeta8Integer) -> Zeta8Integer {
        Zeta8Integer(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl Sub for &Zeta8Integer {
    type Output = Zeta8Integer;
    fn sub(self, o: &Zeta8Integer) -> Zeta8Integer {
        Zeta8Integer(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

impl Neg for &Zeta8Integer {
    type Output = Zeta8Integer;
    fn neg(self) -> Zeta8Integer {
        Zeta8Integer(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Mul for &Zeta8Integer {
    type Output = Zeta8Integer;
    fn mul(self, o: &Zeta8Integer) -> Zeta8Integer {
        let mut out = Zeta8Integer::zero();
        for i in 0..4 {
            if self.0[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                let t = &self.0[i] * &o.0[j];
                if i + j < 4 {
                    out.0[i + j] += t;
                } else {
                    out.0[i + j - 4] -= t;
                }
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Zeta8Integer {
            type Output = Zeta8Integer;
            fn $m(self, o: Zeta8Integer) -> Zeta8Integer {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

/// A quadratic refinement Q: (ℤ/2)ⁿ → ℤ/4 of a symmetric bilinear form B,
/// Q(x + y) = Q(x) + Q(y) + 2B(x, y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    n: usize,
    /// Row masks of B: bit j of `rows[i]` is B(eᵢ, eⱼ).
    rows: Vec<u64>,
    q: Vec<u8>,
}

/// Result of [`QuadraticForm::arf`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArfValue {
    /// The Gauss sum vanishes (Q is nonzero on the radical of B).
    Degenerate,
    /// k ∈ ℤ/8 with S = |S|·ζᵏ.
    Value(u8),
}

impl ArfValue {
    /// k/8 ∈ ℚ/ℤ.
    pub fn as_qz(self) -> Option<Qz> {
        match self {
            ArfValue::Value(k) => Some(Qz::new(k as i64, 8)),
            ArfValue::Degenerate => None,
        }
    }
}

impl fmt::Display for ArfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArfValue::Value(k) => write!(f, "{k} (= {} in Q/Z)", Qz::new(*k as i64, 8)),
            ArfValue::Degenerate => f.write_str("degenerate"),
        }
    }
}

impl QuadraticForm {
    /// `bilinear` must be a symmetric 0/1 matrix whose diagonal agrees with
    /// `q_basis` mod 2; `q_basis` takes values in 0..4.
    pub fn new(bilinear: &[Vec<u8>], q_basis: &[u8]) -> Result<Self> {
        let n = q_basis.len();
        if bilinear.len() != n || bilinear.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidForm(format!("B must be {n}x{n}")));
        }
        if n > 64 {
            return Err(Error::TooLarge { what: "quadratic form", dim: n, cap: 64 });
        }
        let mut rows = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                let b = bilinear[i][j];
                if b > 1 {
                    return Err(Error::InvalidForm(format!("B[{i}][{j}] = {b} is not 0 or 1")));
                }
                if b != bilinear[j][i] {
                    return Err(Error::InvalidForm(format!("B is not symmetric at ({i},{j})")));
                }
                rows[i] |= (b as u64) << j;
            }
            if q_basis[i] > 3 {
                return Err(Error::InvalidForm(format!("q[{i}] = {} is not in 0..3", q_basis[i])));
            }
            if q_basis[i] % 2 != bilinear[i][i] {
                return Err(Error::InvalidForm(format!("q[{i}] = {} disagrees with B[{i}][{i}] mod 2", q_basis[i])));
            }
        }
        Ok(QuadraticForm { n, rows, q: q_basis.to_vec() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn q_basis(&self) -> &[u8] {
        &self.q
    }

    pub fn bilinear(&self, i: usize, j: usize) -> u8 {
        (self.rows[i] >> j & 1) as u8
    }

    pub fn bilinear_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.bilinear(i, j)).collect()).collect()
    }

    /// Q(Σ vᵢeᵢ) = Σ vᵢqᵢ + 2 Σ_{i<j} vᵢvⱼB(eᵢ,eⱼ) mod 4.
    pub fn evaluate_q(&self, v: &[u8]) -> Result<u8> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a form of dimension {}",
                v.len(),
                self.n
            )));
        }
        let mask = v.iter().enumerate().fold(0u64, |m, (i, &b)| m | ((b as u64 & 1) << i));
        Ok(self.q_of_mask(mask))
    }

    fn q_of_mask(&self, mask: u64) -> u8 {
        let mut acc = 0u32;
        let mut seen = 0u64;
        for i in 0..self.n {
            if mask >> i & 1 == 1 {
                acc += self.q[i] as u32 + 2 * (self.rows[i] & seen).count_ones();
                seen |= 1 << i;
            }
        }
        (acc % 4) as u8
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, o: &QuadraticForm) -> QuadraticForm {
        let mut b = vec![vec![0u8; self.n + o.n]; self.n + o.n];
        for i in 0..self.n {
            for j in 0..self.n {
                b[i][j] = self.bilinear(i, j);
            }
        }
        for i in 0..o.n {
            for j in 0..o.n {
                b[self.n + i][self.n + j] = o.bilinear(i, j);
            }
        }
        let mut q = self.q.clone();
        q.extend_from_slice(&o.q);
        QuadraticForm::new(&b, &q).expect("block sum of valid forms")
    }

    /// Q ↦ −Q.
    pub fn negate(&self) -> QuadraticForm {
        QuadraticForm { n: self.n, rows: self.rows.clone(), q: self.q.iter().map(|&v| (4 - v) % 4).collect() }
    }

    /// A basis of the radical of B over ℤ/2.
    pub fn radical(&self) -> Vec<Vec<u8>> {
        Gf2Solver::new(&BitMatrix::from_u8(&self.bilinear_matrix()))
            .kernel()
            .iter()
            .map(|v| v.to_bools().into_iter().map(u8::from).collect())
            .collect()
    }

    pub fn radical_dim(&self) -> usize {
        self.radical().len()
    }

    /// Q restricted to the radical is additive, so a basis decides whether
    /// it vanishes there; S = 0 exactly when it does not.
    pub fn q_vanishes_on_radical(&self) -> bool {
        self.radical().iter().all(|v| self.evaluate_q(v) == Ok(0))
    }

    /// Counts of Q = 0, 1, 2, 3 over all 2ⁿ vectors, by Gray-code walk with
    /// Q(x ± eᵢ) = Q(x) ± qᵢ + 2B(x, eᵢ).
    fn value_counts(&self) -> Result<[u64; 4]> {
        let cap = crate::dim_cap(MAX_DIM).min(63);
        if self.n > cap {
            return Err(Error::TooLarge { what: "quadratic form", dim: self.n, cap });
        }
        let mut counts = [0u64; 4];
        let mut x = 0u64;
        let mut q = 0u32;
        counts[0] = 1;
        for step in 1u64..(1u64 << self.n) {
            let i = step.trailing_zeros() as usize;
            // x·eᵢ excludes i itself (qᵢ already accounts for B(eᵢ,eᵢ))
            let cross = (self.rows[i] & x & !(1 << i)).count_ones();
            let qi = if x >> i & 1 == 1 { 4 - self.q[i] as u32 } else { self.q[i] as u32 };
            q = (q + qi + 2 * cross) % 4;
            x ^= 1 << i;
            counts[q as usize] += 1;
        }
        Ok(counts)
    }

    /// S = Σ_x i^{Q(x)} in ℤ[ζ₈] (i = ζ²).
    pub fn gauss_sum(&self) -> Result<Zeta8Integer> {
        let c = self.value_counts()?;
        let re = BigInt::from(c[0]) - BigInt::from(c[2]);
        let im = BigInt::from(c[1]) - BigInt::from(c[3]);
        Ok(Zeta8Integer([re, BigInt::zero(), im, BigInt::zero()]))
    }

    /// The Arf–Brown invariant: S = 0 is reported as degenerate, otherwise
    /// S = 2^{m/2}ζᵏ exactly for m = n + dim rad B and k is returned.
    pub fn arf(&self) -> Result<ArfValue> {
        let s = self.gauss_sum()?;
        if s.is_zero() {
            return Ok(ArfValue::Degenerate);
        }
        let m = (self.n + self.radical_dim()) as u32;
        let scale = &Zeta8Integer::from_int(BigInt::one() << (m / 2)) * &Zeta8Integer::sqrt2().pow(m % 2);
        for k in 0..8 {
            if &scale * &Zeta8Integer::zeta_pow(k) == s {
                return Ok(ArfValue::Value(k as u8));
            }
        }
        Err(Error::InvalidForm(format!("Gauss sum {s} is not 2^({m}/2) times a root of unity")))
    }
}

/// Parses a `.qf` form file.
pub fn parse_form(text: &str) -> Result<(String, QuadraticForm)> {
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let mut header: Option<(String, usize)> = None;
    let mut b: Vec<Vec<u8>> = Vec::new();
    let mut q: Option<Vec<u8>> = None;
    let digits = |line: usize, toks: &[&str]| -> Result<Vec<u8>> {
        // accept "0 1 1" as well as "011"
        let toks: Vec<String> = if toks.len() == 1 && toks[0].len() > 1 {
            toks[0].chars().map(String::from).collect()
        } else {
            toks.iter().map(|s| s.to_string()).collect()
        };
        toks.iter().map(|t| t.parse::<u8>().map_err(|_| perr(line, format!("bad entry `{t}`")))).collect()
    };
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let l = clean(raw);
        if l.is_empty() {
            continue;
        }
        let w: Vec<&str> = l.split_whitespace().collect();
        match w[0] {
            "quadform" => {
                if w.len() != 4 || w[2] != "dim" {
                    return Err(perr(line, "malformed line: expected `quadform <name> dim <n>`".into()));
                }
                let n = w[3].parse().map_err(|_| perr(line, format!("bad dimension `{}`", w[3])))?;
                if header.replace((w[1].to_string(), n)).is_some() {
                    return Err(perr(line, "second `quadform` header".into()));
                }
            }
            "B" if header.is_some() => b.push(digits(line, &w[1..])?),
            "q" if header.is_some() => {
                if q.replace(digits(line, &w[1..])?).is_some() {
                    return Err(perr(line, "second `q` line".into()));
                }
            }
            _ if header.is_none() => return Err(perr(line, "malformed line: expected `quadform` header first".into())),
            other => return Err(perr(line, format!("malformed line: unknown keyword `{other}`"))),
        }
    }
    let (name, n) = header.ok_or_else(|| perr(1, "missing `quadform` header".into()))?;
    let q = q.unwrap_or_default();
    if b.len() != n || q.len() != n {
        return Err(Error::InvalidForm(format!("dim {n} but {} B rows and {} q values", b.len(), q.len())));
    }
    Ok((name, QuadraticForm::new(&b, &q)?))
}

pub fn write_form(name: &str, f: &QuadraticForm) -> String {
    let mut out = format!("quadform {name} dim {}\n", f.n);
    for row in f.bilinear_matrix() {
        let r: Vec<String> = row.iter().map(u8::to_string).collect();
        writeln!(out, "B {}", r.join(" ")).unwrap();
    }
    let q: Vec<String> = f.q.iter().map(u8::to_string).collect();
    writeln!(out, "q {}", q.join(" ")).unwrap();
    out.replace("q \n", "q\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank1(q: u8) -> QuadraticForm {
        QuadraticForm::new(&[vec![q % 2]], &[q]).unwrap()
    }

    fn hyperbolic(q: [u8; 2]) -> QuadraticForm {
        QuadraticForm::new(&[vec![0, 1], vec![1, 0]], &q).unwrap()
    }

    #[test]
    fn zeta_arithmetic() {
        let z = Zeta8Integer::zeta_pow(1);
        assert_eq!(z.pow(8), Zeta8Integer::from_int(1));
        assert_eq!(z.pow(4), Zeta8Integer::from_int(-1));
        assert_eq!(Zeta8Integer::sqrt2().pow(2), Zeta8Integer::from_int(2));
        assert_eq!(z.norm_sq(), Zeta8Integer::from_int(1));
    }

    #[test]
    fn small_values() {
        assert_eq!(QuadraticForm::new(&[], &[]).unwrap().arf().unwrap(), ArfValue::Value(0));
        assert_eq!(rank1(1).arf().unwrap().as_qz(), Some(Qz::new(1, 8)));
        assert_eq!(rank1(3).arf().unwrap().as_qz(), Some(Qz::new(7, 8)));
        assert_eq!(hyperbolic([0, 0]).arf().unwrap(), ArfValue::Value(0));
        assert_eq!(hyperbolic([2, 2]).arf().unwrap(), ArfValue::Value(4));
        // Q nonzero on the radical
        assert_eq!(rank1(2).arf().unwrap(), ArfValue::Degenerate);
        let eight = (1..8).fold(rank1(1), |f, _| f.direct_sum(&rank1(1)));
        assert_eq!(eight.arf().unwrap(), ArfValue::Value(0));
    }

    #[test]
    fn polarization() {
        let f = QuadraticForm::new(&[vec![1, 0], vec![0, 1]], &[1, 1]).unwrap();
        assert_eq!(f.evaluate_q(&[1, 1]).unwrap(), 2);
        let g = QuadraticForm::new(&[vec![1, 1], vec![1, 1]], &[1, 1]).unwrap();
        assert_eq!(g.evaluate_q(&[1, 1]).unwrap(), 0);
        assert_eq!(g.evaluate_q(&[0, 1]).unwrap(), 1);
        assert!(g.evaluate_q(&[1]).is_err());
    }

    #[test]
    fn rejects_bad_forms() {
        assert!(QuadraticForm::new(&[vec![0]], &[1]).is_err());
        assert!(QuadraticForm::new(&[vec![0, 1], vec![0, 0]], &[0, 0]).is_err());
        assert!(QuadraticForm::new(&[vec![0]], &[4]).is_err());
    }

    #[test]
    fn form_file_round_trip() {
        let f = hyperbolic([0, 2]).direct_sum(&rank1(3));
        let text = write_form("h", &f);
        assert_eq!(parse_form(&text).unwrap(), ("h".to_string(), f));
        let (_, g) = parse_form("quadform c dim 2\nB 01\nB 10\nq 0 0\n").unwrap();
        assert_eq!(g, hyperbolic([0, 0]));
        let (_, e) = parse_form("quadform e dim 0\n").unwrap();
        assert_eq!(e.dim(), 0);
        assert!(matches!(parse_form("B 0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn cap_is_enforced() {
        let n = 25;
        let b: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| (i == j) as u8).collect()).collect();
        let f = QuadraticForm::new(&b, &vec![1; n]).unwrap();
        if std::env::var("GX_MAX_DIM").is_err() {
            assert!(matches!(f.arf(), Err(Error::TooLarge { .. })));
        }
    }
}
