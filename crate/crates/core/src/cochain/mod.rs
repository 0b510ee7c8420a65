//! Cochains with coefficients in ℤ, ℤ/2, ℤ/4 and ℚ/ℤ, and the operations on
//! them: coboundary, cup and cup_i products, special lifts, coefficient maps,
//! pullback and integration.
//!
//! Storage is dense: one value per simplex of the cochain's degree, in the
//! complex's storage order.

mod io;
mod products;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::linalg::Qz;
use crate::simplicial::{OrderedComplex, SignedChain, SimplicialMap};

pub(crate) use io::parse_sections;
pub use io::{
    map_coefficients, parse_cochain, parse_cochains, write_cochain, AnyCochain, CoefficientMorphism, NamedCochain,
};
pub use products::{cup, cup1, cup2, pontrjagin_square_sq, special_lift};

/// Coefficient ring tags.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Z,
    Z2,
    Z4,
    Qz,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Z => "z",
            Ring::Z2 => "z2",
            Ring::Z4 => "z4",
            Ring::Qz => "qz",
        })
    }
}

impl FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Ring> {
        match s {
            "z" => Ok(Ring::Z),
            "z2" => Ok(Ring::Z2),
            "z4" => Ok(Ring::Z4),
            "qz" => Ok(Ring::Qz),
            _ => Err(Error::RingMismatch(format!("unknown ring `{s}` (expected z, z2, z4 or qz)"))),
        }
    }
}

/// An abelian group of cochain values that admits integer scaling.
pub trait Coefficient:
    Copy
    + Eq
    + Hash
    + Default
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
{
    const RING: Ring;

    fn is_zero(&self) -> bool {
        *self == Self::default()
    }

    fn times(self, k: i64) -> Self;

    fn times_big(self, k: &BigInt) -> Self;

    fn parse_value(s: &str) -> Result<Self>;
}

/// Coefficients that also multiply (everything except ℚ/ℤ).
pub trait RingCoefficient: Coefficient + Mul<Output = Self> {
    fn one() -> Self;
    fn from_i64(k: i64) -> Self;
}

impl Coefficient for i64 {
    const RING: Ring = Ring::Z;

    fn times(self, k: i64) -> Self {
        self * k
    }

    fn times_big(self, k: &BigInt) -> Self {
        self * k.to_i64().expect("integer coefficient overflow")
    }

    fn parse_value(s: &str) -> Result<Self> {
        s.parse().map_err(|_| Error::Invalid(format!("bad integer `{s}`")))
    }
}

impl RingCoefficient for i64 {
    fn one() -> Self {
        1
    }
    fn from_i64(k: i64) -> Self {
        k
    }
}

/// Integers modulo `N` (only 2 and 4 are used).
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Zmod<const N: u8>(u8);

pub type Z2 = Zmod<2>;
pub type Z4 = Zmod<4>;

impl<const N: u8> Zmod<N> {
    pub const ZERO: Self = Zmod(0);
    pub const ONE: Self = Zmod(1 % N);

    pub fn new(k: i64) -> Self {
        Zmod(k.rem_euclid(N as i64) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl<const N: u8> fmt::Display for Zmod<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const N: u8> fmt::Debug for Zmod<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {N}", self.0)
    }
}

impl<const N: u8> Add for Zmod<N> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Zmod((self.0 + o.0) % N)
    }
}

impl<const N: u8> Sub for Zmod<N> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Zmod((self.0 + N - o.0) % N)
    }
}

impl<const N: u8> Neg for Zmod<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Zmod((N - self.0) % N)
    }
}

impl<const N: u8> Mul for Zmod<N> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Zmod(self.0 * o.0 % N)
    }
}

impl<const N: u8> AddAssign for Zmod<N> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const N: u8> SubAssign for Zmod<N> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<const N: u8> Coefficient for Zmod<N> {
    const RING: Ring = if N == 2 { Ring::Z2 } else { Ring::Z4 };

    fn times(self, k: i64) -> Self {
        Self::new(self.0 as i64 * k.rem_euclid(N as i64))
    }

    fn times_big(self, k: &BigInt) -> Self {
        let k = k.mod_floor(&BigInt::from(N)).to_i64().unwrap();
        self.times(k)
    }

    fn parse_value(s: &str) -> Result<Self> {
        s.parse::<i64>().map(Self::new).map_err(|_| Error::Invalid(format!("bad residue `{s}`")))
    }
}

impl<const N: u8> RingCoefficient for Zmod<N> {
    fn one() -> Self {
        Self::ONE
    }
    fn from_i64(k: i64) -> Self {
        Self::new(k)
    }
}

impl Coefficient for Qz {
    const RING: Ring = Ring::Qz;

    fn is_zero(&self) -> bool {
        Qz::is_zero(*self)
    }

    fn times(self, k: i64) -> Self {
        Qz::times(self, k)
    }

    fn times_big(self, k: &BigInt) -> Self {
        Qz::times_big(self, k)
    }

    fn parse_value(s: &str) -> Result<Self> {
        s.parse()
    }
}

pub(crate) fn same_complex(a: &Arc<OrderedComplex>, b: &Arc<OrderedComplex>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A k-cochain: one value per k-simplex.
#[derive(Clone)]
pub struct Cochain<R> {
    complex: Arc<OrderedComplex>,
    degree: usize,
    values: Vec<R>,
}

impl<R: Coefficient> PartialEq for Cochain<R> {
    fn eq(&self, o: &Self) -> bool {
        self.degree == o.degree && self.values == o.values && same_complex(&self.complex, &o.complex)
    }
}

impl<R: Coefficient> Eq for Cochain<R> {}

impl<R: Coefficient> fmt::Debug for Cochain<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain<{}>[deg {}]{{", R::RING, self.degree)?;
        let mut first = true;
        for (s, v) in self.support() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{} = {v}", self.complex.label(s))?;
        }
        write!(f, "}}")
    }
}

impl<R: Coefficient> Cochain<R> {
    pub fn zero(x: &Arc<OrderedComplex>, degree: usize) -> Self {
        Cochain { complex: x.clone(), degree, values: vec![R::default(); x.count(degree)] }
    }

    pub fn from_values(x: &Arc<OrderedComplex>, degree: usize, values: Vec<R>) -> Result<Self> {
        if values.len() != x.count(degree) {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} simplices of dimension {degree}",
                values.len(),
                x.count(degree)
            )));
        }
        Ok(Cochain { complex: x.clone(), degree, values })
    }

    pub fn from_fn(x: &Arc<OrderedComplex>, degree: usize, mut f: impl FnMut(&[u32]) -> R) -> Self {
        let values = x.simplices(degree).iter().map(|s| f(s)).collect();
        Cochain { complex: x.clone(), degree, values }
    }

    /// The cochain equal to `value` on the listed simplices (given by
    /// vertex ids) and 0 elsewhere.
    pub fn from_id_support(x: &Arc<OrderedComplex>, degree: usize, support: &[&[&str]], value: R) -> Result<Self> {
        let mut c = Self::zero(x, degree);
        for ids in support {
            let s = x.simplex_from_ids(ids)?;
            if s.len() != degree + 1 {
                return Err(Error::DegreeMismatch { expected: degree, found: s.len() - 1 });
            }
            let i = x.index_of(&s).unwrap();
            c.values[i] = value;
        }
        Ok(c)
    }

    pub fn complex(&self) -> &Arc<OrderedComplex> {
        &self.complex
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> R {
        self.values[i]
    }

    pub fn set(&mut self, i: usize, v: R) {
        self.values[i] = v;
    }

    /// Value on the simplex with these vertex positions; `None` if it is not
    /// a simplex of the right degree.
    pub fn value_on(&self, s: &[u32]) -> Option<R> {
        if s.len() != self.degree + 1 {
            return None;
        }
        self.complex.index_of(s).map(|i| self.values[i])
    }

    /// Value on a simplex given by vertex ids.
    pub fn value_on_ids(&self, ids: &[&str]) -> Result<R> {
        let s = self.complex.simplex_from_ids(ids)?;
        self.value_on(&s).ok_or(Error::DegreeMismatch { expected: self.degree, found: s.len() - 1 })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Nonzero entries in storage order.
    pub fn support(&self) -> impl Iterator<Item = (&[u32], R)> + '_ {
        let simplices = self.complex.simplices(self.degree);
        self.values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(i, &v)| (simplices[i].as_slice(), v))
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(R) -> S) -> Cochain<S> {
        Cochain {
            complex: self.complex.clone(),
            degree: self.degree,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        self.map(|v| v.times(k))
    }

    /// The coboundary (dc)(σ) = Σᵢ (−1)ⁱ c(∂ᵢσ); zero-length above the top dimension.
    pub fn d(&self) -> Self {
        let k = self.degree + 1;
        let n = self.complex.count(k);
        let mut values = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = R::default();
            for (i, &f) in self.complex.faces(k, j).iter().enumerate() {
                let v = self.values[f];
                if i % 2 == 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
            values.push(acc);
        }
        Cochain { complex: self.complex.clone(), degree: k, values }
    }

    pub fn is_cocycle(&self) -> bool {
        self.d().is_zero()
    }

    fn check_compatible(&self, o: &Self) -> Result<()> {
        if !same_complex(&self.complex, &o.complex) {
            return Err(Error::ComplexMismatch);
        }
        if self.degree != o.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: o.degree });
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_compatible(o)?;
        Ok(self.zip(o, |a, b| a + b))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check_compatible(o)?;
        Ok(self.zip(o, |a, b| a - b))
    }

    fn zip(&self, o: &Self, f: impl Fn(R, R) -> R) -> Self {
        let values = self.values.iter().zip(&o.values).map(|(&a, &b)| f(a, b)).collect();
        Cochain { complex: self.complex.clone(), degree: self.degree, values }
    }

    /// Pullback along an ordered simplicial map; degenerate images give 0.
    pub fn pullback(&self, f: &SimplicialMap) -> Result<Self> {
        if !same_complex(&self.complex, f.target()) {
            return Err(Error::ComplexMismatch);
        }
        let target = f.target();
        if self.degree > target.top_dim() {
            return Err(Error::DegreeOutOfRange { degree: self.degree, top_dim: target.top_dim() });
        }
        Ok(Cochain::from_fn(f.source(), self.degree, |s| match f.image(s) {
            Some(t) => self.values[target.index_of(&t).expect("simplicial map image")],
            None => R::default(),
        }))
    }

    /// Σ coefficient · c(σ) over the terms of `z`.
    pub fn integrate(&self, z: &SignedChain) -> Result<R> {
        if z.degree != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: z.degree });
        }
        let mut acc = R::default();
        for (s, k) in &z.terms {
            let i = self.complex.index_of(s).filter(|_| s.len() == self.degree + 1);
            let i = i.ok_or_else(|| Error::UnknownSimplex(self.complex.label(s)))?;
            acc += self.values[i].times_big(k);
        }
        Ok(acc)
    }
}

/// Free-function form of [`Cochain::d`].
pub fn d<R: Coefficient>(c: &Cochain<R>) -> Cochain<R> {
    c.d()
}

/// Free-function form of [`Cochain::pullback`].
pub fn pullback_cochain<R: Coefficient>(f: &SimplicialMap, c: &Cochain<R>) -> Result<Cochain<R>> {
    c.pullback(f)
}

/// Free-function form of [`Cochain::integrate`].
pub fn integrate<R: Coefficient>(c: &Cochain<R>, z: &SignedChain) -> Result<R> {
    c.integrate(z)
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl<R: Coefficient> $tr<&Cochain<R>> for &Cochain<R> {
            type Output = Cochain<R>;
            /// Panics if the operands live on different complexes or degrees.
            fn $m(self, o: &Cochain<R>) -> Cochain<R> {
                self.check_compatible(o).expect("incompatible cochains");
                self.zip(o, |a, b| a $op b)
            }
        }
        impl<R: Coefficient> $tr<Cochain<R>> for Cochain<R> {
            type Output = Cochain<R>;
            fn $m(self, o: Cochain<R>) -> Cochain<R> {
                &self $op &o
            }
        }
        impl<R: Coefficient> $tr<&Cochain<R>> for Cochain<R> {
            type Output = Cochain<R>;
            fn $m(self, o: &Cochain<R>) -> Cochain<R> {
                &self $op o
            }
        }
        impl<R: Coefficient> $tr<Cochain<R>> for &Cochain<R> {
            type Output = Cochain<R>;
            fn $m(self, o: Cochain<R>) -> Cochain<R> {
                self $op &o
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);

impl<R: Coefficient> Neg for &Cochain<R> {
    type Output = Cochain<R>;
    fn neg(self) -> Cochain<R> {
        self.map(|v| -v)
    }
}

impl<R: Coefficient> Neg for Cochain<R> {
    type Output = Cochain<R>;
    fn neg(self) -> Cochain<R> {
        -&self
    }
}

// Coefficient morphisms.

impl Cochain<i64> {
    pub fn mod2(&self) -> Cochain<Z2> {
        self.map(Z2::new)
    }

    pub fn mod4(&self) -> Cochain<Z4> {
        self.map(Z4::new)
    }

    /// The map ℤ → ℚ/ℤ, 1 ↦ 1/n.
    pub fn nth(&self, n: i64) -> Cochain<Qz> {
        self.map(|v| Qz::new(v, n))
    }
}

impl Cochain<Z2> {
    /// The special lift: values 0 and 1.
    pub fn lift(&self) -> Cochain<i64> {
        self.map(|v| v.value() as i64)
    }

    /// ℤ/2 → ℤ/4, 1 ↦ 2.
    pub fn double(&self) -> Cochain<Z4> {
        self.map(|v| Z4::new(2 * v.value() as i64))
    }

    /// ℤ/2 → ℚ/ℤ, 1 ↦ 1/2.
    pub fn half(&self) -> Cochain<Qz> {
        self.map(|v| Qz::new(v.value() as i64, 2))
    }
}

impl Cochain<Z4> {
    /// ℤ/4 → ℚ/ℤ, 1 ↦ 1/4.
    pub fn quarter(&self) -> Cochain<Qz> {
        self.map(|v| Qz::new(v.value() as i64, 4))
    }

    pub fn lift(&self) -> Cochain<i64> {
        self.map(|v| v.value() as i64)
    }
}

impl Cochain<Qz> {
    /// Every value has denominator ≤ 2.
    pub fn is_half_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_half_integral())
    }
}
