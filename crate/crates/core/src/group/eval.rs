//! The combinatorial evaluation pairing on G¹ and the spin quadratic
//! function check.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::context::{bits, from_bits};
use super::{big_d, Triple};
use crate::cochain::{same_complex, Cochain, Z2};
use crate::error::{Error, Result};
use crate::linalg::{BitMatrix, BitVec, Gf2Solver, Qz};
use crate::simplicial::{OrderedComplex, SignedChain};

/// arf + spin + ∫_M [w + ½(p∪₁dt + t·dt)].
///
/// `t` must make p + dt the pullback of a reduced 2-cocycle on S² (not
/// checked); `spin_term` = ½[Spin] ∈ {0, ½} and `arf_term` are external
/// geometric inputs. `arf_term` may only be omitted when a = 0.
pub fn evaluate_g1(g: &Triple, m: &SignedChain, t: &Cochain<Z2>, spin_term: Qz, arf_term: Option<Qz>) -> Result<Qz> {
    if !g.a.is_zero() && arf_term.is_none() {
        return Err(Error::ArfTermRequired);
    }
    if t.degree() != 1 {
        return Err(Error::DegreeMismatch { expected: 1, found: t.degree() });
    }
    if !same_complex(t.complex(), g.complex()) {
        return Err(Error::ComplexMismatch);
    }
    if !(spin_term.is_zero() || spin_term == Qz::HALF) {
        return Err(Error::Invalid(format!("spin term must be 0 or 1/2, got {spin_term}")));
    }
    if !big_d(g).is_zero() {
        return Err(Error::NotDCocycle);
    }
    let dt = t.d();
    let integrand = &g.w + (g.p.cup1(&dt) + t.cup(&dt)).half();
    Ok(arf_term.unwrap_or(Qz::ZERO) + spin_term + integrand.integrate(m)?)
}

/// A basis of Z²(X; ℤ/2), the domain on which spin quadratic functions are
/// specified.
pub fn spin_quadratic_basis(x: &Arc<OrderedComplex>) -> Vec<Cochain<Z2>> {
    Gf2Solver::new(&x.coboundary_matrix_gf2(2)).kernel().iter().map(|v| from_bits(x, 2, v)).collect()
}

struct Extension<'a> {
    basis: &'a [Cochain<Z2>],
    q: &'a [Qz],
    coords: Gf2Solver,
    m: &'a SignedChain,
}

impl Extension<'_> {
    fn b(&self, x: &Cochain<Z2>, y: &Cochain<Z2>) -> Result<Qz> {
        x.cup1(y).half().integrate(self.m)
    }

    /// Q on an arbitrary cocycle, built up basis vector by basis vector with
    /// Q(s + z) = Q(s) + Q(z) + B(s, z).
    fn eval(&self, p: &Cochain<Z2>) -> Result<Qz> {
        let c = self.coords.solve(&bits(p)).ok_or(Error::NotCocycle("p"))?;
        let mut acc = Qz::ZERO;
        let mut s = Cochain::zero(p.complex(), 2);
        for i in c.ones() {
            acc = acc + self.q[i] + self.b(&s, &self.basis[i])?;
            s = s + &self.basis[i];
        }
        Ok(acc)
    }
}

/// Checks that `q`, given on [`spin_quadratic_basis`], extends to a function
/// with Q(dt) = ½∫t dt and Q(p+q) = Q(p) + Q(q) + ½∫p∪₁q.
///
/// The coboundary rule is tested on d of every edge indicator, the polarization
/// rule on the diagonal and on 32 pseudo-random pairs (fixed seed).
pub fn validate_spin_quadratic(x: &Arc<OrderedComplex>, m: &SignedChain, q: &[Qz]) -> Result<bool> {
    let basis = spin_quadratic_basis(x);
    if q.len() != basis.len() {
        return Err(Error::DimensionMismatch(format!("{} values for a basis of size {}", q.len(), basis.len())));
    }
    if m.degree != 3 {
        return Err(Error::DegreeMismatch { expected: 3, found: m.degree });
    }
    let cols: Vec<BitVec> = basis.iter().map(bits).collect();
    let ext = Extension { basis: &basis, q, coords: Gf2Solver::new(&BitMatrix::from_columns(x.count(2), &cols)), m };

    for j in 0..x.count(1) {
        let mut e = Cochain::<Z2>::zero(x, 1);
        e.set(j, Z2::ONE);
        let de = e.d();
        if ext.eval(&de)? != e.cup(&de).half().integrate(m)? {
            return Ok(false);
        }
    }
    for (z, &qz) in basis.iter().zip(q) {
        if qz.times(2) + ext.b(z, z)? != Qz::ZERO {
            return Ok(false);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut random =
        || basis.iter().fold(Cochain::<Z2>::zero(x, 2), |acc, z| if rng.gen_bool(0.5) { acc + z } else { acc });
    for _ in 0..32 {
        let (p, r) = (random(), random());
        if ext.eval(&(&p + &r))? != ext.eval(&p)? + ext.eval(&r)? + ext.b(&p, &r)? {
            return Ok(false);
        }
    }
    Ok(true)
}
