//! The group **C**(X) of triples (w, p, a), the differentials **D**, **D′**,
//! and the decision procedures for G(X) = Ker **D** / Im **D′**.
//!
//! Products are computed exactly on cochains; equality in G is decided by
//! [`GroupContext`], which caches the linear algebra of one complex.

mod context;
mod eval;
mod io;

use std::sync::Arc;

use crate::cochain::{same_complex, Cochain, Z2};
use crate::error::{Error, Result};
use crate::linalg::Qz;
use crate::simplicial::{OrderedComplex, SimplicialMap};

pub use context::{
    cbar_equal, filtration_class, g_equal, is_identity, lift_to_g1, lifts_to_order2, lifts_to_order4, order, sh2_basis,
    structure_report, ClassCoordinates, FiltrationClass, FiltrationLevel, GStructureReport, GroupContext,
    DEFAULT_ORDER_BOUND,
};
pub use eval::{evaluate_g1, spin_quadratic_basis, validate_spin_quadratic};
pub use io::{parse_triple, write_triple};

/// An element (w, p, a) of **C**(X): w ∈ C³(ℚ/ℤ), p ∈ Z²(ℤ/2), a ∈ Z¹(ℤ/2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub w: Cochain<Qz>,
    pub p: Cochain<Z2>,
    pub a: Cochain<Z2>,
}

impl Triple {
    /// Checks degrees, that all three live on one complex, and dp = da = 0.
    pub fn new(w: Cochain<Qz>, p: Cochain<Z2>, a: Cochain<Z2>) -> Result<Self> {
        for (c, k) in [(w.degree(), 3), (p.degree(), 2), (a.degree(), 1)] {
            if c != k {
                return Err(Error::DegreeMismatch { expected: k, found: c });
            }
        }
        if !same_complex(w.complex(), p.complex()) || !same_complex(w.complex(), a.complex()) {
            return Err(Error::ComplexMismatch);
        }
        if !p.is_cocycle() {
            return Err(Error::NotCocycle("p"));
        }
        if !a.is_cocycle() {
            return Err(Error::NotCocycle("a"));
        }
        Ok(Triple { w, p, a })
    }

    pub fn identity(x: &Arc<OrderedComplex>) -> Self {
        Triple { w: Cochain::zero(x, 3), p: Cochain::zero(x, 2), a: Cochain::zero(x, 1) }
    }

    /// (w, 0, 0).
    pub fn from_w(w: Cochain<Qz>) -> Self {
        let x = w.complex().clone();
        Triple { w, p: Cochain::zero(&x, 2), a: Cochain::zero(&x, 1) }
    }

    /// (0, 0, a).
    pub fn from_a(a: Cochain<Z2>) -> Self {
        let x = a.complex().clone();
        Triple { w: Cochain::zero(&x, 3), p: Cochain::zero(&x, 2), a }
    }

    pub fn complex(&self) -> &Arc<OrderedComplex> {
        self.w.complex()
    }

    pub fn is_trivial(&self) -> bool {
        self.w.is_zero() && self.p.is_zero() && self.a.is_zero()
    }
}

/// A·B·B over ℤ from special lifts, mapped by 1 ↦ 1/4.
fn quarter_ab2(a: &Cochain<Z2>, b: &Cochain<Z2>) -> Cochain<Qz> {
    let (la, lb) = (a.lift(), b.lift());
    la.cup(&lb.cup(&lb)).nth(4)
}

/// A³ over ℤ from the special lift.
fn a_cubed(a: &Cochain<Z2>) -> Cochain<i64> {
    let l = a.lift();
    l.cup(&l).cup(&l)
}

/// (w,p,a)(v,q,b) = (u, p+q+ab, a+b) with
/// u = w + v + ½[p∪₁q + (p+q)∪₁(ab) + a(a∪₁b)b] + ¼AB².
pub fn product(g: &Triple, h: &Triple) -> Result<Triple> {
    if !same_complex(g.complex(), h.complex()) {
        return Err(Error::ComplexMismatch);
    }
    let (a, b) = (&g.a, &h.a);
    let ab = a.cup(b);
    let pq = &g.p + &h.p;
    let halves = g.p.cup1(&h.p) + pq.cup1(&ab) + a.cup(&a.cup1(b)).cup(b);
    let w = &g.w + &h.w + halves.half() + quarter_ab2(a, b);
    Ok(Triple { w, p: pq + ab, a: a + b })
}

/// (w,p,a)⁻¹ = (−w + ½p∪₁a² + ¼A³, p + a², a).
pub fn inverse(g: &Triple) -> Triple {
    let a2 = g.a.sq();
    let w = -&g.w + g.p.cup1(&a2).half() + a_cubed(&g.a).nth(4);
    Triple { w, p: &g.p + &a2, a: g.a.clone() }
}

/// gⁿ as the left-nested product ((g·g)·g)⋯.
pub fn power(g: &Triple, n: u32) -> Triple {
    let mut acc = Triple::identity(g.complex());
    for _ in 0..n {
        acc = product(&acc, g).expect("same complex");
    }
    acc
}

/// g₁g₂g₁⁻¹g₂⁻¹.
pub fn commutator(g1: &Triple, g2: &Triple) -> Result<Triple> {
    let c = product(&product(g1, g2)?, &inverse(g1))?;
    product(&c, &inverse(g2))
}

/// **D**(w,p,a) = dw + ½p².
pub fn big_d(g: &Triple) -> Cochain<Qz> {
    g.w.d() + g.p.sq().half()
}

/// **D′**(t,x) = (½t dt, dt, dx). Panics unless deg t = 1 and deg x = 0.
pub fn big_d_prime(t: &Cochain<Z2>, x: &Cochain<Z2>) -> Triple {
    assert_eq!((t.degree(), x.degree()), (1, 0), "D' takes a 1-cochain and a 0-cochain");
    let dt = t.d();
    Triple { w: t.cup(&dt).half(), p: dt, a: x.d() }
}

/// The product on **C′**: (t,x)(s,y) = (t + s + x·dy, x + y).
pub fn cprime_product(
    tx: (&Cochain<Z2>, &Cochain<Z2>),
    sy: (&Cochain<Z2>, &Cochain<Z2>),
) -> (Cochain<Z2>, Cochain<Z2>) {
    let ((t, x), (s, y)) = (tx, sy);
    (t + s + x.cup(&y.d()), x + y)
}

fn require_cocycle(c: &Cochain<Z2>, what: &'static str) -> Result<()> {
    if c.degree() != 1 {
        return Err(Error::DegreeMismatch { expected: 1, found: c.degree() });
    }
    if !c.is_cocycle() {
        return Err(Error::NotCocycle(what));
    }
    Ok(())
}

/// z(a,b) = (½a(a∪₁b)b + ¼AB², ab, 0), the extension cocycle of G¹ → G → H¹.
pub fn extension_cocycle(a: &Cochain<Z2>, b: &Cochain<Z2>) -> Result<Triple> {
    require_cocycle(a, "a")?;
    require_cocycle(b, "b")?;
    if !same_complex(a.complex(), b.complex()) {
        return Err(Error::ComplexMismatch);
    }
    let w = a.cup(&a.cup1(b)).cup(b).half() + quarter_ab2(a, b);
    Ok(Triple { w, p: a.cup(b), a: Cochain::zero(a.complex(), 1) })
}

/// χ_b(g) = g · (½pb + ½a(a∪₁b)b − ¼AB², ab, 0): the spin-structure change by b.
pub fn chi(b: &Cochain<Z2>, g: &Triple) -> Result<Triple> {
    require_cocycle(b, "b")?;
    if !same_complex(b.complex(), g.complex()) {
        return Err(Error::ComplexMismatch);
    }
    let a = &g.a;
    let w = (g.p.cup(b) + a.cup(&a.cup1(b)).cup(b)).half() - quarter_ab2(a, b);
    let corr = Triple { w, p: a.cup(b), a: Cochain::zero(a.complex(), 1) };
    product(g, &corr)
}

/// (w − A³/8, p, a): the form solving dw′ + ½p² + ¼𝒫(a²) = 0.
pub fn kapustin_form(g: &Triple) -> Triple {
    Triple { w: &g.w - a_cubed(&g.a).nth(8), p: g.p.clone(), a: g.a.clone() }
}

/// dw′ + ½p² + ¼(A⁴ mod 4) for a triple in Kapustin form.
pub fn kapustin_defect(k: &Triple) -> Cochain<Qz> {
    let l = k.a.lift();
    let a2 = l.cup(&l);
    k.w.d() + k.p.sq().half() + a2.cup(&a2).nth(4)
}

/// Componentwise pullback along an ordered simplicial map.
pub fn pullback_triple(f: &SimplicialMap, g: &Triple) -> Result<Triple> {
    Ok(Triple { w: pull(f, &g.w)?, p: pull(f, &g.p)?, a: pull(f, &g.a)? })
}

// Degrees above the target's top dimension still pull back (to zero).
fn pull<R: crate::cochain::Coefficient>(f: &SimplicialMap, c: &Cochain<R>) -> Result<Cochain<R>> {
    if c.degree() > f.target().top_dim() {
        if !same_complex(c.complex(), f.target()) {
            return Err(Error::ComplexMismatch);
        }
        return Ok(Cochain::zero(f.source(), c.degree()));
    }
    c.pullback(f)
}

#[cfg(test)]
mod tests;
