//! Alexander–Whitney cup product and the cup₁/cup₂ products in the
//! bidegrees where explicit formulas are fixed.

use super::{same_complex, Cochain, RingCoefficient, Z2, Z4};
use crate::error::{Error, Result};

fn check<R: RingCoefficient>(x: &Cochain<R>, y: &Cochain<R>) -> Result<()> {
    if same_complex(&x.complex, &y.complex) {
        Ok(())
    } else {
        Err(Error::ComplexMismatch)
    }
}

/// Evaluate `x` on the sub-simplex of `s` picked by `pos`.
#[inline]
fn at<R: RingCoefficient>(x: &Cochain<R>, s: &[u32], pos: &[usize], buf: &mut Vec<u32>) -> R {
    buf.clear();
    buf.extend(pos.iter().map(|&i| s[i]));
    x.values[x.complex.index_of(buf).expect("face of a simplex")]
}

/// (x∪y)(v₀…v_{m+n}) = x(v₀…v_m)·y(v_m…v_{m+n}).
pub fn cup<R: RingCoefficient>(x: &Cochain<R>, y: &Cochain<R>) -> Result<Cochain<R>> {
    check(x, y)?;
    let (m, n) = (x.degree, y.degree);
    let cx = &x.complex;
    Ok(Cochain::from_fn(cx, m + n, |s| {
        let a = x.values[cx.index_of(&s[..=m]).unwrap()];
        if a.is_zero() {
            return R::default();
        }
        a * y.values[cx.index_of(&s[m..]).unwrap()]
    }))
}

/// cup₁ in bidegrees (1,1), (1,2), (2,1), (2,2).
pub fn cup1<R: RingCoefficient>(x: &Cochain<R>, y: &Cochain<R>) -> Result<Cochain<R>> {
    check(x, y)?;
    let cx = &x.complex;
    let mut buf = Vec::with_capacity(4);
    let out = match (x.degree, y.degree) {
        // (x∪₁y)(01) = −x(01)y(01)
        (1, 1) => Cochain::from_fn(cx, 1, |s| -(at(x, s, &[0, 1], &mut buf) * at(y, s, &[0, 1], &mut buf))),
        // (x∪₁y)(012) = −x(02)y(012)
        (1, 2) => Cochain::from_fn(cx, 2, |s| -(at(x, s, &[0, 2], &mut buf) * at(y, s, &[0, 1, 2], &mut buf))),
        // (x∪₁y)(012) = x(012)y(01) + x(012)y(12)
        (2, 1) => Cochain::from_fn(cx, 2, |s| {
            let p = at(x, s, &[0, 1, 2], &mut buf);
            if p.is_zero() {
                return R::default();
            }
            p * at(y, s, &[0, 1], &mut buf) + p * at(y, s, &[1, 2], &mut buf)
        }),
        // (x∪₁y)(0123) = x(013)y(123) − x(023)y(012)
        (2, 2) => Cochain::from_fn(cx, 3, |s| {
            at(x, s, &[0, 1, 3], &mut buf) * at(y, s, &[1, 2, 3], &mut buf)
                - at(x, s, &[0, 2, 3], &mut buf) * at(y, s, &[0, 1, 2], &mut buf)
        }),
        (m, n) => return Err(Error::UnsupportedBidegree(m, n, "cup1")),
    };
    Ok(out)
}

/// cup₂ in bidegree (2,2): (p∪₂q)(012) = −p(012)q(012).
pub fn cup2<R: RingCoefficient>(x: &Cochain<R>, y: &Cochain<R>) -> Result<Cochain<R>> {
    check(x, y)?;
    if (x.degree, y.degree) != (2, 2) {
        return Err(Error::UnsupportedBidegree(x.degree, y.degree, "cup2"));
    }
    Ok(x.zip(y, |a, b| -(a * b)))
}

/// The integral lift with values in {0, 1}.
pub fn special_lift(x: &Cochain<Z2>) -> Cochain<i64> {
    x.lift()
}

/// 𝒫(a²) = A⁴ mod 4 for a 1-cocycle a.
pub fn pontrjagin_square_sq(a: &Cochain<Z2>) -> Result<Cochain<Z4>> {
    if a.degree != 1 {
        return Err(Error::DegreeMismatch { expected: 1, found: a.degree });
    }
    if !a.is_cocycle() {
        return Err(Error::NotCocycle("a"));
    }
    let l = a.lift();
    let sq = cup(&l, &l)?;
    Ok(cup(&sq, &sq)?.mod4())
}

impl<R: RingCoefficient> Cochain<R> {
    /// Panicking shorthand for [`cup`], for use inside formulas.
    pub fn cup(&self, o: &Self) -> Self {
        cup(self, o).expect("cup on different complexes")
    }

    /// x ∪ x.
    pub fn sq(&self) -> Self {
        self.cup(self)
    }

    /// Panicking shorthand for [`cup1`].
    pub fn cup1(&self, o: &Self) -> Self {
        cup1(self, o).expect("cup1 arguments")
    }

    /// Panicking shorthand for [`cup2`].
    pub fn cup2(&self, o: &Self) -> Self {
        cup2(self, o).expect("cup2 arguments")
    }
}
