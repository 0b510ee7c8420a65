//! Ring-erased cochains and the `.coc` text format.
//!
//! ```text
//! cochain a deg 1 coeff z2
//! <0,1> = 1
//! <1,2> = 1
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use super::{Cochain, Coefficient, Ring, Z2, Z4};
use crate::error::{Error, Result};
use crate::linalg::Qz;
use crate::simplicial::io::{clean, split_tuple};
use crate::simplicial::OrderedComplex;

/// A cochain over one of the four supported rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyCochain {
    Z(Cochain<i64>),
    Z2(Cochain<Z2>),
    Z4(Cochain<Z4>),
    Qz(Cochain<Qz>),
}

macro_rules! each {
    ($e:expr, $c:ident => $body:expr) => {
        match $e {
            AnyCochain::Z($c) => $body,
            AnyCochain::Z2($c) => $body,
            AnyCochain::Z4($c) => $body,
            AnyCochain::Qz($c) => $body,
        }
    };
}

impl AnyCochain {
    pub fn ring(&self) -> Ring {
        match self {
            AnyCochain::Z(_) => Ring::Z,
            AnyCochain::Z2(_) => Ring::Z2,
            AnyCochain::Z4(_) => Ring::Z4,
            AnyCochain::Qz(_) => Ring::Qz,
        }
    }

    pub fn degree(&self) -> usize {
        each!(self, c => c.degree())
    }

    pub fn complex(&self) -> &Arc<OrderedComplex> {
        each!(self, c => c.complex())
    }

    pub fn d(&self) -> AnyCochain {
        match self {
            AnyCochain::Z(c) => AnyCochain::Z(c.d()),
            AnyCochain::Z2(c) => AnyCochain::Z2(c.d()),
            AnyCochain::Z4(c) => AnyCochain::Z4(c.d()),
            AnyCochain::Qz(c) => AnyCochain::Qz(c.d()),
        }
    }

    pub fn is_zero(&self) -> bool {
        each!(self, c => c.is_zero())
    }

    fn mismatch(&self, want: Ring) -> Error {
        Error::RingMismatch(format!("expected a {want} cochain, found {}", self.ring()))
    }

    pub fn into_z(self) -> Result<Cochain<i64>> {
        match self {
            AnyCochain::Z(c) => Ok(c),
            o => Err(o.mismatch(Ring::Z)),
        }
    }

    pub fn into_z2(self) -> Result<Cochain<Z2>> {
        match self {
            AnyCochain::Z2(c) => Ok(c),
            o => Err(o.mismatch(Ring::Z2)),
        }
    }

    pub fn into_z4(self) -> Result<Cochain<Z4>> {
        match self {
            AnyCochain::Z4(c) => Ok(c),
            o => Err(o.mismatch(Ring::Z4)),
        }
    }

    pub fn into_qz(self) -> Result<Cochain<Qz>> {
        match self {
            AnyCochain::Qz(c) => Ok(c),
            o => Err(o.mismatch(Ring::Qz)),
        }
    }
}

impl From<Cochain<i64>> for AnyCochain {
    fn from(c: Cochain<i64>) -> Self {
        AnyCochain::Z(c)
    }
}

impl From<Cochain<Z2>> for AnyCochain {
    fn from(c: Cochain<Z2>) -> Self {
        AnyCochain::Z2(c)
    }
}

impl From<Cochain<Z4>> for AnyCochain {
    fn from(c: Cochain<Z4>) -> Self {
        AnyCochain::Z4(c)
    }
}

impl From<Cochain<Qz>> for AnyCochain {
    fn from(c: Cochain<Qz>) -> Self {
        AnyCochain::Qz(c)
    }
}

/// The coefficient homomorphisms used to move between rings.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CoefficientMorphism {
    /// ℤ → ℤ/2
    Mod2,
    /// ℤ → ℤ/4
    Mod4,
    /// ℤ/2 → ℤ/4, 1 ↦ 2
    Double,
    /// ℤ/2 → ℚ/ℤ, 1 ↦ 1/2
    Half,
    /// ℤ/4 → ℚ/ℤ, 1 ↦ 1/4
    Quarter4,
    /// ℤ → ℚ/ℤ, 1 ↦ 1/n
    Nth(i64),
}

impl CoefficientMorphism {
    pub fn apply(self, c: &AnyCochain) -> Result<AnyCochain> {
        use CoefficientMorphism::*;
        Ok(match (self, c) {
            (Mod2, AnyCochain::Z(c)) => c.mod2().into(),
            (Mod4, AnyCochain::Z(c)) => c.mod4().into(),
            (Nth(n), AnyCochain::Z(c)) if n >= 1 => c.nth(n).into(),
            (Double, AnyCochain::Z2(c)) => c.double().into(),
            (Half, AnyCochain::Z2(c)) => c.half().into(),
            (Quarter4, AnyCochain::Z4(c)) => c.quarter().into(),
            (m, c) => return Err(Error::RingMismatch(format!("{m:?} cannot be applied to a {} cochain", c.ring()))),
        })
    }
}

/// Entrywise application of a coefficient morphism.
pub fn map_coefficients(m: CoefficientMorphism, c: &AnyCochain) -> Result<AnyCochain> {
    m.apply(c)
}

/// A cochain together with the name from its `.coc` header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCochain {
    pub name: String,
    pub cochain: AnyCochain,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_values<R: Coefficient>(x: &Arc<OrderedComplex>, degree: usize, body: &[(usize, &str)]) -> Result<Cochain<R>> {
    let mut c = Cochain::<R>::zero(x, degree);
    for &(line, l) in body {
        let (lhs, rhs) = l.split_once('=').ok_or_else(|| perr(line, format!("malformed line: {l}")))?;
        let ids = split_tuple(lhs);
        let mut s = Vec::with_capacity(ids.len());
        for id in &ids {
            s.push(x.vertex_position(id).ok_or_else(|| perr(line, format!("unknown vertex `{id}`")))?);
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(perr(line, format!("non-increasing tuple {}", ids.join(","))));
        }
        if s.len() != degree + 1 {
            return Err(perr(line, format!("{} is not a {degree}-simplex", x.label(&s))));
        }
        let i = x.index_of(&s).ok_or_else(|| perr(line, format!("{} is not a simplex", x.label(&s))))?;
        let v = R::parse_value(rhs.trim()).map_err(|e| perr(line, e.to_string()))?;
        c.set(i, v);
    }
    Ok(c)
}

/// Parses every `cochain` section in `text`, numbering lines from
/// `first_line`.
pub(crate) fn parse_sections(text: &str, first_line: usize, x: &Arc<OrderedComplex>) -> Result<Vec<NamedCochain>> {
    let mut out = Vec::new();
    let mut header: Option<(usize, String, usize, Ring)> = None;
    let mut body: Vec<(usize, &str)> = Vec::new();

    let flush =
        |header: Option<(usize, String, usize, Ring)>, body: &[(usize, &str)]| -> Result<Option<NamedCochain>> {
            let Some((_, name, degree, ring)) = header else {
                return Ok(None);
            };
            let cochain = match ring {
                Ring::Z => AnyCochain::Z(parse_values(x, degree, body)?),
                Ring::Z2 => AnyCochain::Z2(parse_values(x, degree, body)?),
                Ring::Z4 => AnyCochain::Z4(parse_values(x, degree, body)?),
                Ring::Qz => AnyCochain::Qz(parse_values(x, degree, body)?),
            };
            Ok(Some(NamedCochain { name, cochain }))
        };

    for (no, raw) in text.lines().enumerate() {
        let line = first_line + no;
        let l = clean(raw);
        if l.is_empty() {
            continue;
        }
        if l.starts_with("cochain ") || l == "cochain" {
            out.extend(flush(header.take(), &body)?);
            body.clear();
            let w: Vec<&str> = l.split_whitespace().collect();
            if w.len() != 6 || w[2] != "deg" || w[4] != "coeff" {
                return Err(perr(line, "malformed line: expected `cochain <name> deg <k> coeff <ring>`"));
            }
            let degree = w[3].parse().map_err(|_| perr(line, format!("bad degree `{}`", w[3])))?;
            let ring: Ring = w[5].parse().map_err(|e: Error| perr(line, e.to_string()))?;
            header = Some((line, w[1].to_string(), degree, ring));
        } else if header.is_none() {
            return Err(perr(line, format!("malformed line: {l} (before any `cochain` header)")));
        } else {
            body.push((line, l));
        }
    }
    out.extend(flush(header, &body)?);
    Ok(out)
}

/// Parses `.coc` text that may contain several sections.
pub fn parse_cochains(text: &str, x: &Arc<OrderedComplex>) -> Result<Vec<NamedCochain>> {
    parse_sections(text, 1, x)
}

/// Parses `.coc` text containing exactly one cochain.
pub fn parse_cochain(text: &str, x: &Arc<OrderedComplex>) -> Result<NamedCochain> {
    let mut v = parse_cochains(text, x)?;
    match v.len() {
        1 => Ok(v.pop().unwrap()),
        n => Err(Error::Invalid(format!("expected one cochain section, found {n}"))),
    }
}

fn write_values<R: Coefficient>(out: &mut String, c: &Cochain<R>) {
    let x = c.complex();
    for (s, v) in c.support() {
        let ids: Vec<&str> = s.iter().map(|&p| x.vertex_id(p)).collect();
        writeln!(out, "<{}> = {v}", ids.join(",")).unwrap();
    }
}

/// Writes one `.coc` section; only nonzero values are listed.
pub fn write_cochain(name: &str, c: &AnyCochain) -> String {
    let mut out = format!("cochain {name} deg {} coeff {}\n", c.degree(), c.ring());
    each!(c, c => write_values(&mut out, c));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let x = Arc::new(OrderedComplex::from_ids("D2", &["a", "b", "c"], &[&["a", "b", "c"]]).unwrap());
        let text = "cochain w deg 1 coeff qz\n<a,b> = 1/4   # comment\n(b,c) = 3/2\n";
        let nc = parse_cochain(text, &x).unwrap();
        assert_eq!(nc.name, "w");
        let w = nc.cochain.clone().into_qz().unwrap();
        assert_eq!(w.value_on_ids(&["b", "c"]).unwrap(), Qz::HALF);
        let again = parse_cochain(&write_cochain("w", &nc.cochain), &x).unwrap();
        assert_eq!(again, nc);
    }

    #[test]
    fn errors_carry_lines() {
        let x = Arc::new(OrderedComplex::from_ids("I", &["0", "1"], &[&["0", "1"]]).unwrap());
        let e = parse_cochain("cochain a deg 1 coeff z2\n<1,0> = 1\n", &x).unwrap_err();
        assert_eq!(e, Error::Parse { line: 2, msg: "non-increasing tuple 1,0".into() });
        assert!(parse_cochain("cochain a deg 1 coeff z8\n", &x).is_err());
        let m = CoefficientMorphism::Half.apply(&AnyCochain::Z(Cochain::zero(&x, 0)));
        assert!(matches!(m, Err(Error::RingMismatch(_))));
    }
}
