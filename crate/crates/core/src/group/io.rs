//! Triple files: optional `.osc` lines, a `triple <name>` header, then the
//! `.coc` sections `w` (qz, deg 3), `p` (z2, deg 2) and `a` (z2, deg 1).
//!
//! ```text
//! complex circle
//! vertex 0 1 2
//! simplex 0 1
//! simplex 1 2
//! simplex 0 2
//! triple g
//! cochain w deg 3 coeff qz
//! cochain p deg 2 coeff z2
//! cochain a deg 1 coeff z2
//! <0,1> = 1
//! ```

use std::sync::Arc;

use super::Triple;
use crate::cochain::{parse_sections, write_cochain, AnyCochain, Ring};
use crate::error::{Error, Result};
use crate::simplicial::io::clean;
use crate::simplicial::{parse_complex, write_complex, OrderedComplex};

/// Parses a triple file. The complex comes from the embedded `.osc` lines or
/// from `complex`; if both are present they must agree.
pub fn parse_triple(text: &str, complex: Option<&Arc<OrderedComplex>>) -> Result<(String, Triple)> {
    let lines: Vec<&str> = text.lines().collect();
    let Some(h) = lines.iter().position(|l| {
        let l = clean(l);
        l == "triple" || l.starts_with("triple ")
    }) else {
        return Err(Error::Parse { line: 1, msg: "missing `triple <name>` header".into() });
    };
    let words: Vec<&str> = clean(lines[h]).split_whitespace().collect();
    if words.len() != 2 {
        return Err(Error::Parse { line: h + 1, msg: "malformed line: expected `triple <name>`".into() });
    }
    let name = words[1].to_string();

    let head = lines[..h].join("\n");
    let embedded = if head.lines().any(|l| !clean(l).is_empty()) { Some(parse_complex(&head)?) } else { None };
    let x = match (embedded, complex) {
        (Some(e), Some(c)) if e == **c => c.clone(),
        (Some(_), Some(_)) => return Err(Error::Invalid("embedded complex differs from the one supplied".into())),
        (Some(e), None) => Arc::new(e),
        (None, Some(c)) => c.clone(),
        (None, None) => {
            return Err(Error::Invalid("no complex: embed .osc lines before the `triple` header or supply one".into()))
        }
    };

    let body = lines[h + 1..].join("\n");
    let mut w = None;
    let mut p = None;
    let mut a = None;
    for nc in parse_sections(&body, h + 2, &x)? {
        let (slot, ring, degree) = match nc.name.as_str() {
            "w" => (&mut w, Ring::Qz, 3),
            "p" => (&mut p, Ring::Z2, 2),
            "a" => (&mut a, Ring::Z2, 1),
            other => return Err(Error::Invalid(format!("unexpected section `{other}` (want w, p, a)"))),
        };
        if nc.cochain.ring() != ring || nc.cochain.degree() != degree {
            return Err(Error::Invalid(format!(
                "section `{}` must be deg {degree} coeff {ring}, found deg {} coeff {}",
                nc.name,
                nc.cochain.degree(),
                nc.cochain.ring()
            )));
        }
        if slot.replace(nc.cochain).is_some() {
            return Err(Error::Invalid(format!("section `{}` given twice", nc.name)));
        }
    }
    let missing = |n: &str| Error::Invalid(format!("missing section `{n}`"));
    let w = w.ok_or_else(|| missing("w"))?.into_qz()?;
    let p = p.ok_or_else(|| missing("p"))?.into_z2()?;
    let a = a.ok_or_else(|| missing("a"))?.into_z2()?;
    Ok((name, Triple::new(w, p, a)?))
}

/// Writes a triple file, optionally preceded by its complex.
pub fn write_triple(name: &str, g: &Triple, embed_complex: bool) -> String {
    let mut out = String::new();
    if embed_complex {
        out.push_str(&write_complex(g.complex()));
    }
    out.push_str(&format!("triple {name}\n"));
    out.push_str(&write_cochain("w", &AnyCochain::Qz(g.w.clone())));
    out.push_str(&write_cochain("p", &AnyCochain::Z2(g.p.clone())));
    out.push_str(&write_cochain("a", &AnyCochain::Z2(g.a.clone())));
    out
}
