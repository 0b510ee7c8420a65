//! The `.osc` text format.
//!
//! ```text
//! complex sphere
//! vertex 0
//! vertex 1 2 3          # several ids per line are fine
//! simplex 0 1 2
//! cycle +1,2,3 -0,2,3 +0,1,3 -<0,1,2>
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{OrderedComplex, SignedChain};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Strips `# ...` comments and surrounding whitespace.
pub(crate) fn clean(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

/// Splits `a,b,c` (optionally wrapped in `<>` or `()`) into ids.
pub(crate) fn split_tuple(tok: &str) -> Vec<&str> {
    let t = tok.trim();
    let t = t
        .strip_prefix('<')
        .and_then(|s| s.strip_suffix('>'))
        .or_else(|| t.strip_prefix('(').and_then(|s| s.strip_suffix(')')))
        .unwrap_or(t);
    t.split(',').map(str::trim).collect()
}

fn valid_id(id: &str) -> bool {
    !id.is_empty() && !id.contains([',', '<', '>', '(', ')', '=', '#']) && !id.starts_with(['+', '-', '−'])
}

/// Parses `.osc` text into a closure-completed complex.
pub fn parse_complex(text: &str) -> Result<OrderedComplex> {
    let mut name: Option<String> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut pos = std::collections::HashMap::new();
    let mut gens: Vec<Vec<u32>> = Vec::new();
    let mut cycle_lines: Vec<(usize, String)> = Vec::new();

    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let l = clean(raw);
        if l.is_empty() {
            continue;
        }
        let mut words = l.split_whitespace();
        let kw = words.next().unwrap();
        match kw {
            "complex" => {
                let n = words.next().ok_or_else(|| perr(line, "missing complex name"))?;
                if name.replace(n.to_string()).is_some() {
                    return Err(perr(line, "second `complex` header"));
                }
                if words.next().is_some() {
                    return Err(perr(line, "malformed line: trailing tokens after complex name"));
                }
            }
            "vertex" => {
                let ids: Vec<&str> = words.collect();
                if ids.is_empty() {
                    return Err(perr(line, "malformed line: `vertex` needs an id"));
                }
                for id in ids {
                    if !valid_id(id) {
                        return Err(perr(line, format!("malformed vertex id `{id}`")));
                    }
                    if pos.insert(id.to_string(), vertices.len() as u32).is_some() {
                        return Err(perr(line, format!("duplicate vertex `{id}`")));
                    }
                    vertices.push(id.to_string());
                }
            }
            "simplex" => {
                let ids: Vec<&str> = words.collect();
                if ids.is_empty() {
                    return Err(perr(line, "malformed line: empty simplex"));
                }
                let mut s = Vec::with_capacity(ids.len());
                for id in &ids {
                    let p = *pos.get(*id).ok_or_else(|| perr(line, format!("unknown vertex `{id}`")))?;
                    s.push(p);
                }
                if s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(perr(line, format!("non-increasing tuple {}", ids.join(" "))));
                }
                gens.push(s);
            }
            "cycle" => cycle_lines.push((line, l["cycle".len()..].to_string())),
            other => return Err(perr(line, format!("malformed line: unknown keyword `{other}`"))),
        }
    }

    let mut x = OrderedComplex::new(name.unwrap_or_else(|| "unnamed".into()), vertices, gens)?;
    if !cycle_lines.is_empty() {
        let mut z: Option<SignedChain> = None;
        for (line, rest) in cycle_lines {
            for tok in rest.split_whitespace() {
                let (neg, body) = if let Some(b) = tok.strip_prefix('+') {
                    (false, b)
                } else if let Some(b) = tok.strip_prefix('-').or_else(|| tok.strip_prefix('−')) {
                    (true, b)
                } else {
                    return Err(perr(line, format!("cycle term `{tok}` needs a sign")));
                };
                let ids = split_tuple(body);
                let mut s = Vec::with_capacity(ids.len());
                for id in &ids {
                    s.push(x.vertex_position(id).ok_or_else(|| perr(line, format!("unknown vertex `{id}`")))?);
                }
                if s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(perr(line, format!("non-increasing tuple {}", ids.join(","))));
                }
                if x.index_of(&s).is_none() {
                    return Err(perr(line, format!("cycle term {} is not a simplex", x.label(&s))));
                }
                let chain = z.get_or_insert_with(|| SignedChain::zero(s.len() - 1));
                if chain.degree != s.len() - 1 {
                    return Err(perr(line, "cycle terms of different degrees"));
                }
                chain.add_term(s, if neg { -BigInt::one() } else { BigInt::one() });
            }
        }
        if let Some(z) = z {
            x = x.with_cycle(z);
        }
    }
    Ok(x)
}

/// Writes a complex in `.osc` form; only maximal simplices are listed.
/// Whitespace in the name becomes `_` so the header stays one token.
pub fn write_complex(x: &OrderedComplex) -> String {
    let mut out = String::new();
    let name: String = x.name().chars().map(|c| if c.is_whitespace() { '_' } else { c }).collect();
    writeln!(out, "complex {}", if name.is_empty() { "unnamed" } else { &name }).unwrap();
    for v in x.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for s in x.maximal_simplices() {
        if s.len() == 1 {
            continue;
        }
        let ids: Vec<&str> = s.iter().map(|&v| x.vertex_id(v)).collect();
        writeln!(out, "simplex {}", ids.join(" ")).unwrap();
    }
    if let Some(z) = x.declared_cycle() {
        let mut terms = Vec::new();
        for (s, c) in &z.terms {
            let ids: Vec<&str> = s.iter().map(|&v| x.vertex_id(v)).collect();
            let sign = if c.is_negative() { '-' } else { '+' };
            // only unit coefficients are expressible; others are repeated
            for _ in 0..c.abs().to_string().parse::<usize>().unwrap_or(1) {
                terms.push(format!("{sign}{}", ids.join(",")));
            }
        }
        for chunk in terms.chunks(8) {
            writeln!(out, "cycle {}", chunk.join(" ")).unwrap();
        }
    }
    out
}
