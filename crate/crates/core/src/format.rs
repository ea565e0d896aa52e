//! Text formats: sequence files and polynomial strings.
//!
//! A sequence file is UTF-8 text. `#` starts a comment that runs to the end
//! of the line. The first non-blank line after comment stripping is the
//! header `p=<int> m=<int> [mod=<c0,c1,...,cm>]`; every later
//! whitespace-separated token is one element: a single integer in `[0, p)`
//! when `m = 1`, otherwise `m` comma-separated integers, low-degree
//! coordinate first.
//!
//! Polynomials render low-to-high as `c0 + c1*x + c2*x^2 + ...`, skipping
//! zero terms, with coefficients written as integers (`m = 1`) or
//! `[c0,c1,...]` coordinate vectors. The zero polynomial is `0`.

use std::path::Path;

use crate::error::{Error, Result};
use crate::field::{make_field, FieldElement, FieldSpec};
use crate::poly::Poly;
use crate::sequence::PeriodicSequence;

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_header(line: &str) -> Result<FieldSpec> {
    let (mut p, mut m, mut modulus) = (None, None, None);
    for tok in line.split_whitespace() {
        let (key, value) = tok.split_once('=').ok_or_else(|| Error::BadHeader(format!("expected key=value, got {tok:?}")))?;
        let bad = || Error::BadHeader(format!("bad value in {tok:?}"));
        match key {
            "p" => p = Some(value.parse::<u64>().map_err(|_| bad())?),
            "m" => m = Some(value.parse::<usize>().map_err(|_| bad())?),
            "mod" => {
                let coeffs = value
                    .split(',')
                    .map(|c| c.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad())?;
                modulus = Some(coeffs);
            }
            _ => return Err(Error::BadHeader(format!("unknown key {key:?}"))),
        }
    }
    let p = p.ok_or_else(|| Error::BadHeader("missing p".into()))?;
    let m = m.ok_or_else(|| Error::BadHeader("missing m".into()))?;
    make_field(p, m, modulus.as_deref()).map_err(|e| Error::BadHeader(e.to_string()))
}

fn parse_element(field: &FieldSpec, tok: &str, line: usize) -> Result<FieldElement> {
    let coords = tok
        .split(',')
        .map(|c| c.parse::<u64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::Syntax { line, msg: format!("not an element: {tok:?}") })?;
    if coords.len() != field.degree() {
        return Err(Error::Syntax {
            line,
            msg: format!("element {tok:?} has {} coordinates, expected {}", coords.len(), field.degree()),
        });
    }
    if coords.iter().any(|&c| c >= field.characteristic()) {
        return Err(Error::ElementOutOfRange(format!("{tok} (line {line})")));
    }
    let coords: Vec<u32> = coords.into_iter().map(|c| c as u32).collect();
    field.element(&coords)
}

/// Parses the sequence file format described in the module docs.
pub fn parse_sequence(text: &str) -> Result<PeriodicSequence> {
    let mut field = None;
    let mut elements = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        match &field {
            None => field = Some(parse_header(line)?),
            Some(f) => {
                for tok in line.split_whitespace() {
                    elements.push(parse_element(f, tok, idx + 1)?);
                }
            }
        }
    }
    let field = field.ok_or_else(|| Error::BadHeader("missing header".into()))?;
    PeriodicSequence::new(&field, elements)
}

pub fn read_sequence_file(path: impl AsRef<Path>) -> Result<PeriodicSequence> {
    parse_sequence(&std::fs::read_to_string(path)?)
}

pub fn render_element(field: &FieldSpec, e: FieldElement) -> String {
    let coords = field.coords(e);
    if coords.len() == 1 {
        coords[0].to_string()
    } else {
        coords.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Writes a sequence in the file format, 21 elements per line.
pub fn render_sequence(s: &PeriodicSequence) -> String {
    let f = s.field();
    let mut out = format!("p={} m={}", f.characteristic(), f.degree());
    if f.degree() > 1 {
        let m: Vec<String> = f.modulus().iter().map(u32::to_string).collect();
        out.push_str(&format!(" mod={}", m.join(",")));
    }
    out.push('\n');
    for chunk in s.elements().chunks(21) {
        let line: Vec<String> = chunk.iter().map(|&e| render_element(f, e)).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn render_coeff(field: &FieldSpec, c: FieldElement) -> String {
    let coords = field.coords(c);
    if coords.len() == 1 {
        coords[0].to_string()
    } else {
        format!("[{}]", coords.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
    }
}

pub fn render_poly(f: &Poly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let field = f.field();
    let terms: Vec<String> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| {
            let c = render_coeff(field, c);
            match i {
                0 => c,
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            }
        })
        .collect();
    terms.join(" + ")
}

fn parse_coeff(field: &FieldSpec, s: &str) -> Result<FieldElement> {
    let bad = || Error::PolyParse(format!("bad coefficient {s:?}"));
    let inner = match (s.strip_prefix('['), field.degree()) {
        (Some(rest), _) => rest.strip_suffix(']').ok_or_else(bad)?,
        (None, 1) => s,
        (None, _) => return Err(bad()),
    };
    let coords = inner
        .split(',')
        .map(|c| c.trim().parse::<u32>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    field.element(&coords)
}

/// Inverse of [`render_poly`]. Also accepts a bare `x` or `x^k` for a unit
/// coefficient.
pub fn parse_poly(field: &FieldSpec, s: &str) -> Result<Poly> {
    let s = s.trim();
    if s == "0" {
        return Ok(Poly::zero(field));
    }
    let mut coeffs: Vec<FieldElement> = Vec::new();
    for term in s.split(" + ") {
        let term = term.trim();
        let (coef, power) = if let Some(idx) = term.find('x') {
            let (head, tail) = term.split_at(idx);
            let power = match tail {
                "x" => 1,
                _ => tail
                    .strip_prefix("x^")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| Error::PolyParse(format!("bad term {term:?}")))?,
            };
            let coef = match head {
                "" => FieldElement::ONE,
                _ => parse_coeff(
                    field,
                    head.strip_suffix('*').ok_or_else(|| Error::PolyParse(format!("bad term {term:?}")))?,
                )?,
            };
            (coef, power)
        } else {
            (parse_coeff(field, term)?, 0)
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, FieldElement::ZERO);
        } else if !coeffs[power].is_zero() {
            return Err(Error::PolyParse(format!("repeated power {power}")));
        }
        coeffs[power] = coef;
    }
    Poly::new(field, coeffs)
}

/// Human-readable factored form of `prod_j m_j(b_j^{-1} x)`. Factors of the
/// shape `(1 - x)^c` print as `(1 - s x)^c` with `s = b_j^{-1}`.
pub fn render_factored(factors: &[(Poly, FieldElement)]) -> String {
    let mut parts = Vec::new();
    for (m, b) in factors {
        if m.is_one() {
            continue;
        }
        let field = m.field();
        let s = field.raw_inv(*b).expect("roots are nonzero");
        let c = m.degree().unwrap_or(0);
        if *m == Poly::one_minus_x_to(field, c) {
            let lin = if s == FieldElement::ONE {
                "(1 - x)".to_string()
            } else {
                format!("(1 - {}x)", render_coeff(field, s))
            };
            parts.push(if c == 1 { lin } else { format!("{lin}^{c}") });
        } else if s == FieldElement::ONE {
            parts.push(format!("({})", render_poly(m)));
        } else {
            let ar = crate::field::Arith::new(field);
            let scaled = m.scale_argument(s, &ar).expect("nonzero scale");
            parts.push(format!("({})", render_poly(&scaled)));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}
