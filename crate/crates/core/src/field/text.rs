//! Canonical text rendering of polynomials and scalars, and the matching
//! parser used when reading cache files back.
//!
//! A polynomial renders as a sum of terms `c*q^a*t^b` in ascending
//! lexicographic order on (a, b), with unit coefficients and exponents
//! omitted: `1 + q - q*t^2`. A symbolic scalar renders as `num/den`, each
//! side parenthesized when it has more than one term, with `/den` omitted
//! when the denominator is 1.

use num_traits::{One, Signed};

use super::{QtPoly, Rat, Scalar};
use crate::error::{Error, Result};

pub fn render_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_term_magnitude(a: u32, b: u32, c: &Rat) -> String {
    let mut parts = Vec::new();
    let abs = c.abs();
    if !abs.is_one() || (a == 0 && b == 0) {
        parts.push(render_rat(&abs));
    }
    match a {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{a}")),
    }
    match b {
        0 => {}
        1 => parts.push("t".to_string()),
        _ => parts.push(format!("t^{b}")),
    }
    parts.join("*")
}

pub fn render_poly(p: &QtPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, ((a, b), c)) in p.terms().enumerate() {
        let mag = render_term_magnitude(*a, *b, c);
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
            out.push_str(&mag);
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            out.push_str(&mag);
        }
    }
    out
}

pub fn render_scalar(s: &Scalar) -> String {
    match s {
        Scalar::Num(r) => render_rat(r),
        Scalar::Sym { num, den } => {
            let n = render_poly(num);
            if den.is_one() {
                return n;
            }
            let n = if num.num_terms() > 1 { format!("({n})") } else { n };
            let d = render_poly(den);
            let d = if den.num_terms() > 1 { format!("({d})") } else { d };
            format!("{n}/{d}")
        }
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::Invalid(format!("bad rational '{s}': {e}")))
}

fn parse_term(term: &str, negative: bool) -> Result<(u32, u32, Rat)> {
    let mut coeff = Rat::one();
    let mut a = 0u32;
    let mut b = 0u32;
    for piece in term.split('*') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::Invalid(format!("empty factor in term '{term}'")));
        }
        if let Some(rest) = piece.strip_prefix("q^") {
            a += rest
                .parse::<u32>()
                .map_err(|_| Error::Invalid(format!("bad exponent in '{piece}'")))?;
        } else if piece == "q" {
            a += 1;
        } else if let Some(rest) = piece.strip_prefix("t^") {
            b += rest
                .parse::<u32>()
                .map_err(|_| Error::Invalid(format!("bad exponent in '{piece}'")))?;
        } else if piece == "t" {
            b += 1;
        } else {
            coeff *= parse_rat(piece)?;
        }
    }
    if negative {
        coeff = -coeff;
    }
    Ok((a, b, coeff))
}

pub fn parse_poly(s: &str) -> Result<QtPoly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Invalid("empty polynomial".into()));
    }
    if s == "0" {
        return Ok(QtPoly::zero());
    }
    let mut out = QtPoly::zero();
    let mut tokens = s.split(' ');
    let first = tokens.next().unwrap();
    let (term, neg) = match first.strip_prefix('-') {
        Some(rest) => (rest, true),
        None => (first, false),
    };
    let (a, b, c) = parse_term(term, neg)?;
    out.add_term((a, b), &c);
    loop {
        let Some(op) = tokens.next() else { break };
        let term = tokens
            .next()
            .ok_or_else(|| Error::Invalid(format!("dangling operator in '{s}'")))?;
        let neg = match op {
            "+" => false,
            "-" => true,
            _ => return Err(Error::Invalid(format!("unexpected token '{op}' in '{s}'"))),
        };
        let (a, b, c) = parse_term(term, neg)?;
        out.add_term((a, b), &c);
    }
    Ok(out)
}

fn strip_outer_parens(s: &str) -> &str {
    let s = s.trim();
    if !(s.starts_with('(') && s.ends_with(')')) {
        return s;
    }
    // only strip when the parens actually match each other
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i != s.len() - 1 {
                    return s;
                }
            }
            _ => {}
        }
    }
    &s[1..s.len() - 1]
}

/// Parses the canonical rendering of a symbolic scalar.
pub fn parse_sym_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let mut depth = 0usize;
    let mut split = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => {
                split = Some(i);
                break;
            }
            _ => {}
        }
    }
    let (num, den) = match split {
        Some(i) => (
            parse_poly(strip_outer_parens(&s[..i]))?,
            parse_poly(strip_outer_parens(&s[i + 1..]))?,
        ),
        None => (parse_poly(strip_outer_parens(s))?, QtPoly::one()),
    };
    Scalar::fraction(num, den)
}
