//! Text form of monomials and polynomials: `x1^7 x2 x3 + x1 x2^8`.
//!
//! Variables are 1-indexed, exponent 1 is omitted, the unit monomial prints
//! as `1` and the zero polynomial as `0`. The parser also accepts the TeX
//! spelling `x_1^{7}x_2`, so lists can be pasted from typeset sources.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_VARS};
use crate::poly::Polynomial;

pub fn format_monomial(m: &Monomial) -> String {
    let mut out = String::new();
    for (j, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        out.push('x');
        out.push_str(&(j + 1).to_string());
        if e != 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = p.terms().iter().map(format_monomial).collect();
    parts.join(" + ")
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Exponents by variable (0-indexed), as parsed; `k` is not yet fixed.
fn parse_factors(s: &str) -> Result<Vec<(usize, u32)>> {
    let b = s.as_bytes();
    let mut i = 0;
    let mut factors = Vec::new();
    let skip_ws = |i: &mut usize| {
        while *i < b.len() && (b[*i] as char).is_whitespace() {
            *i += 1;
        }
    };
    let number = |i: &mut usize| -> Result<u32> {
        let braced = *i < b.len() && b[*i] == b'{';
        if braced {
            *i += 1;
        }
        let start = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        if start == *i {
            return Err(err(format!("expected a number in {s:?}")));
        }
        let v: u32 = s[start..*i]
            .parse()
            .map_err(|_| err(format!("number too large in {s:?}")))?;
        if braced {
            if *i >= b.len() || b[*i] != b'}' {
                return Err(err(format!("unclosed brace in {s:?}")));
            }
            *i += 1;
        }
        Ok(v)
    };
    skip_ws(&mut i);
    if s.trim() == "1" {
        return Ok(factors);
    }
    while i < b.len() {
        if b[i] != b'x' {
            return Err(err(format!("unexpected character {:?} in {s:?}", b[i] as char)));
        }
        i += 1;
        if i < b.len() && b[i] == b'_' {
            i += 1;
        }
        let var = number(&mut i)? as usize;
        if var == 0 {
            return Err(err("variables are 1-indexed"));
        }
        let mut exp = 1;
        if i < b.len() && b[i] == b'^' {
            i += 1;
            exp = number(&mut i)?;
        }
        factors.push((var - 1, exp));
        skip_ws(&mut i);
        if i < b.len() && b[i] == b'*' {
            i += 1;
            skip_ws(&mut i);
        }
    }
    Ok(factors)
}

fn build(k: usize, factors: &[(usize, u32)]) -> Result<Monomial> {
    let mut exps = alloc::vec![0u32; k];
    for &(v, e) in factors {
        if v >= k {
            return Err(Error::IndexOutOfRange { index: v + 1, bound: k });
        }
        exps[v] = exps[v].checked_add(e).ok_or(Error::ExponentOverflow)?;
    }
    Monomial::new(&exps)
}

/// Parses one monomial in `k` variables.
pub fn parse_monomial(k: usize, s: &str) -> Result<Monomial> {
    build(k, &parse_factors(s)?)
}

fn split_terms(s: &str) -> Vec<&str> {
    s.split('+').map(str::trim).filter(|t| !t.is_empty()).collect()
}

/// Parses a homogeneous polynomial in `k` variables; repeated terms cancel.
/// An all-zero input (`"0"` or empty) needs the degree from elsewhere, so it
/// is given degree 0.
pub fn parse_polynomial(k: usize, s: &str) -> Result<Polynomial> {
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return Polynomial::zero(k, 0);
    }
    let terms = split_terms(trimmed)
        .into_iter()
        .map(|t| parse_monomial(k, t))
        .collect::<Result<Vec<_>>>()?;
    let degree = terms[0].degree();
    Polynomial::from_terms(k, degree, terms)
}

/// Largest variable index mentioned in the text, for callers that infer `k`.
pub fn max_variable(s: &str) -> Result<usize> {
    let mut k = 0;
    for t in split_terms(s.trim()) {
        if t == "0" {
            continue;
        }
        for (v, _) in parse_factors(t)? {
            k = k.max(v + 1);
        }
    }
    Ok(k.clamp(1, MAX_VARS))
}

/// Collapses runs of whitespace, the comparison used for fixture text.
pub fn normalize_whitespace(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}
