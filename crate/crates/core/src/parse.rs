//! The ideal text format.
//!
//! ```text
//! # comment
//! vars x y z
//! gens x^2, x*y, y*z^3
//! ```
//!
//! Factors are `var` or `var^k` with `k >= 0`, joined by `*`. The literal
//! `1` is accepted as the unit monomial. An empty `gens` line is the zero
//! ideal.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

fn parse_err(
    line: usize,
    line_text: &str,
    byte_offset: usize,
    message: impl Into<String>,
) -> Error {
    Error::Parse {
        line,
        column: line_text[..byte_offset].chars().count() + 1,
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Splits `s` on `sep`, yielding each piece with its byte offset in `s`.
fn split_with_offsets(s: &str, sep: char) -> impl Iterator<Item = (usize, &str)> {
    let mut start = 0;
    s.split(sep).map(move |piece| {
        let at = start;
        start += piece.len() + sep.len_utf8();
        (at, piece)
    })
}

/// Trims whitespace and returns the offset shift of the trimmed slice.
fn trim_with_offset(s: &str) -> (usize, &str) {
    let lead = s.len() - s.trim_start().len();
    (lead, s.trim())
}

struct LineCtx<'a> {
    number: usize,
    text: &'a str,
}

impl LineCtx<'_> {
    fn err(&self, offset: usize, message: impl Into<String>) -> Error {
        parse_err(self.number, self.text, offset, message)
    }
}

fn parse_vars(ctx: &LineCtx, body: &str, body_offset: usize) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    let mut offset = 0;
    for token in body.split_whitespace() {
        let at = body_offset + offset + body[offset..].find(token).unwrap_or(0);
        offset = at - body_offset + token.len();
        if !is_identifier(token) {
            return Err(ctx.err(at, format!("invalid variable name `{token}`")));
        }
        if names.iter().any(|n| n == token) {
            return Err(ctx.err(at, format!("duplicate variable `{token}`")));
        }
        names.push(token.to_string());
    }
    if names.is_empty() {
        return Err(ctx.err(body_offset, "`vars` needs at least one variable"));
    }
    Ok(names)
}

fn parse_monomial(
    ctx: &LineCtx,
    text: &str,
    offset: usize,
    index: &HashMap<&str, usize>,
) -> Result<Monomial> {
    let mut exponents = vec![0u32; index.len()];
    for (rel, raw) in split_with_offsets(text, '*') {
        let (lead, factor) = trim_with_offset(raw);
        let at = offset + rel + lead;
        if factor.is_empty() {
            return Err(ctx.err(at, "empty factor"));
        }
        if factor == "1" {
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            None => (factor, 1u32),
            Some((name, exp_text)) => {
                let name = name.trim_end();
                let exp_trim = exp_text.trim();
                let exp_at = at + factor.len() - exp_text.len()
                    + (exp_text.len() - exp_text.trim_start().len());
                if exp_trim.is_empty() || !exp_trim.chars().all(|c| c.is_ascii_digit()) {
                    return Err(ctx.err(exp_at, format!("malformed exponent `{exp_trim}`")));
                }
                let exp: u32 = exp_trim
                    .parse()
                    .map_err(|_| ctx.err(exp_at, format!("exponent `{exp_trim}` too large")))?;
                (name, exp)
            }
        };
        let var = *index
            .get(name)
            .ok_or_else(|| ctx.err(at, format!("unknown variable `{name}`")))?;
        exponents[var] = exponents[var]
            .checked_add(exp)
            .ok_or_else(|| ctx.err(at, "exponent overflow"))?;
    }
    Ok(Monomial::new(exponents))
}

fn parse_gens(
    ctx: &LineCtx,
    body: &str,
    body_offset: usize,
    names: &[String],
) -> Result<Vec<Monomial>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let index: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let mut gens = Vec::new();
    for (rel, raw) in split_with_offsets(body, ',') {
        let (lead, text) = trim_with_offset(raw);
        let at = body_offset + rel + lead;
        if text.is_empty() {
            return Err(ctx.err(at, "empty generator"));
        }
        gens.push(parse_monomial(ctx, text, at, &index)?);
    }
    Ok(gens)
}

/// Parses the ideal text format. Generators are minimalized; variable order
/// is declaration order.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut vars: Option<Vec<String>> = None;
    let mut gens: Option<Vec<Monomial>> = None;
    let mut last_line = 0;

    for (k, full_line) in text.lines().enumerate() {
        let number = k + 1;
        last_line = number;
        let line = match full_line.find('#') {
            Some(pos) => &full_line[..pos],
            None => full_line,
        };
        let ctx = LineCtx {
            number,
            text: full_line,
        };
        let (lead, content) = trim_with_offset(line);
        if content.is_empty() {
            continue;
        }
        let keyword_end = content.find(char::is_whitespace).unwrap_or(content.len());
        let keyword = &content[..keyword_end];
        let body = &content[keyword_end..];
        let body_offset = lead + keyword_end;
        match keyword {
            "vars" => {
                if vars.is_some() {
                    return Err(ctx.err(lead, "duplicate `vars` line"));
                }
                vars = Some(parse_vars(&ctx, body, body_offset)?);
            }
            "gens" => {
                let names = vars
                    .as_ref()
                    .ok_or_else(|| ctx.err(lead, "`gens` before `vars`"))?;
                if gens.is_some() {
                    return Err(ctx.err(lead, "duplicate `gens` line"));
                }
                gens = Some(parse_gens(&ctx, body, body_offset, names)?);
            }
            other => {
                return Err(ctx.err(lead, format!("expected `vars` or `gens`, found `{other}`")));
            }
        }
    }

    let eof = |message: &str| Error::Parse {
        line: last_line.max(1),
        column: 1,
        message: message.to_string(),
    };
    let vars = vars.ok_or_else(|| eof("missing `vars` line"))?;
    let gens = gens.ok_or_else(|| eof("missing `gens` line"))?;
    MonomialIdeal::new(vars, gens)
}

/// Writes `m` using `names`; the unit monomial prints as `1`.
pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let factors: Vec<String> = m
        .exponents()
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, name)| {
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Canonical text form, accepted back by [`parse_ideal`].
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {}", self.var_names().join(" "))?;
        let gens: Vec<String> = self
            .gens()
            .iter()
            .map(|m| format_monomial(m, self.var_names()))
            .collect();
        if gens.is_empty() {
            writeln!(f, "gens")
        } else {
            writeln!(f, "gens {}", gens.join(", "))
        }
    }
}
