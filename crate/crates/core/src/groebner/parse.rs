//! Text grammar for polynomials and ideal specifications.
//!
//! Polynomial: terms separated by '+'/'-'; a term is an optional rational
//! coefficient ("a" or "a/b"), an optional '*', and variable factors joined
//! by '*', each `var` or `var^exp`. Whitespace is insignificant.
//!
//! Ideal spec: comma-separated polynomials inside parentheses, with the
//! shorthand "(v1,...,vk)^m" expanding to all monomials of total degree m in
//! the listed variables (the m-th power of the ideal they generate).

use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::One;

use crate::error::{Error, Result};

use super::monomial::{Monomial, VarList};
use super::poly::Polynomial;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            ',' => {
                out.push((i, Tok::Comma));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                out.push((start, Tok::Int(s.parse().expect("digits"))));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(bytes[start..i].iter().collect())));
            }
            other => {
                return Err(Error::TextParse {
                    pos: i,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    vars: &'a Arc<VarList>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::TextParse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n.clone()),
            _ => {
                self.pos -= 1;
                self.err("expected an integer")
            }
        }
    }

    /// coefficient := uint ['/' uint]
    fn parse_coefficient(&mut self) -> Result<BigRational> {
        let num = self.parse_uint()?;
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let at = self.here();
            let den = self.parse_uint()?;
            if den == BigInt::from(0) {
                return Err(Error::TextParse {
                    pos: at,
                    msg: "zero denominator".to_string(),
                });
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    /// factor := ident ['^' uint]
    ///
    /// An identifier that is not a declared variable is read as juxtaposed
    /// single-letter variables ("xz" = x*z, as the classification tables
    /// print their ideals); a trailing exponent applies to the last letter
    /// ("xz^2" = x*z^2).
    fn parse_factor(&mut self) -> Result<Monomial> {
        let at = self.here();
        let name = match self.bump() {
            Some(Tok::Ident(n)) => n.clone(),
            _ => {
                self.pos -= 1;
                return self.err("expected a variable");
            }
        };
        let idxs: Vec<usize> = if let Some(idx) = self.vars.index(&name) {
            vec![idx]
        } else {
            let split: Option<Vec<usize>> = name
                .chars()
                .map(|c| self.vars.index(&c.to_string()))
                .collect();
            match split {
                Some(idxs) if !idxs.is_empty() => idxs,
                _ => {
                    return Err(Error::TextParse {
                        pos: at,
                        msg: format!("unknown variable '{name}'"),
                    })
                }
            }
        };
        let mut exp = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let at = self.here();
            let e = self.parse_uint()?;
            exp = e.try_into().map_err(|_| Error::TextParse {
                pos: at,
                msg: "exponent out of range".to_string(),
            })?;
        }
        let mut mono = Monomial::unit(self.vars.len());
        for (pos, &idx) in idxs.iter().enumerate() {
            let e = if pos + 1 == idxs.len() { exp } else { 1 };
            mono = mono.mul(&Monomial::var_pow(self.vars.len(), idx, e));
        }
        Ok(mono)
    }

    /// term := coefficient ['*'] factors | factors ; factors := factor ('*' factor)*
    fn parse_term(&mut self) -> Result<(BigRational, Monomial)> {
        let mut coeff = BigRational::one();
        let mut mono = Monomial::unit(self.vars.len());
        let mut have_any = false;
        if matches!(self.peek(), Some(Tok::Int(_))) {
            coeff = self.parse_coefficient()?;
            have_any = true;
            if self.peek() == Some(&Tok::Star) {
                self.bump();
                let f = self.parse_factor()?;
                mono = mono.mul(&f);
                while self.peek() == Some(&Tok::Star) {
                    self.bump();
                    let f = self.parse_factor()?;
                    mono = mono.mul(&f);
                }
                return Ok((coeff, mono));
            }
        }
        if matches!(self.peek(), Some(Tok::Ident(_))) {
            let f = self.parse_factor()?;
            mono = mono.mul(&f);
            while self.peek() == Some(&Tok::Star) {
                self.bump();
                let f = self.parse_factor()?;
                mono = mono.mul(&f);
            }
            have_any = true;
        }
        if !have_any {
            return self.err("expected a term");
        }
        Ok((coeff, mono))
    }

    /// poly := ['-'] term (('+'|'-') term)*
    fn parse_polynomial(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.vars.clone());
        let mut sign = BigRational::one();
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            sign = -sign;
        } else if self.peek() == Some(&Tok::Plus) {
            self.bump();
        }
        loop {
            let (c, m) = self.parse_term()?;
            out.add_term(m, c * &sign);
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    sign = BigRational::one();
                }
                Some(Tok::Minus) => {
                    self.bump();
                    sign = -BigRational::one();
                }
                _ => break,
            }
        }
        Ok(out)
    }
}

/// Parse one polynomial over the given variables; the whole text must be
/// consumed.
pub fn parse_polynomial(text: &str, vars: &Arc<VarList>) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        vars,
        end: text.len(),
    };
    let poly = p.parse_polynomial()?;
    if p.pos != toks.len() {
        return p.err("trailing input after polynomial");
    }
    Ok(poly)
}

/// The canonical variable precedence used when a list must be inferred.
const CANONICAL: [&str; 5] = ["x", "y", "z", "w", "v"];

/// Infer the variable list of an ideal spec: the distinct single letters
/// that occur (juxtaposed identifiers are split), ordered x > y > z > w > v,
/// any others after in first appearance.
pub fn infer_vars(text: &str) -> Result<Arc<VarList>> {
    let toks = tokenize(text)?;
    let mut seen: Vec<String> = Vec::new();
    for (at, t) in &toks {
        if let Tok::Ident(name) = t {
            if name.chars().any(|c| !c.is_ascii_alphabetic()) {
                return Err(Error::TextParse {
                    pos: *at,
                    msg: format!("cannot infer variables from '{name}'"),
                });
            }
            for c in name.chars() {
                let s = c.to_string();
                if !seen.contains(&s) {
                    seen.push(s);
                }
            }
        }
    }
    let mut ordered: Vec<String> = CANONICAL
        .iter()
        .filter(|c| seen.iter().any(|s| s == *c))
        .map(|c| c.to_string())
        .collect();
    for name in seen {
        if !ordered.contains(&name) {
            ordered.push(name);
        }
    }
    if ordered.is_empty() {
        return Err(Error::Invalid(
            "ideal spec mentions no variables".to_string(),
        ));
    }
    Ok(Arc::new(VarList::new(ordered)?))
}

/// Parse an ideal spec into generators. With `vars` = None the variable
/// list is inferred via [`infer_vars`].
pub fn parse_ideal(
    text: &str,
    vars: Option<Arc<VarList>>,
) -> Result<(Vec<Polynomial>, Arc<VarList>)> {
    let vars = match vars {
        Some(v) => v,
        None => infer_vars(text)?,
    };
    let toks = tokenize(text)?;
    if toks.first().map(|(_, t)| t) != Some(&Tok::LParen) {
        return Err(Error::TextParse {
            pos: 0,
            msg: "ideal spec must start with '('".to_string(),
        });
    }
    let Some(close) = toks.iter().position(|(_, t)| *t == Tok::RParen) else {
        return Err(Error::TextParse {
            pos: text.len(),
            msg: "unterminated '('".to_string(),
        });
    };
    // Split the inside on commas (the polynomial grammar has no parens or
    // commas of its own).
    let inside = &toks[1..close];
    let mut groups: Vec<&[(usize, Tok)]> = Vec::new();
    let mut start = 0;
    for (i, (_, t)) in inside.iter().enumerate() {
        if *t == Tok::Comma {
            groups.push(&inside[start..i]);
            start = i + 1;
        }
    }
    groups.push(&inside[start..]);

    // Optional power suffix.
    let mut power: Option<u32> = None;
    let tail = &toks[close + 1..];
    match tail {
        [] => {}
        [(_, Tok::Caret), (at, Tok::Int(e))] => {
            power = Some(e.clone().try_into().map_err(|_| Error::TextParse {
                pos: *at,
                msg: "exponent out of range".to_string(),
            })?);
        }
        [(at, _), ..] => {
            return Err(Error::TextParse {
                pos: *at,
                msg: "trailing input after ideal spec".to_string(),
            })
        }
    }

    let mut polys = Vec::new();
    for g in &groups {
        if g.is_empty() {
            return Err(Error::TextParse {
                pos: text.len(),
                msg: "empty generator".to_string(),
            });
        }
        let mut p = Parser {
            toks: g,
            pos: 0,
            vars: &vars,
            end: text.len(),
        };
        let poly = p.parse_polynomial()?;
        if p.pos != g.len() {
            return p.err("trailing input in generator");
        }
        polys.push(poly);
    }

    match power {
        None => Ok((polys, vars)),
        Some(m) => {
            if m == 0 {
                return Err(Error::Invalid("zero power of an ideal".to_string()));
            }
            // Shorthand requires plain variables inside the parentheses.
            let mut var_idxs = Vec::new();
            for p in &polys {
                let single = p.num_terms() == 1;
                let (mono, coeff) = p.terms().next().ok_or_else(|| {
                    Error::Invalid("zero generator in power shorthand".to_string())
                })?;
                let is_var = single
                    && coeff.is_one()
                    && mono.total_degree() == 1;
                if !is_var {
                    return Err(Error::Invalid(format!(
                        "power shorthand needs plain variables, got '{p}'"
                    )));
                }
                let idx = (0..vars.len()).find(|&i| mono.exponent(i) == 1).unwrap();
                var_idxs.push(idx);
            }
            var_idxs.sort_unstable();
            var_idxs.dedup();
            // All monomials of total degree m in the listed variables.
            let mut gens = Vec::new();
            let mut exps = vec![0u32; var_idxs.len()];
            compositions(m, 0, &mut exps, &mut |e: &[u32]| {
                let mut full = vec![0u32; vars.len()];
                for (slot, &vi) in var_idxs.iter().enumerate() {
                    full[vi] = e[slot];
                }
                gens.push(Polynomial::monomial(
                    vars.clone(),
                    Monomial::from_exponents(full),
                    BigRational::one(),
                ));
            });
            Ok((gens, vars))
        }
    }
}

/// Enumerate all ways to write `total` as an ordered sum over the slots.
fn compositions(total: u32, slot: usize, exps: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if slot + 1 == exps.len() {
        exps[slot] = total;
        emit(exps);
        return;
    }
    for e in 0..=total {
        exps[slot] = e;
        compositions(total - e, slot + 1, exps, emit);
    }
}
