//! The line-based algebra and matrix file formats used by the CLI.
//!
//! An algebra file maps one-to-one to a printed product table, so files can
//! be diffed against the classification lists by eye:
//!
//! ```text
//! # comment
//! dim 5
//! char 0
//! symmetric
//! e1*e1 = e2
//! e1*e5 = -1/2 e3
//! e3*e3 = -e2 + e5
//! ```
//!
//! Unlisted products are zero. With the `symmetric` directive each line also
//! declares its mirror; without it both orientations must be listed (the
//! form Suttles-style data is given in). Conflicting declarations are
//! rejected with the offending line. Coefficients are exact rationals "a/b"
//! (residues over a prime field).
//!
//! A matrix file is a `convention columns-are-images` line, `rows n`, and
//! n whitespace-separated rows of rationals.

use std::collections::HashMap;

use crate::algebra::{Algebra, Symmetrize};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::FileParse {
        line,
        msg: msg.into(),
    }
}

/// Parse the algebra file format.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut dim: Option<usize> = None;
    let mut field: Option<Field> = None;
    let mut symmetric = false;
    let mut products: Vec<(usize, (usize, usize), Vec<(usize, Scalar)>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("dim") {
            if dim.is_some() {
                return Err(parse_err(lineno, "duplicate 'dim' directive"));
            }
            dim = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(lineno, "expected 'dim <n>'"))?,
            );
            continue;
        }
        if let Some(rest) = line.strip_prefix("char") {
            if field.is_some() {
                return Err(parse_err(lineno, "duplicate 'char' directive"));
            }
            let c = rest
                .trim()
                .parse::<u64>()
                .map_err(|_| parse_err(lineno, "expected 'char <c>'"))?;
            field = Some(if c == 0 {
                Field::rationals()
            } else {
                Field::prime(c).map_err(|_| {
                    parse_err(lineno, format!("characteristic {c} is not 0 or a prime >= 5"))
                })?
            });
            continue;
        }
        if line == "symmetric" {
            symmetric = true;
            continue;
        }
        // Product line: eI*eJ = rhs.
        let Some(dim) = dim else {
            return Err(parse_err(lineno, "product line before 'dim' directive"));
        };
        let Some(f) = field else {
            return Err(parse_err(lineno, "product line before 'char' directive"));
        };
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| parse_err(lineno, "expected 'eI*eJ = ...'"))?;
        let (i, j) = parse_lhs(lhs, dim, lineno)?;
        let terms = parse_rhs(rhs, f, dim, lineno)?;
        products.push((lineno, (i, j), terms));
    }

    let dim = dim.ok_or_else(|| parse_err(0, "missing 'dim' directive"))?;
    let field = field.ok_or_else(|| parse_err(0, "missing 'char' directive"))?;

    // Conflict detection with line numbers, including mirrored lines.
    let mut seen: HashMap<(usize, usize), (usize, Vec<Scalar>)> = HashMap::new();
    let mut table: Vec<((usize, usize), Vec<(usize, Scalar)>)> = Vec::new();
    for (lineno, (i, j), terms) in &products {
        let mut col = vec![field.zero(); dim];
        for (k, c) in terms {
            col[*k] = field.add(&col[*k], c);
        }
        let mut targets = vec![(*i, *j)];
        if symmetric && i != j {
            targets.push((*j, *i));
        }
        for t in targets {
            match seen.get(&t) {
                None => {
                    seen.insert(t, (*lineno, col.clone()));
                }
                Some((prev_line, prev)) if prev != &col => {
                    return Err(parse_err(
                        *lineno,
                        format!(
                            "conflicting declaration for e{}*e{} (see line {prev_line})",
                            t.0 + 1,
                            t.1 + 1
                        ),
                    ));
                }
                Some(_) => {}
            }
        }
        table.push(((*i, *j), terms.clone()));
        if symmetric && i != j {
            table.push(((*j, *i), terms.clone()));
        }
    }
    Algebra::from_products(field, dim, &table, Symmetrize::No)
}

fn parse_basis_ref(tok: &str, dim: usize, lineno: usize) -> Result<usize> {
    let idx = tok
        .strip_prefix('e')
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(|| parse_err(lineno, format!("expected basis vector 'eK', got '{tok}'")))?;
    if idx == 0 || idx > dim {
        return Err(parse_err(
            lineno,
            format!("basis index e{idx} out of range 1..={dim}"),
        ));
    }
    Ok(idx - 1)
}

fn parse_lhs(lhs: &str, dim: usize, lineno: usize) -> Result<(usize, usize)> {
    let mut parts = lhs.split('*');
    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(parse_err(lineno, "left side must be 'eI*eJ'"));
    };
    Ok((
        parse_basis_ref(a.trim(), dim, lineno)?,
        parse_basis_ref(b.trim(), dim, lineno)?,
    ))
}

/// rhs := '0' | term (('+'|'-') term)* ; term := [rational ['*']] eK
fn parse_rhs(rhs: &str, field: Field, dim: usize, lineno: usize) -> Result<Vec<(usize, Scalar)>> {
    let rhs = rhs.trim();
    if rhs == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    // Split into sign-prefixed chunks.
    let mut chunks: Vec<(i64, String)> = Vec::new();
    let mut sign = 1i64;
    let mut cur = String::new();
    let mut first = true;
    for ch in rhs.chars() {
        match ch {
            '+' | '-' => {
                if !cur.trim().is_empty() {
                    chunks.push((sign, cur.trim().to_string()));
                } else if !first {
                    return Err(parse_err(lineno, "dangling sign"));
                }
                sign = if ch == '-' { -1 } else { 1 };
                cur.clear();
            }
            _ => cur.push(ch),
        }
        first = false;
    }
    if cur.trim().is_empty() {
        return Err(parse_err(lineno, "empty term"));
    }
    chunks.push((sign, cur.trim().to_string()));

    for (sign, chunk) in chunks {
        // [coefficient] ['*'] eK with whitespace-or-star separation.
        let chunk = chunk.replace('*', " ");
        let toks: Vec<&str> = chunk.split_whitespace().collect();
        let (coeff, basis_tok) = match toks.as_slice() {
            [b] => (field.one(), *b),
            [c, b] => (parse_coefficient(c, field, lineno)?, *b),
            _ => {
                return Err(parse_err(
                    lineno,
                    format!("cannot read term '{}'", chunk.trim()),
                ))
            }
        };
        let k = parse_basis_ref(basis_tok, dim, lineno)?;
        let signed = if sign < 0 { field.neg(&coeff) } else { coeff };
        out.push((k, signed));
    }
    Ok(out)
}

fn parse_coefficient(tok: &str, field: Field, lineno: usize) -> Result<Scalar> {
    let parse_int = |s: &str| -> Result<i64> {
        s.parse::<i64>()
            .map_err(|_| parse_err(lineno, format!("cannot read coefficient '{tok}'")))
    };
    match tok.split_once('/') {
        None => Ok(field.integer(parse_int(tok)?)),
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den == 0 {
                return Err(parse_err(lineno, "zero denominator"));
            }
            if field.characteristic() != 0 && field.integer(den).is_zero() {
                return Err(parse_err(
                    lineno,
                    format!("denominator {den} vanishes in characteristic {}", field.characteristic()),
                ));
            }
            Ok(field.ratio(num, den))
        }
    }
}

/// Render an algebra in the file format. Commutative algebras export with
/// the `symmetric` directive and one orientation per pair; others list every
/// nonzero product.
pub fn export_algebra(a: &Algebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("dim {}\n", a.dim()));
    out.push_str(&format!("char {}\n", a.field().characteristic()));
    let symmetric = a.is_commutative();
    if symmetric {
        out.push_str("symmetric\n");
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if symmetric && j < i {
                continue;
            }
            let col = a.basis_product(i, j);
            if col.iter().all(Scalar::is_zero) {
                continue;
            }
            out.push_str(&format!(
                "e{}*e{} = {}\n",
                i + 1,
                j + 1,
                render_combination(&col)
            ));
        }
    }
    out
}

/// Render a coordinate vector as "c1 eK1 + c2 eK2 ...".
pub fn render_combination(col: &[Scalar]) -> String {
    let mut out = String::new();
    for (k, c) in col.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (sign_str, mag) = match c {
            Scalar::Rat(r) if r < &num::BigRational::from_integer(0.into()) => {
                ("-", Scalar::Rat(-r.clone()))
            }
            _ => ("+", c.clone()),
        };
        if out.is_empty() {
            if sign_str == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign_str == "-" { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(&format!("e{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parse the matrix file format (rational entries).
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let field = Field::rationals();
    let mut rows_declared: Option<usize> = None;
    let mut convention_seen = false;
    let mut data: Vec<Vec<Scalar>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("convention") {
            if rest.trim() != "columns-are-images" {
                return Err(parse_err(
                    lineno,
                    "only 'convention columns-are-images' is supported",
                ));
            }
            convention_seen = true;
            continue;
        }
        if let Some(rest) = line.strip_prefix("rows") {
            rows_declared = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(lineno, "expected 'rows <n>'"))?,
            );
            continue;
        }
        let row: Result<Vec<Scalar>> = line
            .split_whitespace()
            .map(|tok| parse_coefficient(tok, field, lineno))
            .collect();
        data.push(row?);
    }
    if !convention_seen {
        return Err(parse_err(0, "missing 'convention columns-are-images' line"));
    }
    let n = rows_declared.ok_or_else(|| parse_err(0, "missing 'rows' line"))?;
    if data.len() != n {
        return Err(parse_err(
            0,
            format!("declared {n} rows but found {}", data.len()),
        ));
    }
    Matrix::from_rows(field, data)
}

pub fn export_matrix(m: &Matrix) -> String {
    let mut out = String::from("convention columns-are-images\n");
    out.push_str(&format!("rows {}\n", m.rows()));
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
