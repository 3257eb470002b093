//! Plain-text interchange formats.
//!
//! An algebra file starts with `dim <n>` and lists each nonzero constant as
//! `<i> <j> <k> <p>/<q>` with 1-based indices and `i ≤ j`. A basis-change
//! file starts with `dim <n>` and holds `n` rows of `n` polynomial entries in
//! `t` such as `1/2*t^2-t+3`; column `j` is the `j`-th new basis vector. Text
//! after `#` is ignored in both.

use num_traits::Zero;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{fmt_fraction, parse_rational, UniPoly};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<usize> {
    let (no, line) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `dim <n>` header"))?;
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some("dim"), Some(n), None) => match n.parse::<usize>() {
            Ok(0) => Err(Error::ZeroDimension),
            Ok(n) => Ok(n),
            Err(_) => Err(Error::parse(no, format!("bad dimension `{n}`"))),
        },
        _ => Err(Error::parse(no, "expected `dim <n>`")),
    }
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let mut products = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(Error::parse(no, "expected `i j k value`"));
        }
        let mut idx = [0usize; 3];
        for (slot, tok) in idx.iter_mut().zip(&toks[..3]) {
            *slot = match tok.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => v - 1,
                _ => return Err(Error::parse(no, format!("index `{tok}` outside 1..{n}"))),
            };
        }
        let [i, j, k] = idx;
        if i > j {
            return Err(Error::parse(no, "entries must have i <= j"));
        }
        if !seen.insert((i, j, k)) {
            return Err(Error::parse(no, "duplicate entry"));
        }
        let v = parse_rational(toks[3])
            .ok_or_else(|| Error::parse(no, format!("bad rational `{}`", toks[3])))?;
        products.push((i, j, k, v));
    }
    Algebra::from_products(n, &products)
}

pub fn write_algebra(a: &Algebra) -> String {
    let n = a.dim();
    let mut out = String::new();
    if let Some(l) = a.label() {
        out.push_str(&format!("# {l}\n"));
    }
    out.push_str(&format!("dim {n}\n"));
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let v = a.constant(i, j, k);
                if !v.is_zero() {
                    out.push_str(&format!(
                        "{} {} {} {}\n",
                        i + 1,
                        j + 1,
                        k + 1,
                        fmt_fraction(v)
                    ));
                }
            }
        }
    }
    out
}

/// Reads a square polynomial matrix, returned row-major.
pub fn parse_poly_matrix(text: &str) -> Result<Vec<Vec<UniPoly>>> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let mut rows = Vec::with_capacity(n);
    let mut last = 1;
    for (no, line) in lines {
        last = no;
        let row = line
            .split_whitespace()
            .map(|tok| tok.parse::<UniPoly>().map_err(|e| Error::parse(no, e)))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::parse(
                no,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::parse(
            last,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    Ok(rows)
}

pub fn write_poly_matrix(rows: &[Vec<UniPoly>]) -> String {
    let mut out = format!("dim {}\n", rows.len());
    for row in rows {
        let toks: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}
