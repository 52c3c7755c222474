//! Parsers for the inline argument syntax: words, maps, matrices, triples.

use torplane::algebra::{parse_bipoly, parse_scalar, parse_unipoly, CycloNum, UniPoly};
use torplane::planeaut::{jvdk_factor, AutWord, ElemMap};
use torplane::smallgrp::Mat2;
use torplane::{Error, Result};

/// Splits on `sep` outside brackets and parentheses.
pub fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    let last = s[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn strip_wrapped<'a>(s: &'a str, open: char, close: char) -> Option<&'a str> {
    s.trim().strip_prefix(open)?.strip_suffix(close)
}

pub fn scalars(s: &str, n: usize, max_order: u32) -> Result<Vec<CycloNum>> {
    let parts = split_top(s, ',');
    if parts.len() != n {
        return Err(perr(format!("expected {n} comma-separated values, got '{s}'")));
    }
    parts.into_iter().map(|p| parse_scalar(p, max_order)).collect()
}

pub fn scalar_list(s: &str, max_order: u32) -> Result<Vec<CycloNum>> {
    let inner = strip_wrapped(s, '[', ']').unwrap_or(s);
    split_top(inner, ',').into_iter().filter(|p| !p.is_empty()).map(|p| parse_scalar(p, max_order)).collect()
}

/// `d,e` pairs of integers.
pub fn int_pair(s: &str) -> Result<(u32, u32)> {
    let parts = split_top(s, ',');
    match parts.as_slice() {
        [a, b] => Ok((
            a.parse().map_err(|_| perr(format!("bad integer '{a}'")))?,
            b.parse().map_err(|_| perr(format!("bad integer '{b}'")))?,
        )),
        _ => Err(perr(format!("expected 'd,e', got '{s}'"))),
    }
}

/// `a, b, c, d` (row-major) or `[[a, b], [c, d]]`.
pub fn matrix(s: &str, max_order: u32) -> Result<Mat2> {
    let flat: String = s.chars().filter(|c| *c != '[' && *c != ']').collect();
    let v = scalars(&flat, 4, max_order)?;
    let [a, b, c, d]: [CycloNum; 4] = v.try_into().expect("four entries");
    Ok(Mat2::new(a, b, c, d))
}

/// One elementary factor in the notation used for output:
/// `TriPlus(α, β, f)`, `TriMinus(α, β, f)`, `Swap`, `Affine([[a, b], [c, d]], [e, f])`.
pub fn elem(s: &str, max_order: u32) -> Result<ElemMap> {
    let s = s.trim();
    if s == "Swap" {
        return Ok(ElemMap::Swap);
    }
    let (name, rest) = s.split_once('(').ok_or_else(|| perr(format!("unknown factor '{s}'")))?;
    let args = rest.strip_suffix(')').ok_or_else(|| perr(format!("unclosed factor '{s}'")))?;
    let args = split_top(args, ',');
    let tri = |args: &[&str]| -> Result<(CycloNum, CycloNum, UniPoly)> {
        match args {
            [a, b, f] => Ok((parse_scalar(a, max_order)?, parse_scalar(b, max_order)?, parse_unipoly(f, max_order)?)),
            _ => Err(perr(format!("expected (alpha, beta, f) in '{s}'"))),
        }
    };
    match name.trim() {
        "TriPlus" => {
            let (a, b, f) = tri(&args)?;
            ElemMap::tri_plus(a, b, f)
        }
        "TriMinus" => {
            let (a, b, f) = tri(&args)?;
            ElemMap::tri_minus(a, b, f)
        }
        "Affine" => match args.as_slice() {
            [m, v] => {
                let m = matrix(m, max_order)?;
                let v = scalar_list(v, max_order)?;
                let [v0, v1]: [CycloNum; 2] =
                    v.try_into().map_err(|_| perr("affine translation needs two entries"))?;
                ElemMap::affine(m.0, [v0, v1])
            }
            _ => Err(perr(format!("expected (matrix, vector) in '{s}'"))),
        },
        other => Err(perr(format!("unknown factor '{other}'"))),
    }
}

/// A word `[F1, F2, ...]` of elementary factors, or a map `(u, v)` given by
/// its components, which is factored.
pub fn word(s: &str, max_order: u32) -> Result<AutWord> {
    if let Some(inner) = strip_wrapped(s, '[', ']') {
        let factors = split_top(inner, ',').into_iter().map(|f| elem(f, max_order)).collect::<Result<Vec<_>>>()?;
        return AutWord::new(factors);
    }
    if let Some(inner) = strip_wrapped(s, '(', ')') {
        if let [u, v] = split_top(inner, ',').as_slice() {
            return jvdk_factor(&parse_bipoly(u, max_order)?, &parse_bipoly(v, max_order)?);
        }
    }
    Err(perr(format!("expected '[factors]' or '(u, v)', got '{s}'")))
}

/// `α, β, f` for an element of Jonq.
pub fn jonq_triple(s: &str, max_order: u32) -> Result<(CycloNum, CycloNum, UniPoly)> {
    match split_top(s, ',').as_slice() {
        [a, b, f] => Ok((parse_scalar(a, max_order)?, parse_scalar(b, max_order)?, parse_unipoly(f, max_order)?)),
        _ => Err(perr(format!("expected 'alpha, beta, f', got '{s}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_roundtrip_through_display() {
        let w = word("[TriMinus(1, 1, x^3), TriPlus(2, z3^1, y^2 - 1/2), Swap]", 64).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(word(&w.to_string(), 64).unwrap(), w);
        let a = word("[Affine([[1, 2], [0, 1]], [3, -1])]", 64).unwrap();
        assert_eq!(word(&a.to_string(), 64).unwrap(), a);
        assert_eq!(word("[]", 64).unwrap().len(), 0);
    }

    #[test]
    fn maps_are_factored() {
        let w = word("(x + y^2, y)", 64).unwrap();
        assert_eq!(w.to_string(), "[TriPlus(1, 1, y^2)]");
        assert!(word("x + y", 64).is_err());
    }

    #[test]
    fn splitting() {
        assert_eq!(split_top("a, (b, c), [d, e]", ','), ["a", "(b, c)", "[d, e]"]);
        assert!(split_top("", ',').is_empty());
        assert_eq!(int_pair("3,2").unwrap(), (3, 2));
        assert!(matrix("[[0, 1], [-1, 0]]", 64).is_ok());
    }
}
