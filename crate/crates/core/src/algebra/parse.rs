//! Reader for the polynomial text grammar.
//!
//! Accepts sums of terms over the variables x, y, t with rational
//! coefficients `p/q`, roots of unity `zN^k` (and `i` for z4^1), explicit or
//! implicit multiplication, parentheses and non-negative integer powers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::bipoly::BiPoly;
use super::cyclo::CycloNum;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Largest cyclotomic order accepted when no limit is given.
pub const DEFAULT_MAX_ORDER: u32 = 64;

type Key = [u32; 3];

#[derive(Clone, Default)]
struct Tri(BTreeMap<Key, CycloNum>);

impl Tri {
    fn constant(c: CycloNum) -> Tri {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert([0, 0, 0], c);
        }
        Tri(m)
    }

    fn var(idx: usize) -> Tri {
        let mut k = [0; 3];
        k[idx] = 1;
        Tri(BTreeMap::from([(k, CycloNum::one())]))
    }

    fn add(&self, o: &Tri, sign: bool) -> Tri {
        let mut out = self.0.clone();
        for (k, c) in &o.0 {
            let c = if sign { c.clone() } else { -c };
            let v = out.entry(*k).or_insert_with(CycloNum::zero);
            *v += &c;
            if v.is_zero() {
                out.remove(k);
            }
        }
        Tri(out)
    }

    fn mul(&self, o: &Tri) -> Tri {
        let mut out: BTreeMap<Key, CycloNum> = BTreeMap::new();
        for (a, p) in &self.0 {
            for (b, q) in &o.0 {
                let k = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                let v = out.entry(k).or_insert_with(CycloNum::zero);
                *v += &(p * q);
            }
        }
        out.retain(|_, v| !v.is_zero());
        Tri(out)
    }

    fn as_constant(&self) -> Option<CycloNum> {
        match self.0.len() {
            0 => Some(CycloNum::zero()),
            1 => self.0.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    max_order: u32,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at offset {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn small_int(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let d = self.digits()?;
        let v: i64 = match i64::try_from(&d) {
            Ok(v) if v <= u32::MAX as i64 => v,
            _ => return self.err("exponent too large"),
        };
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<Tri> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Tri::default().add(&self.term()?, false)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?, true);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?, false);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Tri> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let den = self.power()?;
                    let Some(c) = den.as_constant() else {
                        return self.err("division by a non-constant");
                    };
                    let inv = c.inv().map_err(|_| Error::Parse("division by zero".into()))?;
                    acc = acc.mul(&Tri::constant(inv));
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Tri> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.small_int()?;
        if e >= 0 {
            let mut acc = Tri::constant(CycloNum::one());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        match base.as_constant() {
            Some(c) => {
                let v = c.powi(e).map_err(|_| Error::Parse("zero to a negative power".into()))?;
                Ok(Tri::constant(v))
            }
            None => self.err("negative power of a non-constant"),
        }
    }

    fn atom(&mut self) -> Result<Tri> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(Tri::constant(CycloNum::from_rational(BigRational::from_integer(n))))
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Tri::var(0))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Tri::var(1))
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Tri::var(2))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Tri::constant(CycloNum::root_of_unity(4, 1)))
            }
            Some(b'z') => {
                self.pos += 1;
                let n = self.digits()?;
                let n = match u32::try_from(&n) {
                    Ok(n) if n >= 1 => n,
                    _ => return self.err("bad root-of-unity order"),
                };
                if n > self.max_order {
                    return self.err(&format!("root-of-unity order {n} exceeds limit {}", self.max_order));
                }
                Ok(Tri::constant(CycloNum::root_of_unity(n, 1)))
            }
            _ => self.err("unexpected input"),
        }
    }
}

fn parse_tri(s: &str, max_order: u32) -> Result<Tri> {
    let mut p = Parser { s: s.as_bytes(), pos: 0, max_order };
    if p.peek().is_none() {
        return p.err("empty input");
    }
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a polynomial in x and y.
pub fn parse_bipoly(s: &str, max_order: u32) -> Result<BiPoly> {
    let tri = parse_tri(s, max_order)?;
    let mut out = BiPoly::zero();
    for (k, c) in tri.0 {
        if k[2] != 0 {
            return Err(Error::Parse("variable t not allowed here".into()));
        }
        out.add_term((k[0], k[1]), &c);
    }
    Ok(out)
}

/// Parses a univariate polynomial. Any one of x, y, t may serve as the
/// variable, but not two of them at once.
pub fn parse_unipoly(s: &str, max_order: u32) -> Result<UniPoly> {
    let tri = parse_tri(s, max_order)?;
    let mut used = [false; 3];
    for k in tri.0.keys() {
        for (u, e) in used.iter_mut().zip(k) {
            *u |= *e > 0;
        }
    }
    if used.iter().filter(|u| **u).count() > 1 {
        return Err(Error::Parse("expected a polynomial in one variable".into()));
    }
    Ok(UniPoly::from_terms(tri.0.into_iter().map(|(k, c)| (k[0] + k[1] + k[2], c))))
}

/// Parses a scalar expression.
pub fn parse_scalar(s: &str, max_order: u32) -> Result<CycloNum> {
    parse_tri(s, max_order)?
        .as_constant()
        .ok_or_else(|| Error::Parse(format!("expected a scalar, got '{s}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclo::cyclo_make;

    const M: u32 = DEFAULT_MAX_ORDER;

    #[test]
    fn grammar_examples_roundtrip() {
        for s in ["-1/2*x^3 + y^2", "x^4 + y^4", "x^5*y - x*y^5", "z3^2", "1 + z5^1", "(1/3 + 2/3*z3^1)*y^2 - x", "0"] {
            let p = parse_bipoly(s, M).unwrap();
            assert_eq!(p.to_string(), s);
        }
        let p = parse_bipoly("y^2 - 1/2*x^3", M).unwrap();
        assert_eq!(p.to_string(), "-1/2*x^3 + y^2");
        let f = parse_unipoly("z4^1*t^2", M).unwrap();
        assert_eq!(f.to_string(), "z4^1*t^2");
    }

    #[test]
    fn implicit_products_and_parens() {
        let a = parse_bipoly("2x(y+1)^2", M).unwrap();
        let b = parse_bipoly("2*x*y^2 + 4*x*y + 2*x", M).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("z3^1 + z3^2", M).unwrap(), CycloNum::from_int(-1));
        assert_eq!(parse_scalar("i", M).unwrap(), cyclo_make(4, 1));
        assert_eq!(parse_scalar("z5^-1", M).unwrap(), cyclo_make(5, 4));
        assert_eq!(parse_scalar("3/6", M).unwrap(), CycloNum::from_ratio(1, 2));
    }

    #[test]
    fn errors() {
        assert!(parse_bipoly("x +", M).is_err());
        assert!(parse_bipoly("x + t", M).is_err());
        assert!(parse_unipoly("x*y", M).is_err());
        assert!(parse_scalar("z65^1", M).is_err());
        assert!(parse_scalar("x", M).is_err());
        assert!(parse_scalar("1/0", M).is_err());
    }
}
