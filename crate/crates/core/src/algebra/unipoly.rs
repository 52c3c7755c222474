use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclo::{join_terms, CycloNum};

/// Sparse univariate polynomial over cyclotomic scalars. No zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    terms: BTreeMap<u32, CycloNum>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly::default()
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(CycloNum::one())
    }

    pub fn constant(c: CycloNum) -> UniPoly {
        UniPoly::monomial(c, 0)
    }

    /// The variable itself.
    pub fn var() -> UniPoly {
        UniPoly::monomial(CycloNum::one(), 1)
    }

    pub fn monomial(c: CycloNum, k: u32) -> UniPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        UniPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, CycloNum)>>(it: I) -> UniPoly {
        let mut p = UniPoly::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    pub fn add_term(&mut self, k: u32, c: &CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent in the support.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&CycloNum> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, k: u32) -> CycloNum {
        self.terms.get(&k).cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &CycloNum)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &CycloNum) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &CycloNum) -> CycloNum {
        let mut acc = CycloNum::zero();
        let mut last = self.degree().unwrap_or(0);
        for (k, c) in self.terms.iter().rev() {
            acc = &acc * &x.pow((last - k) as u64);
            acc += c;
            last = *k;
        }
        &acc * &x.pow(last as u64)
    }

    /// f(g), by Horner over the sparse support.
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        let mut last = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (k, c) in self.terms.iter().rev() {
            acc = &acc * &g.pow(last - k);
            acc.add_term(0, c);
            last = *k;
        }
        &acc * &g.pow(last)
    }

    /// f(s·t): scales the k-th coefficient by s^k.
    pub fn rescale_var(&self, s: &CycloNum) -> UniPoly {
        UniPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, c * &s.pow(*k as u64))))
    }

    /// Splits into (terms of degree <= 1, terms of degree >= 2).
    pub fn split_affine(&self) -> (UniPoly, UniPoly) {
        let mut low = UniPoly::zero();
        let mut high = UniPoly::zero();
        for (k, c) in &self.terms {
            if *k <= 1 {
                low.terms.insert(*k, c.clone());
            } else {
                high.terms.insert(*k, c.clone());
            }
        }
        (low, high)
    }

    /// Text form in the polynomial grammar using `var` as the variable name.
    pub fn fmt_var(&self, var: char) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.terms.iter().rev() {
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            parts.extend(c.terms_with_monomial(&mono));
        }
        join_terms(parts)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var('t'))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.fmt_var('t'))
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
