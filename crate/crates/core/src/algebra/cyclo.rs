//! Exact elements of cyclotomic fields Q(ζ_n).
//!
//! An element is stored in the power basis 1, ζ_n, …, ζ_n^{φ(n)-1} modulo the
//! n-th cyclotomic polynomial. Orders congruent to 2 mod 4 never occur:
//! Q(ζ_{2m}) = Q(ζ_m) for odd m and ζ_{2m} = -ζ_m^{(m+1)/2}. Elements that
//! happen to be rational are always kept at order 1, so the common case of
//! rational arithmetic never touches the field tables.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Tables for one cyclotomic field.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    phi: usize,
    /// Φ_n, constant term first; monic.
    modulus: Vec<BigInt>,
    /// `powers[k]` = x^k mod Φ_n, for 0 <= k < max(n, 2φ - 1).
    powers: Vec<Vec<BigInt>>,
}

impl CycloField {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Reduces an integer coefficient vector of any length modulo Φ_n in place
    /// and truncates it to φ(n) entries.
    pub(crate) fn reduce_ints(&self, v: &mut Vec<BigInt>) {
        let phi = self.phi;
        for k in (phi..v.len()).rev() {
            let c = std::mem::take(&mut v[k]);
            if c.is_zero() {
                continue;
            }
            for j in 0..phi {
                let m = &self.modulus[j];
                if !m.is_zero() {
                    v[k - phi + j] -= &c * m;
                }
            }
        }
        v.truncate(phi);
        v.resize(phi, BigInt::zero());
    }

    fn reduce_rats(&self, v: &mut Vec<BigRational>) {
        let phi = self.phi;
        for k in (phi..v.len()).rev() {
            let c = std::mem::replace(&mut v[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for j in 0..phi {
                let m = &self.modulus[j];
                if !m.is_zero() {
                    v[k - phi + j] -= &c * BigRational::from_integer(m.clone());
                }
            }
        }
        v.truncate(phi);
        v.resize(phi, BigRational::zero());
    }

    pub(crate) fn power(&self, k: u64) -> &[BigInt] {
        &self.powers[(k % self.order as u64) as usize]
    }
}

pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn canonical_order(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Φ_n with integer coefficients, constant term first, via
/// Φ_n = (x^n - 1) / ∏_{d | n, d < n} Φ_d.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &div);
        }
    }
    let p = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

fn field_cache() -> &'static Mutex<HashMap<u32, Arc<CycloField>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared tables for Q(ζ_n); `n` must already be canonical.
pub fn field(n: u32) -> Arc<CycloField> {
    debug_assert_eq!(n, canonical_order(n));
    if let Some(f) = field_cache().lock().unwrap().get(&n) {
        return f.clone();
    }
    let modulus = cyclotomic_polynomial(n).as_ref().clone();
    let phi = modulus.len() - 1;
    let count = (n as usize).max(2 * phi);
    let mut powers = Vec::with_capacity(count);
    let mut cur = vec![BigInt::zero(); phi.max(1)];
    cur[0] = BigInt::one();
    if phi == 0 {
        unreachable!("cyclotomic polynomial has positive degree");
    }
    for _ in 0..count {
        powers.push(cur.clone());
        // multiply by x and reduce
        let mut next = vec![BigInt::zero(); phi + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = c.clone();
        }
        let top = std::mem::take(&mut next[phi]);
        if !top.is_zero() {
            for j in 0..phi {
                next[j] -= &top * &modulus[j];
            }
        }
        next.truncate(phi);
        cur = next;
    }
    let f = Arc::new(CycloField {
        order: n,
        phi,
        modulus,
        powers,
    });
    field_cache().lock().unwrap().insert(n, f.clone());
    f
}

/// An element of Q(ζ_n) in the power basis.
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    /// Builds an element from power-basis coefficients of any length; the
    /// vector is reduced modulo Φ_n. `order` may be any positive integer.
    pub fn from_power_coeffs(order: u32, coeffs: Vec<BigRational>) -> CycloNum {
        assert!(order >= 1);
        if order % 4 == 2 {
            // re-express ζ_{2m}^k through ζ_m
            let mut acc = CycloNum::zero();
            for (k, c) in coeffs.into_iter().enumerate() {
                if !c.is_zero() {
                    acc += &(CycloNum::root_of_unity(order, k as i64) * CycloNum::from_rational(c));
                }
            }
            return acc;
        }
        let f = field(order);
        let mut v = coeffs;
        if v.len() < f.phi {
            v.resize(f.phi, BigRational::zero());
        }
        f.reduce_rats(&mut v);
        CycloNum { field: f, coeffs: v }.tidy()
    }

    pub(crate) fn from_reduced_parts(field: Arc<CycloField>, coeffs: Vec<BigRational>) -> CycloNum {
        debug_assert_eq!(coeffs.len(), field.phi);
        CycloNum { field, coeffs }.tidy()
    }

    pub fn zero() -> CycloNum {
        CycloNum::from_rational(BigRational::zero())
    }

    pub fn one() -> CycloNum {
        CycloNum::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> CycloNum {
        CycloNum::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(p: i64, q: i64) -> CycloNum {
        assert!(q != 0, "zero denominator");
        CycloNum::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(r: BigRational) -> CycloNum {
        CycloNum {
            field: field(1),
            coeffs: vec![r],
        }
    }

    /// ζ_n^k in canonical form; `k` may be negative.
    pub fn root_of_unity(n: u32, k: i64) -> CycloNum {
        assert!(n >= 1, "root of unity of order 0");
        let k = k.rem_euclid(n as i64) as u64;
        if n % 4 == 2 {
            let m = n / 2;
            let e = (k * ((m as u64 + 1) / 2)) % m as u64;
            let base = CycloNum::root_of_unity(m, e as i64);
            return if k % 2 == 1 { -base } else { base };
        }
        let f = field(n);
        let coeffs = f
            .power(k)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        CycloNum { field: f, coeffs }.tidy()
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.field.order == 1 && self.coeffs[0].is_one()
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.field.order == 1 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn tidy(mut self) -> CycloNum {
        if self.field.order != 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            let c = std::mem::replace(&mut self.coeffs[0], BigRational::zero());
            return CycloNum::from_rational(c);
        }
        self
    }

    /// Re-expresses the element in Q(ζ_m); `m` must be a multiple of the
    /// current order.
    pub fn promote(&self, m: u32) -> CycloNum {
        let m = canonical_order(m);
        let n = self.field.order;
        assert!(m % n == 0, "cannot promote order {n} to {m}");
        if m == n {
            return self.clone();
        }
        let target = field(m);
        let step = (m / n) as u64;
        let mut out = vec![BigRational::zero(); target.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(target.power(i as u64 * step)) {
                if !p.is_zero() {
                    *o += c * BigRational::from_integer(p.clone());
                }
            }
        }
        CycloNum {
            field: target,
            coeffs: out,
        }
    }

    fn unify(a: &CycloNum, b: &CycloNum) -> (CycloNum, CycloNum) {
        let (n, m) = (a.field.order, b.field.order);
        let l = n.lcm(&m);
        (a.promote(l), b.promote(l))
    }

    fn same_field(&self, other: &CycloNum) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.order == other.field.order
    }

    /// The Galois automorphism ζ ↦ ζ^k; `k` must be coprime to the order.
    pub fn galois(&self, k: u32) -> CycloNum {
        let n = self.field.order;
        debug_assert_eq!(k.gcd(&n), 1);
        let f = &self.field;
        let mut out = vec![BigRational::zero(); f.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(f.power(i as u64 * k as u64)) {
                if !p.is_zero() {
                    *o += c * BigRational::from_integer(p.clone());
                }
            }
        }
        CycloNum {
            field: f.clone(),
            coeffs: out,
        }
        .tidy()
    }

    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycloNum::from_rational(r.recip()));
        }
        // a^{-1} = ∏_{σ ≠ 1} σ(a) / N(a)
        let n = self.field.order;
        let mut conj = CycloNum::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                conj = &conj * &self.galois(k);
            }
        }
        let norm = &conj * self;
        let norm = norm
            .as_rational()
            .expect("field norm is rational")
            .clone();
        Ok(conj.scale(&norm.recip()))
    }

    pub fn checked_div(&self, other: &CycloNum) -> Result<CycloNum> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &BigRational) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
        .tidy()
    }

    pub fn pow(&self, e: u64) -> CycloNum {
        let mut base = self.clone();
        let mut acc = CycloNum::one();
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

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<CycloNum> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Returns `n` when the element is a primitive n-th root of unity.
    pub fn root_order(&self) -> Option<u32> {
        let n = self.field.order;
        // the roots of unity in Q(ζ_n) are exactly ±ζ_n^k
        let big = n.lcm(&2);
        if !self.pow(big as u64).is_one() {
            return None;
        }
        (1..=big)
            .filter(|m| big % m == 0)
            .find(|&m| self.pow(m as u64).is_one())
    }

    /// Smallest order m (never ≡ 2 mod 4) with the element in Q(ζ_m).
    pub fn minimal_order(&self) -> u32 {
        let n = self.field.order;
        if n == 1 {
            return 1;
        }
        for m in 1..n {
            if n % m != 0 || m % 4 == 2 {
                continue;
            }
            // fixed by Gal(Q(ζ_n)/Q(ζ_m)) = {k ≡ 1 mod m}
            let fixed = (1..n)
                .filter(|k| k % m == 1 % m && k.gcd(&n) == 1)
                .all(|k| self.galois(k) == *self);
            if fixed {
                return m;
            }
        }
        n
    }

    /// The same element re-expressed at its minimal order.
    pub fn normalized(&self) -> CycloNum {
        let m = self.minimal_order();
        if m == self.field.order {
            return self.clone();
        }
        self.demote(m).expect("element lies in the subfield")
    }

    /// Expresses the element in Q(ζ_m) for m dividing the order, if possible.
    pub fn demote(&self, m: u32) -> Option<CycloNum> {
        let m = canonical_order(m);
        let n = self.field.order;
        if n % m != 0 {
            return None;
        }
        let small = field(m);
        // columns: ζ_m^j promoted into Q(ζ_n)
        let cols: Vec<Vec<BigRational>> = (0..small.phi)
            .map(|j| CycloNum::root_of_unity(m, j as i64).promote(n).coeffs)
            .collect();
        let rows = self.field.phi;
        let mut a: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let sol = crate::algebra::linalg::solve_augmented(&mut a, small.phi)?;
        Some(CycloNum::from_reduced_parts(small, sol))
    }

    /// Approximate complex value, for display and plotting only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let n = self.field.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Nonzero (rational, power) pairs of the canonical representation.
    pub fn canonical_terms(&self) -> (u32, Vec<(BigRational, usize)>) {
        let c = self.normalized();
        let terms = c
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(k, r)| (r.clone(), k))
            .collect();
        (c.field.order, terms)
    }

    /// Total order used for deterministic sorting: by minimal order, then
    /// coefficients. Not a field ordering.
    pub fn canonical_cmp(&self, other: &CycloNum) -> Ordering {
        let (na, ta) = self.canonical_terms();
        let (nb, tb) = other.canonical_terms();
        na.cmp(&nb).then_with(|| {
            let ka: Vec<_> = ta.iter().map(|(r, k)| (*k, r.clone())).collect();
            let kb: Vec<_> = tb.iter().map(|(r, k)| (*k, r.clone())).collect();
            ka.cmp(&kb)
        })
    }
}

impl Default for CycloNum {
    fn default() -> Self {
        CycloNum::zero()
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &CycloNum) -> bool {
        if self.same_field(other) {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = CycloNum::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNum {}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({self})")
    }
}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Writes `coeff * suffix` in the text grammar, with the sign split off.
/// Returns (is_negative, body).
pub(crate) fn signed_term(r: &BigRational, zeta: Option<(u32, usize)>, mono: &str) -> (bool, String) {
    let neg = r.is_negative();
    let a = r.abs();
    let mut parts: Vec<String> = Vec::new();
    let has_rest = zeta.is_some() || !mono.is_empty();
    if !a.is_one() || !has_rest {
        parts.push(fmt_rational(&a));
    }
    if let Some((n, k)) = zeta {
        parts.push(format!("z{n}^{k}"));
    }
    if !mono.is_empty() {
        parts.push(mono.to_string());
    }
    (neg, parts.join("*"))
}

pub(crate) fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => s.push_str(&body),
            (0, true) => {
                s.push('-');
                s.push_str(&body);
            }
            (_, false) => {
                s.push_str(" + ");
                s.push_str(&body);
            }
            (_, true) => {
                s.push_str(" - ");
                s.push_str(&body);
            }
        }
    }
    s
}

impl CycloNum {
    /// Canonical signed terms of `self * mono`.
    pub(crate) fn terms_with_monomial(&self, mono: &str) -> Vec<(bool, String)> {
        let (n, terms) = self.canonical_terms();
        if terms.len() > 1 {
            // c·ζ_n^k prints as a single term
            for k in 1..n as i64 {
                let z = CycloNum::root_of_unity(n, k);
                if let Some(r) = (self * &z.pow(n as u64 - 1)).as_rational() {
                    return vec![signed_term(r, Some((n, k as usize)), mono)];
                }
            }
        }
        let term = |(r, k): (BigRational, usize), mono: &str| {
            let zeta = if k == 0 { None } else { Some((n, k)) };
            signed_term(&r, zeta, mono)
        };
        if terms.len() > 1 && !mono.is_empty() {
            let inner: Vec<_> = terms.into_iter().map(|t| term(t, "")).collect();
            return vec![(false, format!("({})*{mono}", join_terms(inner)))];
        }
        terms.into_iter().map(|t| term(t, mono)).collect()
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(self.terms_with_monomial("")))
    }
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        if !self.same_field(rhs) {
            let (a, b) = CycloNum::unify(self, rhs);
            return &a + &b;
        }
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
        .tidy()
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        if !self.same_field(rhs) {
            let (a, b) = CycloNum::unify(self, rhs);
            return &a - &b;
        }
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
        .tidy()
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        if !self.same_field(rhs) {
            let (a, b) = CycloNum::unify(self, rhs);
            return &a * &b;
        }
        let phi = self.field.phi;
        let mut v = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        self.field.reduce_rats(&mut v);
        CycloNum {
            field: self.field.clone(),
            coeffs: v,
        }
        .tidy()
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

/// Panics on division by zero; use [`CycloNum::checked_div`] for a `Result`.
impl<'a> Div<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn div(self, rhs: &CycloNum) -> CycloNum {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: &CycloNum) -> CycloNum {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, rhs: &CycloNum) {
        if self.same_field(rhs) {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
            *self = std::mem::take(self).tidy();
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycloNum> for CycloNum {
    fn sub_assign(&mut self, rhs: &CycloNum) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycloNum> for CycloNum {
    fn mul_assign(&mut self, rhs: &CycloNum) {
        *self = &*self * rhs;
    }
}

impl Zero for CycloNum {
    fn zero() -> Self {
        CycloNum::zero()
    }
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
}

impl One for CycloNum {
    fn one() -> Self {
        CycloNum::one()
    }
}

impl From<i64> for CycloNum {
    fn from(n: i64) -> Self {
        CycloNum::from_int(n)
    }
}

impl From<BigRational> for CycloNum {
    fn from(r: BigRational) -> Self {
        CycloNum::from_rational(r)
    }
}

/// ζ_n^k. Same as [`CycloNum::root_of_unity`].
pub fn cyclo_make(n: u32, k: i64) -> CycloNum {
    CycloNum::root_of_unity(n, k)
}

/// True iff `alpha == beta^m`.
pub fn eq_power(alpha: &CycloNum, beta: &CycloNum, m: u64) -> bool {
    *alpha == beta.pow(m)
}
