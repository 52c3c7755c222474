use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclo::{field, join_terms, CycloField, CycloNum};
use super::modular::{split_primes, PrimeSet, MAX_FAN_IN};
use super::unipoly::UniPoly;

/// Sparse polynomial in x, y over cyclotomic scalars. The key (i, j) stands
/// for x^i y^j; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), CycloNum>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn one() -> BiPoly {
        BiPoly::constant(CycloNum::one())
    }

    pub fn constant(c: CycloNum) -> BiPoly {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn x() -> BiPoly {
        BiPoly::monomial(CycloNum::one(), 1, 0)
    }

    pub fn y() -> BiPoly {
        BiPoly::monomial(CycloNum::one(), 0, 1)
    }

    pub fn monomial(c: CycloNum, i: u32, j: u32) -> BiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), CycloNum)>>(it: I) -> BiPoly {
        let mut p = BiPoly::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    /// f(x) as a bivariate polynomial.
    pub fn from_uni_x(f: &UniPoly) -> BiPoly {
        BiPoly {
            terms: f.terms().map(|(k, c)| ((k, 0), c.clone())).collect(),
        }
    }

    /// f(y) as a bivariate polynomial.
    pub fn from_uni_y(f: &UniPoly) -> BiPoly {
        BiPoly {
            terms: f.terms().map(|(k, c)| ((0, k), c.clone())).collect(),
        }
    }

    pub fn add_term(&mut self, k: (u32, u32), c: &CycloNum) {
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

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &CycloNum)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> CycloNum {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(CycloNum::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    /// Homogeneous component of top total degree.
    pub fn top_form(&self) -> BiPoly {
        let Some(d) = self.total_degree() else {
            return BiPoly::zero();
        };
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i + j == d)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i + j == d)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|(i, j)| i + j);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &CycloNum) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        if self.len() > 16 {
            return mul_kernel(self, &BiPoly::constant(c.clone()));
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
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

    /// Exchanges the roles of x and y.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &CycloNum, y: &CycloNum) -> CycloNum {
        let mut acc = CycloNum::zero();
        for ((i, j), c) in &self.terms {
            acc += &(c * &(x.pow(*i as u64) * y.pow(*j as u64)));
        }
        acc
    }

    /// Coefficients of x^i as polynomials in y.
    fn x_slices(&self) -> BTreeMap<u32, UniPoly> {
        let mut out: BTreeMap<u32, UniPoly> = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            out.entry(*i).or_default().add_term(*j, c);
        }
        out
    }

    /// p(u, v) for bivariate u, v.
    pub fn subst(&self, u: &BiPoly, v: &BiPoly) -> BiPoly {
        let slices = self.x_slices();
        let Some(&top) = slices.keys().next_back() else {
            return BiPoly::zero();
        };
        let mut acc = BiPoly::zero();
        let mut last = top;
        for (i, slice) in slices.iter().rev() {
            acc = &acc * &u.pow(last - i);
            acc = &acc + &eval_uni_at(slice, v);
            last = *i;
        }
        &acc * &u.pow(last)
    }

    /// p(u(t), v(t)) for univariate u, v.
    pub fn subst_uni(&self, u: &UniPoly, v: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        let mut upow: HashMap<u32, UniPoly> = HashMap::new();
        let mut vpow: HashMap<u32, UniPoly> = HashMap::new();
        for ((i, j), c) in &self.terms {
            let ui = upow.entry(*i).or_insert_with(|| u.pow(*i)).clone();
            let vj = vpow.entry(*j).or_insert_with(|| v.pow(*j)).clone();
            acc = &acc + &(&ui * &vj).scale(c);
        }
        acc
    }

    /// p(a x + b y, c x + d y): a linear change of variables.
    pub fn linear_subst(&self, m: [[&CycloNum; 2]; 2]) -> BiPoly {
        let u = BiPoly::from_terms([((1, 0), m[0][0].clone()), ((0, 1), m[0][1].clone())]);
        let v = BiPoly::from_terms([((1, 0), m[1][0].clone()), ((0, 1), m[1][1].clone())]);
        self.subst(&u, &v)
    }

    /// Univariate restriction p(t·v0, t·v1) along a direction.
    pub fn along_direction(&self, v0: &CycloNum, v1: &CycloNum) -> UniPoly {
        let mut out = UniPoly::zero();
        for ((i, j), c) in &self.terms {
            out.add_term(i + j, &(c * &(v0.pow(*i as u64) * v1.pow(*j as u64))));
        }
        out
    }

    /// Terms sorted for printing: total degree descending, then x-degree
    /// descending.
    pub fn graded_terms(&self) -> Vec<((u32, u32), &CycloNum)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|((a, b), _), ((c, d), _)| (c + d, c).cmp(&(a + b, a)));
        v
    }
}

/// f(v) for univariate f and bivariate v, by Horner over the sparse support.
pub fn eval_uni_at(f: &UniPoly, v: &BiPoly) -> BiPoly {
    let Some(top) = f.degree() else {
        return BiPoly::zero();
    };
    let terms: Vec<(u32, CycloNum)> = f.terms().map(|(k, c)| (k, c.clone())).collect();
    let mut acc = BiPoly::zero();
    let mut last = top;
    for (k, c) in terms.iter().rev() {
        if last > *k {
            acc = &acc * &v.pow(last - k);
        }
        acc.add_term((0, 0), c);
        last = *k;
    }
    if last > 0 {
        acc = &acc * &v.pow(last);
    }
    acc
}

fn fmt_monomial(i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("y".to_string()),
        _ => parts.push(format!("y^{j}")),
    }
    parts.join("*")
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for ((i, j), c) in self.graded_terms() {
            parts.extend(c.terms_with_monomial(&fmt_monomial(i, j)));
        }
        f.write_str(&join_terms(parts))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (k, c) in &small.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        if self.len() * rhs.len() <= 16 {
            let mut out = BiPoly::zero();
            for ((i, j), a) in &self.terms {
                for ((k, l), b) in &rhs.terms {
                    out.add_term((i + k, j + l), &(a * b));
                }
            }
            return out;
        }
        mul_kernel(self, rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// A polynomial brought to one cyclotomic order with a common denominator:
/// value = (Σ num_k ζ^k) / den per monomial.
struct IntForm {
    den: BigInt,
    terms: Vec<((u32, u32), Vec<BigInt>)>,
}

fn int_form(p: &BiPoly, n: u32, phi: usize) -> IntForm {
    let promoted: Vec<((u32, u32), CycloNum)> =
        p.terms.iter().map(|(k, c)| (*k, c.promote(n))).collect();
    let mut den = BigInt::one();
    for (_, c) in &promoted {
        for r in c.coeffs() {
            den = den.lcm(r.denom());
        }
    }
    let terms = promoted
        .into_iter()
        .map(|(k, c)| {
            let mut v: Vec<BigInt> = c
                .coeffs()
                .iter()
                .map(|r| r.numer() * (&den / r.denom()))
                .collect();
            v.resize(phi, BigInt::zero());
            (k, v)
        })
        .collect();
    IntForm { den, terms }
}

fn max_bits(f: &IntForm) -> u64 {
    f.terms
        .iter()
        .flat_map(|(_, v)| v.iter())
        .map(|c| c.bits())
        .max()
        .unwrap_or(0)
}

enum Slots<T> {
    Dense { stride: usize, cells: Vec<Option<Vec<T>>> },
    Sparse(HashMap<(u32, u32), Vec<T>>),
}

impl<T: Clone> Slots<T> {
    fn new(max_i: u32, max_j: u32) -> Self {
        let cells = (max_i as usize + 1) * (max_j as usize + 1);
        if cells <= 1 << 22 {
            Slots::Dense {
                stride: max_j as usize + 1,
                cells: vec![None; cells],
            }
        } else {
            Slots::Sparse(HashMap::new())
        }
    }

    fn slot(&mut self, k: (u32, u32), len: usize, zero: &T) -> &mut Vec<T> {
        match self {
            Slots::Dense { stride, cells } => {
                let idx = k.0 as usize * *stride + k.1 as usize;
                cells[idx].get_or_insert_with(|| vec![zero.clone(); len])
            }
            Slots::Sparse(m) => m.entry(k).or_insert_with(|| vec![zero.clone(); len]),
        }
    }

    fn drain(self) -> Vec<((u32, u32), Vec<T>)> {
        match self {
            Slots::Dense { stride, cells } => cells
                .into_iter()
                .enumerate()
                .filter_map(|(idx, c)| c.map(|v| (((idx / stride) as u32, (idx % stride) as u32), v)))
                .collect(),
            Slots::Sparse(m) => m.into_iter().collect(),
        }
    }
}

fn mul_kernel(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let n = a
        .terms
        .values()
        .chain(b.terms.values())
        .fold(1u32, |acc, c| acc.lcm(&c.order()));
    let f = field(n);
    let phi = f.degree();
    let fa = int_form(a, n, phi);
    let fb = int_form(b, n, phi);
    let max_i = a.degree_x().unwrap_or(0) + b.degree_x().unwrap_or(0);
    let max_j = a.degree_y().unwrap_or(0) + b.degree_y().unwrap_or(0);
    let width = 2 * phi - 1;

    // Each output coordinate sums at most min(len) * phi products.
    let fan_in = (fa.terms.len().min(fb.terms.len()) * phi) as u64;
    let bound_bits = max_bits(&fa) + max_bits(&fb) + 64 - fan_in.leading_zeros() as u64 + 1;

    let raw: Vec<((u32, u32), Vec<BigInt>)> = if bound_bits < 126 {
        let small = |f: &IntForm| -> Vec<((u32, u32), Vec<i128>)> {
            f.terms
                .iter()
                .map(|(k, v)| (*k, v.iter().map(|c| c.to_i128().unwrap()).collect()))
                .collect()
        };
        let (sa, sb) = (small(&fa), small(&fb));
        let mut slots: Slots<i128> = Slots::new(max_i, max_j);
        for ((i, j), va) in &sa {
            for ((k, l), vb) in &sb {
                let acc = slots.slot((i + k, j + l), width, &0);
                for (p, x) in va.iter().enumerate() {
                    if *x == 0 {
                        continue;
                    }
                    for (q, y) in vb.iter().enumerate() {
                        acc[p + q] += x * y;
                    }
                }
            }
        }
        slots
            .drain()
            .into_iter()
            .map(|(k, v)| (k, v.into_iter().map(BigInt::from).collect()))
            .collect()
    } else if (3..MAX_FAN_IN).contains(&(fa.terms.len().min(fb.terms.len()) as u64)) {
        multi_modular(&fa, &fb, &f, max_i, max_j, bound_bits)
    } else {
        let mut slots: Slots<BigInt> = Slots::new(max_i, max_j);
        let zero = BigInt::zero();
        for ((i, j), va) in &fa.terms {
            for ((k, l), vb) in &fb.terms {
                let acc = slots.slot((i + k, j + l), width, &zero);
                for (p, x) in va.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (q, y) in vb.iter().enumerate() {
                        if !y.is_zero() {
                            acc[p + q] += x * y;
                        }
                    }
                }
            }
        }
        slots.drain()
    };

    let den = &fa.den * &fb.den;
    finish(&f, raw, &den)
}

/// Multiplication modulo word-sized primes that split Φ_n, where each
/// coefficient becomes φ(n) independent residues, followed by Chinese
/// remaindering. Returns numerators already reduced modulo Φ_n.
fn multi_modular(
    fa: &IntForm,
    fb: &IntForm,
    f: &CycloField,
    max_i: u32,
    max_j: u32,
    bound_bits: u64,
) -> Vec<((u32, u32), Vec<BigInt>)> {
    let phi = f.degree();
    // growth of coefficients when folding powers ζ^k, k < 2φ-1, into the basis
    let growth = (0..phi)
        .map(|j| {
            (0..2 * phi - 1)
                .map(|k| f.power(k as u64)[j].magnitude().clone())
                .sum::<num_bigint::BigUint>()
        })
        .max()
        .unwrap();
    let bits = bound_bits + growth.bits();
    let sp = split_primes(f.order(), phi, bits);

    // slot numbering shared by all primes
    let stride = max_j as usize + 1;
    let dense_cells = (max_i as usize + 1) * stride;
    let mut dense: Vec<u32> = Vec::new();
    let mut sparse: HashMap<(u32, u32), u32> = HashMap::new();
    let use_dense = dense_cells <= 1 << 24;
    if use_dense {
        dense = vec![u32::MAX; dense_cells];
    }
    let mut keys: Vec<(u32, u32)> = Vec::new();
    let mut pair_slot = |key: (u32, u32), keys: &mut Vec<(u32, u32)>| -> usize {
        let next = keys.len() as u32;
        let id = if use_dense {
            let cell = &mut dense[key.0 as usize * stride + key.1 as usize];
            if *cell == u32::MAX {
                *cell = next;
            }
            *cell
        } else {
            *sparse.entry(key).or_insert(next)
        };
        if id == next {
            keys.push(key);
        }
        id as usize
    };
    let mut slot_of: Vec<u32> = Vec::with_capacity(fa.terms.len() * fb.terms.len());
    for ((i, j), _) in &fa.terms {
        for ((k, l), _) in &fb.terms {
            slot_of.push(pair_slot((i + k, j + l), &mut keys) as u32);
        }
    }

    let nslots = keys.len();
    let mut residues = vec![0u64; nslots * phi * sp.primes.len()];
    let mut acc = vec![0u128; nslots * phi];
    let mut tmp = vec![0u64; phi];
    for (pi, prime) in sp.primes.iter().enumerate() {
        let p = prime.p;
        let values = |form: &IntForm| -> Vec<u64> {
            let mut out = vec![0u64; form.terms.len() * phi];
            let mut c = vec![0u64; phi];
            for (t, (_, v)) in form.terms.iter().enumerate() {
                for (ci, x) in c.iter_mut().zip(v) {
                    *ci = PrimeSet::residue(x, p);
                }
                prime.to_values(&c, &mut out[t * phi..(t + 1) * phi]);
            }
            out
        };
        let (va, vb) = (values(fa), values(fb));
        acc.iter_mut().for_each(|a| *a = 0);
        let nb = fb.terms.len();
        for (ta, xa) in va.chunks_exact(phi).enumerate() {
            let slots = &slot_of[ta * nb..(ta + 1) * nb];
            for (xb, &s) in vb.chunks_exact(phi).zip(slots) {
                let dst = &mut acc[s as usize * phi..(s as usize + 1) * phi];
                for r in 0..phi {
                    dst[r] += xa[r] as u128 * xb[r] as u128;
                }
            }
        }
        for s in 0..nslots {
            for (r, t) in tmp.iter_mut().enumerate() {
                *t = (acc[s * phi + r] % p as u128) as u64;
            }
            let out = &mut residues[(s * sp.primes.len() + pi) * phi..][..phi];
            prime.from_values(&tmp, out);
        }
    }
    let k = sp.primes.len();
    let mut buf = vec![0u64; k];
    keys.into_iter()
        .enumerate()
        .map(|(s, key)| {
            let coeffs = (0..phi)
                .map(|r| {
                    for (pi, b) in buf.iter_mut().enumerate() {
                        *b = residues[(s * k + pi) * phi + r];
                    }
                    sp.crt.reconstruct(&buf)
                })
                .collect();
            (key, coeffs)
        })
        .collect()
}

fn finish(f: &std::sync::Arc<CycloField>, raw: Vec<((u32, u32), Vec<BigInt>)>, den: &BigInt) -> BiPoly {
    let mut terms = BTreeMap::new();
    for (k, mut v) in raw {
        f.reduce_ints(&mut v);
        if v.iter().all(|c| c.is_zero()) {
            continue;
        }
        let coeffs: Vec<BigRational> = v
            .into_iter()
            .map(|c| {
                if c.is_zero() {
                    BigRational::zero()
                } else if den.is_one() {
                    BigRational::from_integer(c)
                } else {
                    BigRational::new(c, den.clone())
                }
            })
            .collect();
        terms.insert(k, CycloNum::from_reduced_parts(f.clone(), coeffs));
    }
    debug_assert!(den.is_positive());
    BiPoly { terms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclo::cyclo_make;

    fn x() -> BiPoly {
        BiPoly::x()
    }
    fn y() -> BiPoly {
        BiPoly::y()
    }
    fn c(n: i64) -> BiPoly {
        BiPoly::constant(CycloNum::from_int(n))
    }

    fn naive_mul(a: &BiPoly, b: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i, j), p) in a.terms() {
            for ((k, l), q) in b.terms() {
                out.add_term((i + k, j + l), &(p * q));
            }
        }
        out
    }

    #[test]
    fn kernel_matches_naive_over_mixed_orders() {
        let a = (&x() + &y().scale(&cyclo_make(3, 1))).pow(3)
            + y().pow(2).scale(&CycloNum::from_ratio(1, 2));
        let b = (&x().scale(&cyclo_make(4, 1)) - &c(2)).pow(2) + x().pow(5);
        assert_eq!(&a * &b, naive_mul(&a, &b));
    }

    #[test]
    fn kernel_big_integer_path() {
        // coefficients far beyond i128
        let big = CycloNum::from_rational(BigRational::new(
            BigInt::from(3).pow(90),
            BigInt::from(7).pow(20),
        ));
        let a = (&x().scale(&big) + &y()).pow(3) + x();
        let b = (&y().scale(&big) - &x().scale(&cyclo_make(5, 2))).pow(3) + y();
        assert_eq!(&a * &b, naive_mul(&a, &b));
    }

    #[test]
    fn kernel_multi_modular_path() {
        // coefficients of roughly 150 bits push the kernel past i128
        let big = CycloNum::from_rational(BigRational::new(BigInt::from(3).pow(60), BigInt::from(5).pow(20)));
        let a = (&(&x().scale(&big) + &y().scale(&cyclo_make(3, 1))) + &c(1)).pow(4);
        let b = (&(&y().scale(&big) - &x().scale(&cyclo_make(4, 1))) + &c(2)).pow(4);
        assert_eq!(&a * &b, naive_mul(&a, &b));
    }

    #[test]
    fn degrees_and_forms() {
        let p = &(&y().pow(2) - &x().pow(3)) + &x();
        assert_eq!(p.total_degree(), Some(3));
        assert_eq!(p.top_form(), -&x().pow(3));
        assert!(!p.is_homogeneous());
        assert_eq!(BiPoly::zero().total_degree(), None);
    }

    #[test]
    fn subst_is_a_homomorphism() {
        let f = &(&x().pow(2) * &y()) - &y().pow(3).scale(&cyclo_make(3, 1));
        let g = &(&x() + &c(1)) * &y();
        let u = &x() + &y().pow(2);
        let v = y().scale(&CycloNum::from_int(2)) - x();
        assert_eq!((&f * &g).subst(&u, &v), &f.subst(&u, &v) * &g.subst(&u, &v));
        assert_eq!((&f + &g).subst(&u, &v), &f.subst(&u, &v) + &g.subst(&u, &v));
        assert_eq!(f.subst(&x(), &y()), f);
    }

    #[test]
    fn display_graded_lex() {
        let p = &(&y().pow(2) - &x().pow(3).scale(&CycloNum::from_ratio(1, 2))) + &(&x() * &y());
        assert_eq!(p.to_string(), "-1/2*x^3 + x*y + y^2");
    }

    #[test]
    fn subst_uni_parameterizes_curve() {
        // y^2 - x^3 vanishes on (t^2, t^3)
        let p = &y().pow(2) - &x().pow(3);
        let t = UniPoly::var();
        assert!(p.subst_uni(&t.pow(2), &t.pow(3)).is_zero());
    }
}
