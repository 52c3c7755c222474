//! Word-sized prime moduli and Chinese remaindering for the multi-modular
//! multiplication path.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Primes stay below 2^50 so that a product fits in 100 bits and 2^27
/// products can be summed in a u128 without overflow.
pub(crate) const PRIME_BITS: u64 = 49;
pub(crate) const MAX_FAN_IN: u64 = 1 << 27;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn prime_cache() -> &'static Mutex<HashMap<u32, Vec<u64>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<u64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Distinct word-sized primes with Garner constants.
pub(crate) struct PrimeSet {
    pub primes: Vec<u64>,
    /// inv[j] = (p_0 ⋯ p_{j-1})^{-1} mod p_j
    inv: Vec<u64>,
    /// prefix[j] = p_0 ⋯ p_{j-1}
    prefix: Vec<BigInt>,
    half: BigInt,
    modulus: BigInt,
}

impl PrimeSet {
    /// Number of primes needed for integers of absolute value below 2^bits.
    pub fn count_for_bits(bits: u64) -> usize {
        ((bits + 1) / PRIME_BITS + 1) as usize
    }

    /// Primes p ≡ 1 (mod n), each in [2^49, 2^50).
    pub fn primes_for_order(n: u32, k: usize) -> Vec<u64> {
        let mut cache = prime_cache().lock().unwrap();
        let list = cache.entry(n).or_default();
        let top = 1u64 << (PRIME_BITS + 1);
        let mut cand = list.last().copied().unwrap_or(top - (top - 1) % n as u64);
        while list.len() < k {
            cand -= n as u64;
            assert!(cand > 1u64 << PRIME_BITS, "ran out of word-sized primes");
            if is_prime(cand) {
                list.push(cand);
            }
        }
        list[..k].to_vec()
    }

    pub fn new(primes: Vec<u64>) -> PrimeSet {
        let k = primes.len();
        let mut inv = vec![0u64; k];
        let mut prefix = Vec::with_capacity(k + 1);
        prefix.push(BigInt::from(1u8));
        for j in 0..k {
            let p = primes[j];
            let mut prod = 1u64;
            for q in &primes[..j] {
                prod = mul_mod(prod, q % p, p);
            }
            inv[j] = pow_mod(prod, p - 2, p);
            let next = &prefix[j] * p;
            prefix.push(next);
        }
        let modulus = prefix.pop().unwrap();
        let half = &modulus >> 1;
        PrimeSet { primes, inv, prefix, half, modulus }
    }

    pub fn residue(x: &BigInt, p: u64) -> u64 {
        x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
    }

    /// The unique integer in (-M/2, M/2] with the given residues.
    pub fn reconstruct(&self, res: &[u64]) -> BigInt {
        let k = self.primes.len();
        let mut digits = [0u64; 32];
        let mut digits_vec;
        let digits: &mut [u64] = if k <= 32 {
            &mut digits[..k]
        } else {
            digits_vec = vec![0u64; k];
            &mut digits_vec
        };
        for j in 0..k {
            let p = self.primes[j];
            // value of the partial mixed-radix sum mod p
            let mut acc = 0u64;
            for i in (0..j).rev() {
                acc = (mul_mod(acc, self.primes[i] % p, p) + digits[i] % p) % p;
            }
            let diff = (res[j] + p - acc) % p;
            digits[j] = mul_mod(diff, self.inv[j], p);
        }
        let mut x = BigInt::zero();
        for j in (0..k).rev() {
            if digits[j] != 0 {
                x += &self.prefix[j] * digits[j];
            }
        }
        if x > self.half {
            x -= &self.modulus;
        }
        x
    }
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A prime p ≡ 1 (mod n): Φ_n splits into φ(n) distinct linear factors mod
/// p, so Z[ζ_n]/p is a product of copies of F_p.
pub(crate) struct SplitPrime {
    pub p: u64,
    phi: usize,
    /// eval[r * φ + i] = ρ_r^i over the roots ρ_r of Φ_n mod p
    eval: Vec<u64>,
    interp: Vec<u64>,
}

impl SplitPrime {
    fn new(p: u64, n: u32, phi: usize) -> SplitPrime {
        let factors = prime_factors(n);
        let root = (2..)
            .map(|a| pow_mod(a, (p - 1) / n as u64, p))
            .find(|&r| factors.iter().all(|&q| pow_mod(r, (n / q) as u64, p) != 1))
            .unwrap();
        let roots: Vec<u64> = (1..=n.max(1))
            .filter(|k| k.gcd(&n) == 1)
            .map(|k| pow_mod(root, k as u64, p))
            .collect();
        debug_assert_eq!(roots.len(), phi);
        let mut eval = vec![0u64; phi * phi];
        for (r, rho) in roots.iter().enumerate() {
            let mut acc = 1u64;
            for i in 0..phi {
                eval[r * phi + i] = acc;
                acc = mul_mod(acc, *rho, p);
            }
        }
        let interp = invert_mod(&eval, phi, p);
        SplitPrime { p, phi, eval, interp }
    }

    /// Power-basis residues to values at the roots.
    pub fn to_values(&self, c: &[u64], out: &mut [u64]) {
        apply_mod(&self.eval, self.phi, self.p, c, out);
    }

    pub fn from_values(&self, v: &[u64], out: &mut [u64]) {
        apply_mod(&self.interp, self.phi, self.p, v, out);
    }
}

fn apply_mod(m: &[u64], phi: usize, p: u64, c: &[u64], out: &mut [u64]) {
    for r in 0..phi {
        let mut acc = 0u128;
        for i in 0..phi {
            acc += m[r * phi + i] as u128 * c[i] as u128;
        }
        out[r] = (acc % p as u128) as u64;
    }
}

fn invert_mod(m: &[u64], n: usize, p: u64) -> Vec<u64> {
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut row = m[i * n..(i + 1) * n].to_vec();
            row.extend((0..n).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| a[r][c] != 0).expect("invertible matrix");
        a.swap(c, piv);
        let inv = pow_mod(a[c][c], p - 2, p);
        for x in a[c].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == c || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - mul_mod(f, *y, p)) % p;
            }
        }
    }
    a.into_iter().flat_map(|row| row[n..].to_vec()).collect()
}

pub(crate) struct SplitPrimes {
    pub primes: Vec<SplitPrime>,
    pub crt: PrimeSet,
}

/// Split primes for Q(ζ_n) covering integers of absolute value below 2^bits.
pub(crate) fn split_primes(n: u32, phi: usize, bits: u64) -> Arc<SplitPrimes> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize), Arc<SplitPrimes>>>> = OnceLock::new();
    let k = PrimeSet::count_for_bits(bits);
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(&(n, k)) {
        return s.clone();
    }
    let ps = PrimeSet::primes_for_order(n, k);
    let out = Arc::new(SplitPrimes {
        primes: ps.iter().map(|&p| SplitPrime::new(p, n, phi)).collect(),
        crt: PrimeSet::new(ps),
    });
    cache.lock().unwrap().insert((n, k), out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(!is_prime(3215031751));
        assert!(is_prime((1u64 << 61) - 1));
    }

    #[test]
    fn split_prime_values_roundtrip() {
        for (n, phi) in [(1u32, 1usize), (3, 2), (4, 2), (12, 4), (5, 4)] {
            let sp = &split_primes(n, phi, 10).primes[0];
            assert_eq!((sp.p - 1) % n as u64, 0);
            let c: Vec<u64> = (0..phi as u64).map(|i| 3 * i + 1).collect();
            let mut v = vec![0; phi];
            let mut back = vec![0; phi];
            sp.to_values(&c, &mut v);
            sp.from_values(&v, &mut back);
            assert_eq!(back, c);
        }
    }

    #[test]
    fn crt_roundtrip() {
        let ps = PrimeSet::new(PrimeSet::primes_for_order(1, PrimeSet::count_for_bits(300)));
        for x in [
            BigInt::from(0),
            BigInt::from(-1),
            BigInt::from(3).pow(180),
            -BigInt::from(7).pow(100) + 12345,
        ] {
            let res: Vec<u64> = ps.primes.iter().map(|&p| PrimeSet::residue(&x, p)).collect();
            assert_eq!(ps.reconstruct(&res), x);
        }
    }
}
