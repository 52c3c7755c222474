#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use torplane::algebra::{cyclo_make, CycloNum, UniPoly};
use torplane::planeaut::{AutWord, ElemMap};

/// A nonzero scalar from {±2, ±1, ±1/2}, sometimes times ζ_3 or ζ_4.
pub fn small_scalar(rng: &mut StdRng) -> CycloNum {
    let base = [(2, 1), (-2, 1), (1, 1), (-1, 1), (1, 2), (-1, 2)][rng.gen_range(0..6)];
    let r = CycloNum::from_ratio(base.0, base.1);
    match rng.gen_range(0..4) {
        0 => &r * &cyclo_make(3, 1),
        1 => &r * &cyclo_make(4, 1),
        _ => r,
    }
}

/// Random polynomial of exact degree `deg` with small coefficients; lower
/// terms (degrees `min_deg..deg`) appear at random.
pub fn small_poly(rng: &mut StdRng, deg: u32, min_deg: u32) -> UniPoly {
    let mut f = UniPoly::monomial(small_scalar(rng), deg);
    for k in min_deg..deg {
        if rng.gen_bool(0.4) {
            f.add_term(k, &small_scalar(rng));
        }
    }
    f
}

/// Random alternating word of triangular factors, each of degree 2..=max_deg.
pub fn alternating_word(rng: &mut StdRng, max_len: usize, max_deg: u32) -> AutWord {
    let len = rng.gen_range(1..=max_len);
    let mut plus = rng.gen_bool(0.5);
    let mut factors = Vec::new();
    for _ in 0..len {
        let deg = rng.gen_range(2..=max_deg);
        let f = small_poly(rng, deg, 0);
        let (alpha, beta) = if rng.gen_bool(0.5) {
            (small_scalar(rng), small_scalar(rng))
        } else {
            (CycloNum::one(), CycloNum::one())
        };
        factors.push(if plus {
            ElemMap::tri_plus(alpha, beta, f).unwrap()
        } else {
            ElemMap::tri_minus(alpha, beta, f).unwrap()
        });
        plus = !plus;
    }
    AutWord::new(factors).unwrap()
}

/// ζ_n^k times a rational from {±2, ±1, ±1/2}.
pub fn scalar_in(rng: &mut StdRng, n: u32) -> CycloNum {
    let base = [(2, 1), (-2, 1), (1, 1), (-1, 1), (1, 2), (-1, 2)][rng.gen_range(0..6)];
    &CycloNum::from_ratio(base.0, base.1) * &cyclo_make(n, rng.gen_range(0..n as i64))
}

/// A random semisimple (αx + f(y), βy) over Q(ζ_n) with α, β roots of
/// unity and deg f ≤ max_deg. Exponents m with α = β^m are left out of f.
pub fn semisimple_torsion(rng: &mut StdRng, n: u32, max_deg: u32) -> (CycloNum, CycloNum, UniPoly) {
    let alpha = cyclo_make(n, rng.gen_range(0..n as i64));
    let beta = cyclo_make(n, rng.gen_range(0..n as i64));
    let mut f = UniPoly::zero();
    for m in 0..=max_deg {
        if beta.pow(m as u64) != alpha && rng.gen_bool(0.5) {
            f.add_term(m, &scalar_in(rng, n));
        }
    }
    (alpha, beta, f)
}

/// The brute-force order of a word: the least k ≤ bound with w^k = id.
pub fn brute_force_order(w: &AutWord, bound: u32) -> Option<u32> {
    let mut acc = w.clone();
    for k in 1..=bound {
        if acc.is_identity_map() {
            return Some(k);
        }
        acc = torplane::planeaut::compose(w, &acc);
    }
    None
}

/// Exponents m in [2, 5] with m ≡ i (mod d), or the least m ≥ 2 if none.
pub fn class_exponents(d: u32, i: u32) -> Vec<u32> {
    let v: Vec<u32> = (2..=5).filter(|m| m % d == i % d).collect();
    if v.is_empty() {
        vec![(2..).find(|m| m % d == i % d).unwrap()]
    } else {
        v
    }
}

/// A random word of triangular factors commuting with diag(ζ^e, ζ): TriPlus
/// with f ∈ A_{d,e}, TriMinus with f ∈ A_{d,e'}, arbitrary torus parts.
pub fn equivariant_word(rng: &mut StdRng, d: u32, e: u32, e_prime: u32, max_len: usize) -> AutWord {
    let len = rng.gen_range(1..=max_len);
    let mut plus = rng.gen_bool(0.5);
    let mut factors = Vec::new();
    for _ in 0..len {
        let class = if plus { e } else { e_prime };
        let exps = class_exponents(d, class);
        let mut f = UniPoly::zero();
        while f.is_zero() {
            for &m in &exps {
                if rng.gen_bool(0.6) {
                    f.add_term(m, &small_scalar(rng));
                }
            }
        }
        let (alpha, beta) = if rng.gen_bool(0.5) {
            (small_scalar(rng), small_scalar(rng))
        } else {
            (CycloNum::one(), CycloNum::one())
        };
        factors.push(if plus {
            ElemMap::tri_plus(alpha, beta, f).unwrap()
        } else {
            ElemMap::tri_minus(alpha, beta, f).unwrap()
        });
        plus = !plus;
    }
    AutWord::new(factors).unwrap()
}
