//! Cyclic quotient surfaces X_{d,e} = A²/G_{d,e}, where G_{d,e} is generated
//! by g = diag(ζ^e, ζ) with ζ a primitive d-th root of unity.

use std::fmt;

use num_integer::Integer;

use crate::algebra::{BiPoly, CycloNum};
use crate::error::{Error, Result};
use crate::planeaut::TorusElem;

/// The parameters (d, e) together with the derived data e′ and c_1..c_{d−1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicSurf {
    pub d: u32,
    pub e: u32,
    /// e·e′ ≡ 1 (mod d), 1 ≤ e′ < d (1 when d = 1).
    pub e_prime: u32,
    /// c_k for k = 1..d−1: 0 < c_k < d and c_k + k·e ≡ 0 (mod d).
    pub c: Vec<u32>,
}

pub fn make_surface(d: u32, e: u32) -> Result<CyclicSurf> {
    if d == 0 {
        return Err(Error::BadParameters("d must be positive".into()));
    }
    if d == 1 {
        if e != 1 {
            return Err(Error::BadParameters("the plane is X_{1,1}; e must be 1".into()));
        }
        return Ok(CyclicSurf { d, e, e_prime: 1, c: Vec::new() });
    }
    if e == 0 || e >= d {
        return Err(Error::BadParameters(format!("need 1 <= e < d, got d={d}, e={e}")));
    }
    if d.gcd(&e) != 1 {
        return Err(Error::BadParameters(format!("gcd({d}, {e}) != 1")));
    }
    let (d64, e64) = (d as u64, e as u64);
    let e_prime = (1..d64).find(|k| k * e64 % d64 == 1).unwrap() as u32;
    let c = (1..d64).map(|k| ((d64 - k * e64 % d64) % d64) as u32).collect();
    Ok(CyclicSurf { d, e, e_prime, c })
}

impl CyclicSurf {
    /// The generator g = diag(ζ_d^e, ζ_d).
    pub fn generator(&self) -> TorusElem {
        TorusElem {
            alpha: CycloNum::root_of_unity(self.d, self.e as i64),
            beta: CycloNum::root_of_unity(self.d, 1),
        }
    }

    /// The generator with the coordinates exchanged, diag(ζ_d, ζ_d^e).
    pub fn swapped_generator(&self) -> TorusElem {
        let g = self.generator();
        TorusElem { alpha: g.beta, beta: g.alpha }
    }

    /// Whether x^i y^j is fixed by g.
    pub fn monomial_invariant(&self, i: u32, j: u32) -> bool {
        (i as u64 * self.e as u64 + j as u64) % self.d as u64 == 0
    }
}

impl fmt::Display for CyclicSurf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{{{},{}}}", self.d, self.e)
    }
}

pub fn surfaces_isomorphic(s1: &CyclicSurf, s2: &CyclicSurf) -> bool {
    s1.d == s2.d && (s1.e == s2.e || (s1.e as u64 * s2.e as u64) % s1.d as u64 == 1 % s1.d as u64)
}

/// Exponents (i, j) of the generating monomials y^d, x y^{c_1}, …, x^d.
pub fn generator_exponents(s: &CyclicSurf) -> Vec<(u32, u32)> {
    let mut out = vec![(0, s.d)];
    out.extend(s.c.iter().enumerate().map(|(k, &ck)| (k as u32 + 1, ck)));
    out.push((s.d, 0));
    out
}

pub fn invariant_generators(s: &CyclicSurf) -> Vec<BiPoly> {
    generator_exponents(s)
        .into_iter()
        .map(|(i, j)| BiPoly::monomial(CycloNum::one(), i, j))
        .collect()
}

/// Exponents of t in the image of a curve t ↦ (t^a, t^b) under the
/// invariant-monomial embedding X_{d,e} ↪ A^{d+1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialCurve {
    pub exponents: Vec<u64>,
}

impl MonomialCurve {
    pub fn gcd(&self) -> u64 {
        self.exponents.iter().fold(0, |g, &e| g.gcd(&e))
    }
}

/// The image of C_{a,b} = {y^a = x^b}, parameterized as (x, y) = (t^a, t^b).
pub fn curve_image_exponents(s: &CyclicSurf, a: u32, b: u32) -> Result<MonomialCurve> {
    if a == 0 || b == 0 {
        return Err(Error::BadParameters("a and b must be positive".into()));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::BadParameters(format!("gcd({a}, {b}) != 1")));
    }
    let exponents = generator_exponents(s)
        .into_iter()
        .map(|(i, j)| i as u64 * a as u64 + j as u64 * b as u64)
        .collect();
    Ok(MonomialCurve { exponents })
}

/// The monomial curve is smooth iff one exponent equals the gcd of all.
pub fn is_image_smooth(m: &MonomialCurve) -> bool {
    let g = m.gcd();
    m.exponents.iter().any(|&e| e == g)
}

/// π(C_x) and π(C_y) are equivalent iff e² ≡ 1 (mod d).
pub fn axes_equivalent(s: &CyclicSurf) -> bool {
    (s.e as u64 * s.e as u64) % s.d as u64 == 1 % s.d as u64
}

/// A candidate class of embedded lines through the singular point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineClass {
    AxisX,
    AxisY,
    /// Both axes, when they are equivalent.
    Axes,
    Cab { a: u32, b: u32 },
}

impl fmt::Display for LineClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineClass::AxisX => f.write_str("pi(C_x)"),
            LineClass::AxisY => f.write_str("pi(C_y)"),
            LineClass::Axes => f.write_str("pi(C_x) ~ pi(C_y)"),
            LineClass::Cab { a, b } => write!(f, "pi(C_{{{a},{b}}})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub class: LineClass,
    /// Image exponents for C_{a,b}; the axes map onto coordinate lines.
    pub image: Option<MonomialCurve>,
    pub smooth: bool,
}

/// Candidate representatives of the classes of curves through the singular
/// point. Distinct entries are not proven inequivalent, so the list is an
/// upper bound (`upper_bound` is always set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCandidates {
    pub candidates: Vec<Candidate>,
    pub upper_bound: bool,
}

/// Enumerates candidate classes: the axes (merged when equivalent), C_{1,1},
/// and every C_{a,b} with a + b ≤ d, gcd(a, b) = 1 and smooth image. Curves
/// that are G-stable (C_{1,b} with e·b ≡ 1, C_{a,1} with a ≡ e) are moved onto
/// an axis by a G-equivariant triangular map and are folded into it.
///
/// C_{1,1} is listed whenever it is not folded, with its smoothness reported.
pub fn enumerate_embedding_classes(s: &CyclicSurf) -> Result<EmbeddingCandidates> {
    if s.d == 1 {
        return Err(Error::BadParameters("X_{1,1} is the plane; no singular point".into()));
    }
    let mut candidates = Vec::new();
    if axes_equivalent(s) {
        candidates.push(Candidate { class: LineClass::Axes, image: None, smooth: true });
    } else {
        candidates.push(Candidate { class: LineClass::AxisX, image: None, smooth: true });
        candidates.push(Candidate { class: LineClass::AxisY, image: None, smooth: true });
    }
    let d = s.d;
    for total in 2..=d {
        for a in 1..total {
            let b = total - a;
            if a.gcd(&b) != 1 || folds_into_axis(s, a, b) {
                continue;
            }
            let image = curve_image_exponents(s, a, b)?;
            let smooth = is_image_smooth(&image);
            if smooth || (a, b) == (1, 1) {
                candidates.push(Candidate { class: LineClass::Cab { a, b }, image: Some(image), smooth });
            }
        }
    }
    Ok(EmbeddingCandidates { candidates, upper_bound: true })
}

/// Whether C_{a,b} is G-stable and equivariantly equivalent to an axis.
pub fn folds_into_axis(s: &CyclicSurf, a: u32, b: u32) -> bool {
    let d = s.d as u64;
    (a == 1 && (s.e as u64 * b as u64) % d == 1 % d) || (b == 1 && a as u64 % d == s.e as u64 % d)
}
