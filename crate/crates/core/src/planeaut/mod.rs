//! Plane polynomial automorphisms as words of elementary maps.
//!
//! A word `[e_1, …, e_k]` denotes the composite map e_1 ∘ … ∘ e_k, so the
//! rightmost factor acts first on a point.

mod factor;
mod normal;

use std::fmt;
use std::sync::OnceLock;

use crate::algebra::bipoly::eval_uni_at;
use crate::algebra::{BiPoly, CycloNum, UniPoly};
use crate::error::{Error, Result};

pub use factor::jvdk_factor;
pub use normal::{normal_form, word_degree};

/// One elementary plane map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElemMap {
    /// (x, y) ↦ (m00 x + m01 y + b0, m10 x + m11 y + b1).
    Affine { m: [[CycloNum; 2]; 2], b: [CycloNum; 2] },
    /// (x, y) ↦ (αx + f(y), βy).
    TriPlus { alpha: CycloNum, beta: CycloNum, f: UniPoly },
    /// (x, y) ↦ (αx, βy + f(x)).
    TriMinus { alpha: CycloNum, beta: CycloNum, f: UniPoly },
    /// (x, y) ↦ (y, x).
    Swap,
}

impl ElemMap {
    pub fn affine(m: [[CycloNum; 2]; 2], b: [CycloNum; 2]) -> Result<ElemMap> {
        let e = ElemMap::Affine { m, b };
        e.validate()?;
        Ok(e)
    }

    pub fn tri_plus(alpha: CycloNum, beta: CycloNum, f: UniPoly) -> Result<ElemMap> {
        let e = ElemMap::TriPlus { alpha, beta, f };
        e.validate()?;
        Ok(e)
    }

    pub fn tri_minus(alpha: CycloNum, beta: CycloNum, f: UniPoly) -> Result<ElemMap> {
        let e = ElemMap::TriMinus { alpha, beta, f };
        e.validate()?;
        Ok(e)
    }

    /// (x + f(y), y).
    pub fn plus(f: UniPoly) -> ElemMap {
        ElemMap::TriPlus { alpha: CycloNum::one(), beta: CycloNum::one(), f }
    }

    /// (x, y + f(x)).
    pub fn minus(f: UniPoly) -> ElemMap {
        ElemMap::TriMinus { alpha: CycloNum::one(), beta: CycloNum::one(), f }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ElemMap::Affine { m, .. } => {
                if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
                    return Err(Error::NotAutomorphism("affine part has zero determinant".into()));
                }
            }
            ElemMap::TriPlus { alpha, beta, .. } | ElemMap::TriMinus { alpha, beta, .. } => {
                if alpha.is_zero() || beta.is_zero() {
                    return Err(Error::NotAutomorphism("triangular map with zero diagonal".into()));
                }
            }
            ElemMap::Swap => {}
        }
        Ok(())
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ElemMap::Affine { .. } => "Affine",
            ElemMap::TriPlus { .. } => "TriPlus",
            ElemMap::TriMinus { .. } => "TriMinus",
            ElemMap::Swap => "Swap",
        }
    }

    /// Degree of the map, max(deg u, deg v).
    pub fn degree(&self) -> u32 {
        match self {
            ElemMap::TriPlus { f, .. } | ElemMap::TriMinus { f, .. } => f.degree().unwrap_or(0).max(1),
            _ => 1,
        }
    }

    /// Components of self ∘ (u, v).
    pub fn act(&self, u: &BiPoly, v: &BiPoly) -> (BiPoly, BiPoly) {
        match self {
            ElemMap::Affine { m, b } => {
                let row = |r: usize| {
                    let mut p = &u.scale(&m[r][0]) + &v.scale(&m[r][1]);
                    p.add_term((0, 0), &b[r]);
                    p
                };
                (row(0), row(1))
            }
            ElemMap::TriPlus { alpha, beta, f } => {
                (&u.scale(alpha) + &eval_uni_at(f, v), v.scale(beta))
            }
            ElemMap::TriMinus { alpha, beta, f } => {
                (u.scale(alpha), &v.scale(beta) + &eval_uni_at(f, u))
            }
            ElemMap::Swap => (v.clone(), u.clone()),
        }
    }

    /// Components of self ∘ (u(t), v(t)) for a parameterized curve.
    pub fn act_uni(&self, u: &UniPoly, v: &UniPoly) -> (UniPoly, UniPoly) {
        match self {
            ElemMap::Affine { m, b } => {
                let row = |r: usize| {
                    let mut p = &u.scale(&m[r][0]) + &v.scale(&m[r][1]);
                    p.add_term(0, &b[r]);
                    p
                };
                (row(0), row(1))
            }
            ElemMap::TriPlus { alpha, beta, f } => (&u.scale(alpha) + &f.compose(v), v.scale(beta)),
            ElemMap::TriMinus { alpha, beta, f } => (u.scale(alpha), &v.scale(beta) + &f.compose(u)),
            ElemMap::Swap => (v.clone(), u.clone()),
        }
    }

    pub fn components(&self) -> (BiPoly, BiPoly) {
        self.act(&BiPoly::x(), &BiPoly::y())
    }

    pub fn inverse(&self) -> ElemMap {
        match self {
            ElemMap::Affine { m, b } => {
                let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
                let di = det.inv().expect("validated affine map");
                let mi = [
                    [&m[1][1] * &di, -(&m[0][1] * &di)],
                    [-(&m[1][0] * &di), &m[0][0] * &di],
                ];
                let bi = [
                    -(&mi[0][0] * &b[0] + &mi[0][1] * &b[1]),
                    -(&mi[1][0] * &b[0] + &mi[1][1] * &b[1]),
                ];
                ElemMap::Affine { m: mi, b: bi }
            }
            ElemMap::TriPlus { alpha, beta, f } => {
                let ai = alpha.inv().expect("validated");
                let bi = beta.inv().expect("validated");
                ElemMap::TriPlus { f: f.rescale_var(&bi).scale(&-&ai), alpha: ai, beta: bi }
            }
            ElemMap::TriMinus { alpha, beta, f } => {
                let ai = alpha.inv().expect("validated");
                let bi = beta.inv().expect("validated");
                ElemMap::TriMinus { f: f.rescale_var(&ai).scale(&-&bi), alpha: ai, beta: bi }
            }
            ElemMap::Swap => ElemMap::Swap,
        }
    }
}

impl fmt::Display for ElemMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemMap::Affine { m, b } => write!(
                f,
                "Affine([[{}, {}], [{}, {}]], [{}, {}])",
                m[0][0], m[0][1], m[1][0], m[1][1], b[0], b[1]
            ),
            ElemMap::TriPlus { alpha, beta, f: p } => {
                write!(f, "TriPlus({alpha}, {beta}, {})", p.fmt_var('y'))
            }
            ElemMap::TriMinus { alpha, beta, f: p } => {
                write!(f, "TriMinus({alpha}, {beta}, {})", p.fmt_var('x'))
            }
            ElemMap::Swap => f.write_str("Swap"),
        }
    }
}

/// The diagonal map (x, y) ↦ (αx, βy).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElem {
    pub alpha: CycloNum,
    pub beta: CycloNum,
}

impl TorusElem {
    pub fn new(alpha: CycloNum, beta: CycloNum) -> Result<TorusElem> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::NotAutomorphism("torus element with zero entry".into()));
        }
        Ok(TorusElem { alpha, beta })
    }

    pub fn to_elem(&self) -> ElemMap {
        ElemMap::TriPlus { alpha: self.alpha.clone(), beta: self.beta.clone(), f: UniPoly::zero() }
    }

    pub fn compose(&self, o: &TorusElem) -> TorusElem {
        TorusElem { alpha: &self.alpha * &o.alpha, beta: &self.beta * &o.beta }
    }
}

/// A composite of elementary maps with lazily cached components.
#[derive(Clone)]
pub struct AutWord {
    factors: Vec<ElemMap>,
    comps: OnceLock<(BiPoly, BiPoly)>,
}

impl AutWord {
    pub fn identity() -> AutWord {
        AutWord::from_factors_unchecked(Vec::new())
    }

    pub fn new(factors: Vec<ElemMap>) -> Result<AutWord> {
        for e in &factors {
            e.validate()?;
        }
        Ok(AutWord::from_factors_unchecked(factors))
    }

    pub fn single(e: ElemMap) -> Result<AutWord> {
        AutWord::new(vec![e])
    }

    pub(crate) fn from_factors_unchecked(factors: Vec<ElemMap>) -> AutWord {
        AutWord { factors, comps: OnceLock::new() }
    }

    pub fn factors(&self) -> &[ElemMap] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The composed components (u, v).
    pub fn components(&self) -> &(BiPoly, BiPoly) {
        self.comps.get_or_init(|| act_all(&self.factors, BiPoly::x(), BiPoly::y()))
    }

    pub fn u(&self) -> &BiPoly {
        &self.components().0
    }

    pub fn v(&self) -> &BiPoly {
        &self.components().1
    }

    /// max(deg u, deg v) of the composed map.
    pub fn map_degree(&self) -> u32 {
        let (u, v) = self.components();
        u.total_degree().unwrap_or(0).max(v.total_degree().unwrap_or(0))
    }

    pub fn is_identity_map(&self) -> bool {
        let (u, v) = self.components();
        *u == BiPoly::x() && *v == BiPoly::y()
    }

    /// Equality as maps of the plane.
    pub fn same_map(&self, other: &AutWord) -> bool {
        self.components() == other.components()
    }

    /// The image of a parameterized curve t ↦ (u(t), v(t)).
    pub fn apply_curve(&self, u: &UniPoly, v: &UniPoly) -> (UniPoly, UniPoly) {
        let mut cu = u.clone();
        let mut cv = v.clone();
        for e in self.factors.iter().rev() {
            (cu, cv) = e.act_uni(&cu, &cv);
        }
        (cu, cv)
    }
}

fn act_all(factors: &[ElemMap], mut u: BiPoly, mut v: BiPoly) -> (BiPoly, BiPoly) {
    for e in factors.iter().rev() {
        (u, v) = e.act(&u, &v);
    }
    (u, v)
}

impl PartialEq for AutWord {
    fn eq(&self, other: &AutWord) -> bool {
        self.factors == other.factors
    }
}

impl Eq for AutWord {}

impl fmt::Debug for AutWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AutWord({self})")
    }
}

impl fmt::Display for AutWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// p ∘ w.
pub fn apply(w: &AutWord, p: &BiPoly) -> BiPoly {
    let (u, v) = w.components();
    p.subst(u, v)
}

/// w1 ∘ w2.
pub fn compose(w1: &AutWord, w2: &AutWord) -> AutWord {
    let mut factors = w1.factors.clone();
    factors.extend(w2.factors.iter().cloned());
    let out = AutWord::from_factors_unchecked(factors);
    if let Some((u, v)) = w2.comps.get() {
        let _ = out.comps.set(act_all(&w1.factors, u.clone(), v.clone()));
    }
    out
}

pub fn invert(w: &AutWord) -> AutWord {
    AutWord::from_factors_unchecked(w.factors.iter().rev().map(ElemMap::inverse).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_bipoly;

    fn bp(s: &str) -> BiPoly {
        parse_bipoly(s, 64).unwrap()
    }

    fn ty(k: u32) -> UniPoly {
        UniPoly::monomial(CycloNum::one(), k)
    }

    #[test]
    fn apply_examples() {
        let p = bp("y^3 - x^5");
        assert_eq!(apply(&AutWord::identity(), &p), p);
        let w = AutWord::single(ElemMap::minus(ty(4))).unwrap();
        assert_eq!(apply(&w, &BiPoly::y()), bp("y + x^4"));
        let s = AutWord::single(ElemMap::Swap).unwrap();
        assert_eq!(apply(&s, &bp("y - x^3")), bp("x - y^3"));
    }

    #[test]
    fn compose_example() {
        let a = AutWord::single(ElemMap::plus(ty(2))).unwrap();
        let b = AutWord::single(ElemMap::minus(ty(3))).unwrap();
        let w = compose(&b, &a);
        assert_eq!(w.u(), &bp("x + y^2"));
        assert_eq!(w.v(), &bp("y + (x + y^2)^3"));
        assert_eq!(w.map_degree(), 6);
        assert!(compose(&w, &invert(&w)).is_identity_map());
        assert!(compose(&invert(&w), &w).is_identity_map());
    }

    #[test]
    fn apply_is_contravariant() {
        let w1 = AutWord::single(ElemMap::plus(ty(2))).unwrap();
        let w2 = AutWord::single(ElemMap::minus(ty(3))).unwrap();
        let p = bp("x*y + 2*y^2");
        assert_eq!(apply(&compose(&w1, &w2), &p), apply(&w2, &apply(&w1, &p)));
    }

    #[test]
    fn elementary_inverses() {
        let z3 = crate::algebra::cyclo_make(3, 1);
        let maps = vec![
            ElemMap::tri_plus(CycloNum::from_int(2), z3.clone(), &ty(3) + &ty(1)).unwrap(),
            ElemMap::tri_minus(z3.clone(), CycloNum::from_ratio(-1, 2), &ty(2) + &UniPoly::one()).unwrap(),
            ElemMap::affine(
                [[CycloNum::from_int(1), CycloNum::from_int(2)], [z3.clone(), CycloNum::zero()]],
                [CycloNum::from_int(3), CycloNum::from_ratio(1, 2)],
            )
            .unwrap(),
            ElemMap::Swap,
        ];
        for e in maps {
            let w = AutWord::new(vec![e.clone(), e.inverse()]).unwrap();
            assert!(w.is_identity_map(), "{e}");
        }
    }

    #[test]
    fn validation() {
        assert!(ElemMap::tri_plus(CycloNum::zero(), CycloNum::one(), UniPoly::zero()).is_err());
        let z = CycloNum::zero;
        let o = CycloNum::one;
        assert!(ElemMap::affine([[o(), o()], [o(), o()]], [z(), z()]).is_err());
    }
}
