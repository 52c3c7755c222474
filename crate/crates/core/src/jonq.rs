//! The de Jonquières subgroup Jonq⁺ = U⁺ ⋊ T of maps (αx + f(y), βy), and
//! its mirror Jonq⁻ = τ Jonq⁺ τ.

use std::fmt;

use num_integer::Integer;

use crate::algebra::{eq_power, in_grading_class, CycloNum, UniPoly};
use crate::error::{Error, Result};
use crate::planeaut::{AutWord, ElemMap, TorusElem};
use crate::toric::CyclicSurf;

/// (x, y) ↦ (αx + f(y), βy).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JonqPlus {
    pub alpha: CycloNum,
    pub beta: CycloNum,
    pub f: UniPoly,
}

/// μ: (x, y) ↦ (x + g(y), y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentPlus {
    pub g: UniPoly,
}

/// (x, y) ↦ (αx, βy + f(x)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JonqMinus {
    pub alpha: CycloNum,
    pub beta: CycloNum,
    pub f: UniPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionType {
    Type1,
    Type2,
    Type3,
    NotInvolution,
}

impl InvolutionType {
    pub fn name(self) -> &'static str {
        match self {
            InvolutionType::Type1 => "type1",
            InvolutionType::Type2 => "type2",
            InvolutionType::Type3 => "type3",
            InvolutionType::NotInvolution => "not_involution",
        }
    }
}

impl fmt::Display for InvolutionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl JonqPlus {
    pub fn new(alpha: CycloNum, beta: CycloNum, f: UniPoly) -> Result<JonqPlus> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::NotAutomorphism("alpha and beta must be nonzero".into()));
        }
        Ok(JonqPlus { alpha, beta, f })
    }

    pub fn from_torus(t: &TorusElem) -> JonqPlus {
        JonqPlus { alpha: t.alpha.clone(), beta: t.beta.clone(), f: UniPoly::zero() }
    }

    pub fn to_elem(&self) -> ElemMap {
        ElemMap::TriPlus { alpha: self.alpha.clone(), beta: self.beta.clone(), f: self.f.clone() }
    }

    pub fn to_word(&self) -> AutWord {
        AutWord::single(self.to_elem()).expect("validated on construction")
    }

    /// self ∘ o = (α₁α₂ x + α₁ f₂(y) + f₁(β₂ y), β₁β₂ y).
    pub fn compose(&self, o: &JonqPlus) -> JonqPlus {
        JonqPlus {
            alpha: &self.alpha * &o.alpha,
            beta: &self.beta * &o.beta,
            f: &o.f.scale(&self.alpha) + &self.f.rescale_var(&o.beta),
        }
    }

    pub fn inverse(&self) -> JonqPlus {
        let ai = self.alpha.inv().expect("nonzero");
        let bi = self.beta.inv().expect("nonzero");
        JonqPlus { f: -&self.f.rescale_var(&bi).scale(&ai), alpha: ai, beta: bi }
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.beta.is_one() && self.f.is_zero()
    }
}

impl fmt::Display for JonqPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_elem())
    }
}

impl UnipotentPlus {
    pub fn identity() -> UnipotentPlus {
        UnipotentPlus { g: UniPoly::zero() }
    }

    pub fn to_jonq(&self) -> JonqPlus {
        JonqPlus { alpha: CycloNum::one(), beta: CycloNum::one(), f: self.g.clone() }
    }

    pub fn to_elem(&self) -> ElemMap {
        ElemMap::plus(self.g.clone())
    }
}

impl JonqMinus {
    pub fn new(alpha: CycloNum, beta: CycloNum, f: UniPoly) -> Result<JonqMinus> {
        JonqPlus::new(beta, alpha, f).map(|p| JonqMinus::from_mirror(&p))
    }

    /// τ ∘ self ∘ τ, which lies in Jonq⁺.
    pub fn mirror(&self) -> JonqPlus {
        JonqPlus { alpha: self.beta.clone(), beta: self.alpha.clone(), f: self.f.clone() }
    }

    pub fn from_mirror(p: &JonqPlus) -> JonqMinus {
        JonqMinus { alpha: p.beta.clone(), beta: p.alpha.clone(), f: p.f.clone() }
    }

    pub fn to_elem(&self) -> ElemMap {
        ElemMap::TriMinus { alpha: self.alpha.clone(), beta: self.beta.clone(), f: self.f.clone() }
    }

    pub fn rho(&self) -> TorusElem {
        TorusElem { alpha: self.alpha.clone(), beta: self.beta.clone() }
    }

    pub fn is_semisimple(&self) -> bool {
        is_semisimple(&self.mirror())
    }

    pub fn element_order(&self) -> Option<u32> {
        element_order(&self.mirror())
    }

    /// μ = (x, y + g(x)) with μ⁻¹ ∘ self ∘ μ diagonal.
    pub fn conjugator_to_torus(&self) -> Result<ElemMap> {
        Ok(ElemMap::minus(conjugator_to_torus(&self.mirror())?.g))
    }

    pub fn commute(&self, o: &JonqMinus) -> bool {
        commute(&self.mirror(), &o.mirror())
    }

    pub fn involution_type(&self) -> InvolutionType {
        involution_type(&self.mirror())
    }

    /// Whether the map commutes with G_{d,e}, i.e. f ∈ A_{d,e′}.
    pub fn in_normalizer_minus(&self, s: &CyclicSurf) -> bool {
        in_grading_class(&self.f, s.d, s.e_prime % s.d)
    }
}

/// The projection Jonq⁺ → T.
pub fn rho(phi: &JonqPlus) -> TorusElem {
    TorusElem { alpha: phi.alpha.clone(), beta: phi.beta.clone() }
}

/// Semisimple iff α ≠ β^m for every m in the support of f.
pub fn is_semisimple(phi: &JonqPlus) -> bool {
    phi.f.support().all(|m| !eq_power(&phi.alpha, &phi.beta, m as u64))
}

/// The coefficient a_m / (β^m − α), or zero when the denominator vanishes.
fn conj_coeff(phi: &JonqPlus, m: u32) -> Option<CycloNum> {
    let den = &phi.beta.pow(m as u64) - &phi.alpha;
    if den.is_zero() {
        return None;
    }
    Some(&phi.f.coeff(m) / &den)
}

/// μ = (x + g(y), y) with μ⁻¹ ∘ φ ∘ μ = ρ(φ).
pub fn conjugator_to_torus(phi: &JonqPlus) -> Result<UnipotentPlus> {
    if !is_semisimple(phi) {
        return Err(Error::NotSemisimple(format!("{phi}")));
    }
    let g = UniPoly::from_terms(phi.f.support().filter_map(|m| conj_coeff(phi, m).map(|c| (m, c))));
    Ok(UnipotentPlus { g })
}

/// Order of φ, when finite.
pub fn element_order(phi: &JonqPlus) -> Option<u32> {
    if !is_semisimple(phi) {
        return None;
    }
    let a = phi.alpha.root_order()?;
    let b = phi.beta.root_order()?;
    Some(a.lcm(&b))
}

/// φ and ψ commute iff a_m(β̃^m − α̃) = ã_m(β^m − α) for every m.
pub fn commute(g1: &JonqPlus, g2: &JonqPlus) -> bool {
    let mut ms: Vec<u32> = g1.f.support().chain(g2.f.support()).collect();
    ms.sort_unstable();
    ms.dedup();
    ms.into_iter().all(|m| {
        let lhs = &g1.f.coeff(m) * &(&g2.beta.pow(m as u64) - &g2.alpha);
        let rhs = &g2.f.coeff(m) * &(&g1.beta.pow(m as u64) - &g1.alpha);
        lhs == rhs
    })
}

/// A single μ conjugating every element of a commuting family of semisimple
/// elements into the torus.
pub fn simultaneous_conjugator(phis: &[JonqPlus]) -> Result<UnipotentPlus> {
    for (i, p) in phis.iter().enumerate() {
        for q in &phis[i + 1..] {
            if !commute(p, q) {
                return Err(Error::NotCommuting(format!("{p} and {q}")));
            }
        }
    }
    for p in phis {
        if !is_semisimple(p) {
            return Err(Error::NotSemisimple(format!("{p}")));
        }
    }
    let mut ms: Vec<u32> = phis.iter().flat_map(|p| p.f.support().collect::<Vec<_>>()).collect();
    ms.sort_unstable();
    ms.dedup();
    let g = UniPoly::from_terms(
        ms.into_iter().filter_map(|m| phis.iter().find_map(|p| conj_coeff(p, m)).map(|c| (m, c))),
    );
    Ok(UnipotentPlus { g })
}

/// Whether φ commutes with G_{d,e}, i.e. f ∈ A_{d,e}.
pub fn in_normalizer_plus(phi: &JonqPlus, s: &CyclicSurf) -> bool {
    in_grading_class(&phi.f, s.d, s.e % s.d)
}

pub fn involution_type(phi: &JonqPlus) -> InvolutionType {
    let one = CycloNum::one();
    let m1 = -&one;
    let (a, b) = (&phi.alpha, &phi.beta);
    if *a == one && *b == m1 && in_grading_class(&phi.f, 2, 1) {
        InvolutionType::Type1
    } else if *a == m1 && *b == one {
        InvolutionType::Type2
    } else if *a == m1 && *b == m1 && in_grading_class(&phi.f, 2, 0) {
        InvolutionType::Type3
    } else {
        InvolutionType::NotInvolution
    }
}
